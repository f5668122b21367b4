use super::{CFSpec, PolyRecurrence};
use crate::error::{Error, Result};
use crate::paths::{HeightSet, Statistic};
use crate::series::XSeries;

/// Statistics whose bounded-height generating functions satisfy a uniform
/// three-term recurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Ascents,
    Plateaus(usize),
    AllPlateaus,
    PeaksValleys,
}

impl Family {
    pub fn statistic(self) -> Statistic {
        match self {
            Family::Ascents => Statistic::Ascents,
            Family::Plateaus(k) => Statistic::Plateaus(k),
            Family::AllPlateaus => Statistic::AllPlateaus,
            Family::PeaksValleys => Statistic::PeaksValleys,
        }
    }

    pub fn arity(self) -> usize {
        self.statistic().arity()
    }
}

/// Height-restricted counts (no marking variable).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Restricted {
    /// Every ascent ends at a height in the set.
    AscentEnds(HeightSet),
    /// Every peak starts at a height in `peaks`, every valley in `valleys`.
    PeaksValleys {
        peaks: HeightSet,
        valleys: HeightSet,
    },
}

/// `sum c x^p prod t^e` from `(c, p, exps)` terms.
fn poly(n: usize, arity: usize, terms: &[(i64, usize, &[u32])]) -> XSeries {
    XSeries::from_terms(n, arity, terms)
}

fn one_minus_x(n: usize, arity: usize) -> XSeries {
    XSeries::from_ints(&[1, -1], n, 0)
        .with_arity(arity)
        .expect("t-free")
}

fn t_minus_one(var: usize, n: usize, arity: usize) -> XSeries {
    &XSeries::t(var, n, arity) - &XSeries::one(n, arity)
}

/// `C1, C2, C3` for the joint peak/valley statistic.
fn pv_terms(n: usize) -> (XSeries, XSeries, XSeries) {
    let (t1, t2) = (t_minus_one(0, n, 2), t_minus_one(1, n, 2));
    let x2 = poly(n, 2, &[(1, 2, &[0, 0])]);
    let x3 = poly(n, 2, &[(1, 3, &[0, 0])]);
    let both = &t1 * &t2;
    let inv = (&XSeries::one(n, 2) - &(&x2 * &both))
        .invert()
        .expect("unit");
    (
        &(&x2 * &t1) * &inv,
        &(&x2 * &t2) * &inv,
        &(&x3 * &both) * &inv,
    )
}

/// Diagonal `d_0..d_m` and off-diagonal products `e_0..e_{m-1}` of the
/// height-`m` matrix `I - step - clusters(t - 1)`.
pub fn tridiagonal(family: Family, m: usize, n: usize) -> Result<(Vec<XSeries>, Vec<XSeries>)> {
    check_bound(m)?;
    let arity = family.arity();
    let base = one_minus_x(n, arity);
    let x = XSeries::x(n, arity);
    let x2 = x.pow(2);
    let (diag, prod) = match family {
        Family::Ascents => {
            let t = t_minus_one(0, n, 1);
            let inner = &base - &(&x2 * &t);
            (vec![inner; m], &x2 + &(&x.pow(3) * &t))
        }
        Family::Plateaus(k) => {
            let t = t_minus_one(0, n, 1);
            let inner = &base - &(&x.pow(k as u32 + 2) * &t);
            (vec![inner; m], x2)
        }
        Family::AllPlateaus => {
            let t = t_minus_one(0, n, 1);
            let inner = &base - &(&(&x2 * &base.invert()?) * &t);
            (vec![inner; m], x2)
        }
        Family::PeaksValleys => {
            let (c1, c2, c3) = pv_terms(n);
            let mut diag = vec![&base - &c1];
            diag.extend(std::iter::repeat_n(&(&base - &c1) - &c2, m - 1));
            let last = &base - &c2;
            let off = &x + &c3;
            diag.push(last);
            return Ok((diag, vec![&off * &off; m]));
        }
    };
    let mut diag = diag;
    diag.push(base);
    Ok((diag, vec![prod; m]))
}

fn check_bound(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::ContinuedFraction {
            level: 0,
            reason: "height bound must be at least 1".into(),
        });
    }
    Ok(())
}

/// Depth `m + 1` continued fraction for the height-`m` generating function.
pub fn cf_spec(family: Family, m: usize, n: usize) -> Result<CFSpec> {
    let (diag, prod) = tridiagonal(family, m, n)?;
    CFSpec::from_tridiagonal(&diag, &prod)
}

/// Depth `m + 1` continued fraction for a height-restricted count at `t = 0`.
pub fn restricted_cf_spec(restriction: &Restricted, m: usize, n: usize) -> Result<CFSpec> {
    check_bound(m)?;
    let base = one_minus_x(n, 0);
    let x = XSeries::x(n, 0);
    let x2 = x.pow(2);
    let zero = XSeries::zero(n, 0);
    let (diag, prod): (Vec<XSeries>, Vec<XSeries>) = match restriction {
        Restricted::AscentEnds(allowed) => {
            let c = |i: usize| {
                if allowed.contains(i) {
                    zero.clone()
                } else {
                    x2.clone()
                }
            };
            let mut diag: Vec<XSeries> = (0..m).map(|i| &base + &c(i + 1)).collect();
            diag.push(base.clone());
            let prod = (0..m).map(|i| &x2 - &(&x * &c(i + 1))).collect();
            (diag, prod)
        }
        Restricted::PeaksValleys { peaks, valleys } => {
            let geometric = (&XSeries::one(n, 0) - &x2).invert()?;
            let run = &x2 * &geometric;
            let long = &x.pow(3) * &geometric;
            let c1 = |i: usize| match (peaks.contains(i), valleys.contains(i + 1)) {
                (false, false) => run.clone(),
                (false, true) => x2.clone(),
                _ => zero.clone(),
            };
            let c2 = |i: usize| match (valleys.contains(i), i >= 1 && peaks.contains(i - 1)) {
                (false, false) => run.clone(),
                (false, true) => x2.clone(),
                _ => zero.clone(),
            };
            let c3 = |i: usize| {
                if !peaks.contains(i) && !valleys.contains(i + 1) {
                    long.clone()
                } else {
                    zero.clone()
                }
            };
            let mut diag = vec![&base + &c1(0)];
            diag.extend((1..m).map(|i| &(&base + &c1(i)) + &c2(i)));
            diag.push(&base + &c2(m));
            let prod = (0..m)
                .map(|i| {
                    let off = &x + &c3(i);
                    &off * &off
                })
                .collect();
            (diag, prod)
        }
    };
    CFSpec::from_tridiagonal(&diag, &prod)
}

/// The numerator recurrence of the bounded generating functions:
/// `P_0 = 1`, `P_1 = 1 - x` (or `1 - x - C2` for peaks/valleys).
pub fn recurrence(family: Family, n: usize) -> Result<PolyRecurrence> {
    let (diag, prod) = tridiagonal(family, 2, n)?;
    let arity = family.arity();
    Ok(PolyRecurrence {
        first: XSeries::one(n, arity),
        second: diag[2].clone(),
        alpha: diag[1].clone(),
        beta: prod[0].clone(),
    })
}

/// Height-`m` generating function as a ratio of recurrence terms.
pub fn bounded_ratio(family: Family, m: usize, n: usize) -> Result<XSeries> {
    check_bound(m)?;
    let rec = recurrence(family, n)?;
    let terms = rec.terms(m + 1)?;
    match family {
        Family::PeaksValleys => {
            let (diag, prod) = tridiagonal(family, m.max(1), n)?;
            let den = diag[0]
                .checked_mul(&terms[m])?
                .checked_sub(&prod[0].checked_mul(&terms[m - 1])?)?;
            terms[m].div_exact(&den)
        }
        _ => terms[m].div_exact(&terms[m + 1]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contfrac::cf_eval;
    use crate::paths::{
        count_paths, gf_asc_height_restricted, gf_pv_height_restricted, gf_statistic, PathKind,
    };
    use crate::series::rat;

    #[test]
    fn routes_agree_for_small_bounds() {
        let n = 10;
        for family in [
            Family::Ascents,
            Family::Plateaus(0),
            Family::Plateaus(2),
            Family::AllPlateaus,
            Family::PeaksValleys,
        ] {
            for m in 1..=3 {
                let net = gf_statistic(family.statistic(), Some(m), n).unwrap();
                assert_eq!(
                    cf_eval(&cf_spec(family, m, n).unwrap(), n).unwrap(),
                    net,
                    "{family:?} m = {m}"
                );
                assert_eq!(
                    bounded_ratio(family, m, n).unwrap(),
                    net,
                    "{family:?} m = {m}"
                );
            }
        }
    }

    #[test]
    fn ascent_recurrence_second_step() {
        let n = 8;
        let rec = recurrence(Family::Ascents, n).unwrap();
        let t = rec.terms(2).unwrap();
        let d = &one_minus_x(n, 1) - &(&XSeries::x(n, 1).pow(2) * &t_minus_one(0, n, 1));
        let e = &XSeries::x(n, 1).pow(2) + &(&XSeries::x(n, 1).pow(3) * &t_minus_one(0, n, 1));
        assert_eq!(t[2], &(&d * &one_minus_x(n, 1)) - &e);
        assert_eq!(rec.first, XSeries::one(n, 1));
        assert_eq!(rec.second, one_minus_x(n, 1));
        let pv = recurrence(Family::PeaksValleys, n).unwrap();
        assert_eq!(pv.second, &one_minus_x(n, 2) - &pv_terms(n).1);
    }

    #[test]
    fn height_one_ascents() {
        // (1 - x)/((1 - x)^2 - x^2 t)
        let n = 9;
        let num = one_minus_x(n, 1);
        let den = &(&num * &num) - &XSeries::from_terms(n, 1, &[(1, 2, &[1])]);
        assert_eq!(
            bounded_ratio(Family::Ascents, 1, n).unwrap(),
            num.div_exact(&den).unwrap()
        );
    }

    #[test]
    fn pv_at_one_counts_bounded_paths() {
        let n = 10;
        let f = bounded_ratio(Family::PeaksValleys, 2, n)
            .unwrap()
            .specialize(&[rat(1), rat(1)])
            .unwrap();
        let expect: Vec<i64> = (0..=n)
            .map(|k| count_paths(PathKind::Motzkin, k, Some(2)) as i64)
            .collect();
        assert_eq!(f.to_i64s().unwrap(), expect);
    }

    #[test]
    fn restricted_fractions_match_networks() {
        let n = 10;
        let sets = [
            HeightSet::Even,
            HeightSet::Odd,
            HeightSet::EvenWithZero,
            HeightSet::finite([1, 4]),
        ];
        for m in 1..=4 {
            for a in &sets {
                let cf = cf_eval(
                    &restricted_cf_spec(&Restricted::AscentEnds(a.clone()), m, n).unwrap(),
                    n,
                )
                .unwrap();
                assert_eq!(
                    cf,
                    gf_asc_height_restricted(a, Some(m), n).unwrap(),
                    "A = {a}, m = {m}"
                );
            }
            for p in &sets {
                for v in &sets {
                    let r = Restricted::PeaksValleys {
                        peaks: p.clone(),
                        valleys: v.clone(),
                    };
                    let cf = cf_eval(&restricted_cf_spec(&r, m, n).unwrap(), n).unwrap();
                    assert_eq!(
                        cf,
                        gf_pv_height_restricted(p, v, Some(m), n).unwrap(),
                        "P = {p}, V = {v}, m = {m}"
                    );
                }
            }
        }
    }

    #[test]
    fn zero_bound_rejected() {
        assert!(cf_spec(Family::Ascents, 0, 4).is_err());
        assert!(bounded_ratio(Family::PeaksValleys, 0, 4).is_err());
    }
}
