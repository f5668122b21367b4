use super::{Family, Restricted};
use crate::error::{Error, Result};
use crate::paths::HeightSet;
use crate::series::{format_rational, rat, XSeries};

/// Generating functions with a known quadratic closed form (unbounded height).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    Ascents,
    Plateaus(usize),
    AllPlateaus,
    PeaksValleys,
    AscentsEndEven,
    AscentsEndOdd,
    PeaksOddValleysEven0,
    PeaksEven0ValleysOdd,
    PeaksOddValleysOdd,
    PeaksEven0ValleysEven0,
}

impl ClosedForm {
    pub const RESTRICTED: [ClosedForm; 6] = [
        ClosedForm::AscentsEndEven,
        ClosedForm::AscentsEndOdd,
        ClosedForm::PeaksOddValleysEven0,
        ClosedForm::PeaksEven0ValleysOdd,
        ClosedForm::PeaksOddValleysOdd,
        ClosedForm::PeaksEven0ValleysEven0,
    ];

    pub fn family(self) -> Option<Family> {
        match self {
            ClosedForm::Ascents => Some(Family::Ascents),
            ClosedForm::Plateaus(k) => Some(Family::Plateaus(k)),
            ClosedForm::AllPlateaus => Some(Family::AllPlateaus),
            ClosedForm::PeaksValleys => Some(Family::PeaksValleys),
            _ => None,
        }
    }

    pub fn restriction(self) -> Option<Restricted> {
        use HeightSet::{EvenWithZero as E0, Odd as O};
        let pv = |peaks, valleys| Some(Restricted::PeaksValleys { peaks, valleys });
        match self {
            ClosedForm::AscentsEndEven => Some(Restricted::AscentEnds(HeightSet::Even)),
            ClosedForm::AscentsEndOdd => Some(Restricted::AscentEnds(O)),
            ClosedForm::PeaksOddValleysEven0 => pv(O, E0),
            ClosedForm::PeaksEven0ValleysOdd => pv(E0, O),
            ClosedForm::PeaksOddValleysOdd => pv(O, O),
            ClosedForm::PeaksEven0ValleysEven0 => pv(E0, E0),
            _ => None,
        }
    }

    pub fn arity(self) -> usize {
        self.family().map_or(0, Family::arity)
    }
}

/// Which root of the defining quadratic to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// The power-series root (constant term 1).
    Principal,
    Other,
}

enum Shape {
    /// `(a -+ sqrt(r)) / den`
    Difference {
        a: XSeries,
        r: XSeries,
        den: XSeries,
    },
    /// `num / (b +- sqrt(r))`
    Reciprocal {
        num: XSeries,
        b: XSeries,
        r: XSeries,
    },
}

fn ints(c: &[i64], n: usize, arity: usize) -> XSeries {
    XSeries::from_ints(c, n, 0)
        .with_arity(arity)
        .expect("t-free")
}

fn shape(form: ClosedForm, n: usize) -> Shape {
    let x = |p: u32, arity: usize| XSeries::x(n, arity).pow(p);
    match form {
        ClosedForm::Ascents => {
            let t = &XSeries::t(0, n, 1) - &XSeries::one(n, 1);
            let t_plus = &XSeries::t(0, n, 1).scale(&rat(2)) + &XSeries::one(n, 1);
            let a = &ints(&[1, -1], n, 1) - &(&x(2, 1) * &t);
            let r = &(&(&ints(&[1, -2], n, 1) - &(&x(2, 1) * &t_plus))
                - &(&x(3, 1) * &t.scale(&rat(2))))
                + &(&x(4, 1) * &t.pow(2));
            let den = (&x(2, 1) + &(&x(3, 1) * &t)).scale(&rat(2));
            Shape::Difference { a, r, den }
        }
        ClosedForm::Plateaus(k) => {
            let t = &XSeries::t(0, n, 1) - &XSeries::one(n, 1);
            let a = &ints(&[1, -1], n, 1) - &(&x(k as u32 + 2, 1) * &t);
            let r = &a.pow(2) - &x(2, 1).scale(&rat(4));
            Shape::Difference {
                a,
                r,
                den: x(2, 1).scale(&rat(2)),
            }
        }
        ClosedForm::AllPlateaus => {
            let t = XSeries::t(0, n, 1);
            let t2 = &t - &XSeries::one(n, 1).scale(&rat(2));
            let t4 = &t - &XSeries::one(n, 1).scale(&rat(4));
            let a = &ints(&[1, -2], n, 1) - &(&x(2, 1) * &t2);
            let r = &(&(&ints(&[1, -4], n, 1) - &(&x(2, 1) * &t2.scale(&rat(2))))
                + &(&x(3, 1) * &t.scale(&rat(4))))
                + &(&x(4, 1) * &(&t * &t4));
            let den = ints(&[0, 0, 2, -2], n, 1);
            Shape::Difference { a, r, den }
        }
        ClosedForm::PeaksValleys => {
            let (t1, t2) = (
                &XSeries::t(0, n, 2) - &XSeries::one(n, 2),
                &XSeries::t(1, n, 2) - &XSeries::one(n, 2),
            );
            let both = &t1 * &t2;
            let inv = (&XSeries::one(n, 2) - &(&x(2, 2) * &both))
                .invert()
                .expect("unit");
            let c1 = &(&x(2, 2) * &t1) * &inv;
            let c2 = &(&x(2, 2) * &t2) * &inv;
            let c3 = &(&x(3, 2) * &both) * &inv;
            let base = ints(&[1, -1], n, 2);
            let b = &(&base - &c1) + &c2;
            let inner = &(&base - &c1) - &c2;
            let r = &inner.pow(2) - &(&x(1, 2) + &c3).pow(2).scale(&rat(4));
            Shape::Reciprocal {
                num: XSeries::constant(rat(2), n, 2),
                b,
                r,
            }
        }
        ClosedForm::AscentsEndEven => Shape::Difference {
            a: ints(&[1, -2, 2], n, 0),
            r: ints(&[1, -4, 4, 0, -4, 4], n, 0),
            den: ints(&[0, 0, 2, -2, 2], n, 0),
        },
        ClosedForm::AscentsEndOdd => Shape::Difference {
            a: ints(&[1, -2, 2, -2], n, 0),
            r: ints(&[1, -4, 4, 0, -4, 4], n, 0),
            den: ints(&[0, 0, 2, -4, 2], n, 0),
        },
        ClosedForm::PeaksOddValleysEven0 => Shape::Difference {
            a: ints(&[1, -2, 2, 0, -2], n, 0),
            r: ints(&[1, -4, 4, 0, -4], n, 0),
            den: ints(&[0, 0, 2, -2, 0, 2], n, 0),
        },
        ClosedForm::PeaksEven0ValleysOdd => Shape::Reciprocal {
            num: ints(&[2, -2, 0, 2], n, 0),
            b: ints(&[1, -2, 0, 2], n, 0),
            r: ints(&[1, -4, 4, 0, -4], n, 0),
        },
        ClosedForm::PeaksOddValleysOdd => Shape::Reciprocal {
            num: ints(&[2, -2], n, 0),
            b: ints(&[1, -2, 1], n, 0),
            r: ints(&[1, -4, 6, -8, 5, -4, 4], n, 0),
        },
        ClosedForm::PeaksEven0ValleysEven0 => Shape::Difference {
            a: ints(&[1, -2, 3, -2], n, 0),
            r: ints(&[1, -4, 6, -8, 5, -4, 4], n, 0),
            den: ints(&[0, 0, 2, -2], n, 0),
        },
    }
}

/// The power-series closed form, truncated at `n`.
pub fn closed_form(form: ClosedForm, n: usize) -> Result<XSeries> {
    closed_form_branch(form, Branch::Principal, n)
}

/// Evaluates either root; only the principal one is a power series with
/// constant term 1, and the other is rejected.
pub fn closed_form_branch(form: ClosedForm, branch: Branch, n: usize) -> Result<XSeries> {
    // Denominators have x-order at most 2, so two extra terms keep the
    // quotient exact to order n.
    let work = n + 2;
    let wrong = |e: Error| Error::WrongBranch {
        reason: e.to_string(),
    };
    let value = match shape(form, work) {
        Shape::Difference { a, r, den } => {
            let root = r.sqrt()?;
            let num = if branch == Branch::Principal {
                &a - &root
            } else {
                &a + &root
            };
            num.div_exact(&den).map_err(wrong)?
        }
        Shape::Reciprocal { num, b, r } => {
            let root = r.sqrt()?;
            let den = if branch == Branch::Principal {
                &b + &root
            } else {
                &b - &root
            };
            num.div_exact(&den).map_err(wrong)?
        }
    };
    let value = value.truncate(n);
    let constant = &value.coeffs()[0];
    if !constant.is_one() {
        return Err(Error::WrongBranch {
            reason: format!(
                "constant coefficient is {}, expected 1",
                constant
                    .as_constant()
                    .map_or_else(|| constant.to_string(), |c| format_rational(&c))
            ),
        });
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::TPoly;

    #[test]
    fn ascent_coefficients() {
        let f = closed_form(ClosedForm::Ascents, 9).unwrap();
        let row5 = XSeries::from_terms(0, 1, &[(1, 0, &[0]), (14, 0, &[1]), (6, 0, &[2])]);
        assert_eq!(f.coeff(5).unwrap(), row5.coeff(0).unwrap());
    }

    #[test]
    fn all_plateaus_row_nine() {
        let f = closed_form(ClosedForm::AllPlateaus, 9).unwrap();
        let row = XSeries::from_terms(
            0,
            1,
            &[
                (1, 0, &[0]),
                (255, 0, &[1]),
                (432, 0, &[2]),
                (138, 0, &[3]),
                (9, 0, &[4]),
            ],
        );
        assert_eq!(f.coeff(9).unwrap(), row.coeff(0).unwrap());
    }

    #[test]
    fn ascents_at_one_are_motzkin() {
        let n = 12;
        let f = closed_form(ClosedForm::Ascents, n)
            .unwrap()
            .specialize(&[rat(1)])
            .unwrap();
        let r = XSeries::from_ints(&[1, -2, -3], n + 2, 0).sqrt().unwrap();
        let motzkin = (&XSeries::from_ints(&[1, -1], n + 2, 0) - &r)
            .div_exact(&XSeries::from_ints(&[0, 0, 2], n + 2, 0))
            .unwrap()
            .truncate(n);
        assert_eq!(f, motzkin);
    }

    #[test]
    fn other_branch_is_rejected() {
        let forms = [
            ClosedForm::Ascents,
            ClosedForm::Plateaus(1),
            ClosedForm::AllPlateaus,
            ClosedForm::PeaksValleys,
        ]
        .into_iter()
        .chain(ClosedForm::RESTRICTED);
        for form in forms {
            let f = closed_form(form, 8).unwrap();
            assert!(f.coeffs()[0].is_one());
            assert!(
                matches!(
                    closed_form_branch(form, Branch::Other, 8),
                    Err(Error::WrongBranch { .. })
                ),
                "{form:?}"
            );
        }
    }

    #[test]
    fn restricted_series() {
        let cases: [(ClosedForm, &[i64]); 6] = [
            (
                ClosedForm::AscentsEndEven,
                &[1, 1, 1, 1, 2, 5, 12, 27, 60, 135, 309],
            ),
            (
                ClosedForm::AscentsEndOdd,
                &[1, 1, 2, 4, 8, 16, 33, 70, 152, 336, 754],
            ),
            (
                ClosedForm::PeaksOddValleysEven0,
                &[1, 1, 1, 2, 5, 12, 27, 60, 136],
            ),
            (
                ClosedForm::PeaksEven0ValleysOdd,
                &[1, 1, 2, 4, 8, 17, 38, 88, 208],
            ),
            (
                ClosedForm::PeaksOddValleysOdd,
                &[1, 1, 1, 2, 5, 12, 27, 60, 137],
            ),
            (
                ClosedForm::PeaksEven0ValleysEven0,
                &[1, 1, 2, 4, 7, 13, 27, 59, 131],
            ),
        ];
        for (form, expect) in cases {
            let f = closed_form(form, expect.len() - 1).unwrap();
            assert_eq!(f.to_i64s().unwrap(), expect, "{form:?}");
            assert_eq!(form.arity(), 0);
        }
        assert_eq!(
            closed_form(ClosedForm::PeaksValleys, 2)
                .unwrap()
                .coeff(2)
                .unwrap(),
            &(&TPoly::one(2) + &TPoly::var(0, 2))
        );
    }
}
