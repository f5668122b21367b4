//! Finite continued fractions, three-term recurrences and quadratic closed
//! forms for the Motzkin path statistics. These are independent routes to
//! the series produced by the network computation.

mod closed;
mod families;
mod formulas;

pub use closed::{closed_form, closed_form_branch, Branch, ClosedForm};
pub use families::{
    bounded_ratio, cf_spec, recurrence, restricted_cf_spec, tridiagonal, Family, Restricted,
};
pub use formulas::{
    formula_coefficient, formula_value, one_peak_diagnostic, CountFormula, OnePeakDiagnostic,
};

use crate::error::{Error, Result};
use crate::series::{format_rational, XSeries};

/// `head + b1/(a1 + b2/(a2 + ... + bd/ad))`, with `quotients[i] = (b_{i+1}, a_{i+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFSpec {
    pub head: XSeries,
    pub quotients: Vec<(XSeries, XSeries)>,
}

impl CFSpec {
    /// Number of fraction bars.
    pub fn depth(&self) -> usize {
        self.quotients.len()
    }

    /// `1/(d0 - e0/(d1 - e1/(... - e_{m-1}/d_m)))`, of depth `m + 1`.
    pub fn from_tridiagonal(diagonal: &[XSeries], products: &[XSeries]) -> Result<Self> {
        let Some(first) = diagonal.first() else {
            return Err(Error::ContinuedFraction {
                level: 0,
                reason: "empty diagonal".into(),
            });
        };
        if products.len() + 1 != diagonal.len() {
            return Err(Error::ContinuedFraction {
                level: 0,
                reason: format!(
                    "{} diagonal entries need {} products",
                    diagonal.len(),
                    diagonal.len() - 1
                ),
            });
        }
        let (order, arity) = (first.order(), first.arity());
        let mut quotients = vec![(XSeries::one(order, arity), first.clone())];
        for (e, d) in products.iter().zip(&diagonal[1..]) {
            quotients.push((-e, d.clone()));
        }
        Ok(CFSpec {
            head: XSeries::zero(order, arity),
            quotients,
        })
    }
}

/// Evaluates bottom-up, truncated at `n`. Every partial denominator must
/// have an invertible constant term once the fraction below it is absorbed.
pub fn cf_eval(spec: &CFSpec, n: usize) -> Result<XSeries> {
    let head = spec.head.truncate(n);
    let Some((_, last)) = spec.quotients.last() else {
        return Ok(head);
    };
    let mut tail = last.truncate(n);
    for level in (0..spec.quotients.len()).rev() {
        let constant = tail.coeffs()[0].as_constant();
        if constant
            .as_ref()
            .is_none_or(|c| c == &num_traits::Zero::zero())
        {
            return Err(Error::ContinuedFraction {
                level: level + 1,
                reason: format!(
                    "partial denominator has constant term {}",
                    constant.map_or_else(|| tail.coeffs()[0].to_string(), |c| format_rational(&c))
                ),
            });
        }
        let b = &spec.quotients[level].0;
        let frac = b.checked_mul(&tail.invert()?)?;
        tail = if level == 0 {
            head.checked_add(&frac)?
        } else {
            spec.quotients[level - 1].1.checked_add(&frac)?
        };
    }
    Ok(tail)
}

/// Sequence `P_0, P_1, ...` with `P_k = alpha * P_{k-1} - beta * P_{k-2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRecurrence {
    pub first: XSeries,
    pub second: XSeries,
    pub alpha: XSeries,
    pub beta: XSeries,
}

impl PolyRecurrence {
    /// `P_0..=P_m`.
    pub fn terms(&self, m: usize) -> Result<Vec<XSeries>> {
        let mut out = vec![self.first.clone()];
        if m >= 1 {
            out.push(self.second.clone());
        }
        for k in 2..=m {
            let next = self
                .alpha
                .checked_mul(&out[k - 1])?
                .checked_sub(&self.beta.checked_mul(&out[k - 2])?)?;
            out.push(next);
        }
        Ok(out)
    }
}

pub fn recurrence_seq(rec: &PolyRecurrence, m: usize) -> Result<Vec<XSeries>> {
    rec.terms(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{count_paths, PathKind};

    #[test]
    fn depth_zero_is_head() {
        let head = XSeries::from_ints(&[1, -1], 6, 0);
        let spec = CFSpec {
            head: head.clone(),
            quotients: vec![],
        };
        assert_eq!(spec.depth(), 0);
        assert_eq!(cf_eval(&spec, 6).unwrap(), head);
    }

    #[test]
    fn height_one_plateau_fraction() {
        // 1/(1 - x - x^2/(1 - x)) counts paths of height at most 1.
        let n = 10;
        let d = XSeries::from_ints(&[1, -1], n, 0);
        let e = XSeries::from_ints(&[0, 0, 1], n, 0);
        let spec = CFSpec::from_tridiagonal(&[d.clone(), d], &[e]).unwrap();
        assert_eq!(spec.depth(), 2);
        let expect: Vec<i64> = (0..=n)
            .map(|k| count_paths(PathKind::Motzkin, k, Some(1)) as i64)
            .collect();
        assert_eq!(cf_eval(&spec, n).unwrap().to_i64s().unwrap(), expect);
        assert_eq!(&expect[..6], [1, 1, 2, 4, 8, 16]);
    }

    #[test]
    fn non_unit_level_is_reported() {
        let n = 4;
        let spec = CFSpec {
            head: XSeries::zero(n, 0),
            quotients: vec![
                (XSeries::one(n, 0), XSeries::one(n, 0)),
                (XSeries::one(n, 0), XSeries::x(n, 0)),
            ],
        };
        assert!(matches!(
            cf_eval(&spec, n),
            Err(Error::ContinuedFraction { level: 2, .. })
        ));
        assert!(CFSpec::from_tridiagonal(&[XSeries::one(n, 0)], &[XSeries::one(n, 0)]).is_err());
    }

    #[test]
    fn recurrence_terms() {
        let n = 6;
        let rec = PolyRecurrence {
            first: XSeries::one(n, 0),
            second: XSeries::from_ints(&[1, -1], n, 0),
            alpha: XSeries::from_ints(&[2], n, 0),
            beta: XSeries::from_ints(&[1], n, 0),
        };
        let t = recurrence_seq(&rec, 3).unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(t[2], XSeries::from_ints(&[1, -2], n, 0));
        assert_eq!(t[3], XSeries::from_ints(&[1, -3], n, 0));
        assert_eq!(recurrence_seq(&rec, 0).unwrap().len(), 1);
    }
}
