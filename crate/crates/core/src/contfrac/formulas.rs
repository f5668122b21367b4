use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::paths::{gf_statistic, Statistic};
use crate::series::{binomial, Rational};

/// Closed-form counts for single coefficients of the ascent and plateau
/// generating functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountFormula {
    /// Paths of length `n >= 1` with exactly one ascent: `Fib(n+3) - n - 2`.
    OneAscent,
    /// Paths of length `2n + 1` with `n` ascents: `C(n+2, 2)`.
    MaxAscents,
    /// Paths of length `n >= 1` with exactly one plateau: `2^(n-1) - 1`.
    OnePlateau,
    /// Paths of length `n >= 3` with exactly two plateaus: `(n-3) n 2^(n-6)`.
    TwoPlateaus,
}

fn fibonacci(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

pub fn formula_value(c: CountFormula, n: usize) -> Rational {
    let big = |v: i64| BigInt::from(v);
    match c {
        CountFormula::OneAscent => {
            Rational::from_integer(fibonacci(n + 3) - big(n as i64) - big(2))
        }
        CountFormula::MaxAscents => Rational::from_integer(binomial(n as i64 + 2, 2)),
        CountFormula::OnePlateau => Rational::from_integer((big(1) << (n - 1)) - big(1)),
        CountFormula::TwoPlateaus => {
            let scale = if n >= 6 {
                Rational::from_integer(big(1) << (n - 6))
            } else {
                Rational::new(big(1), big(1) << (6 - n))
            };
            Rational::from_integer(big((n as i64 - 3) * n as i64)) * scale
        }
    }
}

/// The coefficient the formula describes, read off the generating function.
pub fn formula_coefficient(c: CountFormula, n: usize) -> Result<Rational> {
    let (stat, length, power) = match c {
        CountFormula::OneAscent => (Statistic::Ascents, n, 1),
        CountFormula::MaxAscents => (Statistic::Ascents, 2 * n + 1, n as u32),
        CountFormula::OnePlateau => (Statistic::AllPlateaus, n, 1),
        CountFormula::TwoPlateaus => (Statistic::AllPlateaus, n, 2),
    };
    let f = gf_statistic(stat, None, length)?;
    Ok(f.coeff(length)?.coefficient(&[power]))
}

/// A binomial sum printed for the one-peak count, next to the actual count.
/// The two disagree (e.g. at `n = 4`), so this is reported, not asserted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnePeakDiagnostic {
    pub n: usize,
    pub binomial_sum: BigInt,
    pub coefficient: Rational,
}

impl OnePeakDiagnostic {
    pub fn agrees(&self) -> bool {
        Rational::from_integer(self.binomial_sum.clone()) == self.coefficient
    }
}

pub fn one_peak_diagnostic(n: usize) -> Result<OnePeakDiagnostic> {
    let n_i = n as i64;
    let binomial_sum = (0..=n_i - 2)
        .map(|k| binomial(k + 1, n_i - k + 1) * binomial(k, n_i - k))
        .sum();
    let f = gf_statistic(Statistic::Peaks, None, n)?;
    Ok(OnePeakDiagnostic {
        n,
        binomial_sum,
        coefficient: f.coeff(n)?.coefficient(&[1]),
    })
}
