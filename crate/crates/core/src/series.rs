//! Truncated power series in a length variable `x` whose coefficients are
//! polynomials in the marking variables `t1..tk` over the rationals.
//!
//! An [`XSeries`] of order `N` stores exactly `N + 1` coefficients and is exact
//! modulo `x^(N+1)`. Binary operations return the smaller of the two orders.
//! The t-arity `k` is fixed per computation; mixing arities is an error.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Always reduced, denominator positive.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Renders integers without a denominator, everything else as `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Sparse polynomial in `t1..tk` with rational coefficients.
///
/// No zero coefficient is ever stored and every exponent vector has length `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TPoly {
    arity: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl TPoly {
    pub fn zero(arity: usize) -> Self {
        TPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(Rational::one(), arity)
    }

    pub fn constant(c: Rational, arity: usize) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(vec![0; arity], c);
        p
    }

    /// The variable `t_{var+1}` (variables are 0-indexed in code).
    pub fn var(var: usize, arity: usize) -> Self {
        assert!(
            var < arity,
            "variable t{} out of range for arity {arity}",
            var + 1
        );
        let mut exps = vec![0; arity];
        exps[var] = 1;
        Self::monomial(Rational::one(), exps)
    }

    pub fn monomial(c: Rational, exps: Vec<u32>) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// Nonzero terms in exponent-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&vec![0; self.arity])
    }

    /// `Some(c)` when the polynomial has t-degree 0 (including the zero polynomial).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub(crate) fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        debug_assert_eq!(exps.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += a * b` without an intermediate product.
    pub(crate) fn add_product(&mut self, a: &TPoly, b: &TPoly) {
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                self.add_term(e, ca * cb);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> TPoly {
        if c.is_zero() {
            return TPoly::zero(self.arity);
        }
        TPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> TPoly {
        let mut acc = TPoly::one(self.arity);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a full assignment of the marking variables.
    pub fn eval(&self, assignment: &[Rational]) -> Result<Rational> {
        if assignment.len() != self.arity {
            return Err(Error::AssignmentArity {
                expected: self.arity,
                got: assignment.len(),
            });
        }
        let mut total = Rational::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term *= num_traits::pow(assignment[v].clone(), e as usize);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Substitutes `t_v -> t_v + delta` for every variable.
    pub fn shift(&self, delta: &Rational) -> TPoly {
        if delta.is_zero() {
            return self.clone();
        }
        let mut out = TPoly::zero(self.arity);
        let mut lin = Vec::with_capacity(self.arity);
        for v in 0..self.arity {
            lin.push(&TPoly::var(v, self.arity) + &TPoly::constant(delta.clone(), self.arity));
        }
        for (exps, c) in &self.terms {
            let mut term = TPoly::constant(c.clone(), self.arity);
            for (v, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = &term * &lin[v].pow(e);
                }
            }
            out = &out + &term;
        }
        out
    }

    fn check_arity(&self, other: &TPoly) {
        assert_eq!(self.arity, other.arity, "TPoly arity mismatch");
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        self.check_arity(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        self.check_arity(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &TPoly) -> TPoly {
        self.check_arity(rhs);
        let mut out = TPoly::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}

/// Terms ordered by total degree, then by exponent vector. A single variable
/// prints as `t`, several as `t1`, `t2`, ...
impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in self.sorted_terms() {
            let mono = monomial_string(exps);
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{}", format_rational(&mag))?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{}*{mono}", format_rational(&mag))?,
            }
        }
        Ok(())
    }
}

impl TPoly {
    /// Terms in display order: ascending total degree, then exponent vector
    /// with the later variables varying slowest.
    pub fn sorted_terms(&self) -> Vec<(&[u32], &Rational)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| a.iter().rev().cmp(b.iter().rev()))
        });
        v
    }
}

impl TPoly {
    /// Inverse of the `Display` rendering, e.g. `2 - 1/3*t1*t2^2`.
    pub fn parse(s: &str, arity: usize) -> Result<TPoly> {
        let bad = |why: &str| Error::Parse(format!("polynomial {s:?}: {why}"));
        let text = s.trim();
        if text.is_empty() {
            return Err(bad("empty"));
        }
        let mut out = TPoly::zero(arity);
        let (mut negative, mut rest) = match text.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, text),
        };
        loop {
            let next = [" + ", " - "]
                .iter()
                .filter_map(|sep| rest.find(sep).map(|i| (i, *sep)))
                .min();
            let (term, tail) = match next {
                Some((i, sep)) => (&rest[..i], Some((sep == " - ", &rest[i + 3..]))),
                None => (rest, None),
            };
            let mut coeff = Rational::one();
            let mut exps = vec![0u32; arity];
            for (k, factor) in term.split('*').map(str::trim).enumerate() {
                if let Some(name) = factor.strip_prefix('t') {
                    let (name, power) = match name.split_once('^') {
                        Some((v, e)) => (v, e.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                        None => (name, 1),
                    };
                    let var = if name.is_empty() && arity == 1 {
                        0
                    } else {
                        name.parse::<usize>()
                            .ok()
                            .filter(|v| (1..=arity).contains(v))
                            .ok_or_else(|| bad("unknown variable"))?
                            - 1
                    };
                    exps[var] += power;
                } else if k == 0 {
                    coeff = parse_rational(factor).map_err(|_| bad("bad coefficient"))?;
                } else {
                    return Err(bad("coefficient must come first"));
                }
            }
            out.add_term(exps, if negative { -coeff } else { coeff });
            match tail {
                Some((neg, t)) => {
                    negative = neg;
                    rest = t;
                }
                None => break,
            }
        }
        Ok(out)
    }
}

pub fn variable_name(var: usize, arity: usize) -> String {
    if arity == 1 {
        "t".to_string()
    } else {
        format!("t{}", var + 1)
    }
}

fn monomial_string(exps: &[u32]) -> String {
    let parts: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(v, &e)| {
            let name = variable_name(v, exps.len());
            if e == 1 {
                name
            } else {
                format!("{name}^{e}")
            }
        })
        .collect();
    parts.join("*")
}

/// Power series in `x` truncated at order `N` (inclusive), coefficients in
/// `Q[t1..tk]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XSeries {
    arity: usize,
    coeffs: Vec<TPoly>,
}

impl XSeries {
    pub fn zero(order: usize, arity: usize) -> Self {
        XSeries {
            arity,
            coeffs: vec![TPoly::zero(arity); order + 1],
        }
    }

    pub fn one(order: usize, arity: usize) -> Self {
        Self::constant(Rational::one(), order, arity)
    }

    pub fn constant(c: Rational, order: usize, arity: usize) -> Self {
        let mut s = Self::zero(order, arity);
        s.coeffs[0] = TPoly::constant(c, arity);
        s
    }

    /// `poly * x^power`, dropped if `power > order`.
    pub fn monomial(poly: TPoly, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order, poly.arity());
        if power <= order {
            s.coeffs[power] = poly;
        }
        s
    }

    pub fn x(order: usize, arity: usize) -> Self {
        Self::monomial(TPoly::one(arity), 1, order)
    }

    pub fn t(var: usize, order: usize, arity: usize) -> Self {
        Self::monomial(TPoly::var(var, arity), 0, order)
    }

    /// Polynomial in `x` with integer coefficients `c[0] + c[1] x + ...`.
    pub fn from_ints(c: &[i64], order: usize, arity: usize) -> Self {
        let mut s = Self::zero(order, arity);
        for (n, &v) in c.iter().enumerate().take(order + 1) {
            s.coeffs[n] = TPoly::constant(rat(v), arity);
        }
        s
    }

    /// Builds a series from `(coefficient, x-power, t-exponents)` terms.
    pub fn from_terms(order: usize, arity: usize, terms: &[(i64, usize, &[u32])]) -> Self {
        let mut s = Self::zero(order, arity);
        for &(c, n, e) in terms {
            assert_eq!(e.len(), arity);
            if n <= order {
                s.coeffs[n].add_term(e.to_vec(), rat(c));
            }
        }
        s
    }

    /// Takes ownership of `N + 1` coefficients. All must share one arity.
    pub fn from_coeffs(coeffs: Vec<TPoly>) -> Result<Self> {
        let arity = coeffs
            .first()
            .map(TPoly::arity)
            .ok_or(Error::OutOfRange { index: 0, order: 0 })?;
        for c in &coeffs {
            if c.arity() != arity {
                return Err(Error::ArityMismatch {
                    left: arity,
                    right: c.arity(),
                });
            }
        }
        Ok(XSeries { arity, coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn coeffs(&self) -> &[TPoly] {
        &self.coeffs
    }

    /// Coefficient of `x^n`.
    pub fn coeff(&self, n: usize) -> Result<&TPoly> {
        self.coeffs.get(n).ok_or(Error::OutOfRange {
            index: n,
            order: self.order(),
        })
    }

    /// Coefficient of `x^n` evaluated at a t-assignment.
    pub fn coeff_at(&self, n: usize, assignment: &[Rational]) -> Result<Rational> {
        self.coeff(n)?.eval(assignment)
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn truncate(&self, order: usize) -> XSeries {
        let order = order.min(self.order());
        XSeries {
            arity: self.arity,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn check(&self, other: &XSeries) -> Result<usize> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(self.order().min(other.order()))
    }

    pub fn checked_add(&self, other: &XSeries) -> Result<XSeries> {
        let n = self.check(other)?;
        let coeffs = (0..=n)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        Ok(XSeries {
            arity: self.arity,
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &XSeries) -> Result<XSeries> {
        let n = self.check(other)?;
        let coeffs = (0..=n)
            .map(|i| &self.coeffs[i] - &other.coeffs[i])
            .collect();
        Ok(XSeries {
            arity: self.arity,
            coeffs,
        })
    }

    /// Cauchy product truncated at the smaller order.
    pub fn checked_mul(&self, other: &XSeries) -> Result<XSeries> {
        let n = self.check(other)?;
        let mut coeffs = vec![TPoly::zero(self.arity); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Ok(XSeries {
            arity: self.arity,
            coeffs,
        })
    }

    pub fn scale(&self, c: &Rational) -> XSeries {
        XSeries {
            arity: self.arity,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Multiplies every coefficient by a t-polynomial.
    pub fn scale_poly(&self, p: &TPoly) -> Result<XSeries> {
        if p.arity() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: p.arity(),
            });
        }
        Ok(XSeries {
            arity: self.arity,
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        })
    }

    /// Multiplies by `x^k`, keeping the order.
    pub fn mul_x_pow(&self, k: usize) -> XSeries {
        let n = self.order();
        let mut out = XSeries::zero(n, self.arity);
        for i in 0..=n.saturating_sub(k) {
            if i + k <= n {
                out.coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> XSeries {
        let mut acc = XSeries::one(self.order(), self.arity);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse. The constant coefficient must be a nonzero rational.
    pub fn invert(&self) -> Result<XSeries> {
        let c0 = self.coeffs[0]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::NotAUnit {
                constant: self.coeffs[0].to_string(),
            })?;
        let inv = c0.recip();
        let n = self.order();
        let mut g: Vec<TPoly> = Vec::with_capacity(n + 1);
        g.push(TPoly::constant(inv.clone(), self.arity));
        let neg_inv = -inv;
        for k in 1..=n {
            let mut acc = TPoly::zero(self.arity);
            for j in 1..=k {
                let f = &self.coeffs[j];
                if f.is_zero() || g[k - j].is_zero() {
                    continue;
                }
                acc = &acc + &(f * &g[k - j]);
            }
            g.push(acc.scale(&neg_inv));
        }
        Ok(XSeries {
            arity: self.arity,
            coeffs: g,
        })
    }

    /// Exact quotient `self / den` where `den = x^d * u` with `u` a unit.
    /// The result is exact to order `N - d`.
    pub fn div_exact(&self, den: &XSeries) -> Result<XSeries> {
        let n = self.check(den)?;
        let d = den.truncate(n).valuation().ok_or(Error::DivisionByZero)?;
        let num = self.truncate(n);
        if let Some(v) = num.valuation() {
            if v < d {
                return Err(Error::NotDivisible {
                    numerator: v,
                    denominator: d,
                });
            }
        }
        let shift_down = |s: &XSeries| XSeries {
            arity: s.arity,
            coeffs: s.coeffs[d..=n].to_vec(),
        };
        let u = shift_down(&den.truncate(n));
        let q = shift_down(&num);
        q.checked_mul(&u.invert()?)
    }

    /// Square root with constant coefficient 1, from `g^2 = f` coefficientwise.
    pub fn sqrt(&self) -> Result<XSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NoSeriesRoot {
                constant: self.coeffs[0].to_string(),
            });
        }
        let half = ratio(1, 2);
        let n = self.order();
        let mut g: Vec<TPoly> = Vec::with_capacity(n + 1);
        g.push(TPoly::one(self.arity));
        for k in 1..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..k {
                if g[j].is_zero() || g[k - j].is_zero() {
                    continue;
                }
                acc = &acc - &(&g[j] * &g[k - j]);
            }
            g.push(acc.scale(&half));
        }
        Ok(XSeries {
            arity: self.arity,
            coeffs: g,
        })
    }

    /// Evaluates every coefficient at a t-assignment, giving a t-free series.
    pub fn specialize(&self, assignment: &[Rational]) -> Result<XSeries> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.eval(assignment).map(|v| TPoly::constant(v, 0)))
            .collect::<Result<Vec<_>>>()?;
        Ok(XSeries { arity: 0, coeffs })
    }

    /// Evaluates every variable at the same value.
    pub fn specialize_all(&self, value: &Rational) -> XSeries {
        self.specialize(&vec![value.clone(); self.arity])
            .expect("assignment has full arity")
    }

    /// Substitutes `t_v -> t_v + delta` for all variables.
    pub fn shift_t(&self, delta: &Rational) -> XSeries {
        XSeries {
            arity: self.arity,
            coeffs: self.coeffs.iter().map(|c| c.shift(delta)).collect(),
        }
    }

    /// Re-embeds a t-free series at a higher arity.
    pub fn with_arity(&self, arity: usize) -> Result<XSeries> {
        if self.arity == arity {
            return Ok(self.clone());
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                c.as_constant()
                    .map(|v| TPoly::constant(v, arity))
                    .ok_or(Error::ArityMismatch {
                        left: self.arity,
                        right: arity,
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(XSeries { arity, coeffs })
    }

    /// Integer coefficient list of a t-free series; `None` if any entry is
    /// non-constant or non-integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| {
                c.as_constant()
                    .filter(|r| r.is_integer())
                    .map(|r| r.to_integer())
            })
            .collect()
    }

    /// Same as [`to_integers`](Self::to_integers) but as `i64`, panicking on overflow.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.to_integers().map(|v| {
            v.iter()
                .map(|b| i64::try_from(b).expect("fits i64"))
                .collect()
        })
    }
}

/// Nonzero terms joined by `+`, e.g. `1 + (1 + t)*x^2`.
impl fmt::Display for XSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let power = match n {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{n}"),
            };
            match (c.num_terms(), n) {
                (_, 0) => write!(f, "{c}")?,
                (1, _) if c.is_one() => write!(f, "{power}")?,
                (1, _) => write!(f, "{c}*{power}")?,
                _ => write!(f, "({c})*{power}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! series_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for &XSeries {
            type Output = XSeries;
            fn $method(self, rhs: &XSeries) -> XSeries {
                self.$checked(rhs).expect("series operands share t-arity")
            }
        }
    };
}

series_op!(Add, add, checked_add);
series_op!(Sub, sub, checked_sub);
series_op!(Mul, mul, checked_mul);

impl Neg for &XSeries {
    type Output = XSeries;
    fn neg(self) -> XSeries {
        XSeries {
            arity: self.arity,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Binomial coefficient as a big integer; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `gcd`-reduced check used by property tests.
pub fn is_reduced(r: &Rational) -> bool {
    r.numer().gcd(r.denom()).is_one() && r.denom().is_positive()
}
