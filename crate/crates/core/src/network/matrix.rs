use std::fmt;

use crate::error::{Error, Result};
use crate::series::{Rational, TPoly, XSeries};

/// Square matrix of series sharing one truncation order and t-arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMatrix {
    dim: usize,
    order: usize,
    arity: usize,
    entries: Vec<XSeries>,
}

impl SeriesMatrix {
    pub fn zero(dim: usize, order: usize, arity: usize) -> Self {
        SeriesMatrix {
            dim,
            order,
            arity,
            entries: vec![XSeries::zero(order, arity); dim * dim],
        }
    }

    pub fn identity(dim: usize, order: usize, arity: usize) -> Self {
        let mut m = Self::zero(dim, order, arity);
        for i in 0..dim {
            m.entries[i * dim + i] = XSeries::one(order, arity);
        }
        m
    }

    /// Row-major construction; every entry is truncated to the smallest order.
    pub fn from_rows(rows: Vec<Vec<XSeries>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidNetwork("matrix is not square".into()));
        }
        let entries: Vec<XSeries> = rows.into_iter().flatten().collect();
        let Some(first) = entries.first() else {
            return Ok(Self::zero(0, 0, 0));
        };
        let arity = first.arity();
        if let Some(bad) = entries.iter().find(|e| e.arity() != arity) {
            return Err(Error::ArityMismatch {
                left: arity,
                right: bad.arity(),
            });
        }
        let order = entries.iter().map(XSeries::order).min().unwrap_or(0);
        let entries = entries.iter().map(|e| e.truncate(order)).collect();
        Ok(SeriesMatrix {
            dim,
            order,
            arity,
            entries,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn get(&self, row: usize, col: usize) -> &XSeries {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: XSeries) {
        assert_eq!(value.arity(), self.arity, "entry t-arity");
        self.entries[row * self.dim + col] = value.truncate(self.order);
    }

    pub(crate) fn add_to(&mut self, row: usize, col: usize, value: &XSeries) {
        let e = &mut self.entries[row * self.dim + col];
        *e = &*e + value;
    }

    pub fn map(&self, f: impl Fn(&XSeries) -> XSeries) -> SeriesMatrix {
        SeriesMatrix::from_rows(
            (0..self.dim)
                .map(|i| (0..self.dim).map(|j| f(self.get(i, j))).collect())
                .collect(),
        )
        .expect("map keeps the matrix square")
    }

    pub fn try_map(&self, f: impl Fn(&XSeries) -> Result<XSeries>) -> Result<SeriesMatrix> {
        let rows = (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| f(self.get(i, j)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SeriesMatrix::from_rows(rows)
    }

    /// Substitutes `t_v -> t_v + delta` in every entry.
    pub fn shift_t(&self, delta: &Rational) -> SeriesMatrix {
        self.map(|e| e.shift_t(delta))
    }

    pub fn specialize(&self, assignment: &[Rational]) -> Result<SeriesMatrix> {
        self.try_map(|e| e.specialize(assignment))
    }

    fn check_shape(&self, other: &SeriesMatrix) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        if self.dim != other.dim {
            return Err(Error::InvalidNetwork(format!(
                "matrix dimensions {} and {}",
                self.dim, other.dim
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &SeriesMatrix) -> Result<SeriesMatrix> {
        self.check_shape(other)?;
        let rows = (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| self.get(i, j) + other.get(i, j))
                    .collect()
            })
            .collect();
        SeriesMatrix::from_rows(rows)
    }

    pub fn checked_sub(&self, other: &SeriesMatrix) -> Result<SeriesMatrix> {
        self.check_shape(other)?;
        let rows = (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| self.get(i, j) - other.get(i, j))
                    .collect()
            })
            .collect();
        SeriesMatrix::from_rows(rows)
    }

    pub fn checked_mul(&self, other: &SeriesMatrix) -> Result<SeriesMatrix> {
        self.check_shape(other)?;
        let order = self.order.min(other.order);
        let mut out = SeriesMatrix::zero(self.dim, order, self.arity);
        for i in 0..self.dim {
            for k in 0..self.dim {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.dim {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `(I - self)^(-1)` truncated at the common order.
    ///
    /// Writes `self = sum_k M_k x^k` and solves `R_n = sum_{k=1..n} M_k R_{n-k}`
    /// with `R_0 = I`, which is the Neumann sum collected by powers of x.
    pub fn invert_i_minus(&self) -> Result<SeriesMatrix> {
        let (d, n) = (self.dim, self.order);
        for i in 0..d {
            for j in 0..d {
                if !self.get(i, j).coeffs()[0].is_zero() {
                    return Err(Error::NotLocallyNilpotent { row: i, col: j });
                }
            }
        }
        // layers[k][i] lists the nonzero (col, coefficient) pairs of M_k in row i.
        let layers: Vec<Vec<Vec<(usize, &TPoly)>>> = (0..=n)
            .map(|k| {
                (0..d)
                    .map(|i| {
                        (0..d)
                            .filter_map(|j| {
                                let c = &self.get(i, j).coeffs()[k];
                                (!c.is_zero()).then_some((j, c))
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut r: Vec<Vec<Vec<TPoly>>> = Vec::with_capacity(n + 1);
        r.push(
            (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| {
                            if i == j {
                                TPoly::one(self.arity)
                            } else {
                                TPoly::zero(self.arity)
                            }
                        })
                        .collect()
                })
                .collect(),
        );
        for c in 1..=n {
            let mut layer = vec![vec![TPoly::zero(self.arity); d]; d];
            for (k, rows) in layers.iter().enumerate().take(c + 1).skip(1) {
                let prev = &r[c - k];
                for (i, row) in rows.iter().enumerate() {
                    for &(l, a) in row {
                        for (j, b) in prev[l].iter().enumerate() {
                            if !b.is_zero() {
                                layer[i][j].add_product(a, b);
                            }
                        }
                    }
                }
            }
            r.push(layer);
        }
        let mut out = SeriesMatrix::zero(d, n, self.arity);
        for (k, entry) in out.entries.iter_mut().enumerate() {
            let (i, j) = (k / d, k % d);
            let coeffs = r
                .iter_mut()
                .map(|layer| std::mem::replace(&mut layer[i][j], TPoly::zero(0)))
                .collect();
            *entry = XSeries::from_coeffs(coeffs)?;
        }
        Ok(out)
    }
}

impl fmt::Display for SeriesMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            for j in 0..self.dim {
                writeln!(f, "({i},{j}): {}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn s(c: &[i64]) -> XSeries {
        XSeries::from_ints(c, 10, 0)
    }

    #[test]
    fn zero_inverts_to_identity() {
        let z = SeriesMatrix::zero(3, 6, 1);
        assert_eq!(z.invert_i_minus().unwrap(), SeriesMatrix::identity(3, 6, 1));
    }

    #[test]
    fn inverse_satisfies_definition() {
        let m = SeriesMatrix::from_rows(vec![
            vec![s(&[0, 1]), s(&[0, 2])],
            vec![s(&[0, 2]), s(&[0, 0, 3])],
        ])
        .unwrap();
        let r = m.invert_i_minus().unwrap();
        let lhs = SeriesMatrix::identity(2, 10, 0)
            .checked_sub(&m)
            .unwrap()
            .checked_mul(&r)
            .unwrap();
        assert_eq!(lhs, SeriesMatrix::identity(2, 10, 0));
        let rhs = r
            .checked_mul(&SeriesMatrix::identity(2, 10, 0).checked_sub(&m).unwrap())
            .unwrap();
        assert_eq!(rhs, SeriesMatrix::identity(2, 10, 0));
    }

    #[test]
    fn rejects_constant_terms() {
        let m = SeriesMatrix::from_rows(vec![vec![s(&[0, 1]), s(&[1])], vec![s(&[0]), s(&[0])]])
            .unwrap();
        assert_eq!(
            m.invert_i_minus(),
            Err(Error::NotLocallyNilpotent { row: 0, col: 1 })
        );
    }

    #[test]
    fn one_by_one_is_series_inverse() {
        let f = XSeries::from_terms(8, 1, &[(1, 1, &[1]), (2, 2, &[0])]);
        let m = SeriesMatrix::from_rows(vec![vec![f.clone()]]).unwrap();
        let expect = (&XSeries::one(8, 1) - &f).invert().unwrap();
        assert_eq!(m.invert_i_minus().unwrap().get(0, 0), &expect);
        assert_eq!(m.shift_t(&rat(1)).get(0, 0), &f.shift_t(&rat(1)));
    }

    #[test]
    fn shape_errors() {
        assert!(SeriesMatrix::from_rows(vec![vec![s(&[0])], vec![]]).is_err());
        let a = SeriesMatrix::zero(2, 3, 0);
        let b = SeriesMatrix::zero(2, 3, 1);
        assert_eq!(
            a.checked_add(&b),
            Err(Error::ArityMismatch { left: 0, right: 1 })
        );
    }
}
