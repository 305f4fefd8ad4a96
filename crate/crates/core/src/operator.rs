//! Sparse exact-integer square matrices indexed by interval elements.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// A `dim × dim` integer matrix in row-major sparse form.
///
/// Each row holds `(column, value)` pairs sorted by column with no stored
/// zeros, so structural equality is matrix equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOperator {
    dim: usize,
    rows: Vec<Vec<(usize, BigInt)>>,
}

impl LinearOperator {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            rows: vec![Vec::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal((0..dim).map(|_| BigInt::from(1)))
    }

    pub fn diagonal(values: impl IntoIterator<Item = BigInt>) -> Self {
        let rows: Vec<_> = values
            .into_iter()
            .enumerate()
            .map(|(r, v)| if v.is_zero() { Vec::new() } else { vec![(r, v)] })
            .collect();
        Self {
            dim: rows.len(),
            rows,
        }
    }

    /// Sums duplicate `(row, col)` triplets and drops zeros.
    pub fn from_triplets(dim: usize, triplets: impl IntoIterator<Item = (usize, usize, BigInt)>) -> Self {
        let mut acc: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for (r, c, v) in triplets {
            assert!(r < dim && c < dim, "triplet ({r}, {c}) outside dimension {dim}");
            *acc.entry((r, c)).or_default() += v;
        }
        let mut rows = vec![Vec::new(); dim];
        for ((r, c), v) in acc {
            if !v.is_zero() {
                rows[r].push((c, v));
            }
        }
        Self { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn get(&self, row: usize, col: usize) -> BigInt {
        self.rows[row]
            .binary_search_by_key(&col, |(c, _)| *c)
            .map(|k| self.rows[row][k].1.clone())
            .unwrap_or_default()
    }

    pub fn row(&self, row: usize) -> &[(usize, BigInt)] {
        &self.rows[row]
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| merge_rows(a, b, false))
            .collect();
        Ok(Self { dim: self.dim, rows })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| merge_rows(a, b, true))
            .collect();
        Ok(Self { dim: self.dim, rows })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut rows = Vec::with_capacity(self.dim);
        for row in &self.rows {
            let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (k, a) in row {
                for (c, b) in &other.rows[*k] {
                    *acc.entry(*c).or_default() += a * b;
                }
            }
            rows.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        Ok(Self { dim: self.dim, rows })
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero(self.dim);
        }
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|(c, v)| (*c, v * factor)).collect())
            .collect();
        Self { dim: self.dim, rows }
    }

    /// `[X, Y] = XY − YX`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    /// Dense matrix-vector product `M·v`.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim);
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|(c, _)| !v[*c].is_zero())
                    .map(|(c, a)| a * &v[*c])
                    .sum()
            })
            .collect()
    }
}

fn merge_rows(a: &[(usize, BigInt)], b: &[(usize, BigInt)], negate_b: bool) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (0, 0);
    let sign = |v: &BigInt| if negate_b { -v } else { v.clone() };
    while x < a.len() || y < b.len() {
        match (a.get(x), b.get(y)) {
            (Some((ca, va)), Some((cb, vb))) if ca == cb => {
                let s = va + sign(vb);
                if !s.is_zero() {
                    out.push((*ca, s));
                }
                x += 1;
                y += 1;
            }
            (Some((ca, va)), Some((cb, _))) if ca < cb => {
                out.push((*ca, va.clone()));
                x += 1;
            }
            (Some((ca, va)), None) => {
                out.push((*ca, va.clone()));
                x += 1;
            }
            (_, Some((cb, vb))) => {
                out.push((*cb, sign(vb)));
                y += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

impl Add for &LinearOperator {
    type Output = LinearOperator;
    fn add(self, rhs: Self) -> LinearOperator {
        self.try_add(rhs).expect("matching dimensions")
    }
}

impl Sub for &LinearOperator {
    type Output = LinearOperator;
    fn sub(self, rhs: Self) -> LinearOperator {
        self.try_sub(rhs).expect("matching dimensions")
    }
}

impl Mul for &LinearOperator {
    type Output = LinearOperator;
    fn mul(self, rhs: Self) -> LinearOperator {
        self.try_mul(rhs).expect("matching dimensions")
    }
}

impl Neg for &LinearOperator {
    type Output = LinearOperator;
    fn neg(self) -> LinearOperator {
        self.scale(&BigInt::from(-1))
    }
}
