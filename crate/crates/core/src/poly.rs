//! Sparse multivariate polynomials with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

pub type Exponent = Vec<u32>;

/// A polynomial in `x₁, …, x_nvars` stored as exponent vector → coefficient,
/// with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPolynomial {
    nvars: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl MultiPolynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], BigInt::one())
    }

    pub fn monomial(exponent: Exponent, coeff: BigInt) -> Self {
        let mut p = Self::zero(exponent.len());
        p.add_term(exponent, coeff);
        p
    }

    /// `x_var` with 1-based `var`.
    pub fn variable(nvars: usize, var: usize) -> Self {
        let mut exp = vec![0; nvars];
        exp[var - 1] = 1;
        Self::monomial(exp, BigInt::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, BigInt)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exponent: Exponent, coeff: BigInt) {
        assert_eq!(exponent.len(), self.nvars, "exponent length must equal nvars");
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponent: &[u32]) -> BigInt {
        self.terms.get(exponent).cloned().unwrap_or_default()
    }

    /// Total degree if every term has the same degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Value at `x₁ = … = xₙ = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `sᵢ f`: exchanges `xᵢ` and `xᵢ₊₁`.
    pub fn swap_variables(&self, i: usize) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, c)| {
                let mut e = e.clone();
                e.swap(i - 1, i);
                (e, c.clone())
            }),
        )
    }

    /// Newton divided difference `Nᵢ f = (f − sᵢf)/(xᵢ − xᵢ₊₁)`, computed per
    /// monomial through the geometric-sum expansion of
    /// `(xᵢ^p − xᵢ₊₁^p)/(xᵢ − xᵢ₊₁)`.
    pub fn divided_difference(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.nvars, "divided difference index out of range");
        let (xi, xj) = (i - 1, i);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let (a, b) = (e[xi], e[xj]);
            if a == b {
                continue;
            }
            let (low, gap, coeff) = if a > b {
                (b, a - b, c.clone())
            } else {
                (a, b - a, -c)
            };
            // x_i^low x_{i+1}^low · Σ_{k < gap} x_i^{gap-1-k} x_{i+1}^k
            for k in 0..gap {
                let mut term = e.clone();
                term[xi] = low + gap - 1 - k;
                term[xj] = low + k;
                out.add_term(term, coeff.clone());
            }
        }
        out
    }

    /// `∂f/∂x_var` with 1-based `var`.
    pub fn partial_derivative(&self, var: usize) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().filter(|(e, _)| e[var - 1] > 0).map(|(e, c)| {
                let mut e = e.clone();
                let power = e[var - 1];
                e[var - 1] -= 1;
                (e, c * BigInt::from(power))
            }),
        )
    }
}

impl Add for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn add(self, rhs: Self) -> MultiPolynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn neg(self) -> MultiPolynomial {
        MultiPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Sub for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn sub(self, rhs: Self) -> MultiPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn mul(self, rhs: Self) -> MultiPolynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MultiPolynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for MultiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // highest exponent first reads naturally
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let monomial: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(v, &p)| if p == 1 { format!("x{}", v + 1) } else { format!("x{}^{p}", v + 1) })
                .collect();
            let (sign, magnitude) = if c < &BigInt::zero() { ("-", -c) } else { ("+", c.clone()) };
            if k == 0 {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (monomial.is_empty(), magnitude.is_one()) {
                (true, _) => write!(f, "{magnitude}")?,
                (false, true) => f.write_str(&monomial.join("*"))?,
                (false, false) => write!(f, "{magnitude}*{}", monomial.join("*"))?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermJson<'a> {
    exp: &'a [u32],
    coeff: String,
}

#[derive(Serialize)]
struct PolyJson<'a> {
    nvars: usize,
    terms: Vec<TermJson<'a>>,
}

impl Serialize for MultiPolynomial {
    /// `{ "nvars": n, "terms": [{"exp": [..], "coeff": "…"}] }`, lexicographic.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    exp: e,
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}
