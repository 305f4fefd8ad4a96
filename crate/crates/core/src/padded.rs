//! Bihomogeneous Schubert polynomials relative to a 132-avoiding top `π`.
//!
//! With `𝔖_π = x^β`, each monomial `x^α` of `𝔖_σ` becomes `x^α y^{β−α}`.
//! Only `α` is stored; the `y` exponent is always `β − α`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::interval::{weak_leq, IntervalConfig, WeakInterval};
use crate::perm::Permutation;
use crate::schubert::{exact_div, factorial, monomial_exponent, schubert};
use crate::sl2::weight_unchecked;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaddedPolynomial {
    beta: Vec<u32>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl PaddedPolynomial {
    pub fn zero(beta: Vec<u32>) -> Self {
        Self {
            beta,
            terms: BTreeMap::new(),
        }
    }

    /// `x^β`, the padding of `𝔖_π` itself.
    pub fn top(beta: Vec<u32>) -> Self {
        let mut p = Self::zero(beta.clone());
        p.add_term(beta, BigInt::one());
        p
    }

    fn add_term(&mut self, alpha: Vec<u32>, coeff: BigInt) {
        debug_assert!(alpha.iter().zip(&self.beta).all(|(a, b)| a <= b));
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(alpha).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn beta(&self) -> &[u32] {
        &self.beta
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(α, coefficient)` pairs in lexicographic order of `α`.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, alpha: &[u32]) -> BigInt {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }

    /// `(x-degree, y-degree)` if every term shares it.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let total: u32 = self.beta.iter().sum();
        let mut degrees = self.terms.keys().map(|a| a.iter().sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some((first, total - first))
    }

    /// Value with every `x` and `y` set to 1.
    pub fn evaluate_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        let mut out = Self::zero(self.beta.clone());
        for (a, c) in &self.terms {
            out.add_term(a.clone(), c * factor);
        }
        out
    }

    /// `∇ = Σ yᵢ ∂/∂xᵢ`.
    pub fn nabla(&self) -> Self {
        let mut out = Self::zero(self.beta.clone());
        for (alpha, c) in &self.terms {
            for i in 0..alpha.len() {
                if alpha[i] > 0 {
                    let mut a = alpha.clone();
                    a[i] -= 1;
                    out.add_term(a, c * BigInt::from(alpha[i]));
                }
            }
        }
        out
    }

    /// `Δ = Σ xᵢ ∂/∂yᵢ`.
    pub fn delta(&self) -> Self {
        let mut out = Self::zero(self.beta.clone());
        for (alpha, c) in &self.terms {
            for i in 0..alpha.len() {
                let y = self.beta[i] - alpha[i];
                if y > 0 {
                    let mut a = alpha.clone();
                    a[i] += 1;
                    out.add_term(a, c * BigInt::from(y));
                }
            }
        }
        out
    }
}

impl Add for &PaddedPolynomial {
    type Output = PaddedPolynomial;
    fn add(self, rhs: Self) -> PaddedPolynomial {
        assert_eq!(self.beta, rhs.beta, "padded polynomials over different tops");
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_term(a.clone(), c.clone());
        }
        out
    }
}

impl fmt::Display for PaddedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (alpha, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (var, exps) in [("x", alpha.clone()), ("y", self.beta.iter().zip(alpha).map(|(b, a)| b - a).collect())] {
                for (k, &e) in exps.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => factors.push(format!("{var}{}", k + 1)),
                        _ => factors.push(format!("{var}{}^{e}", k + 1)),
                    }
                }
            }
            let negative = c < &BigInt::zero();
            let magnitude = if negative { -c } else { c.clone() };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match (factors.is_empty(), magnitude.is_one()) {
                (true, _) => write!(f, "{magnitude}")?,
                (false, true) => f.write_str(&factors.join("*"))?,
                (false, false) => write!(f, "{magnitude}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

/// `𝔖^π_σ`, checking every monomial of `𝔖_σ` against `β`.
pub fn pad(sigma: &Permutation, pi: &Permutation) -> Result<PaddedPolynomial> {
    let beta = monomial_exponent(pi)?;
    if !weak_leq(sigma, pi)? {
        return Err(Error::NotBelowPi {
            sigma: sigma.clone(),
            pi: pi.clone(),
        });
    }
    pad_with_beta(sigma, &beta)
}

pub(crate) fn pad_with_beta(sigma: &Permutation, beta: &[u32]) -> Result<PaddedPolynomial> {
    let mut out = PaddedPolynomial::zero(beta.to_vec());
    for (alpha, c) in schubert(sigma).terms() {
        if alpha.iter().zip(beta).any(|(a, b)| a > b) {
            return Err(Error::PaddingViolation {
                sigma: sigma.clone(),
                alpha: alpha.clone(),
                beta: beta.to_vec(),
            });
        }
        out.add_term(alpha.clone(), c.clone());
    }
    Ok(out)
}

/// Padded polynomials of every element of the interval, in interval order.
pub fn pad_interval(interval: &WeakInterval) -> Result<Vec<PaddedPolynomial>> {
    let beta = monomial_exponent(interval.pi())?;
    interval
        .elements()
        .iter()
        .map(|sigma| pad_with_beta(sigma, &beta))
        .collect()
}

/// For each element `τ`, the sum over saturated strong chains `τ → π` inside
/// the interval of the product of weights, by descending rank.
pub fn chain_sums(interval: &WeakInterval) -> Vec<BigInt> {
    let positions = interval.pi_positions();
    let mut sums = vec![BigInt::zero(); interval.len()];
    for idx in (0..interval.len()).rev() {
        if interval.length_of(idx) == interval.top_rank() {
            sums[idx] = BigInt::one();
            continue;
        }
        let tau = interval.element(idx);
        let mut total = BigInt::zero();
        for c in interval.strong_up_covers(idx) {
            total += BigInt::from(weight_unchecked(tau, c.i, c.j, positions)) * &sums[c.target];
        }
        sums[idx] = total;
    }
    sums
}

/// Chain sums divided by `(ℓ(π) − ℓ(σ))!`, for every element of the interval.
pub fn chain_specializations(interval: &WeakInterval) -> Result<Vec<BigInt>> {
    chain_sums(interval)
        .iter()
        .enumerate()
        .map(|(idx, s)| exact_div(s, &factorial(interval.top_rank() - interval.length_of(idx))))
        .collect()
}

/// `𝔖_σ(1, …, 1)` computed from weighted strong chains `σ → π`.
pub fn chain_sum(sigma: &Permutation, pi: &Permutation) -> Result<BigInt> {
    chain_sum_with(sigma, pi, &IntervalConfig::default())
}

pub fn chain_sum_with(sigma: &Permutation, pi: &Permutation, config: &IntervalConfig) -> Result<BigInt> {
    if !pi.avoids_132() {
        return Err(Error::Non132Avoiding(pi.clone()));
    }
    if !weak_leq(sigma, pi)? {
        return Err(Error::NotBelowPi {
            sigma: sigma.clone(),
            pi: pi.clone(),
        });
    }
    let interval = WeakInterval::build_with(pi, config)?;
    let idx = interval.require(sigma)?;
    let sums = chain_sums(&interval);
    exact_div(&sums[idx], &factorial(interval.top_rank() - interval.length_of(idx)))
}
