//! Schubert polynomials indexed so that `𝔖_{w₀} = x^ρ` and
//! `𝔖_{sᵢσ} = Nᵢ𝔖_σ` whenever `sᵢσ` is shorter than `σ`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::MultiPolynomial;

type Memo = RwLock<HashMap<Permutation, Arc<MultiPolynomial>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn lookup(sigma: &Permutation) -> Option<Arc<MultiPolynomial>> {
    memo().read().expect("schubert memo poisoned").get(sigma).cloned()
}

/// `x^ρ` with `ρ = (n−1, n−2, …, 0)`.
fn staircase(n: usize) -> MultiPolynomial {
    MultiPolynomial::monomial((0..n as u32).rev().collect(), BigInt::one())
}

/// Smallest `i` whose letter `i` precedes `i+1`, so `sᵢσ` is longer.
fn left_ascent(sigma: &Permutation) -> Option<usize> {
    (1..sigma.n()).find(|&i| !sigma.has_left_descent(i))
}

/// The Schubert polynomial of `σ`, memoized process-wide.
pub fn schubert(sigma: &Permutation) -> Arc<MultiPolynomial> {
    if let Some(p) = lookup(sigma) {
        return p;
    }
    // climb to w₀ (or a cached element) through left ascents
    let mut path = vec![(sigma.clone(), 0usize)];
    let mut top = loop {
        let current = &path.last().unwrap().0;
        if let Some(p) = lookup(current) {
            path.pop();
            break p;
        }
        match left_ascent(current) {
            Some(i) => {
                let up = current.left_multiply_simple(i);
                path.last_mut().unwrap().1 = i;
                path.push((up, 0));
            }
            None => {
                let (w0, _) = path.pop().unwrap();
                let p = Arc::new(staircase(w0.n()));
                memo().write().expect("schubert memo poisoned").insert(w0, p.clone());
                break p;
            }
        }
    };
    while let Some((perm, i)) = path.pop() {
        let p = Arc::new(top.divided_difference(i));
        top = memo()
            .write()
            .expect("schubert memo poisoned")
            .entry(perm)
            .or_insert(p)
            .clone();
    }
    top
}

/// `𝔖_σ(1, …, 1)`.
pub fn principal_specialization(sigma: &Permutation) -> BigInt {
    schubert(sigma).coefficient_sum()
}

/// Exponent of the single monomial `𝔖_π` for 132-avoiding `π`.
pub fn monomial_exponent(pi: &Permutation) -> Result<Vec<u32>> {
    if !pi.avoids_132() {
        return Err(Error::Non132Avoiding(pi.clone()));
    }
    let p = schubert(pi);
    let (exp, coeff) = p.terms().next().expect("Schubert polynomials are nonzero");
    if p.num_terms() != 1 || !coeff.is_one() {
        return Err(Error::Precondition(format!("S_{pi} = {p} is not a monic monomial")));
    }
    Ok(exp.clone())
}

/// Reduced words `(i₁, …, i_ℓ)` with `σ = s_{i₁}⋯s_{i_ℓ}`, in lexicographic order.
pub fn reduced_words(sigma: &Permutation) -> Vec<Vec<usize>> {
    fn walk(sigma: &Permutation, suffix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if sigma.is_identity() {
            out.push(suffix.iter().rev().copied().collect());
            return;
        }
        for i in sigma.right_descents() {
            suffix.push(i);
            walk(&sigma.right_multiply_simple(i), suffix, out);
            suffix.pop();
        }
    }
    let mut out = Vec::new();
    walk(sigma, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `Σ_words i₁⋯i_ℓ`, accumulated over right descents so shared suffixes are
/// counted once.
pub fn reduced_word_product_sum(sigma: &Permutation) -> BigInt {
    fn go(sigma: &Permutation, memo: &mut HashMap<Permutation, BigInt>) -> BigInt {
        if sigma.is_identity() {
            return BigInt::one();
        }
        if let Some(v) = memo.get(sigma) {
            return v.clone();
        }
        let descents: Vec<usize> = sigma.right_descents().collect();
        let mut total = BigInt::zero();
        for i in descents {
            total += BigInt::from(i) * go(&sigma.right_multiply_simple(i), memo);
        }
        memo.insert(sigma.clone(), total.clone());
        total
    }
    go(sigma, &mut HashMap::new())
}

pub fn factorial(k: usize) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

pub(crate) fn exact_div(numerator: &BigInt, denominator: &BigInt) -> Result<BigInt> {
    let (q, r) = numerator.div_rem(denominator);
    if !r.is_zero() {
        return Err(Error::InexactDivision {
            numerator: numerator.to_string(),
            denominator: denominator.to_string(),
        });
    }
    Ok(q)
}

/// Reduced-word letter products summed and divided by `ℓ(σ)!`.
pub fn macdonald_sum(sigma: &Permutation) -> Result<BigInt> {
    exact_div(&reduced_word_product_sum(sigma), &factorial(sigma.length()))
}
