//! The raising, lowering and weight operators on `ℂ[e, π]_R`.
//!
//! `E` sums over strong covers inside the interval with the weight
//! `wt^π(σ, σt_{ij}) = 1 + |{k > j : σᵢ < σₖ < σⱼ}| + |{k > j : π⁻¹σⱼ < π⁻¹σₖ < π⁻¹σᵢ}|`,
//! `F` sends `σ` to `Σ i·σsᵢ` over weak down covers, and `H` is diagonal with
//! eigenvalue `2ℓ(σ) − ℓ(π)`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::{is_strong_cover, weak_leq, IntervalConfig, WeakInterval};
use crate::operator::LinearOperator;
use crate::perm::Permutation;

/// Maximum number of offending entries kept in a report.
pub const MAX_REPORTED_VIOLATIONS: usize = 10;

/// `wt^π(σ, σt_{ij})`, validating that the pair is a strong cover inside `[e, π]_R`.
pub fn weight(sigma: &Permutation, i: usize, j: usize, pi: &Permutation) -> Result<u64> {
    if sigma.n() != pi.n() {
        return Err(Error::SizeMismatch {
            left: sigma.n(),
            right: pi.n(),
        });
    }
    if !is_strong_cover(sigma, i, j) {
        return Err(Error::NotStrongCover {
            sigma: sigma.clone(),
            i,
            j,
        });
    }
    let upper = sigma.swap_positions(i, j);
    for s in [sigma, &upper] {
        if !weak_leq(s, pi)? {
            return Err(Error::NotInInterval {
                sigma: s.clone(),
                pi: pi.clone(),
            });
        }
    }
    Ok(weight_unchecked(sigma, i, j, &pi.inverse_table()))
}

pub(crate) fn weight_unchecked(sigma: &Permutation, i: usize, j: usize, pi_positions: &[u8]) -> u64 {
    let (lo, hi) = (sigma.value(i), sigma.value(j));
    let (plo, phi) = (pi_positions[lo as usize], pi_positions[hi as usize]);
    let mut w = 1;
    for k in j + 1..=sigma.n() {
        let v = sigma.value(k);
        if lo < v && v < hi {
            w += 1;
        }
        let pv = pi_positions[v as usize];
        if phi < pv && pv < plo {
            w += 1;
        }
    }
    w
}

pub fn build_e(interval: &WeakInterval) -> LinearOperator {
    let positions = interval.pi_positions();
    let triplets = (0..interval.len()).flat_map(|col| {
        let sigma = interval.element(col);
        interval.strong_up_covers(col).iter().map(move |c| {
            let w = weight_unchecked(sigma, c.i, c.j, positions);
            (c.target, col, BigInt::from(w))
        })
    });
    LinearOperator::from_triplets(interval.len(), triplets)
}

pub fn build_f(interval: &WeakInterval) -> LinearOperator {
    let triplets = (0..interval.len()).flat_map(|col| {
        interval
            .weak_down_covers(col)
            .iter()
            .map(move |c| (c.target, col, BigInt::from(c.i)))
    });
    LinearOperator::from_triplets(interval.len(), triplets)
}

pub fn build_h(interval: &WeakInterval) -> LinearOperator {
    let top = interval.top_rank() as i64;
    LinearOperator::diagonal(
        (0..interval.len()).map(|idx| BigInt::from(2 * interval.length_of(idx) as i64 - top)),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Operators {
    pub e: LinearOperator,
    pub f: LinearOperator,
    pub h: LinearOperator,
}

impl Sl2Operators {
    pub fn build(interval: &WeakInterval) -> Self {
        Self {
            e: build_e(interval),
            f: build_f(interval),
            h: build_h(interval),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    HE,
    HF,
    EF,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RelationStatus {
    #[serde(rename = "HE")]
    pub he: Status,
    #[serde(rename = "HF")]
    pub hf: Status,
    #[serde(rename = "EF")]
    pub ef: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub relation: Relation,
    pub row: Permutation,
    pub col: Permutation,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sl2Report {
    pub pi: Permutation,
    pub relations: RelationStatus,
    pub violations: Vec<Violation>,
}

impl Sl2Report {
    pub fn passed(&self) -> bool {
        [self.relations.he, self.relations.hf, self.relations.ef]
            .iter()
            .all(|s| *s == Status::Pass)
    }
}

/// Checks `[H,E] = 2E`, `[H,F] = −2F` and `[E,F] = H` entrywise.
pub fn verify_sl2(pi: &Permutation) -> Result<Sl2Report> {
    verify_sl2_with(pi, &IntervalConfig::default())
}

pub fn verify_sl2_with(pi: &Permutation, config: &IntervalConfig) -> Result<Sl2Report> {
    let interval = WeakInterval::build_with(pi, config)?;
    Ok(verify_operators(&interval, &Sl2Operators::build(&interval)))
}

/// Checks the three relations for explicitly supplied operators.
pub fn verify_operators(interval: &WeakInterval, ops: &Sl2Operators) -> Sl2Report {
    let two = BigInt::from(2);
    let checks = [
        (Relation::HE, ops.h.commutator(&ops.e), ops.e.scale(&two)),
        (Relation::HF, ops.h.commutator(&ops.f), ops.f.scale(&-two.clone())),
        (Relation::EF, ops.e.commutator(&ops.f), ops.h.clone()),
    ];
    let mut violations = Vec::new();
    let mut status = [Status::Pass; 3];
    for (slot, (relation, actual, expected)) in checks.into_iter().enumerate() {
        let actual = actual.expect("operators share the interval dimension");
        let diff = &actual - &expected;
        if !diff.is_zero() {
            status[slot] = Status::Fail;
        }
        for (r, c, _) in diff.entries() {
            if violations.len() >= MAX_REPORTED_VIOLATIONS {
                break;
            }
            violations.push(Violation {
                relation,
                row: interval.element(r).clone(),
                col: interval.element(c).clone(),
                expected: expected.get(r, c).to_string(),
                actual: actual.get(r, c).to_string(),
            });
        }
    }
    Sl2Report {
        pi: interval.pi().clone(),
        relations: RelationStatus {
            he: status[0],
            hf: status[1],
            ef: status[2],
        },
        violations,
    }
}
