//! Strong Sperner certificates from ranks of restricted powers of `F`.
//!
//! If `F^{r−2i}` maps rank `r−i` isomorphically onto rank `i` for every
//! `i < r/2`, the interval is strongly Sperner.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::antichain::{k_sperner_bruteforce, max_antichain_oracle, BRUTE_FORCE_LIMIT};
use crate::error::{Error, Result};
use crate::hasse::Order;
use crate::interval::{IntervalConfig, WeakInterval};
use crate::operator::LinearOperator;
use crate::perm::Permutation;
use crate::rank::exact_rank;
use crate::sl2::build_f;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Certified,
    Refuted,
    Inconclusive,
}

/// Cross-checks against order-theoretic oracles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResults {
    pub max_rank_size: usize,
    pub max_antichain_weak: usize,
    pub max_antichain_strong: usize,
    /// `k_largest_rank_sums[k-1]` is the size of the `k` largest ranks together.
    pub k_largest_rank_sums: Vec<usize>,
    /// Brute-force largest union of `k` antichains, when the interval is small enough.
    pub k_sperner: Option<Vec<usize>>,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpernerCertificate {
    pub pi: Permutation,
    pub verdict: Verdict,
    pub rank_sizes: Vec<usize>,
    #[serde(skip)]
    pub fpower_ranks: Vec<usize>,
    pub fpower_full_rank: Vec<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleResults>,
}

impl SpernerCertificate {
    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::Certified
    }
}

/// Matrix of `F^{r−2i}` from rank `r−i` (columns) to rank `i` (rows).
pub fn fpower_restricted(interval: &WeakInterval, f: &LinearOperator, i: usize) -> Result<Vec<Vec<BigInt>>> {
    let r = interval.top_rank();
    if 2 * i > r {
        return Err(Error::RankIndexOutOfRange { index: i, length: r });
    }
    let (domain, codomain) = (interval.rank(r - i), interval.rank(i));
    if domain.len() != codomain.len() {
        return Err(Error::RankSizeMismatch {
            upper: r - i,
            upper_size: domain.len(),
            lower: i,
            lower_size: codomain.len(),
        });
    }
    let mut matrix = vec![vec![BigInt::zero(); domain.len()]; codomain.len()];
    for (col, d) in domain.enumerate() {
        let mut v = vec![BigInt::zero(); interval.len()];
        v[d] = BigInt::from(1);
        for _ in 0..r - 2 * i {
            v = f.apply(&v);
        }
        for (row, c) in codomain.clone().enumerate() {
            matrix[row][col] = std::mem::take(&mut v[c]);
        }
    }
    Ok(matrix)
}

pub fn certify_sperner(pi: &Permutation) -> Result<SpernerCertificate> {
    certify_sperner_with(pi, &IntervalConfig::default(), false)
}

/// Inconclusive when the interval exceeds the configured bound.
pub fn certify_sperner_with(pi: &Permutation, config: &IntervalConfig, oracle: bool) -> Result<SpernerCertificate> {
    let interval = match WeakInterval::build_with(pi, config) {
        Ok(interval) => interval,
        Err(Error::IntervalTooLarge { .. }) => {
            return Ok(SpernerCertificate {
                pi: pi.clone(),
                verdict: Verdict::Inconclusive,
                rank_sizes: Vec::new(),
                fpower_ranks: Vec::new(),
                fpower_full_rank: Vec::new(),
                oracle: None,
            })
        }
        Err(e) => return Err(e),
    };
    let mut cert = certify_interval(&interval);
    if oracle {
        cert.oracle = Some(oracle_check(&interval));
    }
    Ok(cert)
}

pub fn certify_interval(interval: &WeakInterval) -> SpernerCertificate {
    let f = build_f(interval);
    let r = interval.top_rank();
    let mut fpower_ranks = Vec::new();
    let mut fpower_full_rank = Vec::new();
    for i in 0..r.div_ceil(2) {
        match fpower_restricted(interval, &f, i) {
            Ok(m) => {
                let rank = exact_rank(&m);
                fpower_full_rank.push(rank == m.len());
                fpower_ranks.push(rank);
            }
            Err(_) => {
                fpower_full_rank.push(false);
                fpower_ranks.push(0);
            }
        }
    }
    let verdict = if fpower_full_rank.iter().all(|&ok| ok) {
        Verdict::Certified
    } else {
        Verdict::Refuted
    };
    SpernerCertificate {
        pi: interval.pi().clone(),
        verdict,
        rank_sizes: interval.rank_sizes(),
        fpower_ranks,
        fpower_full_rank,
        oracle: None,
    }
}

/// Sum of the `k` largest rank sizes for `k = 1..=r+1`.
pub fn k_largest_rank_sums(rank_sizes: &[usize]) -> Vec<usize> {
    let mut sorted = rank_sizes.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted
        .iter()
        .scan(0, |acc, s| {
            *acc += s;
            Some(*acc)
        })
        .collect()
}

pub fn oracle_check(interval: &WeakInterval) -> OracleResults {
    let sizes = interval.rank_sizes();
    let sums = k_largest_rank_sums(&sizes);
    let max_rank_size = sums[0];
    let max_antichain_weak = max_antichain_oracle(interval, Order::Weak);
    let max_antichain_strong = max_antichain_oracle(interval, Order::Strong);
    let k_sperner = (interval.len() <= BRUTE_FORCE_LIMIT).then(|| {
        (1..=sizes.len())
            .map(|k| k_sperner_bruteforce(interval, k).expect("within brute-force limit"))
            .collect::<Vec<_>>()
    });
    let agrees = max_antichain_weak == max_rank_size && k_sperner.as_ref().map(|ks| *ks == sums).unwrap_or(true);
    OracleResults {
        max_rank_size,
        max_antichain_weak,
        max_antichain_strong,
        k_largest_rank_sums: sums,
        k_sperner,
        agrees,
    }
}
