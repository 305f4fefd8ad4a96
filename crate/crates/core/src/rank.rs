//! Exact rank over the rationals by fraction-free elimination.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Rank of a rectangular integer matrix given as rows.
///
/// Bareiss elimination: after each pivot step every remaining entry is
/// divided exactly by the previous pivot, so entries stay integral and
/// bounded by minors of the input.
pub fn exact_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let height = m.len();
    let width = m.iter().map(Vec::len).max().unwrap_or(0);
    for row in &mut m {
        row.resize(width, BigInt::zero());
    }
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..width {
        if rank == height {
            break;
        }
        // smallest nonzero magnitude keeps intermediate growth down
        let pivot = (rank..height)
            .filter(|&r| !m[r][col].is_zero())
            .min_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()));
        let Some(pivot) = pivot else { continue };
        m.swap(rank, pivot);
        let (top, rest) = m.split_at_mut(rank + 1);
        let p = &top[rank];
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for c in col + 1..width {
                let v = &p[col] * &row[c] - &factor * &p[c];
                row[c] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = top[rank][col].clone();
        rank += 1;
    }
    rank
}
