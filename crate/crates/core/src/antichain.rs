//! Order-theoretic oracles for antichains of an interval.

use crate::error::{Error, Result};
use crate::hasse::Order;
use crate::interval::WeakInterval;

/// Default element bound for [`k_sperner_bruteforce`].
pub const BRUTE_FORCE_LIMIT: usize = 24;

/// `above[x]` holds every `y > x` as a bitset over element indices.
fn strictly_above(interval: &WeakInterval, order: Order) -> Vec<Vec<u64>> {
    let n = interval.len();
    let words = n.div_ceil(64);
    let mut above = vec![vec![0u64; words]; n];
    // indices are sorted by length, so covers always point to larger indices
    for x in (0..n).rev() {
        let targets: Vec<usize> = match order {
            Order::Weak => interval.weak_up_covers(x).iter().map(|c| c.target).collect(),
            Order::Strong => interval.strong_up_covers(x).iter().map(|c| c.target).collect(),
        };
        let mut acc = vec![0u64; words];
        for t in targets {
            acc[t / 64] |= 1 << (t % 64);
            for (a, b) in acc.iter_mut().zip(&above[t]) {
                *a |= b;
            }
        }
        above[x] = acc;
    }
    above
}

fn bits(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(w, &word)| {
        (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| w * 64 + b)
    })
}

/// Size of a largest antichain: element count minus a maximum matching in
/// the bipartite graph of strict comparabilities.
pub fn max_antichain_oracle(interval: &WeakInterval, order: Order) -> usize {
    let above = strictly_above(interval, order);
    let adjacency: Vec<Vec<usize>> = above.iter().map(|s| bits(s).collect()).collect();
    let n = interval.len();
    let mut match_right: Vec<Option<usize>> = vec![None; n];

    fn augment(
        x: usize,
        adjacency: &[Vec<usize>],
        visited: &mut [bool],
        match_right: &mut [Option<usize>],
    ) -> bool {
        for &y in &adjacency[x] {
            if visited[y] {
                continue;
            }
            visited[y] = true;
            let free = match match_right[y] {
                None => true,
                Some(z) => augment(z, adjacency, visited, match_right),
            };
            if free {
                match_right[y] = Some(x);
                return true;
            }
        }
        false
    }

    let mut matching = 0;
    for x in 0..n {
        let mut visited = vec![false; n];
        if augment(x, &adjacency, &mut visited, &mut match_right) {
            matching += 1;
        }
    }
    n - matching
}

/// Largest union of `k` antichains in the weak order on the interval.
///
/// A subset is such a union exactly when its longest chain has at most `k`
/// elements, so the search only tracks chain heights of chosen elements.
pub fn k_sperner_bruteforce(interval: &WeakInterval, k: usize) -> Result<usize> {
    k_sperner_bruteforce_with_limit(interval, k, BRUTE_FORCE_LIMIT)
}

pub fn k_sperner_bruteforce_with_limit(interval: &WeakInterval, k: usize, limit: usize) -> Result<usize> {
    let n = interval.len();
    if n > limit || n > 63 {
        return Err(Error::TooLargeForBruteForce { size: n, limit });
    }
    if k == 0 {
        return Ok(0);
    }
    let above = strictly_above(interval, Order::Weak);
    let mut below = vec![0u64; n];
    for (x, set) in above.iter().enumerate() {
        for y in bits(set) {
            below[y] |= 1 << x;
        }
    }

    struct Search<'a> {
        below: &'a [u64],
        k: usize,
        height: Vec<usize>,
        best: usize,
    }

    impl Search<'_> {
        fn go(&mut self, x: usize, chosen: u64, size: usize) {
            let n = self.below.len();
            if size + (n - x) <= self.best {
                return;
            }
            if x == n {
                self.best = size;
                return;
            }
            let h = 1 + bits(&[self.below[x] & chosen]).map(|y| self.height[y]).max().unwrap_or(0);
            if h <= self.k {
                self.height[x] = h;
                self.go(x + 1, chosen | 1 << x, size + 1);
            }
            self.go(x + 1, chosen, size);
        }
    }

    let mut search = Search {
        below: &below,
        k,
        height: vec![0; n],
        best: 0,
    };
    search.go(0, 0, 0);
    Ok(search.best)
}
