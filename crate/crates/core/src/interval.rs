//! Weak order intervals `[e, π]_R` with their weak and strong cover relations.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_MAX_ELEMENTS: usize = 500_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntervalConfig {
    pub max_elements: usize,
}

impl Default for IntervalConfig {
    fn default() -> Self {
        Self {
            max_elements: DEFAULT_MAX_ELEMENTS,
        }
    }
}

/// `σ ⋖ σ·sᵢ` (or the reverse, for down covers), with the index of the other end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeakCover {
    pub i: usize,
    pub target: usize,
}

/// `σ ≺⋅ σ·t_{ij}` with the index of the upper element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrongCover {
    pub i: usize,
    pub j: usize,
    pub target: usize,
}

/// `u ≤ v` in right weak order, i.e. `inv(u) ⊆ inv(v)`.
pub fn weak_leq(u: &Permutation, v: &Permutation) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::SizeMismatch {
            left: u.n(),
            right: v.n(),
        });
    }
    Ok(u.inversions().is_subset(&v.inversions()))
}

/// Whether `σ·t_{ij}` covers `σ` in strong Bruhat order (positions 1-based, `i < j`).
pub fn is_strong_cover(sigma: &Permutation, i: usize, j: usize) -> bool {
    if i == 0 || i >= j || j > sigma.n() {
        return false;
    }
    let (lo, hi) = (sigma.value(i), sigma.value(j));
    lo < hi && (i + 1..j).all(|k| !(lo < sigma.value(k) && sigma.value(k) < hi))
}

/// All strong order covers `σ ≺⋅ σ·t_{ij}` in `S_n`, ordered by `(i, j)`.
pub fn strong_up_covers(sigma: &Permutation) -> Vec<(usize, usize, Permutation)> {
    let n = sigma.n();
    let mut out = Vec::new();
    for i in 1..n {
        // smallest value above σᵢ seen so far between i and j; any later
        // candidate must lie below it
        let mut ceiling = u8::MAX;
        for j in i + 1..=n {
            let v = sigma.value(j);
            if v > sigma.value(i) && v < ceiling {
                out.push((i, j, sigma.swap_positions(i, j)));
                ceiling = v;
            }
        }
    }
    out
}

/// If `a` and `b` differ by a single transposition `t_{ij}`, returns `(i, j)`.
pub(crate) fn transposition_between(a: &Permutation, b: &Permutation) -> Option<(usize, usize)> {
    let diff: Vec<usize> = (1..=a.n()).filter(|&p| a.value(p) != b.value(p)).collect();
    match diff[..] {
        [i, j] if a.value(i) == b.value(j) && a.value(j) == b.value(i) => Some((i, j)),
        _ => None,
    }
}

/// The interval `[e, π]_R` as an explicit ranked poset.
///
/// Elements are indexed canonically by `(length, one-line word)`, so each rank
/// occupies a contiguous index range.
#[derive(Debug, Clone)]
pub struct WeakInterval {
    pi: Permutation,
    pi_positions: Vec<u8>,
    elements: Vec<Permutation>,
    lengths: Vec<usize>,
    index_of: HashMap<Permutation, usize>,
    rank_starts: Vec<usize>,
    weak_up: Vec<Vec<WeakCover>>,
    weak_down: Vec<Vec<WeakCover>>,
    strong_up: Vec<Vec<StrongCover>>,
}

impl WeakInterval {
    /// Builds `[e, π]_R` for a 132-avoiding `π` with the default size bound.
    pub fn build(pi: &Permutation) -> Result<Self> {
        Self::build_with(pi, &IntervalConfig::default())
    }

    pub fn build_with(pi: &Permutation, config: &IntervalConfig) -> Result<Self> {
        if !pi.avoids_132() {
            return Err(Error::Non132Avoiding(pi.clone()));
        }
        Self::build_unchecked(pi, config)
    }

    /// Builds the interval without requiring `π` to avoid 132. Used by
    /// exploratory tooling and tests; the sl2 structure needs the hypothesis.
    pub fn build_unchecked(pi: &Permutation, config: &IntervalConfig) -> Result<Self> {
        let n = pi.n();
        let pi_positions = pi.inverse_table();
        let identity = Permutation::identity(n)?;

        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(identity.clone());
        queue.push_back(identity);
        while let Some(sigma) = queue.pop_front() {
            for i in 1..n {
                let (a, b) = (sigma.value(i), sigma.value(i + 1));
                // σ·sᵢ adds the inversion (b, a); it must already be an inversion of π
                if a < b && pi_positions[b as usize] < pi_positions[a as usize] {
                    let up = sigma.right_multiply_simple(i);
                    if !seen.contains(&up) {
                        if seen.len() >= config.max_elements {
                            return Err(Error::IntervalTooLarge {
                                bound: config.max_elements,
                            });
                        }
                        seen.insert(up.clone());
                        queue.push_back(up);
                    }
                }
            }
        }

        let mut keyed: Vec<(usize, Permutation)> =
            seen.into_iter().map(|s| (s.length(), s)).collect();
        keyed.sort_unstable();
        let lengths: Vec<usize> = keyed.iter().map(|(l, _)| *l).collect();
        let elements: Vec<Permutation> = keyed.into_iter().map(|(_, s)| s).collect();
        let index_of: HashMap<Permutation, usize> = elements
            .iter()
            .enumerate()
            .map(|(idx, s)| (s.clone(), idx))
            .collect();

        let top = pi.length();
        let mut rank_starts = vec![0usize; top + 2];
        for &l in &lengths {
            rank_starts[l + 1] += 1;
        }
        for r in 1..rank_starts.len() {
            rank_starts[r] += rank_starts[r - 1];
        }

        let mut weak_up = vec![Vec::new(); elements.len()];
        let mut weak_down = vec![Vec::new(); elements.len()];
        let mut strong_up = vec![Vec::new(); elements.len()];
        for (idx, sigma) in elements.iter().enumerate() {
            for i in 1..n {
                let (a, b) = (sigma.value(i), sigma.value(i + 1));
                if a < b && pi_positions[b as usize] < pi_positions[a as usize] {
                    let target = index_of[&sigma.right_multiply_simple(i)];
                    weak_up[idx].push(WeakCover { i, target });
                    weak_down[target].push(WeakCover { i, target: idx });
                }
            }
            for (i, j, up) in strong_up_covers(sigma) {
                if transposition_stays_below(sigma, i, j, &pi_positions) {
                    let target = *index_of
                        .get(&up)
                        .expect("inversion delta agrees with membership");
                    strong_up[idx].push(StrongCover { i, j, target });
                }
            }
        }
        for downs in &mut weak_down {
            downs.sort_by_key(|c| c.i);
        }

        Ok(Self {
            pi: pi.clone(),
            pi_positions,
            elements,
            lengths,
            index_of,
            rank_starts,
            weak_up,
            weak_down,
            strong_up,
        })
    }

    pub fn pi(&self) -> &Permutation {
        &self.pi
    }

    pub fn n(&self) -> usize {
        self.pi.n()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `ℓ(π)`, the rank of the top element.
    pub fn top_rank(&self) -> usize {
        self.rank_starts.len() - 2
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &Permutation {
        &self.elements[idx]
    }

    pub fn length_of(&self, idx: usize) -> usize {
        self.lengths[idx]
    }

    pub fn index_of(&self, sigma: &Permutation) -> Option<usize> {
        self.index_of.get(sigma).copied()
    }

    pub fn contains(&self, sigma: &Permutation) -> bool {
        self.index_of.contains_key(sigma)
    }

    /// Index range of the elements of length `r`.
    pub fn rank(&self, r: usize) -> std::ops::Range<usize> {
        self.rank_starts[r]..self.rank_starts[r + 1]
    }

    pub fn rank_sizes(&self) -> Vec<usize> {
        self.rank_starts.windows(2).map(|w| w[1] - w[0]).collect()
    }

    pub fn weak_up_covers(&self, idx: usize) -> &[WeakCover] {
        &self.weak_up[idx]
    }

    pub fn weak_down_covers(&self, idx: usize) -> &[WeakCover] {
        &self.weak_down[idx]
    }

    pub fn strong_up_covers(&self, idx: usize) -> &[StrongCover] {
        &self.strong_up[idx]
    }

    /// `π⁻¹(value)`.
    pub fn pi_position(&self, value: u8) -> u8 {
        self.pi_positions[value as usize]
    }

    pub(crate) fn pi_positions(&self) -> &[u8] {
        &self.pi_positions
    }

    /// Errors unless `σ` lies in the interval.
    pub fn require(&self, sigma: &Permutation) -> Result<usize> {
        self.index_of(sigma).ok_or_else(|| Error::NotInInterval {
            sigma: sigma.clone(),
            pi: self.pi.clone(),
        })
    }
}

/// `σ ≤ π` in right weak order, with `π` given by its position table.
pub(crate) fn is_below(sigma: &Permutation, pi_positions: &[u8]) -> bool {
    let w = sigma.word();
    (0..w.len()).all(|a| {
        w[a + 1..]
            .iter()
            .all(|&b| w[a] < b || pi_positions[w[a] as usize] < pi_positions[b as usize])
    })
}

/// Given `σ ≤ π` and a strong cover `σ ≺⋅ σ·t_{ij}`, decides whether the
/// cover stays below `π` from the inversions the transposition creates.
pub(crate) fn transposition_stays_below(
    sigma: &Permutation,
    i: usize,
    j: usize,
    pi_positions: &[u8],
) -> bool {
    let inverted_in_pi = |big: u8, small: u8| pi_positions[big as usize] < pi_positions[small as usize];
    let (lo, hi) = (sigma.value(i), sigma.value(j));
    if !inverted_in_pi(hi, lo) {
        return false;
    }
    (i + 1..j).all(|k| {
        let v = sigma.value(k);
        if v < lo {
            inverted_in_pi(hi, v)
        } else {
            // a cover has no value strictly between lo and hi here
            inverted_in_pi(v, lo)
        }
    })
}
