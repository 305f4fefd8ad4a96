//! Reference computations written directly from definitions, sharing no code
//! with the library beyond permutation parsing and enumeration.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use bruhat_sl2::Permutation;

pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

pub fn catalan(n: u64) -> u64 {
    // C(2n, n) / (n + 1) with exact intermediate products
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        c = c * (2 * n as u128 - k) / (k + 1);
    }
    (c / (n as u128 + 1)) as u64
}

pub fn avoids_132_brute(w: &[u8]) -> bool {
    let n = w.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if w[i] < w[k] && w[k] < w[j] {
                    return false;
                }
            }
        }
    }
    true
}

pub fn inversion_pairs(w: &[u8]) -> BTreeSet<(u8, u8)> {
    let mut out = BTreeSet::new();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                out.insert((w[i], w[j]));
            }
        }
    }
    out
}

/// Members of `[e, π]_R` by inversion-set containment over all of `S_n`.
pub fn interval_brute(pi: &Permutation) -> Vec<Vec<u8>> {
    let top = inversion_pairs(pi.word());
    Permutation::all(pi.n())
        .unwrap()
        .map(|s| s.word().to_vec())
        .filter(|w| inversion_pairs(w).is_subset(&top))
        .collect()
}

fn length(w: &[u8]) -> usize {
    inversion_pairs(w).len()
}

/// Dense `E`, `F`, `H` over `[e, π]_R` from the cover definitions, with rows
/// and columns indexed by `elements`.
pub struct DenseSl2 {
    pub elements: Vec<Vec<u8>>,
    pub e: Vec<Vec<i64>>,
    pub f: Vec<Vec<i64>>,
    pub h: Vec<Vec<i64>>,
}

pub fn dense_sl2(pi: &Permutation) -> DenseSl2 {
    let elements = interval_brute(pi);
    let n = pi.n();
    let dim = elements.len();
    let index: HashMap<Vec<u8>, usize> = elements.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
    let mut pos = vec![0usize; n + 1];
    for (p, &v) in pi.word().iter().enumerate() {
        pos[v as usize] = p + 1;
    }
    let top_len = length(pi.word()) as i64;
    let mut e = vec![vec![0i64; dim]; dim];
    let mut f = vec![vec![0i64; dim]; dim];
    let mut h = vec![vec![0i64; dim]; dim];
    for (col, w) in elements.iter().enumerate() {
        let l = length(w);
        h[col][col] = 2 * l as i64 - top_len;
        for i in 0..n {
            for j in i + 1..n {
                let mut t = w.clone();
                t.swap(i, j);
                let Some(&row) = index.get(&t) else { continue };
                if length(&t) != l + 1 {
                    continue;
                }
                let (a, b) = (w[i], w[j]);
                let mut wt = 1;
                for &c in &w[j + 1..] {
                    if a < c && c < b {
                        wt += 1;
                    }
                    if pos[b as usize] < pos[c as usize] && pos[c as usize] < pos[a as usize] {
                        wt += 1;
                    }
                }
                e[row][col] += wt;
                if j == i + 1 {
                    // the same pair read downward is a weak cover t -> w
                    f[col][row] += (i + 1) as i64;
                }
            }
        }
    }
    DenseSl2 { elements, e, f, h }
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for r in 0..n {
        for k in 0..n {
            if a[r][k] == 0 {
                continue;
            }
            for c in 0..n {
                out[r][c] += a[r][k] * b[k][c];
            }
        }
    }
    out
}

pub fn commutator(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let ab = mat_mul(a, b);
    let ba = mat_mul(b, a);
    ab.iter()
        .zip(&ba)
        .map(|(x, y)| x.iter().zip(y).map(|(p, q)| p - q).collect())
        .collect()
}

pub fn scaled(a: &[Vec<i64>], k: i64) -> Vec<Vec<i64>> {
    a.iter().map(|row| row.iter().map(|v| v * k).collect()).collect()
}

/// All saturated chains from `start` to `pi` through strong covers inside the
/// interval, each contributing the product of its weights.
pub fn chain_weight_total(pi: &Permutation, start: &[u8]) -> u128 {
    let sl2 = dense_sl2(pi);
    let idx = sl2.elements.iter().position(|w| w == start).unwrap();
    let top = sl2.elements.iter().position(|w| w == pi.word()).unwrap();
    fn walk(e: &[Vec<i64>], from: usize, top: usize) -> u128 {
        if from == top {
            return 1;
        }
        (0..e.len())
            .filter(|&r| e[r][from] != 0)
            .map(|r| e[r][from] as u128 * walk(e, r, top))
            .sum()
    }
    walk(&sl2.e, idx, top)
}

/// Reduced words by breadth-first search over products of simple reflections.
pub fn reduced_word_letter_sum(target: &[u8]) -> u128 {
    let n = target.len();
    let l = length(target);
    let mut layer: HashMap<Vec<u8>, u128> = HashMap::from([((1..=n as u8).collect(), 1u128)]);
    for _ in 0..l {
        let mut next: HashMap<Vec<u8>, u128> = HashMap::new();
        for (w, total) in &layer {
            for i in 0..n - 1 {
                if w[i] < w[i + 1] {
                    let mut u = w.clone();
                    u.swap(i, i + 1);
                    *next.entry(u).or_default() += total * (i + 1) as u128;
                }
            }
        }
        layer = next;
    }
    layer.get(target).copied().unwrap_or(0)
}

pub fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}
