//! Permutations of `[n]` in one-line notation.
//!
//! Positions and values are 1-based everywhere in the public API, so
//! `Permutation::value(1)` is the first letter of the word.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation stored as its one-line word `σ₁…σₙ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u8>,
}

/// Value pairs `(a, b)` with `a > b` and `a` written before `b`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InversionSet {
    pairs: BTreeSet<(u8, u8)>,
}

impl InversionSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, larger: u8, smaller: u8) -> bool {
        self.pairs.contains(&(larger, smaller))
    }

    pub fn is_subset(&self, other: &InversionSet) -> bool {
        self.pairs.is_subset(&other.pairs)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        self.pairs.iter().copied()
    }
}

impl Permutation {
    /// Validates that `word` is a bijection on `{1, …, n}`.
    pub fn new(word: Vec<u8>) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::ZeroSize);
        }
        check_bijection(&word).map_err(|reason| Error::Parse {
            input: join(&word),
            reason,
        })?;
        Ok(Self { word })
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Self {
            word: (1..=n as u8).collect(),
        })
    }

    /// The longest element `w₀ = n(n-1)…1`.
    pub fn longest_element(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Self {
            word: (1..=n as u8).rev().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// `σ(position)`, 1-based.
    pub fn value(&self, position: usize) -> u8 {
        self.word[position - 1]
    }

    /// `σ⁻¹(value)`, 1-based.
    pub fn position_of(&self, value: u8) -> usize {
        self.word
            .iter()
            .position(|&v| v == value)
            .expect("value in range")
            + 1
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Coxeter length: the number of pairs `i < j` with `σᵢ > σⱼ`.
    pub fn length(&self) -> usize {
        let w = &self.word;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&b| b < w[i]).count())
            .sum()
    }

    pub fn inversions(&self) -> InversionSet {
        let w = &self.word;
        let mut pairs = BTreeSet::new();
        for i in 0..w.len() {
            for &b in &w[i + 1..] {
                if w[i] > b {
                    pairs.insert((w[i], b));
                }
            }
        }
        InversionSet { pairs }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.n()];
        for (pos, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = pos as u8 + 1;
        }
        Self { word: inv }
    }

    /// The inverse as a lookup table: `table[v]` is the position of value `v`
    /// (index 0 unused).
    pub(crate) fn inverse_table(&self) -> Vec<u8> {
        let mut inv = vec![0u8; self.n() + 1];
        for (pos, &v) in self.word.iter().enumerate() {
            inv[v as usize] = pos as u8 + 1;
        }
        inv
    }

    /// `σ·t_{ij}`: swaps the entries at positions `i < j`.
    pub fn right_multiply_transposition(&self, i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j || j > self.n() {
            return Err(Error::PositionOutOfRange { i, j, n: self.n() });
        }
        Ok(self.swap_positions(i, j))
    }

    pub(crate) fn swap_positions(&self, i: usize, j: usize) -> Self {
        let mut word = self.word.clone();
        word.swap(i - 1, j - 1);
        Self { word }
    }

    /// `σ·sᵢ`: swaps positions `i` and `i+1`.
    pub fn right_multiply_simple(&self, i: usize) -> Self {
        self.swap_positions(i, i + 1)
    }

    /// `sᵢ·σ`: swaps the letters `i` and `i+1` wherever they occur.
    pub fn left_multiply_simple(&self, i: usize) -> Self {
        let (a, b) = (i as u8, i as u8 + 1);
        let word = self
            .word
            .iter()
            .map(|&v| match v {
                v if v == a => b,
                v if v == b => a,
                v => v,
            })
            .collect();
        Self { word }
    }

    /// `σᵢ > σᵢ₊₁`, i.e. `σ·sᵢ` is shorter than `σ`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.word[i - 1] > self.word[i]
    }

    /// The letter `i+1` appears before `i`, i.e. `sᵢ·σ` is shorter than `σ`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.position_of(i as u8 + 1) < self.position_of(i as u8)
    }

    pub fn right_descents(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.n()).filter(|&i| self.has_right_descent(i))
    }

    /// Whether some subsequence of `self` is order-isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &Permutation) -> Result<bool> {
        let k = pattern.n();
        if k > self.n() {
            return Err(Error::PatternTooLong {
                pattern: k,
                text: self.n(),
            });
        }
        let mut chosen = Vec::with_capacity(k);
        Ok(search_pattern(&self.word, &pattern.word, 0, &mut chosen))
    }

    /// No positions `i < j < k` with `σᵢ < σₖ < σⱼ`.
    pub fn avoids_132(&self) -> bool {
        let w = &self.word;
        let mut prefix_min = u8::MAX;
        for j in 0..w.len() {
            if prefix_min < w[j]
                && w[j + 1..].iter().any(|&c| prefix_min < c && c < w[j])
            {
                return false;
            }
            prefix_min = prefix_min.min(w[j]);
        }
        true
    }

    /// Inversion table `cᵢ = |{j > i : σⱼ < σᵢ}|`.
    pub fn lehmer_code(&self) -> Vec<u32> {
        let w = &self.word;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&b| b < w[i]).count() as u32)
            .collect()
    }

    /// The unique longest permutation increasing at every position in `ascents`.
    ///
    /// Positions joined by an index of `ascents` form increasing blocks; the
    /// blocks receive decreasing ranges of values from left to right.
    pub fn parabolic_max(n: usize, ascents: &[usize]) -> Result<Self> {
        check_size(n)?;
        let mut joined = vec![false; n];
        for &i in ascents {
            if i == 0 || i >= n {
                return Err(Error::InvalidReflection { index: i, n });
            }
            joined[i] = true;
        }
        let mut blocks: Vec<usize> = Vec::new();
        for pos in 1..=n {
            match blocks.last_mut() {
                Some(len) if joined[pos - 1] => *len += 1,
                _ => blocks.push(1),
            }
        }
        let mut word = Vec::with_capacity(n);
        let mut top = n;
        for len in blocks {
            word.extend((top - len + 1..=top).map(|v| v as u8));
            top -= len;
        }
        Ok(Self { word })
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Result<AllPermutations> {
        Ok(AllPermutations {
            next: Some(Self::identity(n)?.word),
        })
    }

    /// All 132-avoiding permutations of `S_n`, lexicographically.
    pub fn avoiding_132(n: usize) -> Result<Vec<Self>> {
        Ok(Self::all(n)?.filter(Permutation::avoids_132).collect())
    }
}

/// Lexicographic enumeration of `S_n`.
pub struct AllPermutations {
    next: Option<Vec<u8>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut w = current.clone();
        if let Some(i) = (0..w.len().saturating_sub(1)).rev().find(|&i| w[i] < w[i + 1]) {
            let j = (i + 1..w.len()).rev().find(|&j| w[j] > w[i]).unwrap();
            w.swap(i, j);
            w[i + 1..].reverse();
            self.next = Some(w);
        }
        Some(Permutation { word: current })
    }
}

fn search_pattern(text: &[u8], pattern: &[u8], start: usize, chosen: &mut Vec<u8>) -> bool {
    if chosen.len() == pattern.len() {
        return true;
    }
    let m = chosen.len();
    for pos in start..text.len() {
        let v = text[pos];
        let consistent = chosen
            .iter()
            .zip(pattern)
            .all(|(&c, &p)| (c < v) == (p < pattern[m]));
        if consistent {
            chosen.push(v);
            if search_pattern(text, pattern, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroSize)
    } else if n > u8::MAX as usize {
        Err(Error::Precondition(format!("n = {n} exceeds {}", u8::MAX)))
    } else {
        Ok(())
    }
}

fn check_bijection(word: &[u8]) -> std::result::Result<(), String> {
    let n = word.len();
    if n > u8::MAX as usize {
        return Err(format!("size {n} exceeds {}", u8::MAX));
    }
    let mut seen = vec![false; n + 1];
    for &v in word {
        if v == 0 || v as usize > n {
            return Err(format!("value {v} is outside 1..={n}"));
        }
        if seen[v as usize] {
            return Err(format!("value {v} appears more than once"));
        }
        seen[v as usize] = true;
    }
    Ok(())
}

fn join(word: &[u8]) -> String {
    word.iter()
        .map(u8::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.word))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses comma-separated one-line notation such as `5,6,7,3,2,4,1,8`.
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: String| Error::Parse {
            input: s.to_string(),
            reason,
        };
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(parse_err("empty input".into()));
        }
        let values = trimmed
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<usize>()
                    .map_err(|_| parse_err(format!("`{tok}` is not a positive integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        let n = values.len();
        if n > u8::MAX as usize {
            return Err(parse_err(format!("size {n} exceeds {}", u8::MAX)));
        }
        let mut count = vec![0usize; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(parse_err(format!("value {v} is outside 1..={n}")));
            }
            count[v] += 1;
        }
        if let Some(dup) = (1..=n).find(|&v| count[v] > 1) {
            let missing = (1..=n).find(|&v| count[v] == 0).unwrap();
            return Err(parse_err(format!(
                "value {dup} is duplicated and value {missing} is missing"
            )));
        }
        Ok(Self {
            word: values.into_iter().map(|v| v as u8).collect(),
        })
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
