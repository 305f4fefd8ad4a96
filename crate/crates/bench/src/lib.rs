//! Fixtures shared by the criterion benchmarks.

use bruhat_sl2::Permutation;

/// Tops used across benchmarks: the longest element and a few parabolic maxima.
pub fn tops(n: usize) -> Vec<Permutation> {
    let mut out = vec![Permutation::longest_element(n).expect("n >= 1")];
    for ascents in [vec![1], vec![1, n - 1], vec![n / 2]] {
        if let Ok(p) = Permutation::parabolic_max(n, &ascents) {
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}
