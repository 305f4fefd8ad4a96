//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use bruhat_sl2::antichain::{k_sperner_bruteforce, max_antichain_oracle, BRUTE_FORCE_LIMIT};
use bruhat_sl2::diagnostics::{
    diamond_complete, forbidden_swap_violations, permutation_path, sign_grid, sign_grid_violations, set_a, set_b,
};
use bruhat_sl2::hasse::Order;
use bruhat_sl2::padded::{chain_specializations, chain_sum, pad_interval};
use bruhat_sl2::schubert::{macdonald_sum, principal_specialization, schubert};
use bruhat_sl2::sl2::{build_f, verify_sl2, weight};
use bruhat_sl2::sperner::{certify_sperner, fpower_restricted, k_largest_rank_sums, Verdict};
use bruhat_sl2::{PaddedPolynomial, Permutation, WeakInterval};

use common::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tops(n: usize) -> Vec<Permutation> {
    Permutation::avoiding_132(n).unwrap()
}

fn sl2_relations() -> Outcome {
    let mut count = 0;
    let mut largest = 0;
    // 1 + 2 + 5 + 14 + 42 + 132 tops; n = 1 is the single-point interval
    for n in 1..=6 {
        for pi in tops(n) {
            let report = verify_sl2(&pi).map_err(|e| format!("{pi}: {e}"))?;
            ensure(report.passed(), || format!("{pi}: {:?}", report.violations))?;
            if n <= 5 {
                // dense matrices built straight from the cover definitions
                let d = dense_sl2(&pi);
                ensure(commutator(&d.e, &d.f) == d.h, || format!("{pi}: dense [E,F] != H"))?;
                ensure(commutator(&d.h, &d.e) == scaled(&d.e, 2), || format!("{pi}: dense [H,E] != 2E"))?;
                ensure(commutator(&d.h, &d.f) == scaled(&d.f, -2), || format!("{pi}: dense [H,F] != -2F"))?;
            }
            largest = largest.max(WeakInterval::build(&pi).unwrap().len());
            count += 1;
        }
    }
    ensure(count == 196, || format!("{count} tops checked, expected 196"))?;
    Ok(format!("{count} tops, intervals up to {largest} elements"))
}

fn figures() -> Outcome {
    let pi = perm("5,6,7,3,2,4,1,8");
    let sigma = perm("3,2,5,6,4,1,7,8");
    let grid = sign_grid(&sigma, &pi).map_err(|e| e.to_string())?;
    let expected = vec![(2, 4, 1), (2, 6, -1), (2, 7, -1), (3, 0, 1), (4, 7, 1), (7, 0, 1)];
    let mut cells = grid.nonzero_cells();
    cells.sort();
    ensure(cells == expected, || format!("sign grid cells {cells:?}"))?;
    let path = permutation_path(&sigma, &pi, 7).map_err(|e| e.to_string())?;
    let coords = path.coordinates();
    let want = vec![(3, 4), (2, 5), (5, 1), (6, 2), (4, 6), (1, 7)];
    ensure(coords == want, || format!("path {coords:?}"))?;
    ensure((path.pivot_x, path.pivot_y) == (7, 3), || {
        format!("pivot lines x={}, y={}", path.pivot_x, path.pivot_y)
    })?;
    Ok("6 grid cells and 6 path points match".into())
}

fn sperner() -> Outcome {
    let mut certified = 0;
    let mut brute_checked = 0;
    let candidates = (1..=6).flat_map(tops);
    for pi in candidates {
        let cert = certify_sperner(&pi).map_err(|e| format!("{pi}: {e}"))?;
        ensure(cert.verdict == Verdict::Certified, || format!("{pi}: {:?}", cert.verdict))?;
        certified += 1;
        let interval = WeakInterval::build(&pi).unwrap();
        let sizes = interval.rank_sizes();
        let sums = k_largest_rank_sums(&sizes);
        let antichain = max_antichain_oracle(&interval, Order::Weak);
        ensure(antichain == sums[0], || format!("{pi}: max antichain {antichain} vs {}", sums[0]))?;
        let f = build_f(&interval);
        let full = fpower_restricted(&interval, &f, 0).unwrap();
        ensure(full.len() == 1 && full[0][0] > BigInt::zero(), || format!("{pi}: F^r entry {full:?}"))?;
        if interval.len() <= BRUTE_FORCE_LIMIT {
            for k in 1..=sizes.len() {
                let brute = k_sperner_bruteforce(&interval, k).unwrap();
                ensure(brute == sums[k - 1], || format!("{pi}, k={k}: brute {brute} vs {}", sums[k - 1]))?;
            }
            brute_checked += 1;
        }
    }
    Ok(format!("{certified} tops certified through n=6, {brute_checked} brute-forced for all k"))
}

fn specializations() -> Outcome {
    let mut pairs = 0;
    for n in 1..=5 {
        let intervals: Vec<_> = tops(n).iter().map(|pi| WeakInterval::build(pi).unwrap()).collect();
        let chains: Vec<_> = intervals
            .iter()
            .map(|i| chain_specializations(i).map_err(|e| format!("{}: {e}", i.pi())))
            .collect::<Result<_, _>>()?;
        for sigma in Permutation::all(n).unwrap() {
            let principal = principal_specialization(&sigma);
            let macdonald = macdonald_sum(&sigma).map_err(|e| format!("{sigma}: {e}"))?;
            ensure(principal == macdonald, || format!("{sigma}: {principal} vs macdonald {macdonald}"))?;
            let words = reduced_word_letter_sum(sigma.word());
            ensure(BigInt::from(words) == macdonald * BigInt::from(factorial(sigma.length())), || {
                format!("{sigma}: reduced word oracle {words}")
            })?;
            for (interval, values) in intervals.iter().zip(&chains) {
                let Some(idx) = interval.index_of(&sigma) else { continue };
                ensure(values[idx] == principal, || {
                    format!("{sigma} under {}: chain {} vs {principal}", interval.pi(), values[idx])
                })?;
                pairs += 1;
            }
        }
    }
    // direct entry point and brute-force chain enumeration on a few pairs
    for (s, p) in [("1,3,2", "3,2,1"), ("1,2,3,4", "4,3,2,1"), ("1,3,2,4", "3,4,2,1"), ("1,2,4,3,5", "4,5,3,2,1")] {
        let (s, p) = (perm(s), perm(p));
        let direct = chain_sum(&s, &p).map_err(|e| e.to_string())?;
        let brute = chain_weight_total(&p, s.word());
        ensure(BigInt::from(brute) == &direct * BigInt::from(factorial(p.length() - s.length())), || {
            format!("{s} -> {p}: enumerated {brute}, chain_sum {direct}")
        })?;
    }
    Ok(format!("all sigma in S_1..S_5 agree, {pairs} (sigma, pi) pairs"))
}

fn padded_identities() -> Outcome {
    let mut pairs = 0;
    for n in 1..=5 {
        for pi in tops(n) {
            let interval = WeakInterval::build(&pi).unwrap();
            let padded = pad_interval(&interval).map_err(|e| format!("{pi}: {e}"))?;
            let beta = padded[0].beta().to_vec();
            for idx in 0..interval.len() {
                let sigma = interval.element(idx);
                let mut down = PaddedPolynomial::zero(beta.clone());
                for c in interval.weak_down_covers(idx) {
                    down = &down + &padded[c.target].scale(&BigInt::from(c.i));
                }
                ensure(padded[idx].nabla() == down, || format!("{sigma} under {pi}: nabla"))?;
                let mut up = PaddedPolynomial::zero(beta.clone());
                for c in interval.strong_up_covers(idx) {
                    let w = weight(sigma, c.i, c.j, &pi).map_err(|e| e.to_string())?;
                    up = &up + &padded[c.target].scale(&BigInt::from(w));
                }
                ensure(padded[idx].delta() == up, || format!("{sigma} under {pi}: delta"))?;
                let mut power = padded[idx].clone();
                let gap = interval.top_rank() - interval.length_of(idx);
                for _ in 0..gap {
                    power = power.delta();
                }
                let factor = BigInt::from(factorial(gap)) * padded[idx].evaluate_at_ones();
                ensure(power == PaddedPolynomial::top(beta.clone()).scale(&factor), || {
                    format!("{sigma} under {pi}: delta power")
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} (sigma, pi) pairs"))
}

fn exactness() -> Outcome {
    let mut checked = 0;
    for n in 1..=6 {
        for sigma in tops(n) {
            ensure(principal_specialization(&sigma).is_one(), || format!("{sigma}: S(1,...,1) != 1"))?;
            ensure(macdonald_sum(&sigma).is_ok_and(|v| v.is_one()), || format!("{sigma}: macdonald"))?;
            let interval = WeakInterval::build(&sigma).unwrap();
            chain_specializations(&interval).map_err(|e| format!("{sigma}: {e}"))?;
            checked += 1;
        }
    }
    for sigma in Permutation::all(6).unwrap() {
        macdonald_sum(&sigma).map_err(|e| format!("{sigma}: {e}"))?;
    }
    Ok(format!("{checked} 132-avoiding sigma up to n=6, all factorial divisions exact"))
}

fn structure() -> Outcome {
    for n in 1..=8 {
        let count = Permutation::avoiding_132(n).unwrap().len() as u64;
        let brute = Permutation::all(n).unwrap().filter(|s| avoids_132_brute(s.word())).count() as u64;
        ensure(count == catalan(n as u64) && brute == count, || format!("n={n}: {count} tops, brute {brute}"))?;
    }
    for n in 1..=6 {
        let mut distinct = HashSet::new();
        for sigma in Permutation::all(n).unwrap() {
            let s = schubert(&sigma);
            ensure((s.num_terms() == 1) == avoids_132_brute(sigma.word()), || format!("{sigma}: {s}"))?;
            distinct.insert((*s).clone());
        }
        ensure(distinct.len() == (1..=n).product::<usize>(), || format!("n={n}: Schubert polynomials not distinct"))?;
        for pi in tops(n) {
            let interval = WeakInterval::build(&pi).unwrap();
            let sizes = interval.rank_sizes();
            let mut reversed = sizes.clone();
            reversed.reverse();
            ensure(sizes == reversed, || format!("{pi}: rank sizes {sizes:?}"))?;
            let brute = interval_brute(&pi);
            ensure(brute.len() == interval.len(), || format!("{pi}: {} vs {}", brute.len(), interval.len()))?;
        }
    }
    let mut lemma_pairs = 0;
    for n in 2..=5 {
        for pi in tops(n) {
            let interval = WeakInterval::build(&pi).unwrap();
            for sigma in interval.elements() {
                let mut problems = forbidden_swap_violations(sigma, &pi).unwrap();
                problems.extend(sign_grid_violations(sigma, &pi).unwrap());
                let grid = sign_grid(sigma, &pi).unwrap();
                for i in 1..n {
                    let swapped = sigma.right_multiply_simple(i);
                    if !interval.contains(&swapped) {
                        let empty = set_a(sigma, i).unwrap().is_empty() && set_b(sigma, i, &pi).unwrap().is_empty();
                        ensure(empty, || format!("{sigma} under {pi}: forbidden s{i} with nonempty A/B"))?;
                    }
                }
                for column in 1..=n as u8 {
                    problems.extend(permutation_path(sigma, &pi, column).unwrap().lemma_violations(&grid));
                }
                ensure(problems.is_empty(), || format!("{sigma} under {pi}: {problems:?}"))?;
                lemma_pairs += 1;
            }
            for r in 0..=interval.top_rank() {
                for a in interval.rank(r) {
                    for b in interval.rank(r) {
                        if a != b {
                            diamond_complete(interval.element(a), interval.element(b), &pi)
                                .map_err(|e| format!("under {pi}: {e}"))?;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("Catalan to n=8, palindromic ranks and monomial test to n=6, lemmas on {lemma_pairs} pairs"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("sl2 relations for every 132-avoiding top, n <= 6", sl2_relations),
        ("sign grid and permutation path reproduction", figures),
        ("strong Sperner certificates and antichain oracles", sperner),
        ("three-way specialization agreement, n <= 5", specializations),
        ("nabla and delta padded identities, n <= 5", padded_identities),
        ("exact factorial divisions and unit specializations", exactness),
        ("structural invariants and lemma checks", structure),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS [{}] {name}: {detail} ({secs:.1}s)", k + 1),
            Err(reason) => {
                failed += 1;
                println!("FAIL [{}] {name}: {reason} ({secs:.1}s)", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
