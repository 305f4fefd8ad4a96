use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use bruhat_sl2::padded::chain_specializations;
use bruhat_sl2::schubert::{macdonald_sum, schubert};
use bruhat_sl2::sl2::verify_sl2;
use bruhat_sl2::sperner::certify_sperner;
use bruhat_sl2::{Permutation, WeakInterval};
use bruhat_sl2_bench::tops;

fn interval_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("interval_build");
    for n in [5, 6] {
        for pi in tops(n) {
            group.bench_with_input(BenchmarkId::from_parameter(&pi), &pi, |b, pi| {
                b.iter(|| WeakInterval::build(pi).unwrap())
            });
        }
    }
    group.finish();
}

fn sl2_relations(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_sl2");
    group.sample_size(10);
    for n in [5, 6] {
        let pi = Permutation::longest_element(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(&pi), &pi, |b, pi| {
            b.iter(|| verify_sl2(pi).unwrap())
        });
    }
    group.finish();
}

fn sperner(c: &mut Criterion) {
    let mut group = c.benchmark_group("certify_sperner");
    group.sample_size(10);
    for pi in tops(5).into_iter().chain(tops(6)) {
        group.bench_with_input(BenchmarkId::from_parameter(&pi), &pi, |b, pi| {
            b.iter(|| certify_sperner(pi).unwrap())
        });
    }
    group.finish();
}

fn specializations(c: &mut Criterion) {
    let mut group = c.benchmark_group("specializations");
    group.sample_size(10);
    let s5: Vec<Permutation> = Permutation::all(5).unwrap().collect();
    // the memo is warm after the first iteration, so this measures lookups
    group.bench_function("schubert_s5", |b| {
        b.iter(|| s5.iter().map(|s| schubert(s).num_terms()).sum::<usize>())
    });
    group.bench_function("macdonald_s5", |b| {
        b.iter(|| s5.iter().map(|s| macdonald_sum(s).unwrap()).collect::<Vec<_>>())
    });
    let w0 = WeakInterval::build(&Permutation::longest_element(6).unwrap()).unwrap();
    group.bench_function("chain_dp_w0_6", |b| b.iter(|| chain_specializations(&w0).unwrap()));
    group.finish();
}

criterion_group!(benches, interval_build, sl2_relations, sperner, specializations);
criterion_main!(benches);
