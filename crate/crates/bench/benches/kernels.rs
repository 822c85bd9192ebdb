use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use factorable::fixtures::{appendix_monoid, braid_group, z2};
use factorable::indexseq::enumerate_small;
use factorable::morse::{homology, visy_complex};
use factorable::FactorableMonoid;
use factorable_bench::random_words;

fn normal_forms(c: &mut Criterion) {
    let m = appendix_monoid();
    let mut group = c.benchmark_group("appendix_nf");
    for len in [4, 16, 64] {
        let words = random_words(27, len, 64);
        group.bench_with_input(BenchmarkId::from_parameter(len), &words, |b, ws| {
            b.iter(|| ws.iter().map(|w| m.table.normal_form(black_box(w)).len()).sum::<usize>())
        });
    }
    group.finish();
}

fn braid_group_multiply(c: &mut Criterion) {
    let g = braid_group(3).unwrap();
    let gens = g.generators();
    let elems: Vec<_> = random_words(gens.len(), 12, 32)
        .iter()
        .map(|w| w.positions().iter().fold(g.one(), |acc, &l| g.mul(&acc, &gens[l as usize])))
        .collect();
    c.bench_function("braid_group_mul", |b| {
        b.iter(|| elems.windows(2).map(|p| g.norm(&g.mul(black_box(&p[0]), black_box(&p[1])))).sum::<usize>())
    });
}

fn small_complex(c: &mut Criterion) {
    let m = z2();
    c.bench_function("z2_visy_homology_deg6", |b| {
        b.iter(|| homology(&visy_complex(&m, black_box(6)).unwrap(), 6).unwrap().len())
    });
}

fn index_sequences(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_small");
    for n in [2, 3, 4] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| enumerate_small(n, true).len()));
    }
    group.finish();
}

criterion_group!(benches, normal_forms, braid_group_multiply, small_complex, index_sequences);
criterion_main!(benches);
