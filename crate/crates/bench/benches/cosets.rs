use criterion::{black_box, criterion_group, criterion_main, Criterion};

use atlas_core::{delta_ladder, enumerate_leaders, is_coset_leader, top_leaders, CodeLength};

fn bench_leader_tests(c: &mut Criterion) {
    let mut group = c.benchmark_group("leader_test");
    for m in [11u32, 14, 20] {
        let len = CodeLength::new(m).unwrap();
        let probe = (len.n() / 3) | 1;
        group.bench_function(format!("m{m}"), |b| {
            b.iter(|| is_coset_leader(black_box(probe), len).unwrap())
        });
    }
    group.finish();
}

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_leaders");
    for m in [11u32, 13] {
        let len = CodeLength::new(m).unwrap();
        group.bench_function(format!("m{m}_full"), |b| {
            b.iter(|| enumerate_leaders(len, 1, len.n() - 1).unwrap().len())
        });
    }
    group.finish();
}

fn bench_ladders(c: &mut Criterion) {
    let mut group = c.benchmark_group("five_largest");
    for m in [11u32, 14, 20] {
        let len = CodeLength::new(m).unwrap();
        group.bench_function(format!("m{m}_closed"), |b| {
            b.iter(|| delta_ladder(len).unwrap())
        });
        group.bench_function(format!("m{m}_scan"), |b| b.iter(|| top_leaders(len, 5).len()));
    }
    group.finish();
}

criterion_group!(benches, bench_leader_tests, bench_enumeration, bench_ladders);
criterion_main!(benches);
