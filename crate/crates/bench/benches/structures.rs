use criterion::{black_box, criterion_group, criterion_main, Criterion};
use unrep_bench::workloads;
use unrep_core::clifford::theorem_c_check;
use unrep_core::corpus::{labeled_tables, TableKind};
use unrep_core::heap::{centralizer_backtrack, centralizer_exhaustive, theorem_centralizer_check};
use unrep_core::{catalog, TransSemigroup, DEFAULT_CLOSURE_CAP};

fn centralizers(c: &mut Criterion) {
    for (name, s) in workloads().into_iter().filter(|(_, s)| s.degree() <= 6) {
        c.bench_function(&format!("centralizer/exhaustive/{name}"), |b| {
            b.iter(|| centralizer_exhaustive(black_box(&s)).unwrap())
        });
        c.bench_function(&format!("centralizer/backtrack/{name}"), |b| {
            b.iter(|| centralizer_backtrack(black_box(&s)))
        });
    }
    let s = catalog::reg_s3();
    c.bench_function("centralizer_theorem/reg_s3", |b| {
        b.iter(|| theorem_centralizer_check(black_box(&s), 0).unwrap())
    });
}

fn closure_and_tables(c: &mut Criterion) {
    let gens = catalog::symmetric_table(3);
    let s3 = unrep_core::represent(&gens).semigroup;
    let gens: Vec<_> = s3
        .generating_set()
        .iter()
        .map(|&i| s3.element(i).clone())
        .collect();
    c.bench_function("closure/reg_s3", |b| {
        b.iter(|| TransSemigroup::closure(black_box(&gens), DEFAULT_CLOSURE_CAP).unwrap())
    });
    c.bench_function("tables/monoids_order4", |b| {
        b.iter(|| labeled_tables(black_box(4), TableKind::Monoid))
    });
    let cliff = catalog::cliff4();
    c.bench_function("theorem_c/cliff4_identity", |b| {
        b.iter(|| theorem_c_check(black_box(&cliff), &[0, 1, 2, 3]).unwrap())
    });
}

criterion_group!(benches, centralizers, closure_and_tables);
criterion_main!(benches);
