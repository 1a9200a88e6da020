use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use letproof::batch::{cut_eliminate_all, decide_all, normalize_all, Execution};
use letproof::generate::{random_deduction, random_goal, random_proof_with_cuts};
use letproof::nd::NdSystem;
use letproof::search::SearchBudget;
use letproof::sequent::CalculusId;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn cut_elimination(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let proofs: Vec<_> = (0..64)
        .map(|_| random_proof_with_cuts(&mut rng, CalculusId::GLETJ, 3, 6))
        .collect();
    let mut g = c.benchmark_group("cut_eliminate_64");
    for (name, exec) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| cut_eliminate_all(CalculusId::GLETJ, black_box(&proofs), exec))
        });
    }
    g.finish();
}

fn normalization(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let ds: Vec<_> = (0..64)
        .map(|_| random_deduction(&mut rng, NdSystem::NLETJ, 3, 7))
        .collect();
    let mut g = c.benchmark_group("normalize_64");
    for (name, exec) in MODES {
        g.bench_function(name, |b| b.iter(|| normalize_all(NdSystem::NLETJ, black_box(&ds), exec)));
    }
    g.finish();
}

fn search(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let goals: Vec<_> = (0..32)
        .map(|_| random_goal(&mut rng, CalculusId::GLETJ, 3, 8))
        .collect();
    let mut g = c.benchmark_group("decide_32");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| decide_all(CalculusId::GLETJ, black_box(&goals), SearchBudget::default(), exec))
        });
    }
    g.finish();
}

criterion_group!(benches, cut_elimination, normalization, search);
criterion_main!(benches);
