//! Multiplication micro-benchmark: recursive doubling vs table-driven.
//!
//! Informational only; reports wall-clock per multiply and a checksum of all
//! results so the work cannot be optimized away.

use hypercross::{BasisTable, Hypercomplex};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::time::Instant;

#[derive(Debug, Serialize)]
pub struct BenchResult {
    pub level: usize,
    pub iters: usize,
    pub recursive_ns_per_mul: f64,
    pub table_ns_per_mul: f64,
    pub checksum: f64,
}

pub fn run_bench(level: usize, iters: usize, seed: u64) -> Result<BenchResult, String> {
    let table = BasisTable::new(level).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = 1usize << level;
    let pool: Vec<Hypercomplex> = (0..64)
        .map(|_| {
            Hypercomplex::new(
                level,
                (0..dim).map(|_| rng.random_range(-1.0..=1.0)).collect(),
            )
            .expect("level validated")
        })
        .collect();

    let mut checksum = 0.0;
    let start = Instant::now();
    for i in 0..iters {
        let a = &pool[i % pool.len()];
        let b = &pool[(i * 31 + 7) % pool.len()];
        let p = std::hint::black_box(a.cd_mul(b).expect("levels match"));
        checksum += p.coeffs()[0];
    }
    let recursive_ns = start.elapsed().as_nanos() as f64 / iters.max(1) as f64;

    let start = Instant::now();
    for i in 0..iters {
        let a = &pool[i % pool.len()];
        let b = &pool[(i * 31 + 7) % pool.len()];
        let p = std::hint::black_box(table.mul(a, b).expect("levels match"));
        checksum += p.coeffs()[0];
    }
    let table_ns = start.elapsed().as_nanos() as f64 / iters.max(1) as f64;

    Ok(BenchResult {
        level,
        iters,
        recursive_ns_per_mul: recursive_ns,
        table_ns_per_mul: table_ns,
        checksum,
    })
}
