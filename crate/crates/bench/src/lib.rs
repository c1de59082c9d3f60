//! Benchmarks for the verification pipeline live in `benches/`.

use weilcert_core::{rational, CoefficientTriple};

/// A fixed generic triple for benchmarking witness-local checks.
pub fn sample_triple() -> CoefficientTriple {
    CoefficientTriple::from_values([3, -1, 4, 1, -5, 9, 2, -6, 5].map(|k| rational(k, 1)))
}
