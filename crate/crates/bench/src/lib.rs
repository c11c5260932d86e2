//! Criterion benchmarks for `hopfkit`; see `benches/algebra.rs`.
