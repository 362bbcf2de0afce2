//! Benchmarks for the exact engine live in `benches/`.
