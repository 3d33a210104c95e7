//! Criterion benchmarks for `halin-star` live in `benches/`.
