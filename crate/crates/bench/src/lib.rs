//! Criterion benchmarks for `fueter-core`; see `benches/`.
