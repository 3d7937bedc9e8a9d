//! Criterion benchmarks for the eqgraph algorithms; see `benches/`.
