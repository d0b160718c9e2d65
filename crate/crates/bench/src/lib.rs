//! Criterion benchmarks for crystal generation, pattern counting and axiom checks; see `benches/`.
