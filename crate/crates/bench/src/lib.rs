//! Benchmarks for the enumeration pipeline live in `benches/`.
