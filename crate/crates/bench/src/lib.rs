//! Criterion benchmarks for `ordercert`; see `benches/ordercert.rs`.
