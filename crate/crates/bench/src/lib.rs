//! Criterion benchmarks for `qboson-core`; see `benches/core.rs`.
