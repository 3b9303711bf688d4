//! Criterion benchmarks for `tensile_domain`; see `benches/`.
