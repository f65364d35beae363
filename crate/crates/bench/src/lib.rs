//! Benchmark harness; see `benches/pipeline.rs`.
