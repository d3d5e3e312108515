//! Benchmark-only crate; see `benches/identities.rs`.
//!
//! Run with `cargo bench -p menonforge-bench`.
