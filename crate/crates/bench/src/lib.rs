//! Benchmarks for group enumeration and graph construction live in `benches/`.

/// Groups timed by every benchmark, smallest first.
pub const GROUPS: &[&str] = &["A4", "B4", "A5", "D5", "F4", "H3"];
