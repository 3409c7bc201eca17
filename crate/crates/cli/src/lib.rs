//! Golden runner, JSONL batch processing and latency benchmarking on top
//! of `lip-core`.

pub mod batch;
pub mod bench;
pub mod golden;
