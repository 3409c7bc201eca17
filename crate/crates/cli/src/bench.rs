//! Latency measurement over a message corpus, bucketed by message length.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use lip_core::{asset_footprint, preprocess_with_report, AssetBundle, Config};
use serde::Serialize;
use unicode_segmentation::UnicodeSegmentation;

/// Reports over fewer timed iterations than this are flagged.
pub const MIN_ITERATIONS: usize = 1000;

/// Inclusive grapheme-count ranges; the last one is open ended.
pub const BUCKETS: [(&str, usize, usize); 3] = [
    ("<=50", 0, 50),
    ("51-200", 51, 200),
    ("201+", 201, usize::MAX),
];

#[derive(Debug, Clone, Serialize)]
pub struct LatencyReport {
    pub message_length_bucket: String,
    pub messages: usize,
    pub iterations: usize,
    pub p50_us: f64,
    pub p90_us: f64,
    pub p99_us: f64,
    pub per_stage_p50: BTreeMap<String, f64>,
    pub asset_footprint_bytes: u64,
    pub below_minimum: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchSummary {
    pub hardware: String,
    pub warmup_iterations: usize,
    /// Footprint and resident size probed before and after the run agree.
    pub footprint_stable: bool,
    pub reports: Vec<LatencyReport>,
}

pub fn hardware_descriptor() -> String {
    let cpu = fs::read_to_string("/proc/cpuinfo")
        .ok()
        .and_then(|info| {
            info.lines()
                .find(|l| l.starts_with("model name"))
                .and_then(|l| l.split(':').nth(1))
                .map(|s| s.trim().to_string())
        })
        .unwrap_or_else(|| "unknown cpu".to_string());
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    format!(
        "{cpu}; {threads} threads; {}-{}",
        std::env::consts::OS,
        std::env::consts::ARCH
    )
}

/// Nearest-rank percentile of sorted samples.
pub fn percentile(sorted: &[f64], p: f64) -> f64 {
    if sorted.is_empty() {
        return 0.0;
    }
    let rank = ((p / 100.0) * sorted.len() as f64).ceil() as usize;
    sorted[rank.clamp(1, sorted.len()) - 1]
}

pub fn load_corpus(path: &Path) -> Result<Vec<String>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading corpus {}", path.display()))?;
    let lines: Vec<String> = text.lines().filter(|l| !l.trim().is_empty()).map(String::from).collect();
    if lines.is_empty() {
        bail!("corpus {} has no messages", path.display());
    }
    Ok(lines)
}

fn bucket_of(graphemes: usize) -> usize {
    BUCKETS
        .iter()
        .position(|&(_, lo, hi)| (lo..=hi).contains(&graphemes))
        .expect("buckets cover every length")
}

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v
}

/// Times `iterations` runs per non-empty bucket, cycling through that
/// bucket's messages, after `warmup` untimed passes.
pub fn bench(
    corpus: &[String],
    iterations: usize,
    warmup: usize,
    config: &Config,
    bundle: &AssetBundle,
) -> Result<BenchSummary> {
    if corpus.is_empty() {
        bail!("empty corpus");
    }
    if iterations == 0 {
        bail!("iterations must be at least 1");
    }
    let footprint_before = (asset_footprint(bundle), bundle.resident_estimate_bytes());

    let mut grouped: Vec<Vec<&str>> = vec![Vec::new(); BUCKETS.len()];
    for msg in corpus {
        grouped[bucket_of(msg.graphemes(true).count())].push(msg);
    }

    let mut reports = Vec::new();
    for (b, messages) in grouped.iter().enumerate() {
        if messages.is_empty() {
            continue;
        }
        for i in 0..warmup {
            preprocess_with_report(messages[i % messages.len()], config, bundle)?;
        }
        let mut totals = Vec::with_capacity(iterations);
        let mut stages: BTreeMap<&'static str, Vec<f64>> = BTreeMap::new();
        for i in 0..iterations {
            let start = Instant::now();
            let out = preprocess_with_report(messages[i % messages.len()], config, bundle)?;
            totals.push(start.elapsed().as_secs_f64() * 1e6);
            for t in out.stage_timings {
                stages.entry(t.stage).or_default().push(t.micros);
            }
        }
        let totals = sorted(totals);
        reports.push(LatencyReport {
            message_length_bucket: BUCKETS[b].0.to_string(),
            messages: messages.len(),
            iterations,
            p50_us: percentile(&totals, 50.0),
            p90_us: percentile(&totals, 90.0),
            p99_us: percentile(&totals, 99.0),
            per_stage_p50: stages
                .into_iter()
                .map(|(k, v)| (k.to_string(), percentile(&sorted(v), 50.0)))
                .collect(),
            asset_footprint_bytes: footprint_before.0,
            below_minimum: iterations < MIN_ITERATIONS,
        });
    }

    let footprint_after = (asset_footprint(bundle), bundle.resident_estimate_bytes());
    Ok(BenchSummary {
        hardware: hardware_descriptor(),
        warmup_iterations: warmup,
        footprint_stable: footprint_before == footprint_after,
        reports,
    })
}
