//! One line per acceptance criterion; exits non-zero if any criterion fails.

#[path = "../../core/tests/common/strategies.rs"]
mod strategies;

use std::path::Path;
use std::process::Command;
use std::time::Instant;

use lip_cli::{bench, golden};
use lip_core::entity::{number_to_words, scan_entities};
use lip_core::segmentation::{classify, segment};
use lip_core::{asset_footprint, preprocess, AssetBundle, Config};
use proptest::strategy::Strategy;
use proptest::test_runner::{Config as RunnerConfig, TestCaseError, TestRunner};
use rand::{rngs::StdRng, Rng, SeedableRng};

const FOOTPRINT_BUDGET: u64 = 3_720_000;
const PROPERTY_CASES: u32 = 1000;

type Verdict = Result<String, String>;

fn bundle() -> &'static AssetBundle {
    AssetBundle::builtin()
}

fn tts(text: &str) -> String {
    preprocess(text, &Config::default(), bundle()).unwrap().tts_text
}

fn goldens() -> Verdict {
    let start = Instant::now();
    let cases = golden::builtin_cases();
    let outcomes = golden::run_goldens(&cases, &Config::default(), bundle()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let failed: Vec<&str> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id.as_str()).collect();
    let summary = format!("{}/{} passed in {:.1} ms", outcomes.len() - failed.len(), outcomes.len(), elapsed.as_secs_f64() * 1e3);
    if cases.len() != 11 || !failed.is_empty() {
        return Err(format!("{summary}; failing {failed:?}"));
    }
    if elapsed.as_secs_f64() >= 1.0 {
        return Err(format!("{summary}; over one second"));
    }
    Ok(summary)
}

fn latency() -> Verdict {
    let corpus_path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/bench_corpus.txt");
    let corpus = bench::load_corpus(&corpus_path).map_err(|e| e.to_string())?;
    let run = || bench::bench(&corpus, 10_000, 2_000, &Config::default(), bundle()).map_err(|e| e.to_string());
    let first = run()?;
    let second = run()?;
    let short = |s: &bench::BenchSummary| s.reports.iter().find(|r| r.message_length_bucket == "<=50").cloned();
    let (a, b) = (short(&first).ok_or("no short messages in corpus")?, short(&second).ok_or("no short messages")?);
    let detail = format!(
        "p50 {:.1} us, p99 {:.1} us over {} iterations of {} messages; rerun p50 {:.1} us; {}",
        a.p50_us, a.p99_us, a.iterations, a.messages, b.p50_us, first.hardware
    );
    if a.iterations < 10_000 || a.p50_us > 4000.0 || a.p99_us > 10_000.0 {
        return Err(detail);
    }
    if (a.p50_us - b.p50_us).abs() > 0.5 * a.p50_us.max(b.p50_us) {
        return Err(format!("{detail}; reruns disagree by more than half"));
    }
    if !first.footprint_stable || !second.footprint_stable {
        return Err(format!("{detail}; asset footprint changed during the run"));
    }
    Ok(detail)
}

fn footprint() -> Verdict {
    let bytes = asset_footprint(bundle());
    let out = Command::new(env!("CARGO_BIN_EXE_lip"))
        .arg("assets")
        .output()
        .map_err(|e| e.to_string())?;
    let listing = String::from_utf8_lossy(&out.stdout);
    let total_line = listing.lines().find(|l| l.starts_with("total")).unwrap_or("");
    let detail = format!("{bytes} bytes on disk (budget {FOOTPRINT_BUDGET})");
    if !out.status.success() || !total_line.ends_with(&bytes.to_string()) {
        return Err(format!("{detail}; `lip assets` printed {listing:?}"));
    }
    if bytes > FOOTPRINT_BUDGET {
        return Err(detail);
    }
    Ok(detail)
}

const SMALL: [&str; 20] = [
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten", "eleven",
    "twelve", "thirteen", "fourteen", "fifteen", "sixteen", "seventeen", "eighteen", "nineteen",
];
const DECADES: [&str; 8] = ["twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"];

/// Written independently of the library: recursion on the largest scale.
fn oracle(n: u64) -> String {
    match n {
        0..=19 => SMALL[n as usize].to_string(),
        20..=99 => {
            let tens = DECADES[(n / 10 - 2) as usize];
            if n % 10 == 0 {
                tens.to_string()
            } else {
                format!("{tens}-{}", SMALL[(n % 10) as usize])
            }
        }
        100..=999 => {
            let head = format!("{} hundred", SMALL[(n / 100) as usize]);
            if n % 100 == 0 {
                head
            } else {
                format!("{head} and {}", oracle(n % 100))
            }
        }
        _ => {
            let (scale, name) = [(1_000_000_000u64, "billion"), (1_000_000, "million"), (1_000, "thousand")]
                .into_iter()
                .find(|&(s, _)| n >= s)
                .unwrap();
            let head = format!("{} {name}", oracle(n / scale));
            match n % scale {
                0 => head,
                r if r < 100 => format!("{head} and {}", oracle(r)),
                r => format!("{head} {}", oracle(r)),
            }
        }
    }
}

/// Words back to a number; `None` on any unexpected word.
fn parse_words(text: &str) -> Option<u64> {
    let (mut total, mut group) = (0u64, 0u64);
    for word in text.split([' ', '-']) {
        if let Some(v) = SMALL.iter().position(|&w| w == word) {
            group += v as u64;
        } else if let Some(v) = DECADES.iter().position(|&w| w == word) {
            group += (v as u64 + 2) * 10;
        } else {
            match word {
                "and" => {}
                "hundred" => group *= 100,
                "thousand" => (total, group) = (total + group * 1_000, 0),
                "million" => (total, group) = (total + group * 1_000_000, 0),
                "billion" => (total, group) = (total + group * 1_000_000_000, 0),
                _ => return None,
            }
        }
    }
    Some(total + group)
}

fn number_oracle() -> Verdict {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let inputs: Vec<u64> = (0..=20_000).chain((0..10_000).map(|_| rng.gen_range(0..1_000_000_000_000))).collect();
    let mut mismatches = Vec::new();
    for &n in &inputs {
        let words = number_to_words(n);
        if words != oracle(n) || parse_words(&words) != Some(n) {
            mismatches.push(n);
        }
    }
    let detail = format!("{} values checked, {} mismatches", inputs.len(), mismatches.len());
    if mismatches.is_empty() {
        Ok(detail)
    } else {
        Err(format!("{detail}, first {:?}", &mismatches[..mismatches.len().min(5)]))
    }
}

fn check<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(RunnerConfig { cases: PROPERTY_CASES, failure_persistence: None, ..RunnerConfig::default() });
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn fail(msg: String) -> TestCaseError {
    TestCaseError::fail(msg)
}

fn properties() -> Verdict {
    let mut failures = Vec::new();
    let mut record = |r: Result<(), String>| {
        if let Err(e) = r {
            failures.push(e);
        }
    };

    record(check("output alphabet", strategies::any_text(), |text| {
        let out = tts(&text);
        if out.chars().all(|c| c.is_ascii_lowercase() || c == ' ' || c == '?') {
            Ok(())
        } else {
            Err(fail(format!("{text:?} -> {out:?}")))
        }
    }));
    record(check("pii rescan", strategies::any_text(), |text| {
        let out = tts(&text);
        let tokens: Vec<String> = out.split_whitespace().map(String::from).collect();
        let spans = scan_entities(&tokens);
        if spans.is_empty() {
            Ok(())
        } else {
            Err(fail(format!("{text:?} -> {out:?} still has {spans:?}")))
        }
    }));
    record(check("idempotence", strategies::any_text(), |text| {
        let once = tts(&text);
        let twice = tts(&once);
        if once == twice {
            Ok(())
        } else {
            Err(fail(format!("{text:?} -> {once:?} -> {twice:?}")))
        }
    }));
    record(check(
        "emoji repetition",
        (strategies::message(), strategies::emoji(), 2usize..6),
        |(text, e, n)| {
            let run = |s: String| preprocess(&s, &Config::default(), bundle()).unwrap();
            let (one, many) = (run(format!("{text} {e}")), run(format!("{text} {}", e.repeat(n))));
            if one.emoji_trailer == many.emoji_trailer && one.unique_emoji_count == many.unique_emoji_count {
                Ok(())
            } else {
                Err(fail(format!("{text:?} + {e} x{n}: {:?} vs {:?}", one.emoji_trailer.phrase, many.emoji_trailer.phrase)))
            }
        },
    ));
    record(check("punctuation repetition", (strategies::marks_only(), 2usize..5), |(marks, n)| {
        let one = tts(&marks.concat());
        let many = tts(&marks.iter().map(|m| m.repeat(n)).collect::<String>());
        if one == many {
            Ok(())
        } else {
            Err(fail(format!("{marks:?} x{n}: {one:?} vs {many:?}")))
        }
    }));
    record(check("segment/join", strategies::any_text(), |text| {
        let graphemes = segment(&text);
        let joined: String = graphemes.iter().map(|g| g.text.as_ref()).collect();
        let classified = classify(graphemes, bundle()).len();
        if joined == text && classified == segment(&text).len() {
            Ok(())
        } else {
            Err(fail(format!("{text:?} rejoined as {joined:?}")))
        }
    }));

    let beeped: Vec<&str> = strategies::SCUNTHORPE.iter().copied().filter(|w| tts(w).contains("beep")).collect();
    if strategies::SCUNTHORPE.len() < 100 || !beeped.is_empty() {
        failures.push(format!("scunthorpe corpus of {}: beeped {beeped:?}", strategies::SCUNTHORPE.len()));
    }

    let detail = format!("6 suites x {PROPERTY_CASES} cases, {} innocent words", strategies::SCUNTHORPE.len());
    if failures.is_empty() {
        Ok(detail)
    } else {
        Err(format!("{detail}; {}", failures.join("; ")))
    }
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 5] = [
        ("1 golden suite", goldens),
        ("2 latency", latency),
        ("3 asset footprint", footprint),
        ("4 number words oracle", number_oracle),
        ("5 property suites", properties),
    ];
    let mut failed = 0;
    for (name, criterion) in criteria {
        match criterion() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!("N/A   6 listener preference survey: human study, not reproducible; criteria 1 and 5 stand in");
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
