use std::collections::BTreeMap;
use std::io::{self, BufReader};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use lip_cli::{batch, bench, golden};
use lip_core::config::env_overrides_from_process;
use lip_core::{load_assets, load_config, preprocess, AssetBundle, Config};

#[derive(Parser)]
#[command(name = "lip", version, about = "Rewrite chat messages as speakable text")]
struct Cli {
    /// JSON file with flag values
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Directory with replacement dictionaries
    #[arg(long, global = true)]
    assets: Option<PathBuf>,
    #[command(flatten)]
    flags: FlagArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FlagArgs {
    #[arg(long, global = true, num_args = 0..=1, require_equals = true, default_missing_value = "true")]
    allow_punctuation_spamming: Option<bool>,
    #[arg(long, global = true, num_args = 0..=1, require_equals = true, default_missing_value = "true")]
    allow_emoji_spamming: Option<bool>,
    #[arg(long, global = true, num_args = 0..=1, require_equals = true, default_missing_value = "true")]
    disable_pii_masking: Option<bool>,
    #[arg(long, global = true, num_args = 0..=1, require_equals = true, default_missing_value = "true")]
    show_phonenumber: Option<bool>,
    #[arg(long, global = true, num_args = 0..=1, require_equals = true, default_missing_value = "true")]
    rm_common_abbr: Option<bool>,
}

impl FlagArgs {
    fn overrides(&self) -> BTreeMap<String, String> {
        [
            ("allow_punctuation_spamming", self.allow_punctuation_spamming),
            ("allow_emoji_spamming", self.allow_emoji_spamming),
            ("disable_pii_masking", self.disable_pii_masking),
            ("show_phonenumber", self.show_phonenumber),
            ("rm_common_abbr", self.rm_common_abbr),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k.to_string(), v.to_string())))
        .collect()
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the speakable form of one message
    Process { text: String },
    /// Read {"id","text"} JSON lines on stdin, write results on stdout
    Batch,
    /// Run the golden suite
    Goldens {
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Measure latency over a corpus with one message per line
    Bench {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        iters: usize,
        #[arg(long, default_value_t = 200)]
        warmup: usize,
    },
    /// Print the on-disk size of each dictionary
    Assets,
}

enum Outcome {
    Ok,
    GoldenFailure,
}

/// Resolved flags, plus the dictionaries when they come from a directory.
fn setup(cli: &Cli) -> Result<(Config, Option<AssetBundle>)> {
    let mut overrides = cli.flags.overrides();
    if let Some(dir) = &cli.assets {
        overrides.insert("asset_dir".into(), dir.display().to_string());
    }
    let config = load_config(cli.config.as_deref(), &env_overrides_from_process(), &overrides)?;
    let bundle = config.asset_dir.as_deref().map(load_assets).transpose()?;
    Ok((config, bundle))
}

fn run(cli: Cli) -> Result<Outcome> {
    let (config, owned) = setup(&cli)?;
    let bundle = owned.as_ref().unwrap_or_else(|| AssetBundle::builtin());
    match &cli.command {
        Command::Process { text } => {
            println!("{}", preprocess(text, &config, bundle)?.tts_text);
        }
        Command::Batch => {
            let stdin = io::stdin();
            batch::run_batch(BufReader::new(stdin.lock()), io::stdout().lock(), &config, bundle)
                .context("batch input unreadable")?;
        }
        Command::Goldens { fixtures } => {
            let cases = match fixtures {
                Some(path) => golden::load_cases(path)?,
                None => golden::builtin_cases(),
            };
            let outcomes = golden::run_goldens(&cases, &config, bundle)?;
            let passed = outcomes.iter().filter(|o| o.passed).count();
            for o in &outcomes {
                if o.passed {
                    println!("PASS {}", o.id);
                } else {
                    println!("FAIL {}\n  expected: {}\n  actual:   {}", o.id, o.expected, o.actual);
                }
            }
            println!("{passed}/{} passed", outcomes.len());
            if passed != outcomes.len() {
                return Ok(Outcome::GoldenFailure);
            }
        }
        Command::Bench { corpus, iters, warmup } => {
            let messages = bench::load_corpus(corpus)?;
            let summary = bench::bench(&messages, *iters, *warmup, &config, bundle)?;
            println!("{}", serde_json::to_string_pretty(&summary)?);
        }
        Command::Assets => {
            let footprint = bundle.footprint();
            for (name, bytes) in &footprint.per_asset {
                println!("{name:<24} {bytes:>9}");
            }
            println!("{:<24} {:>9}", "total", footprint.total());
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::GoldenFailure) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
