//! User flags controlling which pipeline stages run and how they render.
//!
//! Flags are resolved from up to three sources with precedence
//! `cli > env > file > defaults`. Files are JSON objects keyed by the
//! lowercase snake-case flag name; environment variables use the `LIP_`
//! prefix and the uppercase name (`LIP_SHOW_PHONENUMBER=false`).

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const ENV_PREFIX: &str = "LIP_";

/// Names of the boolean flags, in declaration order.
pub const FLAG_NAMES: [&str; 5] = [
    "allow_punctuation_spamming",
    "allow_emoji_spamming",
    "disable_pii_masking",
    "show_phonenumber",
    "rm_common_abbr",
];

const ASSET_DIR_KEY: &str = "asset_dir";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    /// Read every distinct punctuation mark of a symbol-only message.
    pub allow_punctuation_spamming: bool,
    /// Name every distinct emoji instead of the top three.
    pub allow_emoji_spamming: bool,
    pub disable_pii_masking: bool,
    /// Read phone numbers digit by digit even while other PII is masked.
    pub show_phonenumber: bool,
    /// Expand SMS shorthand and repair elongated words.
    pub rm_common_abbr: bool,
    /// Directory holding the dictionaries; `None` uses the bundled set.
    pub asset_dir: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            allow_punctuation_spamming: false,
            allow_emoji_spamming: false,
            disable_pii_masking: false,
            show_phonenumber: true,
            rm_common_abbr: true,
            asset_dir: None,
        }
    }
}

impl Config {
    /// Sets one flag by name. Accepts snake-case or kebab-case names.
    pub fn set_flag(&mut self, key: &str, value: bool) -> Result<()> {
        let slot = match canonical_key(key).as_str() {
            "allow_punctuation_spamming" => &mut self.allow_punctuation_spamming,
            "allow_emoji_spamming" => &mut self.allow_emoji_spamming,
            "disable_pii_masking" => &mut self.disable_pii_masking,
            "show_phonenumber" => &mut self.show_phonenumber,
            "rm_common_abbr" => &mut self.rm_common_abbr,
            _ => {
                return Err(Error::UnknownKey {
                    key: key.to_string(),
                    source_name: "flag overrides",
                })
            }
        };
        *slot = value;
        Ok(())
    }

    pub fn flag(&self, key: &str) -> Option<bool> {
        match canonical_key(key).as_str() {
            "allow_punctuation_spamming" => Some(self.allow_punctuation_spamming),
            "allow_emoji_spamming" => Some(self.allow_emoji_spamming),
            "disable_pii_masking" => Some(self.disable_pii_masking),
            "show_phonenumber" => Some(self.show_phonenumber),
            "rm_common_abbr" => Some(self.rm_common_abbr),
            _ => None,
        }
    }

    /// Applies string-valued overrides from one source.
    fn apply_strings<'a>(
        &mut self,
        pairs: impl IntoIterator<Item = (String, &'a str)>,
        source_name: &'static str,
    ) -> Result<()> {
        for (key, raw) in pairs {
            if key == ASSET_DIR_KEY {
                self.asset_dir = Some(PathBuf::from(raw));
                continue;
            }
            if !FLAG_NAMES.contains(&key.as_str()) {
                return Err(Error::UnknownKey { key, source_name });
            }
            let value = parse_bool(raw).ok_or_else(|| Error::InvalidFlag {
                key: key.clone(),
                reason: format!("expected true or false, got `{raw}`"),
            })?;
            self.set_flag(&key, value)?;
        }
        Ok(())
    }

    fn apply_json(&mut self, doc: &serde_json::Value, what: &str) -> Result<()> {
        let object = doc.as_object().ok_or_else(|| Error::InvalidFlag {
            key: what.to_string(),
            reason: "config file must be a JSON object".to_string(),
        })?;
        for (key, value) in object {
            if key == ASSET_DIR_KEY {
                let dir = value.as_str().ok_or_else(|| Error::InvalidFlag {
                    key: key.clone(),
                    reason: "expected a path string".to_string(),
                })?;
                self.asset_dir = Some(PathBuf::from(dir));
                continue;
            }
            if !FLAG_NAMES.contains(&key.as_str()) {
                return Err(Error::UnknownKey {
                    key: key.clone(),
                    source_name: "config file",
                });
            }
            let flag = value.as_bool().ok_or_else(|| Error::InvalidFlag {
                key: key.clone(),
                reason: format!("expected a boolean, got {value}"),
            })?;
            self.set_flag(key, flag)?;
        }
        Ok(())
    }
}

fn canonical_key(key: &str) -> String {
    key.trim_start_matches("--").replace('-', "_").to_ascii_lowercase()
}

fn parse_bool(raw: &str) -> Option<bool> {
    match raw.trim().to_ascii_lowercase().as_str() {
        "true" => Some(true),
        "false" => Some(false),
        _ => None,
    }
}

/// Resolves a [`Config`] from an optional JSON file, environment variables
/// and command-line overrides.
///
/// Environment entries without the `LIP_` prefix are ignored; prefixed
/// entries must name a known key.
pub fn load_config(
    file_path: Option<&Path>,
    env_overrides: &BTreeMap<String, String>,
    cli_overrides: &BTreeMap<String, String>,
) -> Result<Config> {
    let mut config = Config::default();

    if let Some(path) = file_path {
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let doc: serde_json::Value = serde_json::from_str(&text).map_err(|source| Error::Json {
            what: path.display().to_string(),
            source,
        })?;
        config.apply_json(&doc, &path.display().to_string())?;
    }

    let env = env_overrides.iter().filter_map(|(k, v)| {
        k.strip_prefix(ENV_PREFIX)
            .map(|name| (name.to_ascii_lowercase(), v.as_str()))
    });
    config.apply_strings(env, "environment")?;

    let cli = cli_overrides
        .iter()
        .map(|(k, v)| (canonical_key(k), v.as_str()));
    config.apply_strings(cli, "command line")?;

    Ok(config)
}

/// Collects the `LIP_*` variables of the current process environment.
pub fn env_overrides_from_process() -> BTreeMap<String, String> {
    std::env::vars()
        .filter(|(k, _)| k.starts_with(ENV_PREFIX))
        .collect()
}
