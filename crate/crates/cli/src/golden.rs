//! Fixed input/expected pairs run end to end through the pipeline.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use lip_core::{preprocess, AssetBundle, Config};
use serde::{Deserialize, Serialize};

pub const BUILTIN_FIXTURES: &str = include_str!("../fixtures/goldens.json");

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    Exact,
    #[default]
    Relaxed,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenCase {
    pub id: String,
    pub input: String,
    pub expected: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flags: Option<BTreeMap<String, bool>>,
    #[serde(default)]
    pub normalization: Normalization,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GoldenOutcome {
    pub id: String,
    pub passed: bool,
    pub expected: String,
    pub actual: String,
}

/// Lowercase, single spaces, no trailing question marks.
pub fn relaxed(text: &str) -> String {
    let words = text.to_lowercase();
    let words = words.split_whitespace().collect::<Vec<_>>().join(" ");
    words.trim_end_matches('?').trim_end().to_string()
}

pub fn parse_cases(json: &str) -> Result<Vec<GoldenCase>> {
    serde_json::from_str(json).context("golden fixtures must be a JSON array of cases")
}

pub fn load_cases(path: &Path) -> Result<Vec<GoldenCase>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_cases(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn builtin_cases() -> Vec<GoldenCase> {
    parse_cases(BUILTIN_FIXTURES).expect("bundled golden fixtures parse")
}

pub fn run_case(case: &GoldenCase, base: &Config, bundle: &AssetBundle) -> Result<GoldenOutcome> {
    let mut config = base.clone();
    for (key, value) in case.flags.iter().flatten() {
        config.set_flag(key, *value)?;
    }
    let actual = preprocess(&case.input, &config, bundle)?.tts_text;
    let passed = match case.normalization {
        Normalization::Exact => actual == case.expected,
        Normalization::Relaxed => relaxed(&actual) == relaxed(&case.expected),
    };
    Ok(GoldenOutcome {
        id: case.id.clone(),
        passed,
        expected: case.expected.clone(),
        actual,
    })
}

pub fn run_goldens(cases: &[GoldenCase], base: &Config, bundle: &AssetBundle) -> Result<Vec<GoldenOutcome>> {
    cases.iter().map(|c| run_case(c, base, bundle)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relaxed_mode() {
        assert_eq!(relaxed("Oh beep I  missed that question??"), "oh beep i missed that question");
        assert_eq!(relaxed("  "), "");
        assert_eq!(relaxed("why? not"), "why? not");
    }

    #[test]
    fn exact_mode_is_strict() {
        let case = GoldenCase {
            id: "x".into(),
            input: "Hello?".into(),
            expected: "hello".into(),
            flags: None,
            normalization: Normalization::Exact,
        };
        let out = run_case(&case, &Config::default(), AssetBundle::builtin()).unwrap();
        assert!(!out.passed);
        assert_eq!(out.actual, "hello?");
    }

    #[test]
    fn case_flags_apply() {
        let case = GoldenCase {
            id: "x".into(),
            input: "call 9321673878".into(),
            expected: "call a ten digit number".into(),
            flags: Some([("show_phonenumber".to_string(), false)].into()),
            normalization: Normalization::Relaxed,
        };
        assert!(run_case(&case, &Config::default(), AssetBundle::builtin()).unwrap().passed);
    }

    #[test]
    fn unknown_fields_rejected() {
        assert!(parse_cases(r#"[{"id":"a","input":"","expected":"","extra":1}]"#).is_err());
    }
}
