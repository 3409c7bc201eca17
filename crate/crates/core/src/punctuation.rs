//! Punctuation removal for text messages and spoken readout for
//! symbol-only messages.

use serde::Serialize;

use crate::assets::AssetBundle;

/// Marks read aloud before the rest are summarized.
pub const MAX_NAMED_PUNCTUATION: usize = 2;
pub const SUPPRESSION_PHRASE: &str = "and some other punctuations";

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PunctuationReadout {
    pub named: Vec<String>,
    pub suppressed_count: usize,
    pub phrase: String,
}

fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '\u{2019}'
}

/// Drops every mark except '?', collapsing '?' runs and whitespace.
/// Apostrophes vanish without leaving a gap ("it's" -> "its").
pub fn strip_punctuation(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut pending_space = false;
    for c in text.chars() {
        if c.is_alphanumeric() || c == '?' {
            if c == '?' && out.ends_with('?') && !pending_space {
                continue;
            }
            if pending_space && !out.is_empty() {
                out.push(' ');
            }
            pending_space = false;
            out.push(c);
        } else if !is_apostrophe(c) {
            pending_space = true;
        }
    }
    out
}

/// Names the distinct marks of `text` in order of first appearance.
/// Letters, digits and whitespace are ignored.
pub fn punctuation_readout(text: &str, bundle: &AssetBundle, allow_spamming: bool) -> PunctuationReadout {
    let mut seen: Vec<char> = Vec::new();
    for c in text.chars() {
        if !c.is_alphanumeric() && !c.is_whitespace() && !seen.contains(&c) {
            seen.push(c);
        }
    }
    let limit = if allow_spamming { usize::MAX } else { MAX_NAMED_PUNCTUATION };
    let mut named = Vec::new();
    let mut suppressed_count = 0;
    for c in seen {
        match bundle.punctuation_name(c) {
            Some(name) if named.len() < limit => named.push(name.to_string()),
            _ => suppressed_count += 1,
        }
    }
    let mut parts = named.clone();
    if suppressed_count > 0 {
        parts.push(SUPPRESSION_PHRASE.to_string());
    }
    PunctuationReadout {
        named,
        suppressed_count,
        phrase: parts.join(" "),
    }
}
