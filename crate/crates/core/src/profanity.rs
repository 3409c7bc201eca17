//! Whole-word swear-word censoring.
//!
//! The list compiles into one anchored alternation (`^(?:w1|w2|...)$`) that
//! is tested against every maximal run of letters and digits, so an entry
//! can only ever match a complete word.

use regex::Regex;

use crate::error::{Error, Result};

pub const REPLACEMENT: &str = "beep";

#[derive(Debug, Clone)]
pub struct ProfanityMatcher {
    pattern: Option<Regex>,
    entries: Vec<String>,
}

/// Builds a matcher from lowercase single-word entries.
pub fn compile(words: &[String]) -> Result<ProfanityMatcher> {
    let mut entries: Vec<String> = Vec::with_capacity(words.len());
    for word in words {
        let reason = if word.is_empty() {
            Some("is empty")
        } else if word.chars().any(char::is_whitespace) {
            Some("contains whitespace")
        } else if word.chars().any(char::is_uppercase) {
            Some("is not lowercase")
        } else if !word.chars().all(char::is_alphanumeric) {
            Some("contains characters other than letters and digits")
        } else if word == REPLACEMENT {
            Some("is the replacement word itself")
        } else {
            None
        };
        if let Some(reason) = reason {
            return Err(Error::InvalidAsset {
                file: "profanity.txt".to_string(),
                entry: word.clone(),
                reason: reason.to_string(),
            });
        }
        entries.push(word.clone());
    }
    entries.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    entries.dedup();

    let pattern = if entries.is_empty() {
        None
    } else {
        let alternation = entries
            .iter()
            .map(|w| regex::escape(w))
            .collect::<Vec<_>>()
            .join("|");
        Some(Regex::new(&format!("^(?:{alternation})$")).expect("escaped alternation compiles"))
    };
    Ok(ProfanityMatcher { pattern, entries })
}

impl ProfanityMatcher {
    pub fn empty() -> Self {
        ProfanityMatcher {
            pattern: None,
            entries: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in alternation order (longest first).
    pub fn entries(&self) -> &[String] {
        &self.entries
    }

    pub fn is_profane(&self, word: &str) -> bool {
        self.pattern.as_ref().is_some_and(|re| re.is_match(word))
    }

    /// First listed word occurring as a whole word in `text`.
    pub fn find_word<'t>(&self, text: &'t str) -> Option<&'t str> {
        words(text).map(|(s, e)| &text[s..e]).find(|w| self.is_profane(w))
    }

    pub fn censor(&self, text: &str) -> String {
        censor(text, self)
    }
}

/// Byte ranges of maximal letter/digit runs.
fn words(text: &str) -> impl Iterator<Item = (usize, usize)> + '_ {
    let mut chars = text.char_indices().peekable();
    std::iter::from_fn(move || {
        let (start, _) = chars.find(|(_, c)| c.is_alphanumeric())?;
        let mut end = text.len();
        while let Some(&(i, c)) = chars.peek() {
            if !c.is_alphanumeric() {
                end = i;
                break;
            }
            chars.next();
        }
        Some((start, end))
    })
}

/// Replaces every whole-word match with `beep`.
pub fn censor(text: &str, matcher: &ProfanityMatcher) -> String {
    if matcher.is_empty() {
        return text.to_string();
    }
    let mut out = String::with_capacity(text.len());
    let mut last = 0;
    for (start, end) in words(text) {
        if matcher.is_profane(&text[start..end]) {
            out.push_str(&text[last..start]);
            out.push_str(REPLACEMENT);
            last = end;
        }
    }
    out.push_str(&text[last..]);
    out
}
