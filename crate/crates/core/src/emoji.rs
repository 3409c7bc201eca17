//! Emoji extraction, ranking and the trailer phrase.
//!
//! Ordinary emoji are pulled out of the body and summarized once at the end
//! ("with partying face emoji"); informational emoji (keycaps, letter
//! symbols) stay where they are and are read as words.

use std::borrow::Cow;
use std::collections::HashMap;

use serde::Serialize;

use crate::assets::EmojiRecord;
use crate::segmentation::{ClassifiedGrapheme, Grapheme, GraphemeClass};

/// Names shown before the rest are folded into the suppression phrase.
pub const MAX_NAMED_EMOJI: usize = 3;
pub const SUPPRESSION_PHRASE: &str = "and some other emojis";

#[derive(Debug, Clone, PartialEq)]
pub struct EmojiOccurrence<'a> {
    pub record: &'a EmojiRecord,
    /// Tone-stripped grapheme the occurrences were grouped by.
    pub key: String,
    pub first_position: usize,
    pub count: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct EmojiTrailer {
    pub named: Vec<String>,
    pub suppressed_count: usize,
    pub phrase: String,
}

/// Moves every ordinary emoji out of the body, grouping repeats.
/// Informational emoji are kept in place.
pub fn extract_emojis<'a>(
    classified: Vec<ClassifiedGrapheme<'a>>,
) -> (Vec<ClassifiedGrapheme<'a>>, Vec<EmojiOccurrence<'a>>) {
    let mut body = Vec::with_capacity(classified.len());
    let mut occurrences: Vec<EmojiOccurrence<'a>> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();

    for (position, g) in classified.into_iter().enumerate() {
        if g.class != GraphemeClass::Emoji {
            body.push(g);
            continue;
        }
        let key = g.emoji_key().unwrap_or_default();
        let record = g.emoji_record.expect("emoji graphemes carry a record");
        match index.get(&key) {
            Some(&i) => occurrences[i].count += 1,
            None => {
                index.insert(key.clone(), occurrences.len());
                occurrences.push(EmojiOccurrence {
                    record,
                    key,
                    first_position: position,
                    count: 1,
                });
            }
        }
    }
    (body, occurrences)
}

/// Most popular first; equal popularity falls back to name order.
pub fn rank_emojis(mut occurrences: Vec<EmojiOccurrence<'_>>) -> Vec<EmojiOccurrence<'_>> {
    occurrences.sort_by(|a, b| {
        b.record
            .popularity
            .cmp(&a.record.popularity)
            .then_with(|| a.record.name.cmp(&b.record.name))
            .then_with(|| a.key.cmp(&b.key))
    });
    occurrences
}

fn spoken_name(name: &str) -> String {
    if name == "emoji" || name.ends_with(" emoji") {
        name.to_string()
    } else {
        format!("{name} emoji")
    }
}

pub fn build_trailer(
    ranked: &[EmojiOccurrence<'_>],
    has_body_text: bool,
    allow_spamming: bool,
) -> EmojiTrailer {
    if ranked.is_empty() {
        return EmojiTrailer::default();
    }
    let shown = if allow_spamming {
        ranked.len()
    } else {
        ranked.len().min(MAX_NAMED_EMOJI)
    };
    let named: Vec<String> = ranked[..shown]
        .iter()
        .map(|o| o.record.name.clone())
        .collect();
    let suppressed_count = ranked.len() - shown;

    let mut parts: Vec<String> = named.iter().map(|n| spoken_name(n)).collect();
    if suppressed_count > 0 {
        parts.push(SUPPRESSION_PHRASE.to_string());
    }
    let mut phrase = parts.join(" ");
    if has_body_text {
        phrase.insert_str(0, "with ");
    }
    EmojiTrailer {
        named,
        suppressed_count,
        phrase,
    }
}

/// Replaces informational emoji by their word, padded with spaces.
pub fn inline_informational(body: Vec<ClassifiedGrapheme<'_>>) -> Vec<ClassifiedGrapheme<'_>> {
    let mut out = Vec::with_capacity(body.len());
    for g in body {
        if g.class != GraphemeClass::InformationalEmoji {
            out.push(g);
            continue;
        }
        let range = g.grapheme.byte_range.clone();
        let word = g
            .emoji_record
            .and_then(|r| r.word.as_deref())
            .unwrap_or_default();
        let space = |text: &'static str| ClassifiedGrapheme {
            grapheme: Grapheme {
                text: Cow::Borrowed(text),
                byte_range: range.clone(),
            },
            class: GraphemeClass::Whitespace,
            emoji_record: None,
        };
        out.push(space(" "));
        out.push(ClassifiedGrapheme {
            grapheme: Grapheme {
                text: Cow::Owned(word.to_string()),
                byte_range: range.clone(),
            },
            class: GraphemeClass::Text,
            emoji_record: None,
        });
        out.push(space(" "));
    }
    out
}
