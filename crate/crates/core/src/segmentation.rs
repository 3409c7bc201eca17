//! Lowercasing, grapheme segmentation and per-grapheme classification.

use std::borrow::Cow;
use std::collections::HashSet;
use std::ops::Range;

use once_cell::sync::Lazy;
use unicode_segmentation::UnicodeSegmentation;

use crate::assets::{AssetBundle, EmojiRecord};

const VS15: char = '\u{FE0E}';
const VS16: char = '\u{FE0F}';
const KEYCAP: char = '\u{20E3}';
const ZWJ: char = '\u{200D}';

static UNKNOWN_EMOJI: Lazy<EmojiRecord> = Lazy::new(|| EmojiRecord {
    key: String::new(),
    name: "unknown emoji".to_string(),
    popularity: 0,
    informational: false,
    word: None,
});

/// The record assigned to emoji missing from the table.
pub fn unknown_emoji() -> &'static EmojiRecord {
    &UNKNOWN_EMOJI
}

/// One user-perceived character of the source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grapheme<'a> {
    pub text: Cow<'a, str>,
    pub byte_range: Range<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphemeClass {
    Text,
    Emoji,
    InformationalEmoji,
    Punctuation,
    Whitespace,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassifiedGrapheme<'a> {
    pub grapheme: Grapheme<'a>,
    pub class: GraphemeClass,
    /// Present iff the class is `Emoji` or `InformationalEmoji`.
    pub emoji_record: Option<&'a EmojiRecord>,
}

impl<'a> ClassifiedGrapheme<'a> {
    pub fn text(&self) -> &str {
        &self.grapheme.text
    }

    pub fn is_emoji(&self) -> bool {
        matches!(
            self.class,
            GraphemeClass::Emoji | GraphemeClass::InformationalEmoji
        )
    }

    /// Identity of an emoji occurrence, shared across skin tones.
    pub fn emoji_key(&self) -> Option<String> {
        self.is_emoji().then(|| canonical_emoji_key(&self.grapheme.text))
    }
}

pub fn is_skin_tone(c: char) -> bool {
    ('\u{1F3FB}'..='\u{1F3FF}').contains(&c)
}

/// Lookup key for the emoji table: skin tones and variation selectors removed.
pub fn canonical_emoji_key(text: &str) -> String {
    text.chars()
        .filter(|&c| !is_skin_tone(c) && c != VS15 && c != VS16)
        .collect()
}

fn simple_lowercase(c: char) -> char {
    // Only U+0130 has a multi-char full mapping; its simple mapping is 'i'.
    c.to_lowercase().next().unwrap_or(c)
}

/// Lowercases letters with the simple one-to-one case mapping.
///
/// Graphemes carrying an emoji presentation selector are left alone so
/// that letter-like emoji (`Ⓜ️`) keep their identity.
pub fn lowercase(text: &str) -> String {
    if text.is_ascii() {
        return text.to_ascii_lowercase();
    }
    let mut out = String::with_capacity(text.len());
    for g in text.graphemes(true) {
        if g.contains(VS16) {
            out.push_str(g);
        } else {
            out.extend(g.chars().map(simple_lowercase));
        }
    }
    out
}

/// Extended grapheme cluster segmentation. Lossless: the concatenation of
/// all returned graphemes is `text`.
pub fn segment(text: &str) -> Vec<Grapheme<'_>> {
    text.grapheme_indices(true)
        .map(|(start, g)| Grapheme {
            text: Cow::Borrowed(g),
            byte_range: start..start + g.len(),
        })
        .collect()
}

/// Removes skin-tone modifiers. A lone modifier becomes an empty grapheme.
pub fn strip_skin_tone<'a>(g: &Grapheme<'a>) -> Grapheme<'a> {
    if !g.text.chars().any(is_skin_tone) {
        return g.clone();
    }
    Grapheme {
        text: Cow::Owned(g.text.chars().filter(|&c| !is_skin_tone(c)).collect()),
        byte_range: g.byte_range.clone(),
    }
}

fn is_ignorable(c: char) -> bool {
    matches!(c,
        '\u{200B}'..='\u{200F}'
        | '\u{2060}'..='\u{2064}'
        | '\u{FEFF}'
        | '\u{FE00}'..='\u{FE0F}'
        | '\u{E0020}'..='\u{E007F}'
        | '\u{00AD}'
    ) || is_skin_tone(c)
}

fn is_pictographic(c: char) -> bool {
    matches!(c,
        '\u{1F000}'..='\u{1FAFF}'
        | '\u{2300}'..='\u{23FF}'
        | '\u{2600}'..='\u{27BF}'
        | '\u{2B00}'..='\u{2BFF}'
        | '\u{2190}'..='\u{21FF}'
        | '\u{25A0}'..='\u{25FF}'
        | '\u{2934}'..='\u{2935}'
        | '\u{3030}' | '\u{303D}' | '\u{3297}' | '\u{3299}'
        | '\u{00A9}' | '\u{00AE}' | '\u{203C}' | '\u{2049}' | '\u{2122}' | '\u{2139}' | '\u{24C2}'
    ) && !is_skin_tone(c)
}

/// Characters whose default presentation is text; they only count as
/// emoji when followed by U+FE0F.
fn is_text_default(c: char) -> bool {
    matches!(c,
        '\u{0000}'..='\u{218F}'
        | '\u{2190}'..='\u{21FF}'
        | '\u{24C2}'
        | '\u{25A0}'..='\u{25FF}'
        | '\u{2934}'..='\u{2935}'
        | '\u{2B05}'..='\u{2B07}'
        | '\u{3030}' | '\u{303D}' | '\u{3297}' | '\u{3299}'
    )
}

/// Whether a grapheme should be read as an emoji at all.
fn looks_like_emoji(text: &str, key: &str) -> bool {
    if text.contains(KEYCAP) {
        return true;
    }
    let mut key_chars = key.chars();
    let (Some(first), rest) = (key_chars.next(), key_chars.as_str()) else {
        return false;
    };
    if rest.is_empty() && is_text_default(first) {
        return text.contains(VS16);
    }
    key.chars().any(is_pictographic) || (key.contains(ZWJ) && text.contains(VS16))
}

fn classify_one<'a>(g: Grapheme<'a>, bundle: &'a AssetBundle) -> ClassifiedGrapheme<'a> {
    let text: &str = &g.text;
    if text.chars().all(|c| c.is_whitespace() || is_ignorable(c)) {
        return ClassifiedGrapheme {
            grapheme: g,
            class: GraphemeClass::Whitespace,
            emoji_record: None,
        };
    }
    let key = canonical_emoji_key(text);
    if looks_like_emoji(text, &key) {
        let record = bundle.emoji(&key).unwrap_or_else(|| unknown_emoji());
        let class = if record.informational {
            GraphemeClass::InformationalEmoji
        } else {
            GraphemeClass::Emoji
        };
        return ClassifiedGrapheme {
            grapheme: g,
            class,
            emoji_record: Some(record),
        };
    }
    let class = if text.chars().any(char::is_alphanumeric) {
        GraphemeClass::Text
    } else {
        GraphemeClass::Punctuation
    };
    ClassifiedGrapheme {
        grapheme: g,
        class,
        emoji_record: None,
    }
}

/// Assigns every grapheme exactly one class; emoji lookups use the
/// tone-stripped form.
pub fn classify<'a>(graphemes: Vec<Grapheme<'a>>, bundle: &'a AssetBundle) -> Vec<ClassifiedGrapheme<'a>> {
    graphemes
        .into_iter()
        .map(|g| classify_one(g, bundle))
        .collect()
}

/// True iff some grapheme is ordinary text. Digits inside keycap emoji do
/// not count.
pub fn has_alphanumeric(classified: &[ClassifiedGrapheme<'_>]) -> bool {
    classified.iter().any(|g| {
        g.class == GraphemeClass::Text && g.grapheme.text.chars().any(char::is_alphanumeric)
    })
}

pub fn count_unique_emojis(classified: &[ClassifiedGrapheme<'_>]) -> usize {
    classified
        .iter()
        .filter_map(ClassifiedGrapheme::emoji_key)
        .collect::<HashSet<_>>()
        .len()
}
