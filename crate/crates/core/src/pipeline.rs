//! End-to-end message preprocessing.

use std::time::Instant;

use serde::Serialize;
use unicode_normalization::char::is_combining_mark;
use unicode_normalization::UnicodeNormalization;
use unicode_segmentation::UnicodeSegmentation;

use crate::assets::AssetBundle;
use crate::config::Config;
use crate::emoji::{self, EmojiTrailer};
use crate::entity;
use crate::error::{Error, Result};
use crate::lexical;
use crate::punctuation::{self, PunctuationReadout};
use crate::segmentation::{self, ClassifiedGrapheme, GraphemeClass};

pub const MAX_GRAPHEMES: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StageTiming {
    pub stage: &'static str,
    pub micros: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProcessedMessage {
    pub tts_text: String,
    pub body: Vec<String>,
    pub emoji_trailer: EmojiTrailer,
    pub punctuation_phrase: Option<PunctuationReadout>,
    pub have_char: bool,
    pub unique_emoji_count: usize,
    pub stage_timings: Vec<StageTiming>,
}

struct Timer {
    enabled: bool,
    last: Instant,
    timings: Vec<StageTiming>,
}

impl Timer {
    fn new(enabled: bool) -> Self {
        Timer { enabled, last: Instant::now(), timings: Vec::new() }
    }

    fn lap(&mut self, stage: &'static str) {
        if self.enabled {
            let now = Instant::now();
            let micros = now.duration_since(self.last).as_secs_f64() * 1e6;
            self.timings.push(StageTiming { stage, micros });
            self.last = now;
        }
    }
}

/// Rewrites `text` as speakable prose.
pub fn preprocess(text: &str, config: &Config, bundle: &AssetBundle) -> Result<ProcessedMessage> {
    run(text, config, bundle, false)
}

/// Like [`preprocess`], also recording wall-clock time per stage.
pub fn preprocess_with_report(text: &str, config: &Config, bundle: &AssetBundle) -> Result<ProcessedMessage> {
    run(text, config, bundle, true)
}

/// Latin letters that have no compatibility decomposition.
fn latin_fallback(c: char) -> Option<&'static str> {
    Some(match c {
        'æ' => "ae",
        'œ' => "oe",
        'ß' => "ss",
        'ø' => "o",
        'đ' | 'ð' => "d",
        'ł' => "l",
        'ħ' => "h",
        'ı' => "i",
        'ŧ' => "t",
        'þ' => "th",
        'ŋ' => "n",
        'ĸ' => "k",
        _ => return None,
    })
}

/// Compatibility fold to ASCII letters and digits: NFKD, combining marks
/// dropped, lowercase. Letters and digits of other scripts become spaces
/// since the speech side only reads English.
fn fold_into(text: &str, out: &mut String) {
    for c in text.nfkd().filter(|&c| !is_combining_mark(c)) {
        for c in c.to_lowercase() {
            if c.is_ascii() || !c.is_alphanumeric() {
                out.push(c);
            } else if let Some(latin) = latin_fallback(c) {
                out.push_str(latin);
            } else {
                out.push(' ');
            }
        }
    }
}

/// Some text grapheme folds to an ASCII letter or digit. Text made only of
/// other scripts is treated like a symbol-only message.
fn has_speakable_text(classified: &[ClassifiedGrapheme<'_>]) -> bool {
    classified.iter().any(|g| {
        g.class == GraphemeClass::Text
            && g.text().nfkd().any(|c| {
                c.is_ascii_alphanumeric() || c.to_lowercase().any(|l| latin_fallback(l).is_some())
            })
    })
}

fn render_body(body: &[ClassifiedGrapheme<'_>]) -> String {
    let mut out = String::with_capacity(body.len() + 8);
    for g in body {
        match g.class {
            GraphemeClass::Whitespace => out.push(' '),
            _ if g.text().is_ascii() => out.push_str(g.text()),
            _ => fold_into(g.text(), &mut out),
        }
    }
    out
}

fn run(text: &str, config: &Config, bundle: &AssetBundle, timed: bool) -> Result<ProcessedMessage> {
    let graphemes = text.graphemes(true).count();
    if graphemes > MAX_GRAPHEMES {
        return Err(Error::InputTooLarge { graphemes, limit: MAX_GRAPHEMES });
    }
    let mut timer = Timer::new(timed);

    let lowered = segmentation::lowercase(text);
    timer.lap("lowercase");

    let classified = segmentation::classify(segmentation::segment(&lowered), bundle);
    timer.lap("segment_classify");

    let have_char = segmentation::has_alphanumeric(&classified) && has_speakable_text(&classified);
    timer.lap("have_char");

    let unique_emoji_count = segmentation::count_unique_emojis(&classified);
    timer.lap("unique_emoji_count");

    let (body, occurrences) = emoji::extract_emojis(classified);
    let ranked = emoji::rank_emojis(occurrences);
    timer.lap("extract_rank_emoji");

    let body = emoji::inline_informational(body);
    timer.lap("inline_informational");

    let mut punctuation_phrase = None;
    let body_words: Vec<String> = if have_char {
        let rendered = render_body(&body);
        let mut tokens: Vec<String> = rendered.split_whitespace().map(String::from).collect();
        if config.rm_common_abbr {
            tokens = lexical::normalize_text(&tokens, bundle);
            timer.lap("normalize_lexicon");
        }

        tokens = entity::apply_entities(&tokens, config);
        if config.rm_common_abbr {
            tokens = tokens.iter().map(|t| lexical::normalize_pieces(t, bundle)).collect();
        }
        timer.lap("entities");

        let censored = bundle.profanity().censor(&tokens.join(" "));
        timer.lap("censor");

        let stripped = punctuation::strip_punctuation(&censored);
        timer.lap("punctuation");
        stripped.split_whitespace().map(String::from).collect()
    } else {
        // only inlined emoji words and unreadable scripts can be text here
        let mut words = String::new();
        let mut marks = String::new();
        for g in &body {
            match g.class {
                GraphemeClass::Text => {
                    let mut folded = String::new();
                    fold_into(g.text(), &mut folded);
                    for c in folded.chars() {
                        if c.is_ascii_alphanumeric() {
                            words.push(c);
                        } else if !c.is_whitespace() {
                            marks.push(c);
                        }
                    }
                    words.push(' ');
                }
                GraphemeClass::Punctuation => marks.push_str(g.text()),
                _ => {}
            }
        }
        let censored = bundle.profanity().censor(&words);
        timer.lap("censor");

        let readout = punctuation::punctuation_readout(&marks, bundle, config.allow_punctuation_spamming);
        if !readout.phrase.is_empty() {
            punctuation_phrase = Some(readout);
        }
        timer.lap("punctuation");
        censored.split_whitespace().map(String::from).collect()
    };

    let emoji_trailer = emoji::build_trailer(&ranked, !body_words.is_empty(), config.allow_emoji_spamming);
    timer.lap("emoji_trailer");

    let mut parts: Vec<&str> = Vec::with_capacity(3);
    let body_text = body_words.join(" ");
    parts.push(&body_text);
    if let Some(p) = &punctuation_phrase {
        parts.push(&p.phrase);
    }
    parts.push(&emoji_trailer.phrase);
    let tts_text = parts.into_iter().filter(|p| !p.is_empty()).collect::<Vec<_>>().join(" ");
    timer.lap("assemble");

    Ok(ProcessedMessage {
        tts_text,
        body: body_words,
        emoji_trailer,
        punctuation_phrase,
        have_char,
        unique_emoji_count,
        stage_timings: timer.timings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tts(text: &str) -> String {
        preprocess(text, &Config::default(), AssetBundle::builtin()).unwrap().tts_text
    }

    #[test]
    fn examples() {
        assert_eq!(tts("Yesss!!!! It's holiday today 🥳🥳🥳"), "yes its holiday today with partying face emoji");
        assert_eq!(tts(""), "");
        assert_eq!(
            tts("My phone number is 9321673878"),
            "my phone number is nine three two one six seven three eight seven eight"
        );
        assert_eq!(tts("Oh!!! Shit...I missed that question??"), "oh beep i missed that question?");
    }

    #[test]
    fn symbol_only() {
        assert_eq!(tts("!@#$%&*()"), "exclamation mark at symbol and some other punctuations");
        assert_eq!(tts("4️⃣"), "four");
        assert_eq!(tts("🥳"), "partying face emoji");
    }

    #[test]
    fn accents_fold() {
        assert_eq!(tts("Café NAÏVE"), "cafe naive");
        assert_eq!(tts("cœur Straße"), "coeur strasse");
        assert_eq!(tts("hi नमस्ते"), "hi");
        assert_eq!(tts("नमस्ते!"), "exclamation mark");
    }

    #[test]
    fn cap() {
        let big = "a".repeat(MAX_GRAPHEMES + 1);
        assert!(matches!(
            preprocess(&big, &Config::default(), AssetBundle::builtin()),
            Err(Error::InputTooLarge { .. })
        ));
        assert!(preprocess(&"a".repeat(MAX_GRAPHEMES), &Config::default(), AssetBundle::builtin()).is_ok());
    }

    #[test]
    fn timings() {
        let b = AssetBundle::builtin();
        assert!(preprocess("hi", &Config::default(), b).unwrap().stage_timings.is_empty());
        for text in ["", "hi u 🥳", "!!"] {
            let m = preprocess_with_report(text, &Config::default(), b).unwrap();
            let mut names: Vec<_> = m.stage_timings.iter().map(|t| t.stage).collect();
            let n = names.len();
            names.sort();
            names.dedup();
            assert_eq!(names.len(), n, "{text}");
            assert!(names.contains(&"assemble"));
        }
    }

    #[test]
    fn abbreviations_can_be_kept() {
        let config = Config { rm_common_abbr: false, ..Config::default() };
        let out = preprocess("plz chk", &config, AssetBundle::builtin()).unwrap();
        assert_eq!(out.tts_text, "plz chk");
    }
}
