//! Preloaded static dictionaries.
//!
//! An [`AssetBundle`] is loaded once, validated, and then shared read-only
//! by every pipeline call. The on-disk layout of an asset directory is:
//!
//! | file                     | format                                               |
//! |--------------------------|------------------------------------------------------|
//! | `emoji_meta.json`        | `{"<emoji>": {"name", "rank", "informational", "word"?}}` |
//! | `contractions.json`      | `{"msg": "message", ...}`                            |
//! | `collapsed_words.json`   | `{"<fully collapsed form>": "<canonical word>"}`     |
//! | `wordlist.txt`           | one lowercase word per line, `#` comments            |
//! | `profanity.txt`          | one lowercase word per line, `#` comments            |
//! | `punctuation_names.json` | `{"!": "exclamation mark", ...}`                     |

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fs;
use std::path::Path;

use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::profanity::{self, ProfanityMatcher};
use crate::segmentation::{canonical_emoji_key, is_skin_tone};

pub const EMOJI_META: &str = "emoji_meta.json";
pub const CONTRACTIONS: &str = "contractions.json";
pub const COLLAPSED_WORDS: &str = "collapsed_words.json";
pub const WORDLIST: &str = "wordlist.txt";
pub const PROFANITY: &str = "profanity.txt";
pub const PUNCTUATION_NAMES: &str = "punctuation_names.json";

pub const ASSET_FILES: [&str; 6] = [
    EMOJI_META,
    CONTRACTIONS,
    COLLAPSED_WORDS,
    WORDLIST,
    PROFANITY,
    PUNCTUATION_NAMES,
];

const BUILTIN_SOURCES: [(&str, &str); 6] = [
    (EMOJI_META, include_str!("../assets/emoji_meta.json")),
    (CONTRACTIONS, include_str!("../assets/contractions.json")),
    (COLLAPSED_WORDS, include_str!("../assets/collapsed_words.json")),
    (WORDLIST, include_str!("../assets/wordlist.txt")),
    (PROFANITY, include_str!("../assets/profanity.txt")),
    (PUNCTUATION_NAMES, include_str!("../assets/punctuation_names.json")),
];

static BUILTIN: Lazy<AssetBundle> = Lazy::new(|| {
    AssetBundle::from_sources(BUILTIN_SOURCES.map(|(name, text)| (name, text.to_string())))
        .expect("bundled assets are valid")
});

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmojiRecord {
    /// Tone-free, selector-free codepoint sequence used for lookup.
    pub key: String,
    pub name: String,
    pub popularity: u32,
    /// Keycaps and letter emoji: read in place instead of in the trailer.
    pub informational: bool,
    /// Inline verbalization for informational records.
    pub word: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEmoji {
    name: String,
    rank: u32,
    #[serde(default)]
    informational: bool,
    #[serde(default)]
    word: Option<String>,
}

/// Byte sizes of the asset sources a bundle was built from.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Footprint {
    pub per_asset: Vec<(String, u64)>,
}

impl Footprint {
    pub fn total(&self) -> u64 {
        self.per_asset.iter().map(|(_, n)| n).sum()
    }
}

#[derive(Debug, Clone)]
pub struct AssetBundle {
    emoji_table: HashMap<String, EmojiRecord>,
    contractions: HashMap<String, String>,
    collapsed_words: HashMap<String, String>,
    word_list: HashSet<String>,
    profanity: ProfanityMatcher,
    punctuation_names: HashMap<char, String>,
    footprint: Footprint,
}

fn invalid(file: &str, entry: &str, reason: impl Into<String>) -> Error {
    Error::InvalidAsset {
        file: file.to_string(),
        entry: entry.to_string(),
        reason: reason.into(),
    }
}

/// `[a-z]+( [a-z]+)*`: the only shape a dictionary output may take.
fn is_spoken_phrase(s: &str) -> bool {
    !s.is_empty()
        && s.split(' ')
            .all(|w| !w.is_empty() && w.bytes().all(|b| b.is_ascii_lowercase()))
}

fn is_lookup_key(s: &str) -> bool {
    !s.is_empty()
        && s
            .bytes()
            .all(|b| b.is_ascii_lowercase() || b.is_ascii_digit())
}

fn parse_json_map<T: for<'de> Deserialize<'de>>(
    file: &str,
    text: &str,
) -> Result<BTreeMap<String, T>> {
    if text.trim().is_empty() {
        return Ok(BTreeMap::new());
    }
    serde_json::from_str(text).map_err(|source| Error::Json {
        what: file.to_string(),
        source,
    })
}

fn parse_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn check_phrase(file: &str, key: &str, value: &str, profanity: &ProfanityMatcher) -> Result<()> {
    if let Some(word) = profanity.find_word(value) {
        return Err(invalid(
            file,
            key,
            format!("expands to listed profanity `{word}`"),
        ));
    }
    if !is_spoken_phrase(value) {
        return Err(invalid(
            file,
            key,
            format!("value `{value}` must be lowercase words separated by single spaces"),
        ));
    }
    Ok(())
}

fn lookup_map(
    file: &str,
    text: &str,
    profanity: &ProfanityMatcher,
) -> Result<HashMap<String, String>> {
    let raw: BTreeMap<String, String> = parse_json_map(file, text)?;
    let mut out = HashMap::with_capacity(raw.len());
    for (key, value) in raw {
        if !is_lookup_key(&key) {
            return Err(invalid(file, &key, "key must be lowercase letters and digits"));
        }
        check_phrase(file, &key, &value, profanity)?;
        out.insert(key, value);
    }
    Ok(out)
}

impl AssetBundle {
    /// The dictionaries compiled into the library. Loaded on first use.
    pub fn builtin() -> &'static AssetBundle {
        &BUILTIN
    }

    /// Builds a bundle from `(file name, contents)` pairs covering every
    /// entry of [`ASSET_FILES`].
    pub fn from_sources(sources: impl IntoIterator<Item = (&'static str, String)>) -> Result<Self> {
        let mut texts: HashMap<&str, String> = sources.into_iter().collect();
        let mut take = |name: &'static str| {
            texts.remove(name).ok_or_else(|| Error::MissingAsset {
                file: name.to_string(),
            })
        };
        let emoji_src = take(EMOJI_META)?;
        let contractions_src = take(CONTRACTIONS)?;
        let collapsed_src = take(COLLAPSED_WORDS)?;
        let wordlist_src = take(WORDLIST)?;
        let profanity_src = take(PROFANITY)?;
        let punctuation_src = take(PUNCTUATION_NAMES)?;

        let footprint = Footprint {
            per_asset: [
                (EMOJI_META, &emoji_src),
                (CONTRACTIONS, &contractions_src),
                (COLLAPSED_WORDS, &collapsed_src),
                (WORDLIST, &wordlist_src),
                (PROFANITY, &profanity_src),
                (PUNCTUATION_NAMES, &punctuation_src),
            ]
            .iter()
            .map(|(name, text)| (name.to_string(), text.len() as u64))
            .collect(),
        };

        let profanity_words: Vec<String> = parse_lines(&profanity_src).map(str::to_string).collect();
        let profanity = profanity::compile(&profanity_words)?;

        let contractions = lookup_map(CONTRACTIONS, &contractions_src, &profanity)?;
        let collapsed_words = lookup_map(COLLAPSED_WORDS, &collapsed_src, &profanity)?;

        let mut word_list = HashSet::new();
        for word in parse_lines(&wordlist_src) {
            if word.chars().any(|c| c.is_uppercase() || c.is_whitespace()) {
                return Err(invalid(WORDLIST, word, "must be a single lowercase word"));
            }
            word_list.insert(word.to_string());
        }

        let raw_emoji: BTreeMap<String, RawEmoji> = parse_json_map(EMOJI_META, &emoji_src)?;
        let mut emoji_table = HashMap::with_capacity(raw_emoji.len());
        for (literal, raw) in raw_emoji {
            if literal.chars().any(is_skin_tone) {
                return Err(invalid(EMOJI_META, &literal, "contains a skin-tone modifier"));
            }
            let key = canonical_emoji_key(&literal);
            if key.is_empty() {
                return Err(invalid(EMOJI_META, &literal, "has no base codepoint"));
            }
            check_phrase(EMOJI_META, &literal, &raw.name, &profanity)?;
            match (&raw.word, raw.informational) {
                (None, true) => {
                    return Err(invalid(EMOJI_META, &literal, "is informational but has no word"))
                }
                (Some(word), _) => check_phrase(EMOJI_META, &literal, word, &profanity)?,
                (None, false) => {}
            }
            let record = EmojiRecord {
                key: key.clone(),
                name: raw.name,
                popularity: raw.rank,
                informational: raw.informational,
                word: raw.word.filter(|_| raw.informational),
            };
            if emoji_table.insert(key, record).is_some() {
                return Err(invalid(EMOJI_META, &literal, "duplicates another entry"));
            }
        }

        let raw_punct: BTreeMap<String, String> = parse_json_map(PUNCTUATION_NAMES, &punctuation_src)?;
        let mut punctuation_names = HashMap::with_capacity(raw_punct.len());
        for (mark, name) in raw_punct {
            let mut chars = mark.chars();
            let (Some(c), None) = (chars.next(), chars.next()) else {
                return Err(invalid(PUNCTUATION_NAMES, &mark, "must be a single character"));
            };
            check_phrase(PUNCTUATION_NAMES, &mark, &name, &profanity)?;
            punctuation_names.insert(c, name);
        }

        Ok(AssetBundle {
            emoji_table,
            contractions,
            collapsed_words,
            word_list,
            profanity,
            punctuation_names,
            footprint,
        })
    }

    pub fn emoji(&self, key: &str) -> Option<&EmojiRecord> {
        self.emoji_table.get(key)
    }

    pub fn emoji_records(&self) -> impl Iterator<Item = &EmojiRecord> {
        self.emoji_table.values()
    }

    pub fn contraction(&self, token: &str) -> Option<&str> {
        self.contractions.get(token).map(String::as_str)
    }

    pub fn contractions(&self) -> &HashMap<String, String> {
        &self.contractions
    }

    pub fn collapsed_word(&self, collapsed: &str) -> Option<&str> {
        self.collapsed_words.get(collapsed).map(String::as_str)
    }

    pub fn collapsed_words(&self) -> &HashMap<String, String> {
        &self.collapsed_words
    }

    pub fn is_word(&self, token: &str) -> bool {
        self.word_list.contains(token)
    }

    pub fn word_count(&self) -> usize {
        self.word_list.len()
    }

    pub fn profanity(&self) -> &ProfanityMatcher {
        &self.profanity
    }

    pub fn punctuation_name(&self, mark: char) -> Option<&str> {
        self.punctuation_names.get(&mark).map(String::as_str)
    }

    pub fn punctuation_names(&self) -> &HashMap<char, String> {
        &self.punctuation_names
    }

    pub fn footprint(&self) -> &Footprint {
        &self.footprint
    }

    /// Rough heap size of the loaded structures, separate from the on-disk
    /// footprint.
    pub fn resident_estimate_bytes(&self) -> u64 {
        let strings = |m: &HashMap<String, String>| -> usize {
            m.iter().map(|(k, v)| k.capacity() + v.capacity() + 48).sum()
        };
        let emoji: usize = self
            .emoji_table
            .iter()
            .map(|(k, r)| {
                k.capacity()
                    + r.key.capacity()
                    + r.name.capacity()
                    + r.word.as_ref().map_or(0, String::capacity)
                    + std::mem::size_of::<EmojiRecord>()
                    + 24
            })
            .sum();
        let words: usize = self.word_list.iter().map(|w| w.capacity() + 32).sum();
        let profanity: usize = self.profanity.entries().iter().map(|w| w.capacity() + 24).sum();
        let punct: usize = self.punctuation_names.values().map(|v| v.capacity() + 32).sum();
        (emoji + strings(&self.contractions) + strings(&self.collapsed_words) + words + profanity + punct)
            as u64
    }

    /// Deterministic serialization of the loaded contents, used to check
    /// that loading is reproducible.
    pub fn canonical_json(&self) -> String {
        #[derive(Serialize)]
        struct Snapshot<'a> {
            emoji: BTreeMap<&'a str, &'a EmojiRecord>,
            contractions: BTreeMap<&'a str, &'a str>,
            collapsed_words: BTreeMap<&'a str, &'a str>,
            word_list: Vec<&'a str>,
            profanity: &'a [String],
            punctuation_names: BTreeMap<char, &'a str>,
            footprint: &'a Footprint,
        }
        let mut word_list: Vec<&str> = self.word_list.iter().map(String::as_str).collect();
        word_list.sort_unstable();
        let snapshot = Snapshot {
            emoji: self.emoji_table.iter().map(|(k, v)| (k.as_str(), v)).collect(),
            contractions: self
                .contractions
                .iter()
                .map(|(k, v)| (k.as_str(), v.as_str()))
                .collect(),
            collapsed_words: self
                .collapsed_words
                .iter()
                .map(|(k, v)| (k.as_str(), v.as_str()))
                .collect(),
            word_list,
            profanity: self.profanity.entries(),
            punctuation_names: self
                .punctuation_names
                .iter()
                .map(|(k, v)| (*k, v.as_str()))
                .collect(),
            footprint: &self.footprint,
        };
        serde_json::to_string(&snapshot).expect("snapshot serializes")
    }
}

/// Loads and validates every dictionary in `dir`.
pub fn load_assets(dir: &Path) -> Result<AssetBundle> {
    let mut sources = Vec::with_capacity(ASSET_FILES.len());
    for name in ASSET_FILES {
        let path = dir.join(name);
        if !path.is_file() {
            return Err(Error::MissingAsset {
                file: path.display().to_string(),
            });
        }
        let text = fs::read_to_string(&path).map_err(|source| Error::Io { path, source })?;
        sources.push((name, text));
    }
    AssetBundle::from_sources(sources)
}

/// Total on-disk size of the assets a bundle was loaded from.
pub fn asset_footprint(bundle: &AssetBundle) -> u64 {
    bundle.footprint().total()
}
