//! SMS shorthand expansion and repair of elongated words ("yesss", "plzzz").

use crate::assets::AssetBundle;

/// Beyond this many repeated-character runs only the full collapse is tried.
pub const MAX_ELONGATED_RUNS: usize = 8;

/// A token as a sequence of `(character, run length)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenRun {
    pub token: String,
    pub runs: Vec<(char, usize)>,
}

impl TokenRun {
    pub fn new(token: &str) -> Self {
        let mut runs: Vec<(char, usize)> = Vec::new();
        for c in token.chars() {
            match runs.last_mut() {
                Some((prev, n)) if *prev == c => *n += 1,
                _ => runs.push((c, 1)),
            }
        }
        TokenRun {
            token: token.to_string(),
            runs,
        }
    }

    pub fn reconstruct(&self) -> String {
        self.runs
            .iter()
            .flat_map(|&(c, n)| std::iter::repeat_n(c, n))
            .collect()
    }
}

/// Shrinks every run of a repeated character to a single occurrence.
pub fn collapse_full(token: &str) -> String {
    let mut out = String::with_capacity(token.len());
    let mut prev = None;
    for c in token.chars() {
        if prev != Some(c) {
            out.push(c);
        }
        prev = Some(c);
    }
    out
}

/// Spelling variants with each repeated run cut to two or one characters.
///
/// Doubles are tried before singles, leftmost run first, so the first
/// dictionary hit keeps legitimate double letters ("message"). The last
/// entry is always [`collapse_full`].
pub fn candidate_forms(token: &str) -> Vec<String> {
    let runs = TokenRun::new(token).runs;
    let elongated: Vec<usize> = (0..runs.len()).filter(|&i| runs[i].1 >= 2).collect();
    if elongated.is_empty() {
        return vec![token.to_string()];
    }
    if elongated.len() > MAX_ELONGATED_RUNS {
        return vec![collapse_full(token)];
    }
    let k = elongated.len();
    let mut out = Vec::with_capacity(1 << k);
    for mask in 0u32..(1 << k) {
        let mut s = String::with_capacity(token.len());
        for (i, &(c, n)) in runs.iter().enumerate() {
            let len = match elongated.iter().position(|&r| r == i) {
                // bit set -> single; the first run is the most significant bit
                Some(j) if mask & (1 << (k - 1 - j)) != 0 => 1,
                Some(_) => 2,
                None => n,
            };
            s.extend(std::iter::repeat_n(c, len));
        }
        out.push(s);
    }
    out
}

/// Maps a word that the dictionaries also list as shorthand to its expansion.
fn resolve<'b>(word: &'b str, bundle: &'b AssetBundle) -> &'b str {
    bundle.contraction(word).unwrap_or(word)
}

/// Normalizes one lowercase word. First hit wins:
/// contraction, dictionary word (itself or an elongation variant),
/// collapsed-form map, contraction of the collapsed form, unchanged.
pub fn normalize_token(token: &str, bundle: &AssetBundle) -> String {
    if let Some(expansion) = bundle.contraction(token) {
        return expansion.to_string();
    }
    if bundle.is_word(token) {
        return token.to_string();
    }
    if let Some(word) = candidate_forms(token).into_iter().find(|c| bundle.is_word(c)) {
        return resolve(&word, bundle).to_string();
    }
    let collapsed = collapse_full(token);
    if let Some(word) = bundle.collapsed_word(&collapsed) {
        return resolve(word, bundle).to_string();
    }
    if let Some(expansion) = bundle.contraction(&collapsed) {
        return expansion.to_string();
    }
    token.to_string()
}

fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '\u{2019}'
}

/// Normalizes every word piece of `token` in place.
///
/// A piece is a maximal run of letters, digits and apostrophes; apostrophes
/// are dropped from the piece before lookup ("it's" is looked up as "its").
/// Everything else in the token is copied through.
pub fn normalize_pieces(token: &str, bundle: &AssetBundle) -> String {
    let mut out = String::with_capacity(token.len() + 8);
    let mut piece = String::new();
    let flush = |piece: &mut String, out: &mut String| {
        if !piece.is_empty() {
            out.push_str(&normalize_token(piece, bundle));
            piece.clear();
        }
    };
    for c in token.chars() {
        if c.is_alphanumeric() {
            piece.push(c);
        } else if is_apostrophe(c) {
            continue;
        } else {
            flush(&mut piece, &mut out);
            out.push(c);
        }
    }
    flush(&mut piece, &mut out);
    out
}

const ENTITY_MARKERS: [char; 9] = ['@', '/', ':', '#', '$', '%', '€', '£', '₹'];

/// Tokens the entity scanner needs to see verbatim: anything carrying an
/// entity marker, or digits mixed with other symbols ("12.5", "5'11\"").
pub fn is_entity_like(token: &str) -> bool {
    if token.contains(ENTITY_MARKERS) {
        return true;
    }
    let core = token.trim_matches(|c: char| !c.is_alphanumeric());
    core.chars().any(|c| c.is_ascii_digit()) && core.chars().any(|c| !c.is_alphanumeric())
}

/// Applies [`normalize_pieces`] to word tokens; entity-like tokens pass
/// through untouched.
pub fn normalize_text(tokens: &[String], bundle: &AssetBundle) -> Vec<String> {
    tokens
        .iter()
        .map(|t| {
            if is_entity_like(t) {
                t.clone()
            } else {
                normalize_pieces(t, bundle)
            }
        })
        .collect()
}
