//! Every phrase the pipeline can emit must survive a second pass unchanged.

use lip_core::{preprocess, AssetBundle, Config};

fn tts(text: &str) -> String {
    preprocess(text, &Config::default(), AssetBundle::builtin())
        .unwrap()
        .tts_text
}

fn check_fixed_points<'a>(what: &str, phrases: impl Iterator<Item = &'a str>) {
    let mut bad = Vec::new();
    for phrase in phrases {
        let out = tts(phrase);
        if out != phrase {
            bad.push(format!("{phrase:?} -> {out:?}"));
        }
    }
    assert!(bad.is_empty(), "{what}: {} phrases move:\n{}", bad.len(), bad.join("\n"));
}

#[test]
fn contraction_expansions() {
    let b = AssetBundle::builtin();
    check_fixed_points("contractions", b.contractions().values().map(String::as_str));
}

#[test]
fn collapsed_word_targets() {
    let b = AssetBundle::builtin();
    check_fixed_points("collapsed words", b.collapsed_words().values().map(String::as_str));
}

#[test]
fn emoji_names() {
    let b = AssetBundle::builtin();
    check_fixed_points("emoji names", b.emoji_records().map(|r| r.name.as_str()));
    let words: Vec<&str> = b.emoji_records().filter_map(|r| r.word.as_deref()).collect();
    check_fixed_points("informational words", words.into_iter());
}

#[test]
fn punctuation_names() {
    let b = AssetBundle::builtin();
    check_fixed_points("punctuation names", b.punctuation_names().values().map(String::as_str));
}

#[test]
fn fixed_phrases() {
    let phrases = [
        "and some other emojis",
        "and some other punctuations",
        "a twelve digit number",
        "a ten digit number",
        "a driving licence number",
        "email",
        "link to example dot com",
        "ten thirty p m",
        "seven a m",
        "ten o clock",
        "nine oh five",
        "five feet eleven inches",
        "one hundred dollars and fifty cents",
        "ten rupees and five paise",
        "three pounds and one penny",
        "minus three point one four",
        "twelve point five percent",
        "hashtag happy",
        "at mohan",
        "three by four",
        "twelve may twenty twenty three",
        "nineteen hundred",
        "beep",
    ];
    check_fixed_points("fixed phrases", phrases.into_iter());
}

#[test]
fn number_words() {
    let words: Vec<String> = (0..=2000u64)
        .chain([1_000_000, 9_321_673_878, 999_999_999_999])
        .map(|n| lip_core::entity::number_to_words(n).replace('-', " "))
        .collect();
    check_fixed_points("numbers", words.iter().map(String::as_str));
}
