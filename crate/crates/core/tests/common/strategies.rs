//! Random chat-message generators shared by the property suites.
#![allow(dead_code)]

use proptest::prelude::*;
use proptest::sample::select;

pub const WORDS: &[&str] = &[
    "hello", "i", "am", "going", "home", "the", "show", "was", "awesome", "yesss", "nooo", "plz",
    "u", "r", "msg", "fb", "chk", "knw", "it's", "don't", "can't", "2day", "gr8", "shit", "shiiit",
    "class", "assignment", "scunthorpe", "message", "messsaaageee", "okkk", "hv", "n", "b4",
    "café", "naïve", "Straße", "ÉCOLE", "résumé", "façade", "cœur", "ﬁne", "x", "q", "so", "hmm",
];

pub const ENTITIES: &[&str] = &[
    "9321673878", "+91 93216 73878", "3675 9834 6012", "mohan@gmail.com", "https://www.fb.com/x",
    "google.com", "@mohan", "#happy2023", "$100.50", "₹1,00,000", "12.5%", "10:30", "7pm",
    "12/05/2023", "2023-05-12", "mh1220110062821", "5'11\"", "6ft", "3/4", "3.14", "-2", "1,000",
    "42", "007", "4th", "123456789012345", "0.5", "$ 20", "u:r", "a.b.c",
];

pub const EMOJI: &[&str] = &[
    "🥳", "🤣", "😂", "✨", "🏡", "🤩", "🕺", "👍🏽", "👍", "❤️", "❤", "🇮🇳", "👨‍👩‍👧", "4️⃣", "#️⃣", "🅰️",
    "🔟", "ℹ️", "\u{1FAFF}", "☺️", "©️", "🙏🏿",
];

pub const MARKS: &[&str] = &[
    "!", "?", ".", ",", ";", ":", "'", "\"", "(", ")", "-", "...", "@", "#", "$", "%", "^", "&", "*",
    "~", "…", "—", "¿", "¡", "«", "»", "©", "/", "\\", "|", "+", "=", "<", ">", "[", "]", "{", "}",
];

pub const SPACES: &[&str] = &[" ", "  ", "\t", "\n", "\u{a0}", "\u{200b}", "\u{feff}"];

fn piece() -> impl Strategy<Value = String> {
    prop_oneof![
        4 => select(WORDS).prop_map(String::from),
        2 => select(ENTITIES).prop_map(String::from),
        2 => select(EMOJI).prop_map(String::from),
        2 => select(MARKS).prop_map(String::from),
        1 => "[a-zA-Z0-9]{1,8}",
        1 => "[a-zà-ÿ!?.,'$%@#:/-]{1,6}",
    ]
}

/// Messages in Latin script mixing words, entities, emoji and symbols.
pub fn message() -> impl Strategy<Value = String> {
    prop::collection::vec((piece(), select(SPACES), any::<bool>()), 0..14).prop_map(|parts| {
        let mut s = String::new();
        for (p, sp, glue) in parts {
            s.push_str(&p);
            if !glue {
                s.push_str(sp);
            }
        }
        s
    })
}

/// Arbitrary Unicode, for properties that must hold for every script.
pub fn any_text() -> impl Strategy<Value = String> {
    prop_oneof![message(), any::<String>(), "\\PC{0,40}"]
}

/// Messages built only from punctuation marks.
pub fn marks_only() -> impl Strategy<Value = Vec<&'static str>> {
    prop::collection::vec(select(MARKS), 1..10)
}

pub fn emoji() -> impl Strategy<Value = &'static str> {
    select(EMOJI)
}

/// Sentence terminators that may be repeated without changing meaning.
pub fn terminator() -> impl Strategy<Value = &'static str> {
    select(&["!", "?", ".", ",", ";", ":"][..])
}

/// Innocent words containing a listed profanity as a substring.
pub const SCUNTHORPE: &[&str] = &[
    "scunthorpe", "class", "pass", "association", "mass", "saturday", "glass", "classes", "assistant", "classic",
    "massive", "documents", "assembly", "circumstances", "assume", "assets", "document", "pakistan", "assessment", "assault",
    "passion", "grass", "passenger", "ambassador", "arsenal", "documentary", "massachusetts", "bass", "passage", "classroom",
    "embarrassing", "embassy", "suspicious", "assess", "brass", "passport", "harassment", "massage", "pakistani", "suspicion",
    "compassion", "spice", "massacre", "scrap", "assassination", "spicy", "incumbent", "bypass", "compass", "sunglasses",
    "scum", "accumulated", "hassan", "assassin", "assemble", "potassium", "hassle", "chassis", "cumulative", "scrapped",
    "jurassic", "grassroots", "despicable", "picasso", "cumberland", "sturdy", "coarse", "cucumber", "cassette", "scrape",
    "hospice", "scraps", "biomass", "sparse", "conspicuous", "milford", "nassau", "raccoon", "fukushima", "marseille",
    "arsenic", "auspices", "carcass", "circumcision", "sassy", "damning", "skyscraper", "tallahassee", "circumference", "bluegrass",
    "cumbersome", "succumbed", "tycoon", "circumvent", "larsen", "trespass", "cocoon", "lass", "casserole", "rehearsed",
    "scrappy", "saltwater", "grasshopper", "prickly", "spiced",
];
