//! Detection and spoken rendering of structured entities: PII, links,
//! money, times, dates and numbers.

pub mod numbers;

use std::ops::Range;

use once_cell::sync::Lazy;
use regex::Regex;

use crate::config::Config;
pub use numbers::{digits_to_words, number_to_words, read_digit_run};

/// Entity kinds in precedence order: when a token matches several patterns
/// the earliest kind wins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EntityKind {
    Url,
    Email,
    Mention,
    Hashtag,
    Currency,
    Percentage,
    Time,
    Date,
    Aadhaar,
    DrivingLicence,
    Phone,
    Length,
    Fraction,
    Decimal,
    Integer,
}

impl EntityKind {
    pub const ALL: [EntityKind; 15] = [
        EntityKind::Url,
        EntityKind::Email,
        EntityKind::Mention,
        EntityKind::Hashtag,
        EntityKind::Currency,
        EntityKind::Percentage,
        EntityKind::Time,
        EntityKind::Date,
        EntityKind::Aadhaar,
        EntityKind::DrivingLicence,
        EntityKind::Phone,
        EntityKind::Length,
        EntityKind::Fraction,
        EntityKind::Decimal,
        EntityKind::Integer,
    ];

    pub fn is_pii(self) -> bool {
        matches!(
            self,
            EntityKind::Email | EntityKind::Aadhaar | EntityKind::DrivingLicence | EntityKind::Phone
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntitySpan {
    pub kind: EntityKind,
    /// Matched text; multi-token matches are joined with single spaces.
    pub source: String,
    /// Punctuation around the match that is kept around the reading.
    pub lead: String,
    pub trail: String,
    pub token_range: Range<usize>,
}

const TLDS: &str = "com|org|net|edu|gov|mil|int|in|io|co|ai|me|ly|uk|us|ca|au|de|fr|jp|info|biz|app|dev|xyz|tv";

fn re(pattern: &str) -> Regex {
    Regex::new(pattern).expect("entity pattern")
}

static URL_PREFIXED: Lazy<Regex> = Lazy::new(|| {
    re(r"^(?:[a-z][a-z0-9+.-]*://|www\.)(?P<host>[a-z0-9-]+(?:\.[a-z0-9-]+)*)(?::\d+)?(?:/\S*)?$")
});
static URL_BARE: Lazy<Regex> = Lazy::new(|| {
    re(&format!(
        r"^(?P<host>[a-z0-9-]+(?:\.[a-z0-9-]+)*\.(?:{TLDS}))(?::\d+)?(?:/\S*)?$"
    ))
});
static EMAIL: Lazy<Regex> = Lazy::new(|| {
    re(r"^(?P<local>[a-z0-9._%+-]+)@(?P<domain>[a-z0-9-]+(?:\.[a-z0-9-]+)*)\.(?P<tld>[a-z]{2,})$")
});
static MENTION: Lazy<Regex> = Lazy::new(|| re(r"^@(?P<name>[a-z_][a-z0-9_]*)$"));
static HASHTAG: Lazy<Regex> = Lazy::new(|| re(r"^#(?P<tag>[a-z0-9_]*[a-z][a-z0-9_]*)$"));
static CURRENCY: Lazy<Regex> = Lazy::new(|| {
    re(r"^(?P<sym>[$₹€£])(?P<units>\d{1,3}(?:,\d{2,3})+|\d+)(?:\.(?P<sub>\d{1,2}))?$")
});
static PERCENTAGE: Lazy<Regex> = Lazy::new(|| re(r"^(?P<num>\d+(?:\.\d+)?)%$"));
static TIME: Lazy<Regex> = Lazy::new(|| {
    re(r"^(?P<h>\d{1,2})(?::(?P<m>\d{2}))?(?P<ampm>am|pm|a\.m\.|p\.m\.)?$")
});
static DATE: Lazy<Regex> = Lazy::new(|| {
    re(r"^(?P<a>\d{1,4})(?P<s1>[/.-])(?P<b>\d{1,2})(?P<s2>[/.-])(?P<c>\d{2}|\d{4})$")
});
static AADHAAR: Lazy<Regex> = Lazy::new(|| re(r"^\d{4}([ -]?)\d{4}([ -]?)\d{4}$"));
static DRIVING_LICENCE: Lazy<Regex> = Lazy::new(|| re(r"^[a-z]{2}-?\d{2}-?[a-z0-9]{11}$"));
static PHONE: Lazy<Regex> = Lazy::new(|| {
    re(r"^(?P<prefix>\+91[- ]?|0)?(?P<num>\d{10}|\d{5}[- ]\d{5}|\d{3}-\d{3}-\d{4})$")
});
static LENGTH: Lazy<Regex> = Lazy::new(|| {
    re(r#"^(?P<ft>\d+)(?:'|ft|feet)(?:(?P<inch>\d+)(?:"|''|in|inch|inches)?)?$|^(?P<only_in>\d+)(?:"|in|inch|inches)$"#)
});
static FRACTION: Lazy<Regex> = Lazy::new(|| re(r"^(?P<a>\d+)/(?P<b>\d+)$"));
static DECIMAL: Lazy<Regex> = Lazy::new(|| re(r"^(?P<neg>-)?(?P<int>\d+)\.(?P<frac>\d+)$"));
static INTEGER: Lazy<Regex> = Lazy::new(|| re(r"^(?P<neg>-)?(?P<num>\d{1,3}(?:,\d{2,3})+|\d+)$"));

fn is_url(s: &str) -> bool {
    URL_PREFIXED.is_match(s) || URL_BARE.is_match(s)
}

fn valid_time(s: &str) -> bool {
    let Some(c) = TIME.captures(s) else { return false };
    let h: u32 = c["h"].parse().unwrap_or(99);
    let has_ampm = c.name("ampm").is_some();
    match c.name("m") {
        Some(m) => {
            let m: u32 = m.as_str().parse().unwrap_or(99);
            m < 60 && if has_ampm { (1..=12).contains(&h) } else { h < 24 }
        }
        None => has_ampm && (1..=12).contains(&h),
    }
}

/// `(day, month, year)` in the order the token spells them.
fn date_parts(s: &str) -> Option<(u32, u32, String)> {
    let c = DATE.captures(s)?;
    if c["s1"] != c["s2"] {
        return None;
    }
    let a = &c["a"];
    let (day, month, year) = if a.len() == 4 {
        // year first: Y-M-D
        let b: u32 = c["b"].parse().ok()?;
        let d: u32 = c["c"].parse().ok()?;
        if c["c"].len() != 2 {
            return None;
        }
        (d, b, a.to_string())
    } else if a.len() <= 2 {
        (a.parse().ok()?, c["b"].parse().ok()?, c["c"].to_string())
    } else {
        return None;
    };
    ((1..=31).contains(&day) && (1..=12).contains(&month)).then_some((day, month, year))
}

fn matches(kind: EntityKind, s: &str) -> bool {
    match kind {
        EntityKind::Url => is_url(s),
        EntityKind::Email => EMAIL.is_match(s),
        EntityKind::Mention => MENTION.is_match(s),
        EntityKind::Hashtag => HASHTAG.is_match(s),
        EntityKind::Currency => CURRENCY.is_match(s),
        EntityKind::Percentage => PERCENTAGE.is_match(s),
        EntityKind::Time => valid_time(s),
        EntityKind::Date => date_parts(s).is_some(),
        EntityKind::Aadhaar => AADHAAR.is_match(s),
        EntityKind::DrivingLicence => DRIVING_LICENCE.is_match(s),
        EntityKind::Phone => PHONE.is_match(s),
        EntityKind::Length => LENGTH.is_match(s),
        EntityKind::Fraction => FRACTION.is_match(s),
        EntityKind::Decimal => DECIMAL.is_match(s),
        EntityKind::Integer => INTEGER.is_match(s),
    }
}

/// Highest-precedence kind whose pattern matches all of `s`.
pub fn classify_token(s: &str) -> Option<EntityKind> {
    EntityKind::ALL.into_iter().find(|&k| matches(k, s))
}

/// Punctuation that may sit in front of an entity without being part of it.
fn is_lead_punct(c: char) -> bool {
    !c.is_alphanumeric() && !matches!(c, '$' | '₹' | '€' | '£' | '@' | '#' | '+' | '-')
}

fn is_trail_punct(c: char) -> bool {
    !c.is_alphanumeric() && !matches!(c, '%' | '"' | '\'')
}

/// Candidate `(lead, core, trail)` splits of a chunk, tried in order.
fn splits(chunk: &str) -> Vec<(&str, &str, &str)> {
    let mut out = vec![("", chunk, "")];
    let mut push = |lead_fn: fn(char) -> bool, trail_fn: fn(char) -> bool| {
        let core = chunk.trim_start_matches(lead_fn);
        let lead = &chunk[..chunk.len() - core.len()];
        let trimmed = core.trim_end_matches(trail_fn);
        let trail = &core[trimmed.len()..];
        if !trimmed.is_empty() && !out.contains(&(lead, trimmed, trail)) {
            out.push((lead, trimmed, trail));
        }
    };
    push(is_lead_punct, is_trail_punct);
    push(|c| !c.is_alphanumeric(), |c| !c.is_alphanumeric());
    out
}

fn is_plain_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

/// Entities written across several whitespace-separated tokens:
/// grouped Aadhaar numbers, spaced phone numbers and "$ 100".
fn scan_multi_token(tokens: &[String], i: usize) -> Option<EntitySpan> {
    for len in [3usize, 2] {
        let Some(window) = tokens.get(i..i + len) else { continue };
        let first = window[0].as_str();
        let last = window[len - 1].as_str();
        let first_core = first.trim_start_matches(is_lead_punct);
        let lead = &first[..first.len() - first_core.len()];
        let last_core = last.trim_end_matches(|c: char| !c.is_alphanumeric());
        let trail = &last[last_core.len()..];
        if window[1..len - 1].iter().any(|t| !is_plain_digits(t)) || !is_plain_digits(last_core) {
            continue;
        }
        let mut parts: Vec<&str> = vec![first_core];
        parts.extend(window[1..len - 1].iter().map(String::as_str));
        parts.push(last_core);
        if len == 3 {
            let joined = parts.join(" ");
            for kind in [EntityKind::Aadhaar, EntityKind::Phone] {
                if matches(kind, &joined) {
                    return Some(EntitySpan { kind, source: joined, lead: lead.into(), trail: trail.into(), token_range: i..i + len });
                }
            }
        } else {
            let joined = parts.join(" ");
            if first_core != "+91" && !is_plain_digits(first_core) {
                // only a bare currency symbol can join the amount that follows
                let glued = parts.concat();
                if first_core.chars().count() == 1 && matches(EntityKind::Currency, &glued) {
                    return Some(EntitySpan { kind: EntityKind::Currency, source: glued, lead: lead.into(), trail: trail.into(), token_range: i..i + 2 });
                }
                continue;
            }
            if matches(EntityKind::Phone, &joined) {
                return Some(EntitySpan { kind: EntityKind::Phone, source: joined, lead: lead.into(), trail: trail.into(), token_range: i..i + 2 });
            }
        }
    }
    None
}

fn scan_single(tokens: &[String], i: usize) -> Option<EntitySpan> {
    for (lead, core, trail) in splits(&tokens[i]) {
        if let Some(kind) = classify_token(core) {
            return Some(EntitySpan {
                kind,
                source: core.to_string(),
                lead: lead.to_string(),
                trail: trail.to_string(),
                token_range: i..i + 1,
            });
        }
    }
    None
}

/// All entity spans in `tokens`, left to right, non-overlapping.
pub fn scan_entities(tokens: &[String]) -> Vec<EntitySpan> {
    let mut spans = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        match scan_multi_token(tokens, i).or_else(|| scan_single(tokens, i)) {
            Some(span) => {
                i = span.token_range.end;
                spans.push(span);
            }
            None => i += 1,
        }
    }
    spans
}

/// Letters kept, digit runs read as numbers, other characters dropped.
fn read_mixed(s: &str, sep_word: Option<(char, &str)>) -> String {
    let mut words: Vec<String> = Vec::new();
    let mut cur = String::new();
    let mut digits = false;
    let flush = |cur: &mut String, digits: bool, words: &mut Vec<String>| {
        if !cur.is_empty() {
            words.push(if digits { read_digit_run(cur) } else { cur.clone() });
            cur.clear();
        }
    };
    for c in s.chars() {
        if c.is_ascii_digit() || c.is_alphabetic() {
            if !cur.is_empty() && c.is_ascii_digit() != digits {
                flush(&mut cur, digits, &mut words);
            }
            digits = c.is_ascii_digit();
            cur.push(c);
        } else {
            flush(&mut cur, digits, &mut words);
            if let Some((sep, word)) = sep_word {
                if c == sep {
                    words.push(word.to_string());
                }
            }
        }
    }
    flush(&mut cur, digits, &mut words);
    words.join(" ")
}

fn plural(n: u64, one: &str, many: &str) -> String {
    format!("{} {}", number_to_words(n), if n == 1 { one } else { many })
}

fn read_year(year: &str) -> String {
    let Ok(y) = year.parse::<u64>() else { return digits_to_words(year) };
    if year.len() != 4 || y < 1100 || (2000..2010).contains(&y) {
        return number_to_words(y);
    }
    let (hi, lo) = (y / 100, y % 100);
    match lo {
        0 => format!("{} hundred", number_to_words(hi)),
        1..=9 => format!("{} oh {}", number_to_words(hi), number_to_words(lo)),
        _ => format!("{} {}", number_to_words(hi), number_to_words(lo)),
    }
}

const MONTHS: [&str; 12] = [
    "january", "february", "march", "april", "may", "june", "july", "august", "september",
    "october", "november", "december",
];

fn read_decimal(int: &str, frac: &str) -> String {
    format!("{} point {}", read_digit_run(int), digits_to_words(frac))
}

fn read_number(num: &str) -> String {
    if let Some((int, frac)) = num.split_once('.') {
        read_decimal(int, frac)
    } else {
        read_digit_run(&num.replace(',', ""))
    }
}

/// Spoken form of one entity under the masking flags in `config`.
pub fn verbalize(span: &EntitySpan, config: &Config) -> String {
    let s = span.source.as_str();
    let mask = !config.disable_pii_masking;
    match span.kind {
        EntityKind::Url => {
            let c = URL_PREFIXED.captures(s).or_else(|| URL_BARE.captures(s)).expect("url");
            let host = c["host"].trim_start_matches("www.");
            format!("link to {}", read_mixed(host, Some(('.', "dot"))))
        }
        EntityKind::Email => {
            if mask {
                return "email".to_string();
            }
            let c = EMAIL.captures(s).expect("email");
            format!(
                "{} at {} dot {}",
                read_mixed(&c["local"], Some(('.', "dot"))),
                read_mixed(&c["domain"], Some(('.', "dot"))),
                &c["tld"]
            )
        }
        EntityKind::Mention => format!("at {}", read_mixed(&MENTION.captures(s).expect("mention")["name"], None)),
        EntityKind::Hashtag => format!("hashtag {}", read_mixed(&HASHTAG.captures(s).expect("hashtag")["tag"], None)),
        EntityKind::Currency => {
            let c = CURRENCY.captures(s).expect("currency");
            let units = c["units"].replace(',', "");
            let (one, many, sub_one, sub_many) = match &c["sym"] {
                "$" => ("dollar", "dollars", "cent", "cents"),
                "₹" => ("rupee", "rupees", "paisa", "paise"),
                "€" => ("euro", "euros", "cent", "cents"),
                _ => ("pound", "pounds", "penny", "pence"),
            };
            let mut out = match units.parse::<u64>() {
                Ok(n) if n < numbers::WORDS_LIMIT => plural(n, one, many),
                _ => format!("{} {}", digits_to_words(&units), many),
            };
            if let Some(sub) = c.name("sub") {
                let mut cents: u64 = sub.as_str().parse().unwrap_or(0);
                if sub.as_str().len() == 1 {
                    cents *= 10;
                }
                if cents > 0 {
                    out.push_str(" and ");
                    out.push_str(&plural(cents, sub_one, sub_many));
                }
            }
            out
        }
        EntityKind::Percentage => format!("{} percent", read_number(&PERCENTAGE.captures(s).expect("percent")["num"])),
        EntityKind::Time => {
            let c = TIME.captures(s).expect("time");
            let mut out = number_to_words(c["h"].parse().unwrap_or(0));
            if let Some(m) = c.name("m") {
                let m: u64 = m.as_str().parse().unwrap_or(0);
                match m {
                    0 if c.name("ampm").is_none() => out.push_str(" o clock"),
                    0 => {}
                    1..=9 => out.push_str(&format!(" oh {}", number_to_words(m))),
                    _ => out.push_str(&format!(" {}", number_to_words(m))),
                }
            }
            if let Some(ampm) = c.name("ampm") {
                out.push_str(if ampm.as_str().starts_with('a') { " a m" } else { " p m" });
            }
            out
        }
        EntityKind::Date => {
            let (day, month, year) = date_parts(s).expect("date");
            format!("{} {} {}", number_to_words(day as u64), MONTHS[month as usize - 1], read_year(&year))
        }
        EntityKind::Aadhaar => {
            if mask {
                "a twelve digit number".to_string()
            } else {
                digits_to_words(s)
            }
        }
        EntityKind::DrivingLicence => {
            if mask {
                "a driving licence number".to_string()
            } else {
                s.chars()
                    .filter(|c| c.is_ascii_alphanumeric())
                    .map(|c| match c.to_digit(10) {
                        Some(d) => numbers::ONES[d as usize].to_string(),
                        None => c.to_string(),
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        }
        EntityKind::Phone => {
            let c = PHONE.captures(s).expect("phone");
            if mask && !config.show_phonenumber {
                let n = c["num"].chars().filter(char::is_ascii_digit).count() as u64;
                return format!("a {} digit number", number_to_words(n));
            }
            let words = digits_to_words(s);
            if s.starts_with('+') {
                format!("plus {words}")
            } else {
                words
            }
        }
        EntityKind::Length => {
            let c = LENGTH.captures(s).expect("length");
            let mut parts = Vec::new();
            if let Some(ft) = c.name("ft") {
                let n = ft.as_str().parse().unwrap_or(0);
                parts.push(plural_or_digits(ft.as_str(), n, "foot", "feet"));
            }
            if let Some(inch) = c.name("inch").or_else(|| c.name("only_in")) {
                let n = inch.as_str().parse().unwrap_or(0);
                parts.push(plural_or_digits(inch.as_str(), n, "inch", "inches"));
            }
            parts.join(" ")
        }
        EntityKind::Fraction => {
            let c = FRACTION.captures(s).expect("fraction");
            format!("{} by {}", read_digit_run(&c["a"]), read_digit_run(&c["b"]))
        }
        EntityKind::Decimal => {
            let c = DECIMAL.captures(s).expect("decimal");
            let body = read_decimal(&c["int"], &c["frac"]);
            if c.name("neg").is_some() {
                format!("minus {body}")
            } else {
                body
            }
        }
        EntityKind::Integer => {
            let c = INTEGER.captures(s).expect("integer");
            let body = read_digit_run(&c["num"].replace(',', ""));
            if c.name("neg").is_some() {
                format!("minus {body}")
            } else {
                body
            }
        }
    }
}

fn plural_or_digits(raw: &str, n: u64, one: &str, many: &str) -> String {
    if raw.len() > 12 {
        format!("{} {}", digits_to_words(raw), many)
    } else {
        plural(n, one, many)
    }
}

/// Replaces any digits left in a non-entity token with number words.
fn spell_digits(token: &str) -> String {
    if !token.bytes().any(|b| b.is_ascii_digit()) {
        return token.to_string();
    }
    let mut out = String::with_capacity(token.len() * 4);
    let mut run = String::new();
    for c in token.chars() {
        if c.is_ascii_digit() {
            run.push(c);
            continue;
        }
        if !run.is_empty() {
            out.push(' ');
            out.push_str(&read_digit_run(&run));
            out.push(' ');
            run.clear();
        }
        out.push(c);
    }
    if !run.is_empty() {
        out.push(' ');
        out.push_str(&read_digit_run(&run));
    }
    out.trim().to_string()
}

/// Rewrites every entity in `tokens` as words. Tokens covered by one
/// multi-token entity collapse into a single output token.
pub fn apply_entities(tokens: &[String], config: &Config) -> Vec<String> {
    let spans = scan_entities(tokens);
    let mut out = Vec::with_capacity(tokens.len());
    let mut next = spans.iter().peekable();
    let mut i = 0;
    while i < tokens.len() {
        if let Some(span) = next.peek().filter(|s| s.token_range.start == i) {
            out.push(format!("{}{}{}", span.lead, verbalize(span, config), span.trail));
            i = span.token_range.end;
            next.next();
        } else {
            out.push(spell_digits(&tokens[i]));
            i += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    fn render(s: &str, config: &Config) -> String {
        apply_entities(&toks(s), config).join(" ")
    }

    fn kinds(s: &str) -> Vec<EntityKind> {
        scan_entities(&toks(s)).into_iter().map(|e| e.kind).collect()
    }

    #[test]
    fn precedence_is_declaration_order() {
        let mut sorted = EntityKind::ALL;
        sorted.sort();
        assert_eq!(sorted, EntityKind::ALL);
    }

    #[test]
    fn classify() {
        use EntityKind::*;
        let cases = [
            ("https://www.example.com/a?b=1", Url),
            ("www.fb.com", Url),
            ("google.com", Url),
            ("mohan@gmail.com", Email),
            ("@mohan_1", Mention),
            ("#happy2023", Hashtag),
            ("$100.50", Currency),
            ("₹1,00,000", Currency),
            ("12.5%", Percentage),
            ("10:30", Time),
            ("7pm", Time),
            ("12/05/2023", Date),
            ("2023-05-12", Date),
            ("367598346012", Aadhaar),
            ("3675-9834-6012", Aadhaar),
            ("mh1220110062821", DrivingLicence),
            ("9321673878", Phone),
            ("+919321673878", Phone),
            ("5'11\"", Length),
            ("6ft", Length),
            ("3/4", Fraction),
            ("3.14", Decimal),
            ("-2", Integer),
            ("1,000", Integer),
        ];
        for (s, k) in cases {
            assert_eq!(classify_token(s), Some(k), "{s}");
        }
        for s in ["hello", "25:99", "file.txt", "#123", "31/13/2020", "a@b"] {
            assert_eq!(classify_token(s), None, "{s}");
        }
    }

    #[test]
    fn multi_token() {
        use EntityKind::*;
        assert_eq!(kinds("number is 3675 9834 6012."), [Aadhaar]);
        assert_eq!(kinds("call +91 93216 73878"), [Phone]);
        assert_eq!(kinds("call 93216 73878 now"), [Phone]);
        assert_eq!(kinds("pay $ 100"), [Currency]);
        assert_eq!(kinds("12 34"), [Integer, Integer]);
    }

    #[test]
    fn readings() {
        let c = Config::default();
        assert_eq!(render("9321673878", &c), "nine three two one six seven three eight seven eight");
        assert_eq!(render("+91 93216 73878", &c), "plus nine one nine three two one six seven three eight seven eight");
        assert_eq!(render("mohan@gmail.com", &c), "email");
        assert_eq!(render("3675 9834 6012", &c), "a twelve digit number");
        assert_eq!(render("$100.50", &c), "one hundred dollars and fifty cents");
        assert_eq!(render("₹1", &c), "one rupee");
        assert_eq!(render("10:30pm", &c), "ten thirty p m");
        assert_eq!(render("10:00", &c), "ten o clock");
        assert_eq!(render("9:05", &c), "nine oh five");
        assert_eq!(render("12/05/2023", &c), "twelve may twenty twenty-three");
        assert_eq!(render("1/1/1900", &c), "one january nineteen hundred");
        assert_eq!(render("1/1/2005", &c), "one january two thousand and five");
        assert_eq!(render("5'11\"", &c), "five feet eleven inches");
        assert_eq!(render("1ft", &c), "one foot");
        assert_eq!(render("3/4", &c), "three by four");
        assert_eq!(render("-3.14", &c), "minus three point one four");
        assert_eq!(render("12.5%", &c), "twelve point five percent");
        assert_eq!(render("#happyday", &c), "hashtag happyday");
        assert_eq!(render("@mohan", &c), "at mohan");
        assert_eq!(render("https://www.fb.com/x", &c), "link to fb dot com");
        assert_eq!(render("room 4b", &c), "room four b");
    }

    #[test]
    fn punctuation_kept_around_entities() {
        let c = Config::default();
        assert_eq!(render("is it 10:30?", &c), "is it ten thirty?");
        assert_eq!(render("(3/4)", &c), "(three by four)");
    }

    #[test]
    fn masking_flags() {
        let masked = Config { show_phonenumber: false, ..Config::default() };
        assert_eq!(render("9321673878", &masked), "a ten digit number");
        let open = Config { disable_pii_masking: true, show_phonenumber: false, ..Config::default() };
        assert_eq!(render("mohan@gmail.com", &open), "mohan at gmail dot com");
        assert_eq!(render("9321673878", &open), "nine three two one six seven three eight seven eight");
        assert_eq!(render("367598346012", &open), "three six seven five nine eight three four six zero one two");
    }
}
