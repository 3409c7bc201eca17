//! Cardinal numbers in English words (short scale).

pub const ONES: [&str; 20] = [
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten",
    "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen", "seventeen", "eighteen",
    "nineteen",
];

pub const TENS: [&str; 10] = [
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety",
];

const SCALES: [(u64, &str); 3] = [
    (1_000_000_000, "billion"),
    (1_000_000, "million"),
    (1_000, "thousand"),
];

/// Numbers at or above this are read digit by digit.
pub const WORDS_LIMIT: u64 = 1_000_000_000_000;

fn below_hundred(n: u64, out: &mut String) {
    debug_assert!(n < 100);
    if n < 20 {
        out.push_str(ONES[n as usize]);
    } else {
        out.push_str(TENS[(n / 10) as usize]);
        if n % 10 != 0 {
            out.push('-');
            out.push_str(ONES[(n % 10) as usize]);
        }
    }
}

fn below_thousand(n: u64, out: &mut String) {
    let (h, rest) = (n / 100, n % 100);
    if h > 0 {
        out.push_str(ONES[h as usize]);
        out.push_str(" hundred");
        if rest > 0 {
            out.push_str(" and ");
        }
    }
    if rest > 0 || h == 0 {
        below_hundred(rest, out);
    }
}

/// `6012` -> "six thousand and twelve", `21` -> "twenty-one".
/// Values of a trillion or more fall back to [`digits_to_words`].
pub fn number_to_words(n: u64) -> String {
    if n >= WORDS_LIMIT {
        return digits_to_words(&n.to_string());
    }
    if n == 0 {
        return ONES[0].to_string();
    }
    let mut out = String::new();
    let mut rest = n;
    for (scale, name) in SCALES {
        if rest >= scale {
            if !out.is_empty() {
                out.push(' ');
            }
            below_thousand(rest / scale, &mut out);
            out.push(' ');
            out.push_str(name);
            rest %= scale;
        }
    }
    if rest > 0 {
        if !out.is_empty() {
            out.push_str(if rest < 100 { " and " } else { " " });
        }
        below_thousand(rest, &mut out);
    }
    out
}

/// Reads each ASCII digit separately; other characters are skipped.
pub fn digits_to_words(digits: &str) -> String {
    digits
        .chars()
        .filter_map(|c| c.to_digit(10))
        .map(|d| ONES[d as usize])
        .collect::<Vec<_>>()
        .join(" ")
}

/// Integer reading of a digit string: leading zeros or overlong values are
/// read digit by digit.
pub fn read_digit_run(run: &str) -> String {
    if run.len() > 1 && run.starts_with('0') {
        return digits_to_words(run);
    }
    match run.parse::<u64>() {
        Ok(n) => number_to_words(n),
        Err(_) => digits_to_words(run),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small() {
        assert_eq!(number_to_words(0), "zero");
        assert_eq!(number_to_words(7), "seven");
        assert_eq!(number_to_words(21), "twenty-one");
        assert_eq!(number_to_words(100), "one hundred");
        assert_eq!(number_to_words(105), "one hundred and five");
        assert_eq!(number_to_words(6012), "six thousand and twelve");
        assert_eq!(number_to_words(1_000_000), "one million");
    }

    #[test]
    fn ten_digits() {
        assert_eq!(
            number_to_words(9_321_673_878),
            "nine billion three hundred and twenty-one million six hundred and seventy-three thousand eight hundred and seventy-eight"
        );
    }

    #[test]
    fn fallback() {
        assert_eq!(number_to_words(WORDS_LIMIT), "one zero zero zero zero zero zero zero zero zero zero zero zero");
        assert_eq!(digits_to_words("0042"), "zero zero four two");
        assert_eq!(read_digit_run("007"), "zero zero seven");
        assert_eq!(read_digit_run("0"), "zero");
    }
}
