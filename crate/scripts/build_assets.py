#!/usr/bin/env python3
"""Regenerates the bundled dictionaries under crates/core/assets.

Sources:
  * emoji names: CLDR short names from the `emoji` package
  * word list: wordfreq English frequency data (decoded with wordfreq_msgpack.py)
  * contractions, punctuation names, profanity stems: maintained in this file

Run from the repository root: python3 scripts/build_assets.py
"""
import json
import os
import re
import sys
import unicodedata

import emoji

sys.path.insert(0, os.path.dirname(__file__))
import wordfreq_msgpack  # noqa: E402

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "assets")

ONES = ["zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
        "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen",
        "seventeen", "eighteen", "nineteen"]
TENS = ["", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"]
ORDINALS = {"1st": "first", "2nd": "second", "3rd": "third"}

CONTRACTIONS = {
    "2day": "today", "2moro": "tomorrow", "2mrw": "tomorrow", "2morrow": "tomorrow",
    "2nite": "tonight", "2night": "tonight", "4ever": "forever", "b4": "before",
    "gr8": "great", "l8r": "later", "l8": "late", "m8": "mate", "w8": "wait",
    "str8": "straight", "sk8": "skate", "h8": "hate", "any1": "anyone", "some1": "someone",
    "no1": "no one", "every1": "everyone", "2u": "to you", "4u": "for you",
    "msg": "message", "msgs": "messages", "messg": "message", "mesg": "message",
    "hv": "have", "hav": "have", "u": "you", "ur": "your", "urs": "yours", "r": "are",
    "n": "and", "nd": "and", "y": "why", "c": "see", "k": "okay", "kk": "okay",
    "fb": "facebook", "insta": "instagram", "yt": "youtube", "wa": "whatsapp",
    "plz": "please", "pls": "please", "plss": "please", "chk": "check", "chck": "check",
    "knw": "know", "kno": "know", "dunno": "do not know", "wanna": "want to",
    "gonna": "going to", "gotta": "got to", "lemme": "let me", "gimme": "give me",
    "thx": "thanks", "thnx": "thanks", "thanx": "thanks", "tnx": "thanks", "ty": "thank you",
    "tq": "thank you", "tku": "thank you", "np": "no problem", "nvm": "never mind",
    "btw": "by the way", "brb": "be right back", "lol": "laughing out loud",
    "rofl": "rolling on the floor laughing", "omg": "oh my god", "idk": "i do not know",
    "imo": "in my opinion", "imho": "in my humble opinion", "tbh": "to be honest",
    "afaik": "as far as i know", "asap": "as soon as possible", "fyi": "for your information",
    "ttyl": "talk to you later", "gn": "good night", "gm": "good morning",
    "hbd": "happy birthday", "bday": "birthday", "bf": "boyfriend", "gf": "girlfriend",
    "bro": "brother", "sis": "sister", "frnd": "friend", "frnds": "friends",
    "pic": "picture", "pics": "pictures", "txt": "text", "tmrw": "tomorrow",
    "tmr": "tomorrow", "tom": "tomorrow", "yday": "yesterday", "wk": "week", "wkend": "weekend",
    "abt": "about", "bcoz": "because", "bcz": "because", "bc": "because", "coz": "because",
    "cuz": "because", "cos": "because", "becoz": "because", "cn": "can",
    "cud": "could", "shud": "should", "wud": "would", "dat": "that", "dis": "this",
    "der": "there", "wat": "what", "wht": "what", "wen": "when", "whr": "where",
    "hw": "how", "jst": "just", "nw": "now", "gud": "good", "gd": "good", "luv": "love",
    "lv": "love", "ppl": "people", "pple": "people", "srsly": "seriously", "sry": "sorry",
    "sorri": "sorry", "okk": "okay", "okie": "okay", "ya": "yeah",
    "yup": "yes", "yep": "yes", "nope": "no", "wid": "with", "wit": "with", "w": "with",
    "wo": "without", "lil": "little", "prob": "probably", "probs": "probably",
    "def": "definitely", "deff": "definitely", "info": "information", "ans": "answer",
    "qn": "question", "qs": "questions", "pwd": "password", "acc": "account",
    "approx": "approximately", "govt": "government", "dept": "department",
    "mgr": "manager", "mins": "minutes", "min": "minute", "hr": "hour", "hrs": "hours",
    "sec": "second", "secs": "seconds", "dont": "do not", "cant": "can not",
    "wont": "will not", "didnt": "did not", "doesnt": "does not", "isnt": "is not",
    "wasnt": "was not", "arent": "are not", "werent": "were not", "havent": "have not",
    "hasnt": "has not", "couldnt": "could not", "wouldnt": "would not",
    "shouldnt": "should not", "im": "i am", "ive": "i have", "youre": "you are",
    "theyre": "they are", "youve": "you have", "theyve": "they have", "thats": "that is",
    "whats": "what is", "lets": "let us", "ain": "am not", "aint": "am not",
}

PUNCTUATION_NAMES = {
    "!": "exclamation mark", "\"": "double quote", "#": "hash symbol", "$": "dollar sign",
    "%": "percentage symbol", "&": "ampersand sign", "'": "apostrophe",
    "(": "opening bracket", ")": "closing bracket", "*": "asterisk", "+": "plus sign",
    ",": "comma", "-": "hyphen", ".": "full stop", "/": "slash", ":": "colon",
    ";": "semicolon", "<": "less than sign", "=": "equals sign", ">": "greater than sign",
    "?": "question mark", "@": "at symbol", "[": "opening square bracket",
    "\\": "backslash", "]": "closing square bracket", "^": "caret", "_": "underscore",
    "`": "backtick", "{": "opening curly bracket", "|": "vertical bar",
    "}": "closing curly bracket", "~": "tilde", "…": "ellipsis",
    "“": "opening quote", "”": "closing quote", "‘": "opening single quote",
    "’": "closing single quote", "–": "en dash", "—": "em dash",
    "€": "euro sign", "£": "pound sign", "₹": "rupee sign",
    "©": "copyright sign", "®": "registered sign", "°": "degree sign",
    "•": "bullet", "§": "section sign", "¶": "pilcrow",
}

# Stems are matched as whole words only; each stem is expanded with the
# suffixes that form real inflections or compounds.
PROFANITY_STEMS = {
    "fuck": ["", "s", "ed", "er", "ers", "ing", "in", "ings", "face", "head", "heads", "hole",
             "wit", "wits", "tard", "up", "off", "boy", "buddy", "nut", "wad", "ass", "stick"],
    "fck": ["", "s", "ed", "er", "ing", "in"], "fuk": ["", "s", "ed", "er", "ing", "in", "ker", "king"],
    "fuq": ["", "ing"], "phuck": ["", "ed", "er", "ing"], "fcuk": ["", "ed", "er", "ing"],
    "motherfuck": ["", "er", "ers", "ing", "in", "a", "as"], "mothafuck": ["", "a", "as", "er", "ers", "ing", "in"],
    "muthafuck": ["a", "as", "er", "ers", "in", "ing"],
    "shit": ["", "s", "ty", "tier", "tiest", "ted", "ting", "head", "heads", "hole", "holes", "face",
             "faced", "bag", "box", "show", "storm", "load", "list", "hous", "house", "stain",
             "ter", "ters", "fuck", "fest", "bird", "bull"],
    "bullshit": ["", "s", "ted", "ter", "ting"], "horseshit": [""], "batshit": [""], "dipshit": ["", "s"],
    "shite": ["", "s"], "sh1t": ["", "s"], "shyt": [""], "shiz": ["", "nit"],
    "bitch": ["", "es", "y", "ier", "iest", "ing", "ed", "in", "ass", "face", "fest", "slap"],
    "biatch": ["", "es"], "beyotch": [""],
    "bastard": ["", "s", "ised", "ized", "y"],
    "asshole": ["", "s", "ry"], "arsehole": ["", "s"], "ass": ["", "es", "hat", "hats", "hole", "holes",
             "wipe", "wipes", "clown", "face", "head", "kisser", "kissers", "lick", "licker", "monkey", "wad"],
    "jackass": ["", "es"], "dumbass": ["", "es"], "smartass": ["", "es"], "badass": [], "fatass": ["", "es"],
    "arse": ["", "s", "wipe", "hole", "holes", "d", "face"],
    "cunt": ["", "s", "y", "ing", "face", "head", "licker"],
    "twat": ["", "s", "ty", "face", "waffle"],
    "wank": ["", "s", "ed", "er", "ers", "ing", "y", "stain"], "wanker": ["", "s"],
    "dickhead": ["", "s"], "dickface": [""], "dickwad": ["", "s"], "dickweed": ["", "s"],
    "cocksuck": ["", "er", "ers", "ing", "ed", "s"], "cockhead": [""], "cockface": [""],
    "prick": ["", "s"], "piss": ["", "ed", "es", "er", "ers", "ing", "off", "head", "pot", "take", "y"],
    "pissant": ["", "s"],
    "whore": ["", "s", "d", "house", "face", "monger"], "slut": ["", "s", "ty", "tier", "tish"],
    "skank": ["", "s", "y"], "douche": ["", "s", "bag", "bags", "y", "canoe", "nozzle"],
    "damn": ["", "ed", "it", "ation"], "goddamn": ["", "ed", "it"], "goddammit": [""], "dammit": [""],
    "crap": ["", "s", "py", "pier", "piest", "ped", "hole", "head"],
    "bollock": ["s", "ing", "ed"], "bugger": ["", "s", "ed", "ing", "y"],
    "bloody": [], "tosser": ["", "s"], "knobhead": ["", "s"], "knobend": ["", "s"], "bellend": ["", "s"],
    "minge": ["", "s"], "minger": ["", "s"], "munter": ["", "s"], "pillock": ["", "s"], "plonker": ["", "s"],
    "scumbag": ["", "s"], "shithead": [], "twatwaffle": [],
    "nigger": ["", "s"], "nigga": ["", "s", "z", "h"], "faggot": ["", "s", "y"], "fag": ["", "s", "got", "gy"],
    "dyke": ["", "s"], "retard": ["", "s", "ed"], "spastic": [], "spaz": ["", "zy"], "tranny": [],
    "chink": ["", "s"], "gook": ["", "s"], "kike": ["", "s"], "spic": ["", "s"], "wetback": ["", "s"],
    "raghead": ["", "s"], "towelhead": ["", "s"], "coon": [], "paki": ["", "s"], "wop": ["", "s"],
    "dildo": ["", "s"], "jizz": ["", "ed", "ing"], "jism": [""], "cum": [], "cumshot": ["", "s"],
    "cumbucket": [""], "cumdumpster": [""], "clit": ["", "s"], "boner": ["", "s"], "titty": [],
    "titties": [], "tits": [], "boobs": [], "blowjob": ["", "s"], "handjob": ["", "s"],
    "rimjob": ["", "s"], "pussy": [], "pussies": [], "schlong": ["", "s"], "wtf": [], "stfu": [],
    "gtfo": [], "milf": ["", "s"], "motherfucker": [], "fuckwit": [], "shitfaced": [],
    "effing": [], "frigging": [], "fricking": [], "feck": ["", "ing", "in", "er"],
    "bastards": [], "sonofabitch": [], "scrote": ["", "s"], "turd": ["", "s"], "numbnuts": [""],
    "nutsack": ["", "s"], "ballsack": ["", "s"], "knobjockey": [""], "thundercunt": [""],
}

KEYCAP_WORDS = {str(d): ONES[d] for d in range(10)}
KEYCAP_WORDS.update({"#": "hash", "*": "star"})
LETTER_EMOJI = {"\U0001F170": "a", "\U0001F171": "b", "\U0001F17E": "o", "\U0001F17F": "p",
                "Ⓜ": "m", "ℹ": "i"}

# Hand-ordered popularity head (most used first); everything else falls back
# to a version-based tail score.
POPULAR = (
    "😂 ❤️ ✨ 🤣 👍 😭 🙏 😘 🥰 😍 😊 🎉 😁 💕 🥺 😅 🔥 ☺️ 🤦 ♥️ 🤷 🙄 😆 🤗 😉 🎂 🤔 👏 🙂 "
    "😳 🥳 😎 👌 💜 😔 💪 💖 👀 😋 😏 😢 👉 💗 😩 💯 🌹 💞 🎈 💙 😃 😡 💐 😜 🙈 🤞 😄 🤤 🙌 "
    "🤪 ❣️ 😀 💋 💀 👇 💔 😌 💓 🤩 🙃 😬 😱 😴 🤭 😐 🌞 😒 😇 🌸 😈 🎶 ✌️ 🎊 🥵 😞 💚 ☀️ 🖤 "
    "💰 😚 👑 🎁 💥 🙋 ☹️ 😑 🥴 👈 💩 ✅ 👋 🤮 😤 🤢 🌟 ❗ 😥 🌈 💛 😝 😫 😲 🖕 ‼️ 🔴 🌻 🤯 "
    "💃 👊 🤬 🏃 😕 👁️ ⚡ ☕ 🍀 💦 🦋 🤨 🌺 😹 🤘 🌷 💝 💤 🤝 🐰 😓 💘 🍻 😟 😣 🧐 😠 🤠 "
    "😻 🌙 😛 🤙 🙊 🧡 🤡 🤫 🌼 🥂 😷 🤓 🥶 😶 😖 🎵 🚶 😙 🍆 🤑 🗣️ 😗 🍕 ☁️ 🕺"
).split()
POPULARITY_OVERRIDES = {"🤣": 5000, "⭐": 600, "🏠": 500}


def number_words(n):
    if n < 20:
        return ONES[n]
    if n < 100:
        return TENS[n // 10] + ("" if n % 10 == 0 else " " + ONES[n % 10])
    return ONES[n // 100] + " hundred" + ("" if n % 100 == 0 else " " + number_words(n % 100))


def fold(s):
    s = unicodedata.normalize("NFKD", s)
    return "".join(c for c in s if not unicodedata.combining(c))


def clean_name(raw):
    name = raw.strip(":").replace("U.S.", "United States").replace("_", " ").replace("-", " ")
    for k, v in ORDINALS.items():
        name = name.replace(k, v)
    name = fold(name).lower().replace("’", "").replace("'", "")
    name = re.sub(r"\d+", lambda m: number_words(int(m.group())), name)
    name = re.sub(r"[^a-z ]", " ", name)
    return " ".join(name.split())


def strip_variation(s):
    return s.replace("️", "").replace("︎", "")


def has_skin_tone(s):
    return any(0x1F3FB <= ord(c) <= 0x1F3FF for c in s)


def is_flag(s):
    first = ord(s[0])
    return 0x1F1E6 <= first <= 0x1F1FF or (first == 0x1F3F4 and len(s) > 2 and 0xE0020 <= ord(s[1]) <= 0xE007F)


def build_emoji():
    popular = {strip_variation(e): i for i, e in enumerate(POPULAR)}
    anchor = popular[strip_variation("🤣")]
    table = {}
    seen = set()
    for e, data in emoji.EMOJI_DATA.items():
        if data["status"] != emoji.STATUS["fully_qualified"] or has_skin_tone(e):
            continue
        key = strip_variation(e)
        if key in seen:
            continue
        seen.add(key)
        name = clean_name(data["en"])
        if is_flag(e):
            name = "flag " + name
        if key in popular:
            rank = 5000 - (popular[key] - anchor) * 25
        else:
            rank = max(1, int(100 - 5 * float(data["E"])))
        rank = POPULARITY_OVERRIDES.get(e, rank)
        record = {"name": name, "rank": rank, "informational": False}
        if len(key) == 2 and key[1] == "⃣":
            record["informational"] = True
            record["word"] = KEYCAP_WORDS[key[0]]
            record["name"] = "keycap " + record["word"]
        elif key == "\U0001F51F":
            record["informational"] = True
            record["word"] = "ten"
        elif key in LETTER_EMOJI:
            record["informational"] = True
            record["word"] = LETTER_EMOJI[key]
        table[e] = record
    for e in POPULAR + list(POPULARITY_OVERRIDES):
        assert e in table, e
    return table


# words produced when reading entities aloud
ENTITY_VOCABULARY = """
a m p at dot link to email hashtag percent point minus plus by oh o clock digit number driving licence
feet foot inches inch dollar dollars rupee rupees euro euros pound pounds cent cents paisa paise penny pence
january february march april may june july august september october november december
"""


def collapse(w):
    return re.sub(r"(.)\1+", r"\1", w)


def build_wordlist(required):
    raw = wordfreq_msgpack.words("en", "large")
    rank = {}
    for i, w in enumerate(raw[:70000]):
        if re.fullmatch(r"[a-z]+", w) and w not in rank:
            rank[w] = i
    words = set()
    for w, r in rank.items():
        if re.search(r"(.)\1\1", w) or w in CONTRACTIONS:
            continue
        # elongated chat spellings ("yess", "soo") hide behind a much more
        # frequent single-letter variant
        elongated = False
        for m in re.finditer(r"(.)\1", w):
            v = w[: m.start()] + w[m.start() + 1:]
            if v in rank and r > 3000 and rank[v] * 10 < r:
                elongated = True
        if not elongated:
            words.add(w)
        if len(words) >= 60000:
            break
    words |= required
    return words, rank


def main():
    emoji_table = build_emoji()
    profanity = sorted({stem + suf for stem, sufs in PROFANITY_STEMS.items() for suf in (sufs or [""])})

    fixed_words = set()
    for rec in emoji_table.values():
        fixed_words.update(rec["name"].split())
        if "word" in rec:
            fixed_words.add(rec["word"])
    for v in list(CONTRACTIONS.values()) + list(PUNCTUATION_NAMES.values()):
        fixed_words.update(v.split())
    fixed_words.update(ONES + TENS[2:] + ["hundred", "thousand", "million", "billion", "and"])
    fixed_words.update("beep with emoji emojis some other punctuations".split())
    fixed_words.update(ENTITY_VOCABULARY.split())
    fixed_words.discard("")

    clash = fixed_words & set(CONTRACTIONS)
    if clash:
        sys.exit(f"output words that are also contraction keys: {sorted(clash)}")
    profane = set(profanity) & fixed_words
    if profane:
        sys.exit(f"profanity entries that appear in output vocabulary: {sorted(profane)}")

    words, rank = build_wordlist(fixed_words | set(profanity))

    profanity_set = set(profanity)
    collapsed = {}
    for w in sorted(words, key=lambda w: rank.get(w, 10**9)):
        if rank.get(w, 10**9) > 25000:
            continue
        c = collapse(w)
        if c != w and w not in profanity_set and c not in words and c not in CONTRACTIONS and c not in collapsed:
            collapsed[c] = w

    os.makedirs(OUT, exist_ok=True)

    def dump(name, obj):
        with open(os.path.join(OUT, name), "w", encoding="utf-8") as f:
            json.dump(obj, f, ensure_ascii=False, indent=0, sort_keys=True)
            f.write("\n")

    dump("emoji_meta.json", emoji_table)
    dump("contractions.json", CONTRACTIONS)
    dump("collapsed_words.json", collapsed)
    dump("punctuation_names.json", PUNCTUATION_NAMES)
    with open(os.path.join(OUT, "wordlist.txt"), "w") as f:
        f.write("# English word list, one lowercase word per line\n")
        f.write("\n".join(sorted(words)) + "\n")
    with open(os.path.join(OUT, "profanity.txt"), "w") as f:
        f.write("# whole-word profanity list, one lowercase entry per line\n")
        f.write("\n".join(profanity) + "\n")
    print(f"emoji={len(emoji_table)} contractions={len(CONTRACTIONS)} collapsed={len(collapsed)} "
          f"words={len(words)} profanity={len(profanity)}")


if __name__ == "__main__":
    main()
