//! Devanagari codepoint classes, normalization, and akshara segmentation.
//!
//! Everything downstream (rule triggers, candidate validation, lexicon
//! membership) sees text only after [`normalize`] and reasons about it in
//! terms of the [`Akshara`] units produced by [`segment`].

use std::ops::Range;
use std::sync::LazyLock;

use serde::Serialize;
use thiserror::Error;
use unicode_normalization::UnicodeNormalization;

pub const VIRAMA: char = '\u{094D}';
pub const VISARGA: char = '\u{0903}';
pub const ANUSVARA: char = '\u{0902}';
pub const CANDRABINDU: char = '\u{0901}';
pub const NUKTA: char = '\u{093C}';

const ZWNJ: char = '\u{200C}';
const ZWJ: char = '\u{200D}';

const BLOCK: Range<u32> = 0x0900..0x0980;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CharClass {
    IndependentVowel,
    Consonant,
    DependentVowelSign,
    Virama,
    Visarga,
    AnusvaraOrCandrabindu,
    Nukta,
    Digit,
    Other,
}

/// Returns the class of a single codepoint. Total: anything outside the
/// Devanagari block is [`CharClass::Other`].
pub fn classify(c: char) -> CharClass {
    use CharClass::*;
    match c as u32 {
        0x0900..=0x0902 => AnusvaraOrCandrabindu,
        0x0903 => Visarga,
        0x0904..=0x0914 => IndependentVowel,
        0x0915..=0x0939 => Consonant,
        0x093A | 0x093B => DependentVowelSign,
        0x093C => Nukta,
        0x093D => Other, // avagraha
        0x093E..=0x094C => DependentVowelSign,
        0x094D => Virama,
        0x094E | 0x094F => DependentVowelSign,
        0x0950..=0x0954 => Other, // om and accent marks
        0x0955..=0x0957 => DependentVowelSign,
        0x0958..=0x095F => Consonant,
        0x0960 | 0x0961 => IndependentVowel,
        0x0962 | 0x0963 => DependentVowelSign,
        0x0964 | 0x0965 => Other, // dandas
        0x0966..=0x096F => Digit,
        0x0970 | 0x0971 => Other,
        0x0972..=0x0977 => IndependentVowel,
        0x0978..=0x097F => Consonant,
        _ => Other,
    }
}

/// Precomposed consonant + nukta letters (क़ ख़ … and ऩ ऱ ऴ).
pub fn is_nukta_form(c: char) -> bool {
    matches!(c as u32, 0x0929 | 0x0931 | 0x0934 | 0x0958..=0x095F)
}

pub fn in_devanagari_block(c: char) -> bool {
    BLOCK.contains(&(c as u32))
}

/// The Hindi letter inventory: 13 swar, 33 vyanjan, 13 matra.
///
/// The swar list includes the two conventional syllables अं and अः, so it
/// holds strings rather than codepoints. The matra list counts the three
/// modifiers ं ः ँ alongside the ten vowel signs.
#[derive(Debug, Clone)]
pub struct ScriptTable {
    pub swar: Vec<&'static str>,
    pub vyanjan: Vec<char>,
    pub matra: Vec<char>,
    pub virama: char,
    pub visarga: char,
}

static STANDARD: LazyLock<ScriptTable> = LazyLock::new(|| ScriptTable {
    swar: vec![
        "अ", "आ", "इ", "ई", "उ", "ऊ", "ऋ", "ए", "ऐ", "ओ", "औ", "अं", "अः",
    ],
    vyanjan: "कखगघङचछजझञटठडढणतथदधनपफबभमयरलवशषसह".chars().collect(),
    matra: "ािीुूृेैोौंःँ".chars().collect(),
    virama: VIRAMA,
    visarga: VISARGA,
});

impl ScriptTable {
    pub fn standard() -> &'static ScriptTable {
        &STANDARD
    }

    pub fn is_vyanjan(&self, c: char) -> bool {
        self.vyanjan.contains(&c)
    }

    pub fn is_matra(&self, c: char) -> bool {
        self.matra.contains(&c)
    }

    pub fn is_swar(&self, s: &str) -> bool {
        self.swar.contains(&s)
    }
}

/// NFC-normalizes `text`, drops ZWJ/ZWNJ and trims surrounding whitespace.
pub fn normalize(text: &str) -> String {
    let stripped: String = text.chars().filter(|&c| c != ZWJ && c != ZWNJ).collect();
    stripped.nfc().collect::<String>().trim().to_string()
}

/// True iff the normalized text is non-empty and lies entirely inside the
/// Devanagari block.
pub fn is_devanagari_word(text: &str) -> bool {
    let norm = normalize(text);
    !norm.is_empty() && norm.chars().all(in_devanagari_block)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScriptError {
    #[error("non-Devanagari character {ch:?} at offset {offset}")]
    NonDevanagariInput { offset: usize, ch: char },
    #[error("malformed sequence at offset {offset}: {reason}")]
    MalformedSequence { offset: usize, reason: &'static str },
    #[error("empty input")]
    Empty,
}

/// A consonant letter, optionally carrying a nukta.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Consonant {
    pub letter: char,
    pub nukta: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Base {
    Consonant(Consonant),
    Vowel(char),
}

/// One orthographic syllable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Akshara {
    /// Half letters (each followed by a virama in the text) before the base.
    pub cluster: Vec<Consonant>,
    pub base: Base,
    pub vowel_sign: Option<char>,
    pub modifier: Option<char>,
    /// The base consonant carries a virama with nothing following in the
    /// syllable (word-final halant).
    pub halant: bool,
    /// Codepoint range in the source word.
    pub span: Range<usize>,
}

impl Akshara {
    /// Codepoint offset of the vowel sign, if any.
    pub fn matra_offset(&self) -> Option<usize> {
        self.vowel_sign?;
        let modifier = usize::from(self.modifier.is_some());
        Some(self.span.end - 1 - modifier)
    }

    pub fn base_consonant(&self) -> Option<Consonant> {
        match self.base {
            Base::Consonant(c) => Some(c),
            Base::Vowel(_) => None,
        }
    }
}

/// Splits a normalized word into aksharas.
///
/// Rejects characters outside the Devanagari block, in-block characters
/// that are not letters or signs (digits, dandas, avagraha), and sign
/// sequences that cannot occur in well-formed text.
pub fn segment(word: &str) -> Result<Vec<Akshara>, ScriptError> {
    let chars: Vec<char> = word.chars().collect();
    segment_chars(&chars)
}

pub(crate) fn segment_chars(chars: &[char]) -> Result<Vec<Akshara>, ScriptError> {
    if chars.is_empty() {
        return Err(ScriptError::Empty);
    }
    if let Some((offset, &ch)) = chars.iter().enumerate().find(|(_, &c)| !in_devanagari_block(c)) {
        return Err(ScriptError::NonDevanagariInput { offset, ch });
    }

    let malformed = |offset, reason| Err(ScriptError::MalformedSequence { offset, reason });
    let class_at = |i: usize| chars.get(i).map(|&c| classify(c));

    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let start = i;
        let mut cluster = Vec::new();
        let mut halant = false;
        let mut vowel_sign = None;

        let base = match classify(chars[i]) {
            CharClass::IndependentVowel => {
                i += 1;
                Base::Vowel(chars[start])
            }
            CharClass::Consonant => loop {
                let letter = chars[i];
                i += 1;
                let mut nukta = is_nukta_form(letter);
                if class_at(i) == Some(CharClass::Nukta) {
                    nukta = true;
                    i += 1;
                }
                let cons = Consonant { letter, nukta };
                if class_at(i) != Some(CharClass::Virama) {
                    break Base::Consonant(cons);
                }
                i += 1;
                if class_at(i) == Some(CharClass::Consonant) {
                    cluster.push(cons);
                    continue;
                }
                halant = true;
                break Base::Consonant(cons);
            },
            CharClass::DependentVowelSign => return malformed(i, "vowel sign without a consonant"),
            CharClass::Virama => return malformed(i, "virama without a consonant"),
            CharClass::Nukta => return malformed(i, "nukta without a consonant"),
            CharClass::Visarga | CharClass::AnusvaraOrCandrabindu => {
                return malformed(i, "modifier without a base letter")
            }
            CharClass::Digit => return malformed(i, "digit inside a word"),
            CharClass::Other => return malformed(i, "non-letter character"),
        };

        if !halant
            && matches!(base, Base::Consonant(_))
            && class_at(i) == Some(CharClass::DependentVowelSign)
        {
            vowel_sign = Some(chars[i]);
            i += 1;
        }
        let modifier = match class_at(i) {
            Some(CharClass::Visarga | CharClass::AnusvaraOrCandrabindu) if !halant => {
                i += 1;
                Some(chars[i - 1])
            }
            _ => None,
        };

        out.push(Akshara {
            cluster,
            base,
            vowel_sign,
            modifier,
            halant,
            span: start..i,
        });
    }
    Ok(out)
}

/// A word that segments cleanly and does not end in a virama.
pub fn is_well_formed_word(word: &str) -> bool {
    !word.ends_with(VIRAMA) && segment(word).is_ok()
}
