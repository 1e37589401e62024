//! Word-list lookup used to choose among split candidates.

use std::collections::HashSet;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rules::{RuleSet, SplitCandidate, SplitError};
use crate::script;

const BUNDLED: &str = include_str!("../data/lexicon.txt");

/// How many parts of a candidate the lexicon knows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Tier {
    Both = 1,
    One = 2,
    Neither = 3,
}

impl From<Tier> for u8 {
    fn from(t: Tier) -> u8 {
        t as u8
    }
}

impl TryFrom<u8> for Tier {
    type Error = String;

    fn try_from(n: u8) -> Result<Self, Self::Error> {
        match n {
            1 => Ok(Tier::Both),
            2 => Ok(Tier::One),
            3 => Ok(Tier::Neither),
            _ => Err(format!("tier out of range: {n}")),
        }
    }
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", *self as u8)
    }
}

/// A skipped input line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineDiagnostic {
    pub line: usize,
    pub text: String,
    pub reason: String,
}

impl fmt::Display for LineDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {} ({:?})", self.line, self.reason, self.text)
    }
}

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("cannot read {path}: {source}")]
    FileUnreadable {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0} contains no valid entries")]
    EmptyLexicon(String),
}

#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    words: HashSet<String>,
    source: String,
}

impl Lexicon {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The word list shipped with the crate.
    pub fn bundled() -> Self {
        Self::parse(BUNDLED, "<bundled>")
            .expect("bundled lexicon is valid")
            .0
    }

    /// Builds a lexicon from already-trusted words; invalid ones are dropped.
    pub fn from_words<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let words = words
            .into_iter()
            .map(|w| script::normalize(w.as_ref()))
            .filter(|w| script::is_devanagari_word(w))
            .collect();
        Lexicon {
            words,
            source: "<memory>".to_string(),
        }
    }

    pub fn load(path: impl AsRef<Path>) -> Result<(Self, Vec<LineDiagnostic>), LexiconError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| LexiconError::FileUnreadable {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text, &path.display().to_string())
    }

    /// Parses a newline-delimited word list with `#` comment lines.
    pub fn parse(text: &str, source: &str) -> Result<(Self, Vec<LineDiagnostic>), LexiconError> {
        let mut words = HashSet::new();
        let mut skipped = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let word = script::normalize(line);
            if script::is_devanagari_word(&word) {
                words.insert(word);
            } else {
                skipped.push(LineDiagnostic {
                    line: i + 1,
                    text: line.to_string(),
                    reason: "not a Devanagari word".to_string(),
                });
            }
        }
        if words.is_empty() {
            return Err(LexiconError::EmptyLexicon(source.to_string()));
        }
        let lexicon = Lexicon {
            words,
            source: source.to_string(),
        };
        Ok((lexicon, skipped))
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn insert(&mut self, word: &str) -> bool {
        let word = script::normalize(word);
        script::is_devanagari_word(&word) && self.words.insert(word)
    }

    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.words.iter().map(String::as_str)
    }

    pub fn tier(&self, cand: &SplitCandidate) -> Tier {
        match (self.contains(&cand.left), self.contains(&cand.right)) {
            (true, true) => Tier::Both,
            (false, false) => Tier::Neither,
            _ => Tier::One,
        }
    }
}

/// Candidates sorted by (tier, rule, trigger offset, variant order).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankedCandidates {
    pub candidates: Vec<SplitCandidate>,
}

impl RankedCandidates {
    pub fn best(&self) -> Option<&SplitCandidate> {
        self.candidates.first()
    }
}

/// Assigns tiers and sorts. Input must be in `split_all` order; the sort is
/// stable, so variant order survives within a (rule, offset) group.
pub fn rank(mut candidates: Vec<SplitCandidate>, lexicon: &Lexicon) -> RankedCandidates {
    for c in &mut candidates {
        c.tier = Some(lexicon.tier(c));
    }
    candidates.sort_by_key(|c| (c.tier, c.rule, c.trigger_offset));
    RankedCandidates { candidates }
}

pub fn ranked_splits(word: &str, lexicon: &Lexicon) -> Result<RankedCandidates, SplitError> {
    Ok(rank(RuleSet::standard().split_all(word)?, lexicon))
}

pub fn best_split(word: &str, lexicon: &Lexicon) -> Result<Option<SplitCandidate>, SplitError> {
    Ok(ranked_splits(word, lexicon)?.candidates.into_iter().next())
}
