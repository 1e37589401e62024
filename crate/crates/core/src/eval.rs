//! Gold-corpus evaluation: candidate recall and top-1 accuracy.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use crate::lexicon::{rank, Lexicon, LineDiagnostic};
use crate::rules::{RuleId, RuleSet, SplitCandidate};
use crate::script;

/// One row of a gold corpus: a compound and its reference split.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoldEntry {
    pub compound: String,
    pub left: String,
    pub right: String,
    pub rule_hint: Option<RuleId>,
}

impl GoldEntry {
    pub fn matches(&self, cand: &SplitCandidate) -> bool {
        cand.left == self.left && cand.right == self.right
    }
}

#[derive(Debug, Error)]
pub enum GoldError {
    #[error("cannot read {path}: {source}")]
    FileUnreadable {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0} contains no valid gold rows")]
    EmptyCorpus(String),
}

pub fn load_gold(path: impl AsRef<Path>) -> Result<(Vec<GoldEntry>, Vec<LineDiagnostic>), GoldError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| GoldError::FileUnreadable {
        path: path.display().to_string(),
        source,
    })?;
    parse_gold(&text, &path.display().to_string())
}

/// Parses `compound TAB left TAB right [TAB rule]` rows; `#` starts a comment line.
pub fn parse_gold(text: &str, source: &str) -> Result<(Vec<GoldEntry>, Vec<LineDiagnostic>), GoldError> {
    let mut entries = Vec::new();
    let mut skipped = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        match parse_row(line) {
            Ok(entry) => entries.push(entry),
            Err(reason) => skipped.push(LineDiagnostic {
                line: i + 1,
                text: line.to_string(),
                reason,
            }),
        }
    }
    if entries.is_empty() {
        return Err(GoldError::EmptyCorpus(source.to_string()));
    }
    Ok((entries, skipped))
}

fn parse_row(line: &str) -> Result<GoldEntry, String> {
    let fields: Vec<&str> = line.split('\t').collect();
    if !(3..=4).contains(&fields.len()) {
        return Err(format!("expected 3 or 4 tab-separated fields, found {}", fields.len()));
    }
    let words: Vec<String> = fields[..3].iter().map(|f| script::normalize(f)).collect();
    if let Some(bad) = words.iter().find(|w| !script::is_devanagari_word(w)) {
        return Err(format!("not a Devanagari word: {bad:?}"));
    }
    let [compound, left, right]: [String; 3] = words.try_into().unwrap();
    if compound == left || compound == right {
        return Err("compound equals one of its parts".to_string());
    }
    let rule_hint = match fields.get(3).map(|f| f.trim()) {
        None | Some("") => None,
        Some(id) => Some(id.parse::<RuleId>().map_err(|e| e.to_string())?),
    };
    Ok(GoldEntry {
        compound,
        left,
        right,
        rule_hint,
    })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct RuleTally {
    pub total: usize,
    pub correct: usize,
}

/// A gold entry whose best split was not the reference one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub entry: GoldEntry,
    /// Ranked candidates, best first.
    pub candidates: Vec<SplitCandidate>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub total: usize,
    /// Entries whose gold pair is among the candidates.
    pub recalled: usize,
    /// Entries whose best split equals the gold pair.
    pub correct: usize,
    pub candidate_recall: f64,
    pub best_accuracy: f64,
    pub lexicon_size: usize,
    pub per_rule: BTreeMap<RuleId, RuleTally>,
    pub failures: Vec<Failure>,
}

struct Outcome {
    recalled: bool,
    correct: bool,
    candidates: Vec<SplitCandidate>,
    error: Option<String>,
}

fn score(entry: &GoldEntry, lexicon: &Lexicon) -> Outcome {
    match RuleSet::standard().split_all(&entry.compound) {
        Ok(cands) => {
            let recalled = cands.iter().any(|c| entry.matches(c));
            let ranked = rank(cands, lexicon).candidates;
            let correct = ranked.first().is_some_and(|c| entry.matches(c));
            Outcome {
                recalled,
                correct,
                candidates: ranked,
                error: None,
            }
        }
        Err(e) => Outcome {
            recalled: false,
            correct: false,
            candidates: Vec::new(),
            error: Some(e.to_string()),
        },
    }
}

pub fn evaluate(gold: &[GoldEntry], lexicon: &Lexicon) -> Report {
    let mut report = Report {
        total: gold.len(),
        recalled: 0,
        correct: 0,
        candidate_recall: 0.0,
        best_accuracy: 0.0,
        lexicon_size: lexicon.len(),
        per_rule: BTreeMap::new(),
        failures: Vec::new(),
    };
    for entry in gold {
        let outcome = score(entry, lexicon);
        report.recalled += usize::from(outcome.recalled);
        report.correct += usize::from(outcome.correct);
        if let Some(rule) = entry.rule_hint {
            let tally = report.per_rule.entry(rule).or_default();
            tally.total += 1;
            tally.correct += usize::from(outcome.correct);
        }
        if !outcome.correct {
            report.failures.push(Failure {
                entry: entry.clone(),
                candidates: outcome.candidates,
                error: outcome.error,
            });
        }
    }
    if report.total > 0 {
        report.candidate_recall = report.recalled as f64 / report.total as f64;
        report.best_accuracy = report.correct as f64 / report.total as f64;
    }
    report
}

impl Report {
    /// Summary rows: `key TAB value`, then one `rule TAB id TAB total TAB correct`
    /// row per rule seen in the rule hints.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "total\t{}", self.total);
        let _ = writeln!(out, "recalled\t{}", self.recalled);
        let _ = writeln!(out, "correct\t{}", self.correct);
        let _ = writeln!(out, "candidate_recall\t{:.4}", self.candidate_recall);
        let _ = writeln!(out, "best_accuracy\t{:.4}", self.best_accuracy);
        let _ = writeln!(out, "lexicon_size\t{}", self.lexicon_size);
        for (rule, t) in &self.per_rule {
            let _ = writeln!(out, "rule\t{rule}\t{}\t{}", t.total, t.correct);
        }
        out
    }
}
