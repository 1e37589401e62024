//! Output records and renderers shared by the `vicheda` subcommands.

use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use vicheda_core::script::in_devanagari_block;
use vicheda_core::{ranked_splits, Lexicon, Report, RuleId, RuleSet, ScriptError, SplitError, Tier};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Tsv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateRow {
    pub left: String,
    pub right: String,
    pub rule: RuleId,
    pub tier: Tier,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BestRow {
    pub left: String,
    pub right: String,
    pub rule: RuleId,
}

/// What the CLI prints for one input word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub input: String,
    pub candidates: Vec<CandidateRow>,
    pub best: Option<BestRow>,
}

impl OutputRecord {
    fn from_rows(input: String, candidates: Vec<CandidateRow>) -> Self {
        let best = candidates.first().map(|c| BestRow {
            left: c.left.clone(),
            right: c.right.clone(),
            rule: c.rule,
        });
        OutputRecord {
            input,
            candidates,
            best,
        }
    }
}

/// Ranks every split of `word`. Without `all`, only the best row is kept.
pub fn record_for(word: &str, lexicon: &Lexicon, all: bool) -> Result<OutputRecord, SplitError> {
    let input = vicheda_core::normalize(word);
    if input.is_empty() {
        return Err(ScriptError::Empty.into());
    }
    if let Some((offset, ch)) = input.chars().enumerate().find(|&(_, c)| !in_devanagari_block(c)) {
        return Err(ScriptError::NonDevanagariInput { offset, ch }.into());
    }
    let ranked = ranked_splits(&input, lexicon)?;
    let take = if all { usize::MAX } else { 1 };
    let rows = ranked
        .candidates
        .into_iter()
        .take(take)
        .map(|c| CandidateRow {
            left: c.left,
            right: c.right,
            rule: c.rule,
            tier: c.tier.unwrap_or(Tier::Neither),
        })
        .collect();
    Ok(OutputRecord::from_rows(input, rows))
}

/// Human-readable lines. `with_input` prefixes each line with the word.
pub fn render_text(rec: &OutputRecord, all: bool, with_input: bool) -> String {
    let prefix = if with_input {
        format!("{}: ", rec.input)
    } else {
        String::new()
    };
    let mut out = String::new();
    if rec.candidates.is_empty() {
        let _ = writeln!(out, "{prefix}no split found");
    } else if all {
        for c in &rec.candidates {
            let _ = writeln!(out, "{prefix}{} + {} [{}] tier {}", c.left, c.right, c.rule, c.tier);
        }
    } else if let Some(b) = &rec.best {
        let _ = writeln!(out, "{prefix}{} + {} [{}]", b.left, b.right, b.rule);
    }
    out
}

/// One row per candidate: `input rank left right rule tier`, rank counting
/// from 1. A record without candidates is a single row with rank 0 and
/// empty fields.
pub fn render_tsv(rec: &OutputRecord) -> String {
    let mut out = String::new();
    if rec.candidates.is_empty() {
        let _ = writeln!(out, "{}\t0\t\t\t\t", rec.input);
    }
    for (i, c) in rec.candidates.iter().enumerate() {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}",
            rec.input,
            i + 1,
            c.left,
            c.right,
            c.rule,
            c.tier
        );
    }
    out
}

pub fn render_json(rec: &OutputRecord) -> String {
    let mut line = serde_json::to_string(rec).expect("record serializes");
    line.push('\n');
    line
}

pub fn render(rec: &OutputRecord, format: Format, all: bool, with_input: bool) -> String {
    match format {
        Format::Text => render_text(rec, all, with_input),
        Format::Tsv => render_tsv(rec),
        Format::Json => render_json(rec),
    }
}

/// Inverse of [`render_tsv`] over any number of concatenated records.
pub fn parse_tsv(text: &str) -> Result<Vec<OutputRecord>> {
    let mut records: Vec<(String, Vec<CandidateRow>)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let fields: Vec<&str> = line.split('\t').collect();
        let [input, rank, left, right, rule, tier] = fields[..] else {
            bail!("line {}: expected 6 fields, found {}", i + 1, fields.len());
        };
        let rank: usize = rank.parse().with_context(|| format!("line {}: bad rank", i + 1))?;
        match rank {
            0 => records.push((input.to_string(), Vec::new())),
            1 => {
                records.push((input.to_string(), Vec::new()));
                records.last_mut().unwrap().1.push(parse_row(left, right, rule, tier, i)?);
            }
            n => {
                let Some((cur, rows)) = records.last_mut() else {
                    bail!("line {}: rank {n} without a preceding rank 1", i + 1);
                };
                if cur != input || rows.len() + 1 != n {
                    bail!("line {}: rank {n} out of sequence", i + 1);
                }
                rows.push(parse_row(left, right, rule, tier, i)?);
            }
        }
    }
    Ok(records
        .into_iter()
        .map(|(input, rows)| OutputRecord::from_rows(input, rows))
        .collect())
}

fn parse_row(left: &str, right: &str, rule: &str, tier: &str, i: usize) -> Result<CandidateRow> {
    let tier: u8 = tier.parse().with_context(|| format!("line {}: bad tier", i + 1))?;
    Ok(CandidateRow {
        left: left.to_string(),
        right: right.to_string(),
        rule: rule.parse().with_context(|| format!("line {}", i + 1))?,
        tier: Tier::try_from(tier).map_err(anyhow::Error::msg)?,
    })
}

/// The rule reference table, tab separated with a header row.
pub fn rules_table() -> String {
    let mut out = String::from("id\tcategory\ttrigger\tleft\tright\texample\n");
    for r in RuleSet::standard().rules() {
        let (compound, left, right) = r.example;
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{compound} → {left} + {right}",
            r.id,
            r.category,
            r.describe_trigger(),
            r.describe_left(),
            r.describe_right(),
        );
    }
    out
}

pub fn render_report_text(report: &Report) -> String {
    let mut out = String::new();
    let pct = |x: f64| x * 100.0;
    let _ = writeln!(out, "total             {}", report.total);
    let _ = writeln!(
        out,
        "candidate_recall  {:.1}% ({}/{})",
        pct(report.candidate_recall),
        report.recalled,
        report.total
    );
    let _ = writeln!(
        out,
        "best_accuracy     {:.1}% ({}/{})",
        pct(report.best_accuracy),
        report.correct,
        report.total
    );
    let _ = writeln!(out, "lexicon_size      {}", report.lexicon_size);
    if !report.per_rule.is_empty() {
        let _ = writeln!(out, "\nrule  total  correct  accuracy");
        for (rule, t) in &report.per_rule {
            let acc = if t.total == 0 { 0.0 } else { t.correct as f64 / t.total as f64 };
            let _ = writeln!(out, "{:<4}  {:>5}  {:>7}  {:>7.1}%", rule.to_string(), t.total, t.correct, pct(acc));
        }
    }
    out
}
