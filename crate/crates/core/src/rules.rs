//! The nine sandhi-vicheda rewrite rules, trigger search, candidate
//! generation and the inverse join.
//!
//! Rules R1–R7 are vowel (svara) rules keyed on a dependent vowel sign: the
//! sign is removed from the left word, optionally leaving a vowel ending
//! behind, and the right word starts with a restored independent vowel.
//! R8 drops the half च of a च्छ cluster. R9 restores a visarga in place of a
//! half sibilant.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lexicon::Tier;
use crate::script::{self, classify, Akshara, CharClass, ScriptError, NUKTA, VIRAMA, VISARGA};

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    R9,
}

impl RuleId {
    pub const ALL: [RuleId; 9] = [
        RuleId::R1,
        RuleId::R2,
        RuleId::R3,
        RuleId::R4,
        RuleId::R5,
        RuleId::R6,
        RuleId::R7,
        RuleId::R8,
        RuleId::R9,
    ];

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{}", self.index() + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown rule id {0:?}")]
pub struct ParseRuleIdError(String);

impl FromStr for RuleId {
    type Err = ParseRuleIdError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let n: usize = s
            .strip_prefix(['R', 'r'])
            .and_then(|n| n.parse().ok())
            .ok_or_else(|| ParseRuleIdError(s.to_string()))?;
        n.checked_sub(1)
            .and_then(|i| RuleId::ALL.get(i).copied())
            .ok_or_else(|| ParseRuleIdError(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    Svara,
    Vyanjana,
    Visarga,
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::Svara => "svara",
            Category::Vyanjana => "vyanjana",
            Category::Visarga => "visarga",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Trigger {
    /// A dependent vowel sign on a plain consonant.
    Matra(char),
    /// A half consonant (`half` + virama) followed by one of `following`.
    Cluster {
        half: char,
        following: &'static [char],
    },
}

/// How the left word ends once the trigger is undone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeftEnding {
    /// Consonant with its inherent vowel.
    Bare,
    /// Consonant plus this vowel sign.
    Sign(char),
    /// The half consonant is deleted.
    DropHalf,
    /// The half consonant becomes a visarga.
    Visarga,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RightInitial {
    /// The right word starts with this independent vowel.
    Vowel(char),
    /// The right word starts with the consonant that followed the half letter.
    Following,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriggerForm {
    pub trigger: Trigger,
    /// Left-word variants in generation order.
    pub left_endings: Vec<LeftEnding>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandhiRule {
    pub id: RuleId,
    pub category: Category,
    pub forms: Vec<TriggerForm>,
    pub right_initial: RightInitial,
    /// (compound, left, right)
    pub example: (&'static str, &'static str, &'static str),
}

impl SandhiRule {
    pub fn describe_trigger(&self) -> String {
        self.forms
            .iter()
            .map(|f| match &f.trigger {
                Trigger::Matra(m) => format!("◌{m}"),
                Trigger::Cluster { half, following } => {
                    let tail: Vec<String> = following.iter().map(char::to_string).collect();
                    format!("{half}{VIRAMA}+{}", tail.join("/"))
                }
            })
            .collect::<Vec<_>>()
            .join("; ")
    }

    pub fn describe_left(&self) -> String {
        self.forms
            .iter()
            .map(|f| {
                f.left_endings
                    .iter()
                    .map(|e| match (e, &f.trigger) {
                        (LeftEnding::Bare, _) => "C".to_string(),
                        (LeftEnding::Sign(s), _) => format!("C{s}"),
                        (LeftEnding::DropHalf, Trigger::Cluster { half, .. }) => {
                            format!("prefix (drop {half}{VIRAMA})")
                        }
                        (LeftEnding::DropHalf, _) => "prefix".to_string(),
                        (LeftEnding::Visarga, _) => format!("prefix + {VISARGA}"),
                    })
                    .collect::<Vec<_>>()
                    .join(" | ")
            })
            .fold(Vec::<String>::new(), |mut acc, s| {
                if !acc.contains(&s) {
                    acc.push(s);
                }
                acc
            })
            .join("; ")
    }

    pub fn describe_right(&self) -> String {
        match (self.right_initial, &self.forms[0].trigger) {
            (RightInitial::Vowel(v), _) => v.to_string(),
            (RightInitial::Following, Trigger::Cluster { following, .. })
                if self.forms.len() == 1 && following.len() == 1 =>
            {
                following[0].to_string()
            }
            (RightInitial::Following, _) => "following consonant".to_string(),
        }
    }
}

/// The nine rules in step order.
#[derive(Debug, Clone)]
pub struct RuleSet {
    rules: Vec<SandhiRule>,
}

static STANDARD: LazyLock<RuleSet> = LazyLock::new(build_ruleset);

pub fn build_ruleset() -> RuleSet {
    use LeftEnding::*;
    let svara = |id, matras: &[(char, [LeftEnding; 2])], vowel, example| SandhiRule {
        id,
        category: Category::Svara,
        forms: matras
            .iter()
            .map(|&(m, endings)| TriggerForm {
                trigger: Trigger::Matra(m),
                left_endings: endings.to_vec(),
            })
            .collect(),
        right_initial: RightInitial::Vowel(vowel),
        example,
    };
    let aa = [Bare, Sign('ा')];
    let ii = [Sign('ि'), Sign('ी')];

    let rules = vec![
        svara(RuleId::R1, &[('ा', aa)], 'अ', ("स्वार्थी", "स्व", "अर्थी")),
        svara(RuleId::R2, &[('ा', aa)], 'आ', ("शिवालय", "शिव", "आलय")),
        svara(
            RuleId::R3,
            &[('े', aa), ('ी', ii)],
            'इ',
            ("नरेन्द्र", "नर", "इन्द्र"),
        ),
        svara(RuleId::R4, &[('े', aa), ('ी', ii)], 'ई', ("गणेश", "गण", "ईश")),
        svara(RuleId::R5, &[('ो', aa)], 'उ', ("परोपकार", "पर", "उपकार")),
        svara(RuleId::R6, &[('ै', aa)], 'ए', ("एकैक", "एक", "एक")),
        svara(
            RuleId::R7,
            &[('ै', aa)],
            'ऐ',
            ("परमैश्वर्य", "परम", "ऐश्वर्य"),
        ),
        SandhiRule {
            id: RuleId::R8,
            category: Category::Vyanjana,
            forms: vec![TriggerForm {
                trigger: Trigger::Cluster {
                    half: 'च',
                    following: &['छ'],
                },
                left_endings: vec![DropHalf],
            }],
            right_initial: RightInitial::Following,
            example: ("विच्छेद", "वि", "छेद"),
        },
        SandhiRule {
            id: RuleId::R9,
            category: Category::Visarga,
            forms: vec![
                TriggerForm {
                    trigger: Trigger::Cluster {
                        half: 'श',
                        following: &['च', 'छ'],
                    },
                    left_endings: vec![Visarga],
                },
                TriggerForm {
                    trigger: Trigger::Cluster {
                        half: 'स',
                        following: &['त', 'थ', 'स'],
                    },
                    left_endings: vec![Visarga],
                },
            ],
            right_initial: RightInitial::Following,
            example: ("निश्चल", "निः", "चल"),
        },
    ];
    RuleSet { rules }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplitError {
    #[error(transparent)]
    Script(#[from] ScriptError),
    #[error("word has {aksharas} akshara(s); at least 2 are needed to split")]
    InputTooShort { aksharas: usize },
    #[error("rule {rule} has no trigger at offset {offset}")]
    NoTrigger { offset: usize, rule: RuleId },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{left} + {right} cannot be joined by {rule}: {reason}")]
pub struct NotComposable {
    pub left: String,
    pub right: String,
    pub rule: RuleId,
    pub reason: &'static str,
}

/// A proposed binary decomposition of a word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitCandidate {
    pub left: String,
    pub right: String,
    pub rule: RuleId,
    /// Codepoint offset of the trigger in the normalized source word.
    pub trigger_offset: usize,
    /// Lexicon tier; `None` until ranked.
    pub tier: Option<Tier>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriggerSite {
    pub offset: usize,
    pub rules: Vec<RuleId>,
}

/// A normalized, segmented word.
struct Analysed {
    chars: Vec<char>,
    aksharas: Vec<Akshara>,
}

impl Analysed {
    fn new(word: &str) -> Result<Self, SplitError> {
        let chars: Vec<char> = script::normalize(word).chars().collect();
        let aksharas = script::segment_chars(&chars)?;
        if aksharas.len() < 2 {
            return Err(SplitError::InputTooShort {
                aksharas: aksharas.len(),
            });
        }
        Ok(Analysed { chars, aksharas })
    }

    fn matches(&self, offset: usize, trigger: &Trigger) -> bool {
        let chars = &self.chars;
        match *trigger {
            Trigger::Matra(m) => {
                if chars.get(offset) != Some(&m) {
                    return false;
                }
                let Some(k) = self.aksharas.iter().position(|a| a.span.contains(&offset)) else {
                    return false;
                };
                let ak = &self.aksharas[k];
                // The right word must keep at least one letter of the source.
                ak.matra_offset() == Some(offset)
                    && ak.base_consonant().is_some_and(|c| !c.nukta)
                    && k + 1 < self.aksharas.len()
            }
            Trigger::Cluster { half, following } => {
                offset > 0
                    && chars.get(offset) == Some(&half)
                    && chars.get(offset + 1) == Some(&VIRAMA)
                    && chars.get(offset + 2).is_some_and(|c| following.contains(c))
                    && chars.get(offset + 3) != Some(&NUKTA)
            }
        }
    }
}

impl RuleSet {
    pub fn standard() -> &'static RuleSet {
        &STANDARD
    }

    pub fn rules(&self) -> &[SandhiRule] {
        &self.rules
    }

    pub fn get(&self, id: RuleId) -> &SandhiRule {
        &self.rules[id.index()]
    }

    /// Every offset where some rule's trigger matches, ordered by offset,
    /// with the matching rule ids in rule order.
    pub fn find_triggers(&self, word: &str) -> Result<Vec<TriggerSite>, SplitError> {
        let word = Analysed::new(word)?;
        Ok(self.sites(&word))
    }

    fn sites(&self, word: &Analysed) -> Vec<TriggerSite> {
        (0..word.chars.len())
            .filter_map(|offset| {
                let rules: Vec<RuleId> = self
                    .rules
                    .iter()
                    .filter(|r| r.forms.iter().any(|f| word.matches(offset, &f.trigger)))
                    .map(|r| r.id)
                    .collect();
                (!rules.is_empty()).then_some(TriggerSite { offset, rules })
            })
            .collect()
    }

    /// Candidates produced by one rule at one trigger site, one per left
    /// ending that yields well-formed words.
    pub fn apply_rule(
        &self,
        word: &str,
        offset: usize,
        rule: RuleId,
    ) -> Result<Vec<SplitCandidate>, SplitError> {
        let word = Analysed::new(word)?;
        self.apply(&word, offset, rule)
    }

    fn apply(
        &self,
        word: &Analysed,
        offset: usize,
        rule: RuleId,
    ) -> Result<Vec<SplitCandidate>, SplitError> {
        let sandhi = self.get(rule);
        let form = sandhi
            .forms
            .iter()
            .find(|f| word.matches(offset, &f.trigger))
            .ok_or(SplitError::NoTrigger { offset, rule })?;

        let chars = &word.chars;
        let prefix: String = chars[..offset].iter().collect();
        let right = match sandhi.right_initial {
            RightInitial::Vowel(v) => std::iter::once(v).chain(chars[offset + 1..].iter().copied()).collect(),
            RightInitial::Following => chars[offset + 2..].iter().collect::<String>(),
        };

        let candidates = form
            .left_endings
            .iter()
            .filter_map(|ending| {
                let mut left = prefix.clone();
                match *ending {
                    LeftEnding::Bare | LeftEnding::DropHalf => {}
                    LeftEnding::Sign(s) => left.push(s),
                    LeftEnding::Visarga => left.push(VISARGA),
                }
                // Variants yielding malformed words are skipped.
                (script::is_well_formed_word(&left) && script::is_well_formed_word(&right)).then(
                    || SplitCandidate {
                        left,
                        right: right.clone(),
                        rule,
                        trigger_offset: offset,
                        tier: None,
                    },
                )
            })
            .collect();
        Ok(candidates)
    }

    /// All candidates for `word`, ordered by (offset, rule, variant), with
    /// structural duplicates removed.
    pub fn split_all(&self, word: &str) -> Result<Vec<SplitCandidate>, SplitError> {
        let word = Analysed::new(word)?;
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for site in self.sites(&word) {
            for &rule in &site.rules {
                for cand in self.apply(&word, site.offset, rule)? {
                    if seen.insert((cand.left.clone(), cand.right.clone(), cand.rule)) {
                        out.push(cand);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Forward sandhi: rebuilds the compound a candidate was split from.
    pub fn join(&self, left: &str, right: &str, rule: RuleId) -> Result<String, NotComposable> {
        let fail = |reason| NotComposable {
            left: left.to_string(),
            right: right.to_string(),
            rule,
            reason,
        };
        if !script::is_well_formed_word(left) || !script::is_well_formed_word(right) {
            return Err(fail("parts must be well-formed Devanagari words"));
        }
        let sandhi = self.get(rule);
        let left_chars: Vec<char> = left.chars().collect();
        let is_consonant = |c: Option<&char>| {
            c.is_some_and(|&c| classify(c) == CharClass::Consonant && !script::is_nukta_form(c))
        };

        let joined = match sandhi.right_initial {
            RightInitial::Vowel(v) => {
                let rest = right.strip_prefix(v).ok_or(fail("right word has the wrong initial vowel"))?;
                sandhi
                    .forms
                    .iter()
                    .find_map(|form| {
                        let Trigger::Matra(matra) = form.trigger else {
                            return None;
                        };
                        form.left_endings.iter().find_map(|ending| {
                            let stem = match *ending {
                                LeftEnding::Bare => &left_chars[..],
                                LeftEnding::Sign(s) if left_chars.last() == Some(&s) => {
                                    &left_chars[..left_chars.len() - 1]
                                }
                                _ => return None,
                            };
                            is_consonant(stem.last()).then(|| {
                                let mut s: String = stem.iter().collect();
                                s.push(matra);
                                s.push_str(rest);
                                s
                            })
                        })
                    })
                    .ok_or(fail("left word has no ending this rule can absorb"))?
            }
            RightInitial::Following => {
                let first = right.chars().next().ok_or(fail("empty right word"))?;
                let (form, half) = sandhi
                    .forms
                    .iter()
                    .find_map(|f| match f.trigger {
                        Trigger::Cluster { half, following } if following.contains(&first) => {
                            Some((f, half))
                        }
                        _ => None,
                    })
                    .ok_or(fail("right word does not start with a cluster consonant"))?;
                let stem = match form.left_endings[0] {
                    LeftEnding::Visarga => left
                        .strip_suffix(VISARGA)
                        .filter(|s| !s.is_empty())
                        .ok_or(fail("left word must end in visarga"))?,
                    _ => left,
                };
                format!("{stem}{half}{VIRAMA}{right}")
            }
        };
        Ok(script::normalize(&joined))
    }

    pub fn join_candidate(&self, cand: &SplitCandidate) -> Result<String, NotComposable> {
        self.join(&cand.left, &cand.right, cand.rule)
    }
}

pub fn find_triggers(word: &str) -> Result<Vec<TriggerSite>, SplitError> {
    RuleSet::standard().find_triggers(word)
}

pub fn apply_rule(word: &str, offset: usize, rule: RuleId) -> Result<Vec<SplitCandidate>, SplitError> {
    RuleSet::standard().apply_rule(word, offset, rule)
}

pub fn split_all(word: &str) -> Result<Vec<SplitCandidate>, SplitError> {
    RuleSet::standard().split_all(word)
}

pub fn join(cand: &SplitCandidate) -> Result<String, NotComposable> {
    RuleSet::standard().join_candidate(cand)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(cands: &[SplitCandidate]) -> Vec<(&str, &str, RuleId)> {
        cands
            .iter()
            .map(|c| (c.left.as_str(), c.right.as_str(), c.rule))
            .collect()
    }

    #[test]
    fn ruleset_shape() {
        let rs = build_ruleset();
        assert_eq!(rs.rules().len(), 9);
        for (i, r) in rs.rules().iter().enumerate() {
            assert_eq!(r.id.index(), i);
            assert!(!r.forms.is_empty());
            for f in &r.forms {
                assert!(!f.left_endings.is_empty());
                match (r.category, &f.trigger) {
                    (Category::Svara, Trigger::Matra(_)) => {}
                    (Category::Vyanjana | Category::Visarga, Trigger::Cluster { .. }) => {}
                    other => panic!("{}: category/trigger mismatch {other:?}", r.id),
                }
            }
        }
        let r5 = rs.get(RuleId::R5);
        assert_eq!(r5.forms[0].trigger, Trigger::Matra('ो'));
        assert_eq!(r5.right_initial, RightInitial::Vowel('उ'));
        assert_eq!(rs.get(RuleId::R9).category, Category::Visarga);
    }

    #[test]
    fn rule_examples_split_and_join() {
        let rs = RuleSet::standard();
        for r in rs.rules() {
            let (compound, left, right) = r.example;
            let cands = rs.split_all(compound).unwrap();
            assert!(
                pairs(&cands).contains(&(left, right, r.id)),
                "{}: {compound} -> {:?}",
                r.id,
                pairs(&cands)
            );
            assert_eq!(rs.join(left, right, r.id).unwrap(), compound);
        }
    }

    #[test]
    fn rule_id_parse_and_order() {
        assert_eq!("R5".parse::<RuleId>().unwrap(), RuleId::R5);
        assert_eq!("r9".parse::<RuleId>().unwrap(), RuleId::R9);
        assert!("R0".parse::<RuleId>().is_err());
        assert!("R10".parse::<RuleId>().is_err());
        assert!("X1".parse::<RuleId>().is_err());
        assert!(RuleId::R1 < RuleId::R9);
        assert_eq!(RuleId::R7.to_string(), "R7");
    }

    #[test]
    fn triggers() {
        let t = find_triggers("परोपकार").unwrap();
        assert_eq!(t[0], TriggerSite { offset: 2, rules: vec![RuleId::R5] });
        // the ा of का also triggers R1/R2
        assert_eq!(t.len(), 2);
        assert_eq!(t[1].rules, [RuleId::R1, RuleId::R2]);

        let t = find_triggers("एकैक").unwrap();
        assert_eq!(t, [TriggerSite { offset: 2, rules: vec![RuleId::R6, RuleId::R7] }]);

        assert!(find_triggers("कमल").unwrap().is_empty());
    }

    #[test]
    fn edge_triggers_suppressed() {
        // matra in the final akshara leaves nothing of the source on the right
        assert!(find_triggers("कमला").unwrap().is_empty());
        // cluster at the very start leaves an empty left word
        assert!(find_triggers("स्तर").unwrap().is_empty());
        // nukta consonants never trigger, decomposed or precomposed
        assert!(find_triggers("ज\u{093C}ाल").unwrap().is_empty());
        assert!(find_triggers("\u{0929}ाल").unwrap().is_empty());
        assert!(RuleSet::standard().join("\u{0929}", "अल", RuleId::R1).is_err());
        assert!(matches!(
            split_all("क"),
            Err(SplitError::InputTooShort { aksharas: 1 })
        ));
    }

    #[test]
    fn apply_rule_examples() {
        let c = apply_rule("परमेश्वर", 3, RuleId::R4).unwrap();
        assert_eq!(
            pairs(&c),
            [("परम", "ईश्वर", RuleId::R4), ("परमा", "ईश्वर", RuleId::R4)]
        );
        let c = apply_rule("निश्चल", 2, RuleId::R9).unwrap();
        assert_eq!(pairs(&c), [("निः", "चल", RuleId::R9)]);
        let c = apply_rule("संधिच्छेद", 4, RuleId::R8).unwrap();
        assert_eq!(pairs(&c), [("संधि", "छेद", RuleId::R8)]);

        assert_eq!(
            apply_rule("परमेश्वर", 3, RuleId::R5),
            Err(SplitError::NoTrigger { offset: 3, rule: RuleId::R5 })
        );
    }

    #[test]
    fn ii_trigger_variants() {
        let c = split_all("कवीन्द्र").unwrap();
        assert_eq!(
            pairs(&c),
            [
                ("कवि", "इन्द्र", RuleId::R3),
                ("कवी", "इन्द्र", RuleId::R3),
                ("कवि", "ईन्द्र", RuleId::R4),
                ("कवी", "ईन्द्र", RuleId::R4),
            ]
        );
    }

    #[test]
    fn split_all_examples() {
        let c = split_all("विच्छेद").unwrap();
        assert!(pairs(&c).contains(&("वि", "छेद", RuleId::R8)));

        let c = split_all("यथैव").unwrap();
        assert_eq!(
            pairs(&c),
            [
                ("यथ", "एव", RuleId::R6),
                ("यथा", "एव", RuleId::R6),
                ("यथ", "ऐव", RuleId::R7),
                ("यथा", "ऐव", RuleId::R7),
            ]
        );
        assert!(split_all("कमल").unwrap().is_empty());
    }

    #[test]
    fn malformed_variant_skipped() {
        // the prefix before च् ends in a virama, so R8's left word is malformed
        let c = split_all("कन्च्छल").unwrap();
        assert!(c.iter().all(|c| c.rule != RuleId::R8));
        // a visarga cannot follow an anusvara
        let c = split_all("कंस्तर").unwrap();
        assert!(c.iter().all(|c| c.rule != RuleId::R9));
    }

    #[test]
    fn join_examples() {
        let rs = RuleSet::standard();
        assert_eq!(rs.join("पर", "उपकार", RuleId::R5).unwrap(), "परोपकार");
        assert_eq!(rs.join("एक", "एक", RuleId::R6).unwrap(), "एकैक");
        assert_eq!(rs.join("निः", "चल", RuleId::R9).unwrap(), "निश्चल");
        assert_eq!(rs.join("दुः", "साहस", RuleId::R9).unwrap(), "दुस्साहस");
        assert_eq!(rs.join("कवि", "इन्द्र", RuleId::R3).unwrap(), "कवीन्द्र");
        assert_eq!(rs.join("महा", "उदधि", RuleId::R5).unwrap(), "महोदधि");
    }

    #[test]
    fn join_rejects() {
        let rs = RuleSet::standard();
        assert!(rs.join("पर", "अपकार", RuleId::R5).is_err());
        assert!(rs.join("कवि", "उपकार", RuleId::R5).is_err());
        assert!(rs.join("नि", "चल", RuleId::R9).is_err());
        assert!(rs.join("निः", "कल", RuleId::R9).is_err());
        assert!(rs.join("वि", "चेद", RuleId::R8).is_err());
        assert!(rs.join("पर", "hello", RuleId::R1).is_err());
    }
}
