//! Rule-based sandhi-vicheda for Hindi compounds written in Devanagari.
//!
//! ```
//! use vicheda_core::{best_split, Lexicon, RuleId};
//!
//! let lexicon = Lexicon::from_words(["पर", "उपकार"]);
//! let best = best_split("परोपकार", &lexicon).unwrap().unwrap();
//! assert_eq!((best.left.as_str(), best.right.as_str()), ("पर", "उपकार"));
//! assert_eq!(best.rule, RuleId::R5);
//! ```

pub mod eval;
pub mod lexicon;
pub mod rules;
pub mod script;

pub use eval::{evaluate, load_gold, parse_gold, Failure, GoldEntry, GoldError, Report, RuleTally};
pub use lexicon::{
    best_split, rank, ranked_splits, Lexicon, LexiconError, LineDiagnostic, RankedCandidates, Tier,
};
pub use rules::{
    apply_rule, build_ruleset, find_triggers, join, split_all, Category, NotComposable, RuleId,
    RuleSet, SandhiRule, SplitCandidate, SplitError, TriggerSite,
};
pub use script::{classify, is_devanagari_word, normalize, segment, Akshara, CharClass, ScriptError, ScriptTable};
