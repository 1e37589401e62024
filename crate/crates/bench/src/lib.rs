//! Shared inputs for the benchmarks.

use vicheda_core::parse_gold;

const CORPUS: &str = include_str!("../../../gold/corpus.tsv");

/// Compounds from the gold corpus, in file order.
pub fn corpus_words() -> Vec<String> {
    let (entries, _) = parse_gold(CORPUS, "corpus.tsv").expect("corpus parses");
    entries.into_iter().map(|e| e.compound).collect()
}
