//! Acceptance criteria. Run with `--nocapture` to see one PASS/FAIL line
//! per criterion.

use std::io::Write;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use vicheda_core::script::{self, classify, CharClass};
use vicheda_core::{
    best_split, evaluate, load_gold, normalize, split_all, GoldEntry, Lexicon, RuleSet, ScriptTable,
};

const FUZZ_WORDS: usize = 10_000;
const FUZZ_SEED: u64 = 0x5A4D_4849;

fn repo(path: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..").join(path)
}

fn gold(name: &str) -> Vec<GoldEntry> {
    load_gold(repo(&format!("gold/{name}"))).unwrap().0
}

fn verdict(name: &str, pass: bool, detail: String) {
    println!("[{}] {name}: {detail}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "{name}: {detail}");
}

/// Random well-formed words, biased towards rule triggers.
fn fuzz_words(n: usize, seed: u64) -> Vec<String> {
    const VOWELS: &[char] = &['अ', 'आ', 'इ', 'ई', 'उ', 'ऊ', 'ऋ', 'ए', 'ऐ', 'ओ', 'औ'];
    const MATRAS: &[char] = &['ा', 'ि', 'ी', 'ु', 'ू', 'ृ', 'े', 'ै', 'ो', 'ौ', 'ॅ', 'ॉ'];
    const MODIFIERS: &[char] = &['ं', 'ँ', 'ः'];
    const CLUSTERS: &[&str] = &["च्छ", "श्च", "श्छ", "स्त", "स्थ", "स्स", "क्ष", "त्र", "न्द्र"];
    let consonants = &ScriptTable::standard().vyanjan;
    let mut rng = StdRng::seed_from_u64(seed);
    let pick =|rng: &mut StdRng, xs: &[char]| xs[rng.gen_range(0..xs.len())];

    (0..n)
        .map(|_| {
            let mut w = String::new();
            for _ in 0..rng.gen_range(2..=6) {
                if rng.gen_bool(0.12) {
                    w.push(pick(&mut rng, VOWELS));
                } else {
                    match rng.gen_range(0..10) {
                        0..=1 => w.push_str(CLUSTERS[rng.gen_range(0..CLUSTERS.len())]),
                        2 => {
                            w.push(pick(&mut rng, consonants));
                            w.push('्');
                            w.push(pick(&mut rng, consonants));
                        }
                        3 => w.push_str("ज\u{093C}"),
                        _ => w.push(pick(&mut rng, consonants)),
                    }
                    if rng.gen_bool(0.6) {
                        w.push(pick(&mut rng, MATRAS));
                    }
                }
                if rng.gen_bool(0.08) {
                    w.push(pick(&mut rng, MODIFIERS));
                }
            }
            if rng.gen_bool(0.03) && classify(w.chars().last().unwrap()) == CharClass::Consonant {
                w.push('्');
            }
            normalize(&w)
        })
        .collect()
}

fn gold_and_fuzz() -> Vec<String> {
    let mut words: Vec<String> = gold("corpus.tsv").into_iter().map(|e| e.compound).collect();
    words.extend(fuzz_words(FUZZ_WORDS, FUZZ_SEED));
    words
}

#[test]
fn gold_completeness() {
    let entries = gold("tables.tsv");
    let start = Instant::now();
    let found = entries
        .iter()
        .filter(|e| split_all(&e.compound).is_ok_and(|cs| cs.iter().any(|c| e.matches(c))))
        .count();
    let elapsed = start.elapsed();
    verdict(
        "gold completeness",
        found == entries.len() && elapsed < Duration::from_secs(1),
        format!("{found}/{} table pairs among candidates in {elapsed:.2?}", entries.len()),
    );
}

#[test]
fn best_split_accuracy_full_lexicon() {
    let entries = gold("tables.tsv");
    let lexicon = Lexicon::from_words(entries.iter().flat_map(|e| [e.left.as_str(), e.right.as_str()]));
    let start = Instant::now();
    let report = evaluate(&entries, &lexicon);
    let elapsed = start.elapsed();
    for f in &report.failures {
        println!("  miss: {} -> {:?}", f.entry.compound, f.candidates.first());
    }
    verdict(
        "best-split accuracy with constituent lexicon",
        report.best_accuracy >= 0.80 && elapsed < Duration::from_secs(1),
        format!(
            "best_accuracy {:.3} ({}/{}) in {elapsed:.2?}",
            report.best_accuracy, report.correct, report.total
        ),
    );
}

#[test]
fn accuracy_band_on_broad_corpus() {
    let entries = gold("corpus.tsv");
    let lexicon = Lexicon::bundled();
    let report = evaluate(&entries, &lexicon);

    // the same list without the hand-added constituents, for reference
    let text = std::fs::read_to_string(repo("crates/core/data/lexicon.txt")).unwrap();
    let freq_only = text.split("# constituents").next().unwrap();
    let (freq_lexicon, _) = Lexicon::parse(freq_only, "frequency list").unwrap();
    let freq_report = evaluate(&entries, &freq_lexicon);
    println!(
        "  frequency list alone ({} words): best_accuracy {:.3}",
        freq_lexicon.len(),
        freq_report.best_accuracy
    );

    verdict(
        "accuracy band on >=200-word corpus",
        report.total >= 200
            && (4_000..=6_000).contains(&lexicon.len())
            && report.best_accuracy >= 0.60,
        format!(
            "{} entries, lexicon {} words, best_accuracy {:.3}, candidate_recall {:.3}",
            report.total,
            lexicon.len(),
            report.best_accuracy,
            report.candidate_recall
        ),
    );
}

#[test]
fn round_trip_property() {
    let rules = RuleSet::standard();
    let words = gold_and_fuzz();
    let (mut total, mut ok, mut with_candidates) = (0, 0, 0);
    for w in &words {
        let Ok(cands) = split_all(w) else { continue };
        with_candidates += usize::from(!cands.is_empty());
        for c in &cands {
            total += 1;
            if rules.join_candidate(c).as_deref() == Ok(w.as_str()) {
                ok += 1;
            }
        }
    }
    verdict(
        "round-trip join",
        ok == total && total > FUZZ_WORDS && words.len() >= FUZZ_WORDS,
        format!(
            "{ok}/{total} candidates from {} words ({with_candidates} with candidates)",
            words.len()
        ),
    );
}

#[test]
fn well_formedness_property() {
    let words = gold_and_fuzz();
    let mut total = 0;
    let mut bad = Vec::new();
    for w in &words {
        let Ok(cands) = split_all(w) else { continue };
        for c in cands {
            total += 1;
            if !script::is_well_formed_word(&c.left) || !script::is_well_formed_word(&c.right) {
                bad.push(c);
            }
        }
    }
    verdict(
        "candidate well-formedness",
        bad.is_empty() && total > 0,
        format!("{} violations among {total} candidates, first: {:?}", bad.len(), bad.first()),
    );
}

#[test]
fn script_table_check() {
    let table = ScriptTable::standard();
    let classes: Vec<CharClass> = (0x0900u32..0x0980).map(|cp| classify(char::from_u32(cp).unwrap())).collect();
    let counts = (table.swar.len(), table.vyanjan.len(), table.matra.len());
    let disjoint = table.vyanjan.iter().all(|&c| !table.is_matra(c) && c != table.virama)
        && table.matra.iter().all(|&c| c != table.virama)
        && table
            .swar
            .iter()
            .filter_map(|s| s.chars().next())
            .all(|c| classify(c) == CharClass::IndependentVowel && !table.is_vyanjan(c) && !table.is_matra(c));
    verdict(
        "script table",
        classes.len() == 128 && counts == (13, 33, 13) && disjoint,
        format!("{} codepoints classified, swar/vyanjan/matra = {counts:?}", classes.len()),
    );
}

#[test]
fn batch_determinism() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    for e in gold("corpus.tsv") {
        writeln!(f, "{}", e.compound).unwrap();
    }
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_vicheda"))
            .args(["batch", f.path().to_str().unwrap(), "--all", "--format", "tsv"])
            .output()
            .unwrap()
    };
    let (a, b) = (run(), run());
    verdict(
        "batch determinism",
        a.status.success() && !a.stdout.is_empty() && a.stdout == b.stdout,
        format!("{} bytes, identical: {}", a.stdout.len(), a.stdout == b.stdout),
    );
}

#[test]
fn performance_sanity() {
    let words = fuzz_words(FUZZ_WORDS, FUZZ_SEED ^ 1);
    let lexicon = Lexicon::bundled();
    let start = Instant::now();
    let mut splits = 0;
    for w in &words {
        if let Ok(Some(_)) = best_split(w, &lexicon) {
            splits += 1;
        }
    }
    let elapsed = start.elapsed();
    verdict(
        "performance",
        words.len() == FUZZ_WORDS && elapsed < Duration::from_secs(5),
        format!("{} words ({splits} split) in {elapsed:.2?}", words.len()),
    );
}
