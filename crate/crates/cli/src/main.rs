use std::io::{self, BufRead, IsTerminal, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use vicheda_cli::{record_for, render, render_report_text, render_text, rules_table, Format};
use vicheda_core::{evaluate, load_gold, Lexicon};

/// Split Hindi sandhi compounds into their constituent words.
#[derive(Parser)]
#[command(name = "vicheda", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Split a single word
    Split {
        word: String,
        /// Print every ranked candidate instead of the best one
        #[arg(long)]
        all: bool,
        /// Word list used for ranking (defaults to the bundled list)
        #[arg(long, value_name = "PATH")]
        lexicon: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Split every word of a file, one word per line
    Batch {
        file: PathBuf,
        #[arg(long)]
        all: bool,
        #[arg(long, value_name = "PATH")]
        lexicon: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Score a gold TSV corpus
    Eval {
        gold: PathBuf,
        #[arg(long, value_name = "PATH")]
        lexicon: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the rule reference table
    Rules,
    /// Read words from stdin and print their splits
    Interactive {
        #[arg(long, value_name = "PATH")]
        lexicon: Option<PathBuf>,
    },
}

fn load_lexicon(path: Option<&Path>) -> Result<Lexicon> {
    let Some(path) = path else {
        return Ok(Lexicon::bundled());
    };
    let (lexicon, skipped) =
        Lexicon::load(path).with_context(|| format!("loading lexicon {}", path.display()))?;
    for d in skipped {
        eprintln!("warning: {}: {d}", path.display());
    }
    Ok(lexicon)
}

fn split(word: &str, all: bool, lexicon: Option<&Path>, format: Format) -> Result<ExitCode> {
    let lexicon = load_lexicon(lexicon)?;
    let rec = record_for(word, &lexicon, all).with_context(|| format!("cannot split {word:?}"))?;
    print!("{}", render(&rec, format, all, false));
    Ok(if rec.candidates.is_empty() {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn batch(file: &Path, all: bool, lexicon: Option<&Path>, format: Format) -> Result<ExitCode> {
    let lexicon = load_lexicon(lexicon)?;
    let text = std::fs::read_to_string(file).with_context(|| format!("cannot read {}", file.display()))?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut ok = true;
    for (i, line) in text.lines().enumerate() {
        let word = line.trim();
        if word.is_empty() {
            continue;
        }
        match record_for(word, &lexicon, all) {
            Ok(rec) => out.write_all(render(&rec, format, all, true).as_bytes())?,
            Err(e) => {
                ok = false;
                eprintln!("{}:{}: {word}: {e}", file.display(), i + 1);
            }
        }
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn eval(gold: &Path, lexicon: &Path, format: Format) -> Result<ExitCode> {
    let (entries, skipped) = load_gold(gold).with_context(|| format!("loading gold {}", gold.display()))?;
    for d in skipped {
        eprintln!("warning: {}: {d}", gold.display());
    }
    let lexicon = load_lexicon(Some(lexicon))?;
    let report = evaluate(&entries, &lexicon);
    match format {
        Format::Text => print!("{}", render_report_text(&report)),
        Format::Tsv => print!("{}", report.to_tsv()),
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
    }
    Ok(ExitCode::SUCCESS)
}

fn interactive(lexicon: Option<&Path>) -> Result<ExitCode> {
    let lexicon = load_lexicon(lexicon)?;
    let stdin = io::stdin();
    let prompt = stdin.is_terminal();
    let mut lines = stdin.lock().lines();
    loop {
        if prompt {
            eprint!("> ");
            io::stderr().flush()?;
        }
        let Some(line) = lines.next() else { break };
        let line = line?;
        match line.trim() {
            "" => continue,
            ":quit" | ":q" => break,
            ":rules" => print!("{}", rules_table()),
            word => match record_for(word, &lexicon, false) {
                Ok(rec) => print!("{}", render_text(&rec, false, false)),
                Err(e) => eprintln!("error: {word}: {e}"),
            },
        }
        io::stdout().flush()?;
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Split {
            word,
            all,
            lexicon,
            format,
        } => split(&word, all, lexicon.as_deref(), format),
        Command::Batch {
            file,
            all,
            lexicon,
            format,
        } => batch(&file, all, lexicon.as_deref(), format),
        Command::Eval {
            gold,
            lexicon,
            format,
        } => eval(&gold, &lexicon, format),
        Command::Rules => {
            print!("{}", rules_table());
            Ok(ExitCode::SUCCESS)
        }
        Command::Interactive { lexicon } => interactive(lexicon.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
