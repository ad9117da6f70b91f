//! Command-line front end. [`run`] returns the exit code and both output
//! streams so the binary and the tests share one code path.
//!
//! Exit codes: 0 success or `true`, 1 `false`, 2 usage or input error,
//! 3 failed internal check.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::normal_form::{center_split, equal_sp3, is_trivial_sg3};
use crate::oracle::{audit_quotients, oracle_report};
use crate::perm::pi;
use crate::schreier::{enumerate_generators, rewrite_tau};
use crate::sp3::{conjugate_by_sg3_generator, parse_sp_word, sg3_transversal, ExpressionTable};
use crate::verify::{verify_with, CheckGroup};
use crate::word::{BraidWord, GeneratorLetter};
use crate::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FALSE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn verdict(holds: bool, yes: &str, no: &str) -> Self {
        Outcome {
            code: if holds { EXIT_OK } else { EXIT_FALSE },
            stdout: format!("{}\n", if holds { yes } else { no }),
            stderr: String::new(),
        }
    }

    fn error(e: &Error) -> Self {
        let code = match e {
            Error::Overflow(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "singbraid", version, about = "Singular braid word tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Strands {
    /// Number of strands.
    #[arg(short = 'n', long = "strands", default_value_t = 3)]
    n: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PermFormat {
    Cycles,
    OneLine,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and freely reduce a braid word.
    Parse {
        #[command(flatten)]
        strands: Strands,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Image of a braid word in the symmetric group.
    Pi {
        #[command(flatten)]
        strands: Strands,
        #[arg(long, value_enum, default_value_t = PermFormat::Cycles)]
        format: PermFormat,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Schreier generators as TSV.
    Gens {
        #[command(flatten)]
        strands: Strands,
    },
    /// Rewrite a pure 3-strand word into the six-letter alphabet.
    Rewrite {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Normal form of a six-letter word.
    Nf {
        /// Shift powers of a13 a23 leftward for display.
        #[arg(long)]
        canonical: bool,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Decide whether a 3-strand singular braid word is trivial.
    Trivial {
        #[command(flatten)]
        strands: Strands,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Decide whether two six-letter words are equal.
    Equal {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Conjugate a six-letter word by s1, s2, t1 or t2 (to a power).
    Conj {
        #[arg(short = 'g', long = "generator", allow_hyphen_values = true)]
        generator: String,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Print the quotient invariants of a 3-strand word.
    Oracle {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Check the presentation, the conjugation rules and the table.
    Verify {
        #[arg(long)]
        all: bool,
        /// Rewritten relators.
        #[arg(long)]
        rs: bool,
        /// Defining relators of the six-letter presentation.
        #[arg(long)]
        theorem1: bool,
        /// Conjugation rules.
        #[arg(long)]
        prop41: bool,
        /// Expression table rows.
        #[arg(long)]
        table: bool,
    },
}

/// Parses `args` (including the program name) and executes one subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::error(&e),
    }
}

fn dispatch(command: Command) -> crate::Result<Outcome> {
    match command {
        Command::Parse { strands, word } => {
            let w = BraidWord::parse(&word, strands.n)?;
            Ok(Outcome::ok(format!("{w}\n")))
        }
        Command::Pi {
            strands,
            format,
            word,
        } => {
            let p = pi(&BraidWord::parse(&word, strands.n)?);
            let text = match format {
                PermFormat::Cycles => p.cycles(),
                PermFormat::OneLine => p.one_line(),
            };
            Ok(Outcome::ok(format!("{text}\n")))
        }
        Command::Gens { strands } => {
            let mut out = String::from("rep\tletter\tambient\ttrivial\n");
            for e in enumerate_generators(strands.n)? {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}",
                    e.generator.rep, e.generator.generator, e.ambient, e.trivial
                );
            }
            Ok(Outcome::ok(out))
        }
        Command::Rewrite { word } => {
            let w = BraidWord::parse(&word, 3)?;
            let tau = rewrite_tau(&w, sg3_transversal())?;
            let sp = ExpressionTable::standard().substitute(&tau)?;
            Ok(Outcome::ok(format!("tau: {tau}\nsp3: {sp}\n")))
        }
        Command::Nf { canonical, word } => {
            let mut form = center_split(&parse_sp_word(&word)?);
            if canonical {
                form = form.canonical();
            }
            Ok(Outcome::ok(format!("{form}\n")))
        }
        Command::Trivial { strands, word } => {
            let w = BraidWord::parse(&word, strands.n)?;
            let t = is_trivial_sg3(&w)?;
            Ok(Outcome::verdict(t, "trivial", "nontrivial"))
        }
        Command::Equal { left, right } => {
            let eq = equal_sp3(&parse_sp_word(&left)?, &parse_sp_word(&right)?);
            Ok(Outcome::verdict(eq, "equal", "not equal"))
        }
        Command::Conj { generator, word } => {
            let g = GeneratorLetter::parse(&generator, 3)?;
            let x = parse_sp_word(&word)?;
            let image = conjugate_by_sg3_generator(&x, g)?;
            Ok(Outcome::ok(format!("{image}\n")))
        }
        Command::Oracle { word } => oracle(&BraidWord::parse(&word, 3)?),
        Command::Verify {
            all,
            rs,
            theorem1,
            prop41,
            table,
        } => {
            let picked = [rs, theorem1, prop41, table];
            let groups: Vec<CheckGroup> = if all || !picked.iter().any(|&b| b) {
                CheckGroup::ALL.to_vec()
            } else {
                CheckGroup::ALL
                    .into_iter()
                    .zip(picked)
                    .filter_map(|(g, on)| on.then_some(g))
                    .collect()
            };
            verify(&groups)
        }
    }
}

fn verdict_word(trivial: bool) -> &'static str {
    if trivial {
        "trivial"
    } else {
        "nontrivial"
    }
}

fn oracle(w: &BraidWord) -> crate::Result<Outcome> {
    let r = oracle_report(w)?;
    let mut out = String::from("invariant\tvalue\tverdict\n");
    let _ = writeln!(
        out,
        "permutation\t{}\t{}",
        pi(w).one_line(),
        verdict_word(r.permutation_trivial)
    );
    let _ = writeln!(
        out,
        "sigma-sum\t{}\t{}",
        r.sigma_sum,
        verdict_word(r.sigma_sum == 0)
    );
    let _ = writeln!(
        out,
        "tau-sum\t{}\t{}",
        r.tau_sum,
        verdict_word(r.tau_sum == 0)
    );
    for (rule, m, sum) in &r.quotients {
        let _ = writeln!(
            out,
            "B3 {rule}\t{m} sum {sum}\t{}",
            verdict_word(r.quotient_trivial(*rule))
        );
    }
    let _ = writeln!(out, "all\t-\t{}", verdict_word(r.all_trivial()));
    Ok(Outcome::ok(out))
}

fn verify(groups: &[CheckGroup]) -> crate::Result<Outcome> {
    let mut out = String::new();
    if !audit_quotients()? {
        return Ok(Outcome {
            code: EXIT_INTERNAL,
            stdout: out,
            stderr: "error: B3 quotient audit failed\n".to_string(),
        });
    }
    let report = verify_with(ExpressionTable::standard(), groups)?;
    for c in &report.checks {
        let _ = writeln!(out, "{c}");
    }
    for &g in groups {
        let (p, t) = report.group_counts(g);
        let _ = writeln!(out, "group {g}: {p}/{t}");
    }
    let _ = writeln!(out, "total: {}/{}", report.passed(), report.total());
    Ok(Outcome {
        code: if report.all_passed() {
            EXIT_OK
        } else {
            EXIT_INTERNAL
        },
        stdout: out,
        stderr: String::new(),
    })
}
