//! `kcore`: command-line access to cores, k-bounded partitions, the k-Young
//! lattice, k-tableaux, affine Grassmannian permutations and k-Kostka
//! matrices.

mod input;

use std::fmt::Write as _;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use kcore::affine::{phi, w_lambda};
use kcore::cores::{c_map, k_conjugate, k_skew, p_map};
use kcore::kostka::{k_schur_in_h, kostka_matrix, PartitionMatrix};
use kcore::ktableau::{enumerate_semistandard, enumerate_standard, KTableau};
use kcore::lattice::{
    admissible_chains, count_admissible_chains, count_saturated_chains, down_covers, hasse_dot, hasse_edges, leq,
    saturated_chains, up_covers, Chain,
};
use kcore::{checks, Composition, Error, Partition};

const DEFAULT_MAX_ENUM: u64 = 1_000_000;

#[derive(Parser)]
#[command(name = "kcore", version, about = "Cores, k-bounded partitions and k-tableaux")]
struct Cli {
    /// The bound k (cores are (k+1)-cores).
    #[arg(short = 'k', long = "k", global = true)]
    k: Option<usize>,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Up,
    Down,
}

#[derive(Subcommand)]
enum Command {
    /// The k-bounded partition p(γ) of a (k+1)-core γ.
    CoreToPartition { core: String },
    /// The (k+1)-core c(λ) of a k-bounded partition λ.
    PartitionToCore { partition: String },
    /// The k-skew diagram of λ.
    Kskew { partition: String },
    /// The k-conjugate of λ.
    Kconjugate { partition: String },
    /// Covers of λ in the k-Young lattice.
    Covers {
        partition: String,
        #[arg(long, value_enum, default_value_t = Direction::Up)]
        direction: Direction,
    },
    /// Whether λ ⪯ μ in the k-Young lattice.
    Leq { lambda: String, mu: String },
    /// Saturated chains from ∅ to λ, or α-admissible chains with --evaluation.
    Chains {
        partition: String,
        #[arg(long)]
        evaluation: Option<String>,
    },
    /// k-tableaux of shape c(λ).
    Tableaux {
        partition: String,
        #[arg(long, conflicts_with = "evaluation")]
        standard: bool,
        #[arg(long)]
        evaluation: Option<String>,
    },
    /// Standardize a k-tableau given as bottom-up rows `1,2,2/2,3/4` or JSON.
    Standardize { tableau: String },
    /// The reduced word of a standard k-tableau.
    Word { tableau: String },
    /// The standard k-tableau of a reduced word.
    Tableau {
        #[arg(required = true, num_args = 1..)]
        word: Vec<String>,
    },
    /// The word w_λ and the affine Grassmannian permutation σ_λ.
    Phi { partition: String },
    /// The k-Kostka matrix on k-bounded partitions of n.
    Kostka {
        #[arg(long)]
        n: usize,
    },
    /// Coefficients of k-Schur functions in the homogeneous basis.
    KschurH {
        #[arg(long)]
        n: usize,
    },
    /// The Hasse diagram of the k-Young lattice up to degree n.
    Hasse {
        #[arg(long)]
        n: usize,
    },
    /// Run every invariant suite up to degree n.
    Check {
        #[arg(long)]
        n: usize,
    },
}

enum Failure {
    Invalid(String),
    ChecksFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type Run = Result<(), Failure>;

struct Ctx {
    k: Option<usize>,
    format: Format,
    max_enum: u64,
    out: String,
}

impl Ctx {
    fn k(&self) -> Result<usize, Failure> {
        match self.k {
            Some(0) => Err(Error::InvalidK.into()),
            Some(k) => Ok(k),
            None => Err(Failure::Invalid("this command needs -k".into())),
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        self.out.push('\n');
    }

    fn json<T: Serialize>(&mut self, v: &T) {
        let s = serde_json::to_string(v).expect("values serialize");
        self.line(s);
    }

    fn formats(&self, allowed: &[Format], command: &str) -> Run {
        if allowed.contains(&self.format) {
            Ok(())
        } else {
            let name = self.format.to_possible_value().expect("named").get_name().to_string();
            Err(Failure::Invalid(format!("--format {name} is not available for {command}")))
        }
    }

    fn limit(&self, count: u64) -> Run {
        if count > self.max_enum {
            Err(Failure::Invalid(format!(
                "enumeration of {count} items exceeds KCORE_MAX_ENUM={}",
                self.max_enum
            )))
        } else {
            Ok(())
        }
    }
}

fn word_text(w: &[usize]) -> String {
    w.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn chain_text(c: &Chain) -> String {
    c.steps.iter().map(Partition::to_string).collect::<Vec<_>>().join(" ")
}

fn count_line(n: usize, what: &str) {
    eprintln!("{n} {what}");
}

fn matrix(ctx: &mut Ctx, m: &PartitionMatrix) {
    match ctx.format {
        Format::Json => ctx.json(m),
        Format::Csv => ctx.out.push_str(&m.to_csv()),
        _ => ctx.out.push_str(&m.to_text()),
    }
}

fn tableaux_out(ctx: &mut Ctx, ts: &[KTableau]) {
    if ctx.format == Format::Json {
        ctx.json(&ts);
    } else {
        let blocks: Vec<String> = ts.iter().map(KTableau::to_text).collect();
        if !blocks.is_empty() {
            ctx.line(blocks.join("\n\n"));
        }
    }
    count_line(ts.len(), "tableaux");
}

fn run(cmd: Command, ctx: &mut Ctx) -> Run {
    use Format::{Json, Text};
    match cmd {
        Command::CoreToPartition { core } => {
            ctx.formats(&[Text, Json], "core-to-partition")?;
            let core = input::core(&core, ctx.k()?)?;
            let p = p_map(&core);
            if ctx.format == Json { ctx.json(&p) } else { ctx.line(p.to_string()) }
        }
        Command::PartitionToCore { partition } => {
            ctx.formats(&[Text, Json], "partition-to-core")?;
            let core = c_map(&input::partition(&partition)?, ctx.k()?)?;
            if ctx.format == Json { ctx.json(&core) } else { ctx.line(core.shape().to_string()) }
        }
        Command::Kskew { partition } => {
            ctx.formats(&[Text, Json], "kskew")?;
            let s = k_skew(&input::partition(&partition)?, ctx.k()?)?;
            if ctx.format == Json {
                ctx.json(&s);
            } else {
                ctx.line(format!("outer {}", s.outer()));
                ctx.line(format!("inner {}", s.inner()));
            }
        }
        Command::Kconjugate { partition } => {
            ctx.formats(&[Text, Json], "kconjugate")?;
            let p = k_conjugate(&input::partition(&partition)?, ctx.k()?)?;
            if ctx.format == Json { ctx.json(&p) } else { ctx.line(p.to_string()) }
        }
        Command::Covers { partition, direction } => {
            ctx.formats(&[Text, Json], "covers")?;
            let lambda = input::partition(&partition)?;
            let k = ctx.k()?;
            let covers = match direction {
                Direction::Up => up_covers(&lambda, k)?,
                Direction::Down => down_covers(&lambda, k)?,
            };
            if ctx.format == Json {
                ctx.json(&covers);
            } else {
                for c in &covers {
                    ctx.line(c.to_string());
                }
            }
            count_line(covers.len(), "covers");
        }
        Command::Leq { lambda, mu } => {
            ctx.formats(&[Text, Json], "leq")?;
            let r = leq(&input::partition(&lambda)?, &input::partition(&mu)?, ctx.k()?)?;
            if ctx.format == Json { ctx.json(&r) } else { ctx.line(r.to_string()) }
        }
        Command::Chains { partition, evaluation } => {
            ctx.formats(&[Text, Json], "chains")?;
            let lambda = input::partition(&partition)?;
            let k = ctx.k()?;
            let chains = match evaluation {
                Some(e) => {
                    let alpha = input::composition(&e)?;
                    ctx.limit(count_admissible_chains(&lambda, &alpha, k)?)?;
                    admissible_chains(&lambda, &alpha, k)?
                }
                None => {
                    ctx.limit(count_saturated_chains(&lambda, k)?)?;
                    saturated_chains(&lambda, k)?
                }
            };
            if ctx.format == Json {
                ctx.json(&chains);
            } else {
                for c in &chains {
                    ctx.line(chain_text(c));
                }
            }
            count_line(chains.len(), "chains");
        }
        Command::Tableaux { partition, standard: _, evaluation } => {
            ctx.formats(&[Text, Json], "tableaux")?;
            let lambda = input::partition(&partition)?;
            let k = ctx.k()?;
            let ts = match evaluation {
                Some(e) => {
                    let alpha: Composition = input::composition(&e)?;
                    ctx.limit(count_admissible_chains(&lambda, &alpha, k)?)?;
                    enumerate_semistandard(&lambda, &alpha, k)?
                }
                None => {
                    ctx.limit(count_saturated_chains(&lambda, k)?)?;
                    enumerate_standard(&lambda, k)?
                }
            };
            tableaux_out(ctx, &ts);
        }
        Command::Standardize { tableau } => {
            ctx.formats(&[Text, Json], "standardize")?;
            let t = input::tableau(&tableau, ctx.k)?.standardize();
            if ctx.format == Json { ctx.json(&t) } else { ctx.line(t.to_text()) }
        }
        Command::Word { tableau } => {
            ctx.formats(&[Text, Json], "word")?;
            let w = input::tableau(&tableau, ctx.k)?.to_reduced_word()?;
            if ctx.format == Json { ctx.json(&w) } else { ctx.line(word_text(&w)) }
        }
        Command::Tableau { word } => {
            ctx.formats(&[Text, Json], "tableau")?;
            let w = input::word(&word.join(" "))?;
            let t = KTableau::from_reduced_word(&w, ctx.k()?)?;
            if ctx.format == Json { ctx.json(&t) } else { ctx.line(t.to_text()) }
        }
        Command::Phi { partition } => {
            ctx.formats(&[Text, Json], "phi")?;
            let lambda = input::partition(&partition)?;
            let k = ctx.k()?;
            let w = w_lambda(&lambda, k)?;
            if ctx.format == Json {
                let sigma = phi(&lambda, k)?;
                ctx.json(&json!({ "k": k, "window": sigma.window(), "word": w }));
            } else {
                ctx.line(word_text(&w));
            }
        }
        Command::Kostka { n } => {
            ctx.formats(&[Text, Json, Format::Csv], "kostka")?;
            let k = ctx.k()?;
            ctx.limit((Partition::bounded(n, k).len() as u64).pow(2))?;
            let m = kostka_matrix(n, k)?;
            matrix(ctx, &m);
        }
        Command::KschurH { n } => {
            ctx.formats(&[Text, Json, Format::Csv], "kschur-h")?;
            let k = ctx.k()?;
            ctx.limit((Partition::bounded(n, k).len() as u64).pow(2))?;
            let m = k_schur_in_h(n, k)?;
            matrix(ctx, &m);
        }
        Command::Hasse { n } => {
            let k = ctx.k()?;
            ctx.limit(Partition::bounded_up_to(n, k).len() as u64)?;
            let edges = hasse_edges(n, k)?;
            match ctx.format {
                Format::Dot => ctx.out.push_str(&hasse_dot(n, k)?),
                Json => {
                    let nodes = Partition::bounded_up_to(n, k);
                    ctx.json(&json!({ "k": k, "nodes": nodes, "edges": edges }));
                }
                Format::Csv => {
                    ctx.line("from,to");
                    for (a, b) in &edges {
                        ctx.line(format!("\"{a}\",\"{b}\""));
                    }
                }
                Text => {
                    for (a, b) in &edges {
                        ctx.line(format!("{a} -> {b}"));
                    }
                }
            }
            count_line(edges.len(), "edges");
        }
        Command::Check { n } => {
            ctx.formats(&[Text, Json], "check")?;
            let results = checks::run_all(n, ctx.k()?)?;
            let passed = results.iter().filter(|r| r.passed()).count();
            let cases: usize = results.iter().map(|r| r.cases).sum();
            if ctx.format == Json {
                ctx.json(&results);
            } else {
                for r in &results {
                    let status = if r.passed() { "PASS" } else { "FAIL" };
                    let mut l = format!("{status} {} ({} cases)", r.name, r.cases);
                    for f in r.failures.iter().take(5) {
                        write!(l, "\n  {f}").unwrap();
                    }
                    ctx.line(l);
                }
                ctx.line(format!("{passed}/{} suites passed, {cases} cases", results.len()));
            }
            if passed != results.len() {
                return Err(Failure::ChecksFailed);
            }
        }
    }
    Ok(())
}

fn max_enum() -> Result<u64, Failure> {
    match std::env::var("KCORE_MAX_ENUM") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Invalid(format!("KCORE_MAX_ENUM={v:?} is not a nonnegative integer"))),
        Err(_) => Ok(DEFAULT_MAX_ENUM),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                ErrorKind::InvalidSubcommand => 64,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.format == Format::Dot && !matches!(cli.command, Command::Hasse { .. }) {
        eprintln!("error: --format dot is only available for hasse");
        return ExitCode::from(2);
    }
    let result = max_enum().and_then(|max_enum| {
        let mut ctx = Ctx { k: cli.k, format: cli.format, max_enum, out: String::new() };
        let r = run(cli.command, &mut ctx);
        let mut stdout = io::stdout().lock();
        let _ = stdout.write_all(ctx.out.as_bytes());
        let _ = stdout.flush();
        r
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::ChecksFailed) => ExitCode::from(1),
    }
}
