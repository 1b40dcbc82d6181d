use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use plactic::Word;

mod commands;
mod render;

use render::{render, Format, Output};

/// Plactic monoid centralizers: tableaux, membership, counting and stability probes.
#[derive(Parser, Debug)]
#[command(name = "plactic", version, about)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Maximum number of objects any single enumeration may visit
    #[arg(long, global = true, default_value_t = plactic::config::DEFAULT_GUARD)]
    guard: u64,

    /// Worker threads; defaults to the available parallelism
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Directory for cached stability fingerprints
    #[arg(long, global = true, env = "PLACTIC_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Insertion and recording tableaux of a word
    Rsk { word: Word },
    /// Rectify P(u) placed south-west of P(w), or an explicit skew tableau
    Jdt {
        u: Option<Word>,
        w: Option<Word>,
        /// Skew tableau as JSON: {"inner_offset":[...],"rows":[[...],...]}
        #[arg(long, conflicts_with_all = ["u", "w"])]
        skew: Option<String>,
    },
    /// All words Knuth-equivalent to a word
    KnuthClass {
        word: Word,
        #[arg(long, default_value_t = plactic::plactic::KNUTH_CLASS_LIMIT)]
        limit: usize,
    },
    /// Words of length n over [m] commuting with u up to Knuth equivalence
    Centralizer {
        u: Word,
        n: usize,
        m: u32,
        /// List every member word, one per line
        #[arg(long)]
        witnesses: bool,
    },
    /// Closed-form membership tests checked against direct comparison
    Characterize {
        #[command(subcommand)]
        check: Check,
    },
    /// Compare truncated centralizers of u, u^2, ..., u^K
    Stability {
        u: Word,
        #[arg(long = "K", default_value_t = 5)]
        max_power: usize,
        #[arg(long = "L", default_value_t = 5)]
        max_len: usize,
        /// Alphabet bound; defaults to max u + 1
        #[arg(long = "M")]
        alphabet: Option<u32>,
    },
    /// Exact counts
    Count {
        #[command(subcommand)]
        kind: CountKind,
    },
    /// Binomial-basis coefficients of c_{n,m}(1) and the theorem clauses
    Coeffs { n: usize },
    /// Desk-scale sweeps for the stated conjectures and theorems
    Conjectures {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        m: u32,
        #[arg(long, default_value_t = 5)]
        len_max: usize,
        #[arg(long, default_value_t = 2)]
        alphabet: u32,
        #[arg(long = "K")]
        max_power: Option<usize>,
        #[arg(long = "L")]
        max_len: Option<usize>,
        #[arg(long = "M")]
        trunc_alphabet: Option<u32>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Check {
    /// w ∈ C(1): direct, row 1 all ones, lwi(w) = lwi(w,1)
    COne { w: Word },
    /// w ∈ C(δ_m) iff rows 1..m of P(w) are bounded by m
    Staircase { w: Word, m: u32 },
    /// Row bound forced by a descending subsequence of u
    RowBound { w: Word, u: Word },
    /// Length of row 2 of P(wu) for words over [2]
    R2 { w: Word, u: Word },
    /// Two-letter characterization of C(u)
    TwoLetter { u: Word, w: Word },
    /// Singleton column counts of powers of a two-letter word
    C1c2 { u: Word, k_max: usize },
    /// Row i of P(u^{k+1}) is i followed by row i of P(u^k)
    RowShift { u: Word, k: usize },
    /// lwi_i(u^{k+1}) >= lwi_i(u^k) + i
    LwiGrowth { u: Word, i: usize, k: usize },
}

#[derive(Subcommand, Debug)]
pub enum CountKind {
    /// c_{n,m}(u)
    C {
        n: usize,
        m: u32,
        #[arg(long, default_value = "1")]
        u: Word,
    },
    /// c_{n,m,k}(u): members with exactly k distinct letters
    Refined {
        n: usize,
        m: u32,
        k: usize,
        #[arg(long, default_value = "1")]
        u: Word,
    },
    /// b_{n,k}: k-packed words of length n in C(1)
    B { n: usize, k: usize },
    /// c_{n,m}(1) through the linear-extension formula
    Schur { n: usize, m: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Logconcave,
    Packed,
    Stability,
}

fn run(cli: Cli) -> Result<Output> {
    let workers = cli
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let config = plactic::Config::new(cli.guard, workers)?;
    let cache = cli
        .cache_dir
        .as_ref()
        .map(plactic::stability::FingerprintCache::open)
        .transpose()?;
    let ctx = commands::Context {
        config,
        cache: cache.as_ref(),
    };
    match cli.command {
        Command::Rsk { word } => commands::rsk(&word),
        Command::Jdt { u, w, skew } => commands::jdt(u, w, skew),
        Command::KnuthClass { word, limit } => commands::knuth_class(&word, limit),
        Command::Centralizer { u, n, m, witnesses } => commands::centralizer(&ctx, &u, n, m, witnesses),
        Command::Characterize { check } => commands::characterize(check),
        Command::Stability {
            u,
            max_power,
            max_len,
            alphabet,
        } => {
            let m = alphabet.unwrap_or(u.max_letter() + 1);
            commands::stability(&ctx, &u, max_power, max_len, m)
        }
        Command::Count { kind } => commands::count(&ctx, kind),
        Command::Coeffs { n } => commands::coeffs(&ctx, n),
        Command::Conjectures {
            which,
            n_max,
            m,
            len_max,
            alphabet,
            max_power,
            max_len,
            trunc_alphabet,
        } => match which {
            Which::Logconcave => commands::log_concave(&ctx, n_max),
            Which::Packed => commands::packed(&ctx, m, len_max, max_power.unwrap_or(6), max_len.unwrap_or(6)),
            Which::Stability => commands::stability_family(
                &ctx,
                alphabet,
                len_max,
                max_power.unwrap_or(4),
                max_len.unwrap_or(5),
                trunc_alphabet.unwrap_or(alphabet + 1),
            ),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(render(&out, format).as_bytes());
            if out.passed {
                ExitCode::SUCCESS
            } else {
                if let Some(c) = &out.counterexample {
                    eprintln!("check failed: {c}");
                }
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
