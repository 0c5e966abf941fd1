//! Command-line front end: listing, counting, series expansion, the
//! bijection maps, order verification, run-graph export and the
//! exploratory 1-Gray search.
//!
//! Exit statuses: 0 on success, 1 on domain errors (bad word input,
//! value outside a map's domain), 2 on usage errors (unknown flags,
//! invalid flag combinations such as `--order gray1` with q != 1).

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bijection::{phi, phi_inv, psi, psi_inv};
use crate::enumeration::{count_by_ones, count_qdecreasing, expand_series, frequency_report, Kind};
use crate::generation::{
    brgc_list, brute_force_qdecreasing, gray1_w, lex_stream, search_gray1, verify_gray,
    SearchOutcome, WordList,
};
use crate::rungraph::{build_run_graph, export_dot, hamiltonian_path, is_hamiltonian_cycle};
use crate::word::{Word, Q};
use crate::Error;

#[derive(Parser)]
#[command(
    name = "qdec",
    version,
    about = "q-decreasing binary words: listing, counting, bijections, Gray codes and run graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Order {
    /// Increasing lexicographic order (streamed).
    Lex,
    /// Binary reflected Gray code order (a 3-Gray listing).
    Brgc,
    /// The recursive 1-Gray code; only defined for q = 1.
    Gray1,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    /// Fibonacci word to q-decreasing word.
    Phi,
    /// q-decreasing word back to Fibonacci word.
    PhiInv,
    /// Insert 01^q after the last 0.
    Psi,
    /// Undo psi, if the word is in its image.
    PsiInv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    Bq,
    Sq,
    Wq,
    Fq,
    Dq,
    P1,
    P0,
    H,
}

impl From<SeriesKind> for Kind {
    fn from(k: SeriesKind) -> Kind {
        match k {
            SeriesKind::Bq => Kind::Bq,
            SeriesKind::Sq => Kind::Sq,
            SeriesKind::Wq => Kind::Wq,
            SeriesKind::Fq => Kind::Fq,
            SeriesKind::Dq => Kind::Dq,
            SeriesKind::P1 => Kind::P1,
            SeriesKind::P0 => Kind::P0,
            SeriesKind::H => Kind::H,
        }
    }
}

fn q_arg() -> clap::builder::RangedU64ValueParser {
    clap::value_parser!(u64).range(1..=64)
}

#[derive(Subcommand)]
pub enum Command {
    /// List the q-decreasing words of length n, one per line.
    List {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1, value_parser = q_arg())]
        q: u64,
        #[arg(long, value_enum, default_value_t = Order::Lex)]
        order: Order,
    },
    /// Count q-decreasing words of length n exactly.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1, value_parser = q_arg())]
        q: u64,
        /// Break the count down by number of 1s (one line per k).
        #[arg(long)]
        by_ones: bool,
        /// Report 1s-popularity and frequency ratios instead.
        #[arg(long, conflicts_with = "by_ones")]
        frequency: bool,
    },
    /// Expand a generating function into exact coefficients.
    Series {
        #[arg(long, value_enum)]
        kind: SeriesKind,
        #[arg(long, default_value_t = 1, value_parser = q_arg())]
        q: u64,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Apply a bijection map to a word.
    Map {
        #[arg(long, value_enum)]
        dir: Direction,
        #[arg(long, default_value_t = 1, value_parser = q_arg())]
        q: u64,
        #[arg(long)]
        word: String,
    },
    /// Re-check a listing order against the brute-force word set.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=24))]
        n: u64,
        #[arg(long, default_value_t = 1, value_parser = q_arg())]
        q: u64,
        #[arg(long, value_enum, default_value_t = Order::Lex)]
        order: Order,
    },
    /// Build the Fibonacci-run graph R_n and print it as DOT text.
    Graph {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=28))]
        n: u64,
        /// Write the DOT text to a file instead of standard output.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Highlight the Hamiltonian path.
        #[arg(long)]
        with_path: bool,
    },
    /// Exhaustively search for a 1-Gray code of the length-n words.
    Search {
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=24))]
        n: u64,
        #[arg(long, default_value_t = 2, value_parser = q_arg())]
        q: u64,
        /// Search-node budget before giving up.
        #[arg(long, env = "QDEC_SEARCH_BUDGET", default_value_t = 50_000_000)]
        budget: u64,
    },
}

/// Execute a parsed invocation, writing results to standard output.
pub fn run(cli: Cli) -> Result<(), Error> {
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    match cli.command {
        Command::List { n, q, order } => {
            let q = Q::new(q as u32)?;
            match order {
                Order::Lex => {
                    let mut line = vec![0u8; n + 1];
                    line[n] = b'\n';
                    lex_stream(n, q, |bits| {
                        for (c, &b) in line.iter_mut().zip(bits) {
                            *c = if b { b'1' } else { b'0' };
                        }
                        out.write_all(&line).expect("write to stdout");
                    });
                }
                Order::Brgc => print_list(&mut out, &brgc_list(n, q)),
                Order::Gray1 => {
                    if q.get() != 1 {
                        return Err(Error::Gray1RequiresQ1);
                    }
                    print_list(&mut out, &gray1_w(n));
                }
            }
        }
        Command::Count {
            n,
            q,
            by_ones,
            frequency,
        } => {
            let q = Q::new(q as u32)?;
            if by_ones {
                for (k, c) in count_by_ones(n, q).iter().enumerate() {
                    writeln!(out, "{k},{c}").expect("write to stdout");
                }
            } else if frequency {
                let r = frequency_report(n, q);
                writeln!(out, "u={}", r.u).expect("write to stdout");
                writeln!(out, "v={}", r.v).expect("write to stdout");
                writeln!(out, "total_bits={}", r.total_bits).expect("write to stdout");
                writeln!(out, "ratio_qdec={}", r.ratio_qdec).expect("write to stdout");
                writeln!(out, "ratio_fib={}", r.ratio_fib).expect("write to stdout");
            } else {
                writeln!(out, "{}", count_qdecreasing(n, q)).expect("write to stdout");
            }
        }
        Command::Series {
            kind,
            q,
            n_max,
            format,
        } => {
            let q = Q::new(q as u32)?;
            let table = expand_series(kind.into(), q, n_max);
            match format {
                Format::Csv => write!(out, "{}", table.to_csv()).expect("write to stdout"),
                Format::Json => writeln!(out, "{}", table.to_json()).expect("write to stdout"),
            }
        }
        Command::Map { dir, q, word } => {
            let q = Q::new(q as u32)?;
            let w: Word = word.parse()?;
            let mapped = match dir {
                Direction::Phi => phi(&w, q)?,
                Direction::PhiInv => phi_inv(&w, q)?,
                Direction::Psi => psi(&w, q),
                Direction::PsiInv => psi_inv(&w, q)?,
            };
            writeln!(out, "{mapped}").expect("write to stdout");
        }
        Command::Verify { n, q, order } => {
            let n = n as usize;
            let q = Q::new(q as u32)?;
            let (list, k) = match order {
                Order::Lex => (
                    WordList::from_words({
                        let mut v = Vec::new();
                        lex_stream(n, q, |bits| v.push(Word::from_bits(bits.iter().copied())));
                        v
                    }),
                    n.max(1),
                ),
                Order::Brgc => (brgc_list(n, q), 3),
                Order::Gray1 => {
                    if q.get() != 1 {
                        return Err(Error::Gray1RequiresQ1);
                    }
                    (gray1_w(n), 1)
                }
            };
            let expected = brute_force_qdecreasing(n, q).into_iter().collect();
            let report = verify_gray(&list, k, &expected);
            let verdict = if report.passes(k) { "pass" } else { "fail" };
            writeln!(
                out,
                "{verdict} words={} max_distance={} duplicate_free={} covers={}",
                list.len(),
                report.max_distance,
                report.duplicate_free,
                report.covers_expected
            )
            .expect("write to stdout");
            if !report.passes(k) {
                drop(out);
                std::process::exit(1);
            }
        }
        Command::Graph { n, dot, with_path } => {
            let n = n as usize;
            let g = build_run_graph(n);
            let path = if with_path {
                Some(hamiltonian_path(n))
            } else {
                None
            };
            let text = export_dot(&g, path.as_ref())?;
            match dot {
                Some(file) => {
                    std::fs::write(&file, text).expect("write DOT file");
                    writeln!(
                        out,
                        "vertices={} edges={} cycle={}",
                        g.vertex_count(),
                        g.edge_count(),
                        path.as_ref().map(is_hamiltonian_cycle).unwrap_or(false)
                    )
                    .expect("write to stdout");
                }
                None => write!(out, "{text}").expect("write to stdout"),
            }
        }
        Command::Search { n, q, budget } => {
            let q = Q::new(q as u32)?;
            match search_gray1(n as usize, q, budget) {
                SearchOutcome::Found(list) => {
                    writeln!(out, "found").expect("write to stdout");
                    print_list(&mut out, &list);
                }
                SearchOutcome::Exhausted => {
                    writeln!(out, "exhausted: no 1-Gray code exists").expect("write to stdout")
                }
                SearchOutcome::BudgetExceeded => {
                    writeln!(out, "inconclusive: budget of {budget} nodes exceeded")
                        .expect("write to stdout")
                }
            }
        }
    }
    Ok(())
}

fn print_list<W: Write>(out: &mut W, list: &WordList) {
    for w in list.words() {
        writeln!(out, "{w}").expect("write to stdout");
    }
}
