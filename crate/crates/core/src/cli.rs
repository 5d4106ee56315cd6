//! Command-line front end.
//!
//! Exit codes: 0 clean, 1 violation found, 2 usage or input error (and
//! `reconstruct` with no candidate).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::canon::{free_code, VertexKind};
use crate::config::{Config, JOBS_ENV};
use crate::deck::{build_card_index, deck_of};
use crate::enumerate::{enumerate_free_trees_with_cap, DEFAULT_CAP};
use crate::error::ReconstructError;
use crate::reconstruct::{crn, reconstruct_from_brush_cards, BrushCardPair, CrnResult};
use crate::structure::find_brushes;
use crate::tree::{Forest, Tree};
use crate::verify::{self, ViolationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "treerecon", version, about = "Tree reconstruction from vertex-deleted cards")]
pub struct Cli {
    /// Worker threads (results do not depend on it)
    #[arg(long, global = true, env = JOBS_ENV, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: u32,
    /// Largest tree order accepted by the enumerator
    #[arg(long, global = true, default_value_t = DEFAULT_CAP as u32, value_parser = clap::value_parser!(u32).range(1..))]
    cap: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every free tree on N vertices
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Print only the number of trees
        #[arg(long)]
        count_only: bool,
        /// Write trees to FILE instead of standard output
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Print the deck of a tree as `k× <code>` lines
    Deck {
        #[arg(long, value_name = "FILE")]
        tree: PathBuf,
    },
    /// Print the brushes of a tree
    Brushes {
        #[arg(long, value_name = "FILE")]
        tree: PathBuf,
    },
    /// Rebuild a tree from the cards of a brush leaf and its root
    Reconstruct {
        /// Card obtained by deleting the brush leaf (a tree)
        #[arg(long, value_name = "FILE")]
        card_u: PathBuf,
        /// Card obtained by deleting the brush root (a forest)
        #[arg(long, value_name = "FILE")]
        card_v: PathBuf,
        /// Check that all accepted candidates are isomorphic
        #[arg(long)]
        checked: bool,
    },
    /// Class reconstruction numbers of all trees on N vertices, or of one tree
    Crn {
        /// Report every tree of this order
        #[arg(long)]
        n: Option<usize>,
        /// Report one tree read from FILE
        #[arg(long, value_name = "FILE")]
        tree: Option<PathBuf>,
    },
    /// Run an exhaustive verification suite
    Verify(VerifyArgs),
    /// Search for reconstruction phenomena
    Search(SearchArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Suite {
    #[value(name = "thm1", alias = "thm-main")]
    Thm1,
    Hp0,
    Remark,
    Conjecture,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// Order to check (the last order when --from is given)
    #[arg(long)]
    n: usize,
    /// Also check every order from this one up to N
    #[arg(long)]
    from: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SearchKind {
    Ambiguous,
    Nonrecognizable,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(value_enum)]
    kind: SearchKind,
    /// Order to search (the upper bound with --smallest)
    #[arg(long)]
    n: usize,
    /// Scan upward from order 4 and report the first order with results
    #[arg(long)]
    smallest: bool,
}

/// Error carrying the exit code it maps to.
struct Failure {
    code: i32,
    msg: String,
}

fn usage(msg: impl ToString) -> Failure {
    Failure { code: EXIT_USAGE, msg: msg.to_string() }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_tree(path: &Path) -> Result<Tree, Failure> {
    Tree::parse(&read_file(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_forest(path: &Path) -> Result<Forest, Failure> {
    Forest::parse(&read_file(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| usage(format!("write failed: {e}")))
}

fn crn_line(r: &CrnResult) -> String {
    let witness: Vec<&str> = r.witness.iter().map(|c| c.as_str()).collect();
    format!("crn={} witness={}", r.value, witness.join(","))
}

fn reports_exit(reports: &[ViolationReport]) -> i32 {
    if reports.iter().all(ViolationReport::is_clean) {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

fn run_command(cmd: Command, config: &Config, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Enumerate { n, count_only, out: path } => {
            let stream = enumerate_free_trees_with_cap(n, config.cap).map_err(usage)?;
            let text = if count_only {
                format!("{}\n", stream.count())
            } else {
                stream.map(|t| t.to_text()).collect::<Vec<_>>().join("\n")
            };
            match path {
                Some(p) => fs::write(&p, text).map_err(|e| usage(format!("{}: {e}", p.display())))?,
                None => emit(out, &text)?,
            }
        }
        Command::Deck { tree } => {
            let t = read_tree(&tree)?;
            let deck = deck_of(&t).map_err(usage)?;
            let mut text = String::new();
            for (code, k) in deck.counts() {
                text.push_str(&format!("{k}× {code}\n"));
            }
            emit(out, &text)?;
        }
        Command::Brushes { tree } => {
            let t = read_tree(&tree)?;
            let mut text = String::new();
            for b in find_brushes(&t).map_err(usage)? {
                let leaves: Vec<String> = b.leaves.iter().map(|v| v.to_string()).collect();
                text.push_str(&format!("root={} k={} leaves={}\n", b.root, b.k(), leaves.join(",")));
            }
            emit(out, &text)?;
        }
        Command::Reconstruct { card_u, card_v, checked } => {
            let pair = BrushCardPair::new(&read_forest(&card_u)?, &read_forest(&card_v)?).map_err(usage)?;
            match reconstruct_from_brush_cards(&pair, checked || config.checked) {
                Ok(t) => emit(out, &t.to_text())?,
                Err(e @ ReconstructError::MultipleCandidates { .. }) => {
                    return Err(Failure { code: EXIT_VIOLATION, msg: e.to_string() })
                }
                Err(e) => return Err(usage(e)),
            }
        }
        Command::Crn { n, tree } => match tree {
            Some(path) => {
                let t = read_tree(&path)?;
                if let Some(n) = n.filter(|&n| n != t.n()) {
                    return Err(usage(format!("--n {n} does not match tree order {}", t.n())));
                }
                let index = build_card_index(t.n(), config).map_err(usage)?;
                let r = crn(&t, &index).map_err(usage)?;
                emit(out, &format!("tree={} {}\n", free_code(&t), crn_line(&r)))?;
            }
            None => {
                let n = n.ok_or_else(|| usage("crn needs --n or --tree"))?;
                let mut text = String::new();
                for (code, r) in verify::crn_table(n, config).map_err(usage)? {
                    text.push_str(&format!("tree={code} {}\n", crn_line(&r)));
                }
                emit(out, &text)?;
            }
        },
        Command::Verify(args) => {
            let from = args.from.unwrap_or(args.n);
            if from > args.n {
                return Err(usage("--from must not exceed --n"));
            }
            let mut reports = Vec::new();
            let mut text = String::new();
            for n in from..=args.n {
                match args.suite {
                    Suite::Thm1 => reports.push(verify::verify_theorem_main(n, config).map_err(usage)?),
                    Suite::Hp0 => {
                        for kind in [VertexKind::Leaf, VertexKind::NearLeaf] {
                            reports.push(verify::verify_hp0(n, kind, config).map_err(usage)?);
                        }
                    }
                    Suite::Remark => reports.push(verify::verify_remark(n, config).map_err(usage)?),
                    Suite::Conjecture => {
                        let c = verify::check_conjecture(n, config).map_err(usage)?;
                        text.push_str(&c.render());
                        reports.push(c.report);
                        continue;
                    }
                }
            }
            if !matches!(args.suite, Suite::Conjecture) {
                text = reports.iter().map(ViolationReport::render).collect();
            }
            emit(out, &text)?;
            return Ok(reports_exit(&reports));
        }
        Command::Search(args) => {
            let from = if args.smallest { 4.min(args.n) } else { args.n };
            let text = match args.kind {
                SearchKind::Ambiguous => {
                    let found = verify::smallest_order(from, args.n, |n| verify::search_ambiguous_pairs(n, config))
                        .map_err(usage)?;
                    let (n, fams) = found.unwrap_or((args.n, Vec::new()));
                    let mut text = format!("search=ambiguous n={n} families={}\n", fams.len());
                    for f in &fams {
                        text.push_str(&format!("  {} verified={}\n", f.render(), f.reverify()));
                    }
                    text
                }
                SearchKind::Nonrecognizable => {
                    let found = verify::smallest_order(from, args.n, |n| verify::search_nonrecognizable(n, config))
                        .map_err(usage)?;
                    let (n, hits) = found.unwrap_or((args.n, Vec::new()));
                    let mut text = format!("search=nonrecognizable n={n} witnesses={}\n", hits.len());
                    for w in &hits {
                        text.push_str(&format!("  {} verified={}\n", w.render(), w.reverify()));
                    }
                    text
                }
            };
            emit(out, &text)?;
        }
    }
    Ok(EXIT_OK)
}

/// Parses `argv` (including the program name), runs the command, and
/// returns the process exit code.
pub fn dispatch<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    let config = Config::default().with_jobs(cli.jobs as usize).with_cap(cli.cap as usize);
    match run_command(cli.command, &config, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}
