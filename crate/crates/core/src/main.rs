use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use sigma_index::bounds::{self, BoundContext, Convention, Overrides};
use sigma_index::degseq::{self, DegreeSequence};
use sigma_index::graph;
use sigma_index::indices::{compute_index, IndexKind};
use sigma_index::oracle::{self, AuditParams, TreeFamily};
use sigma_index::par::Exec;
use sigma_index::report::{self, CsvTable};
use sigma_index::{Error, Result};

/// Sigma index toolkit: indices, bound evaluation, exhaustive audits and table reproduction.
#[derive(Parser)]
#[command(name = "sigma-index", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Every index of a graph given as an edge list.
    Indices { file: PathBuf },
    /// Evaluate the bound registry on a degree sequence.
    Bounds {
        /// Comma-separated entries, optionally in parentheses.
        #[arg(long)]
        seq: String,
        #[arg(long, default_value = "full")]
        conv: Convention,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        eta: Option<u32>,
        #[arg(long)]
        sigma: Option<u64>,
        /// Restrict to one bound id.
        #[arg(long)]
        id: Option<String>,
    },
    /// Audit a bound (or `thm23`, `identity`) over a tree family; prints a JSON report.
    Audit {
        #[arg(long)]
        bound: String,
        /// Inclusive order range `a..b`.
        #[arg(long)]
        n_range: String,
        #[arg(long, value_enum, default_value = "all")]
        family: Family,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        eta: Option<u32>,
        /// Worker threads; 1 runs sequentially.
        #[arg(long)]
        workers: Option<usize>,
        /// Exit with status 3 when any violation is found.
        #[arg(long)]
        expect_holds: bool,
    },
    /// Reproduce the parameter table (1), the σ bound table (2) or its correlation matrix (corr).
    Tables {
        #[arg(long)]
        which: Which,
        /// Emit β uniformly in table 1.
        #[arg(long)]
        consistent: bool,
        /// One sequence per line instead of the built-in rows.
        #[arg(long)]
        seq_file: Option<PathBuf>,
        /// For `corr`: read a table-2 CSV instead of recomputing.
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Exact min and max σ over all labeled trees of order N or with a given degree sequence.
    Extremal {
        #[arg(long, conflicts_with = "seq", required_unless_present = "seq")]
        n: Option<usize>,
        #[arg(long)]
        seq: Option<String>,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Plot data for a table CSV: writes the SVG and a `.csv` series file beside it.
    Plot {
        #[arg(long)]
        kind: String,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Least-squares fit of one CSV column on others.
    Fit {
        #[arg(long)]
        y: String,
        /// Comma-separated regressor columns.
        #[arg(long, value_delimiter = ',')]
        x: Vec<String>,
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    All,
    Paths,
    Stars,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    Corr,
}

/// Successful run: text for stdout and an exit status.
struct Output {
    text: String,
    status: u8,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output { text, status: 0 }
    }
}

fn input_error(msg: impl Into<String>) -> Error {
    Error::Io(std::io::Error::new(std::io::ErrorKind::InvalidInput, msg.into()))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn parse_range(s: &str) -> Result<Vec<usize>> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| input_error(format!("bad order range {s:?}")));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if a > b {
        return Err(input_error(format!("empty order range {s:?}")));
    }
    Ok((a..=b).collect())
}

fn parse_seq(s: &str) -> Result<Vec<usize>> {
    Ok(degseq::positive_entries(&degseq::parse_entries(s)?)?)
}

fn pretty<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn run(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Indices { file } => {
            let g = graph::parse_edge_list(&read(&file)?)?;
            let values: serde_json::Map<String, serde_json::Value> = IndexKind::ALL
                .iter()
                .map(|&k| (k.name().to_string(), json!(compute_index(k, &g).to_string())))
                .collect();
            let out = json!({
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "is_tree": g.is_tree(),
                "indices": values,
            });
            Ok(pretty(&out).into())
        }
        Command::Bounds { seq, conv, k, eta, sigma, id } => {
            let entries = parse_seq(&seq)?;
            let ctx = BoundContext::from_entries(&entries, conv, Overrides { k, eta, sigma, ..Default::default() })?;
            let results = match id {
                Some(id) => vec![bounds::evaluate_bound(&id, &ctx)?],
                None => bounds::evaluate_all(&ctx),
            };
            Ok(pretty(&results).into())
        }
        Command::Audit { bound, n_range, family, k, eta, workers, expect_holds } => {
            let orders = parse_range(&n_range)?;
            let family = match family {
                Family::All => TreeFamily::AllLabeled(orders),
                Family::Paths => TreeFamily::Paths(orders),
                Family::Stars => TreeFamily::Stars(orders),
            };
            let exec = Exec::from_workers(workers);
            let report = match bound.to_ascii_lowercase().as_str() {
                "thm23" => oracle::scan_thm23(&family, exec)?,
                "identity" => oracle::audit_identity(&family, exec)?,
                _ => oracle::audit_bound(&bound, &family, AuditParams { k, eta }, exec)?,
            };
            let status = if expect_holds && report.violated > 0 { 3 } else { 0 };
            Ok(Output { text: report.to_json() + "\n", status })
        }
        Command::Tables { which, consistent, seq_file, input } => {
            let custom = seq_file.map(|p| read(&p).and_then(|t| Ok(report::parse_sequence_list(&t)?))).transpose()?;
            let text = match which {
                Which::One => report::cmd_table1(&custom.unwrap_or_else(report::table1_sequences), consistent)?,
                Which::Two => report::cmd_table2(&custom.unwrap_or_else(report::table2_sequences))?,
                Which::Corr => {
                    let m = match input {
                        Some(p) => {
                            let table = CsvTable::parse(&read(&p)?)?;
                            report::correlation(&report::table2_columns_from_csv(&table)?)?
                        }
                        None => {
                            let rows = report::table2_rows(&custom.unwrap_or_else(report::table2_sequences))?;
                            report::cmd_correlation(&rows)?
                        }
                    };
                    report::correlation_csv(&m)
                }
            };
            Ok(text.into())
        }
        Command::Extremal { n, seq, workers } => {
            let exec = Exec::from_workers(workers);
            let result = match (n, seq) {
                (Some(n), _) => oracle::extremal_sigma(n, exec)?,
                (None, Some(s)) => {
                    let d = DegreeSequence::validate(&degseq::parse_entries(&s)?)?;
                    oracle::extremal_sigma_for_sequence(&d, exec)?
                }
                (None, None) => return Err(input_error("one of --n or --seq is required")),
            };
            Ok(pretty(&result).into())
        }
        Command::Plot { kind, input, out } => {
            let table = CsvTable::parse(&read(&input)?)?;
            let plot = report::cmd_plot(&table, &kind)?;
            fs::write(&out, plot.to_svg())?;
            let series_path = out.with_extension("csv");
            fs::write(&series_path, plot.to_csv())?;
            Ok(format!("wrote {} and {}\n", out.display(), series_path.display()).into())
        }
        Command::Fit { y, x, input } => {
            let table = CsvTable::parse(&read(&input)?)?;
            let ys = table.column(&y)?;
            let xs = x.iter().map(|c| table.column(c)).collect::<std::result::Result<Vec<_>, _>>()?;
            let fit = report::fit(&ys, &xs).map_err(Error::from)?;
            Ok(pretty(&json!({ "y": y, "x": x, "fit": fit })).into())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_resource_guard() { 2 } else { 1 })
        }
    }
}
