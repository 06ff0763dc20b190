//! Command-line front end.
//!
//! Subcommands: `exact`, `upper`, `lower`, `report`, `construct`, `verify`,
//! and `table`. Exit codes: 0 success, 1 failed verification, 2 usage error,
//! 3 search budget exhaustion. All output is deterministic: identical
//! invocations produce byte-identical output.
//!
//! The environment variables `GRIDCAST_NODE_BUDGET` and
//! `GRIDCAST_TIME_BUDGET_MS` override the default search budgets.

use std::fmt::Write as _;
use std::io::Write;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{self, BoundReport};
use crate::cert::{verify_certificate, Certificate};
use crate::constructions;
use crate::exact::{self, ExactError, SearchLimits};
use crate::grid::{Family, GridGraph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser)]
#[command(
    name = "gridcast",
    about = "Bounds and certificates for 2-limited broadcast domination on grid-like graphs",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct GraphArgs {
    /// Graph family: pxp, pxc, or cxc.
    #[arg(long)]
    family: Family,
    /// Row count (path length or first cycle).
    #[arg(long)]
    m: u32,
    /// Column count (second path or cycle).
    #[arg(long)]
    n: u32,
}

impl clap::builder::ValueParserFactory for Family {
    type Parser = clap::builder::ValueParser;
    fn value_parser() -> Self::Parser {
        clap::builder::ValueParser::new(|s: &str| s.parse::<Family>().map_err(|e| e.to_string()))
    }
}

impl GraphArgs {
    fn graph(&self) -> Result<GridGraph, String> {
        GridGraph::new(self.family, self.m, self.n).map_err(|e| e.to_string())
    }
}

#[derive(Args)]
struct BudgetArgs {
    /// Maximum number of search nodes.
    #[arg(long)]
    node_budget: Option<u64>,
    /// Wall-clock budget in milliseconds.
    #[arg(long)]
    time_budget_ms: Option<u64>,
    /// Only look for solutions of at most this cost.
    #[arg(long)]
    max_cost: Option<u64>,
}

impl BudgetArgs {
    fn limits(&self) -> SearchLimits {
        let mut limits = SearchLimits::default();
        if let Ok(v) = std::env::var("GRIDCAST_NODE_BUDGET") {
            if let Ok(v) = v.parse() {
                limits.node_budget = v;
            }
        }
        if let Ok(v) = std::env::var("GRIDCAST_TIME_BUDGET_MS") {
            if let Ok(v) = v.parse() {
                limits.time_budget = Some(Duration::from_millis(v));
            }
        }
        if let Some(v) = self.node_budget {
            limits.node_budget = v;
        }
        if let Some(v) = self.time_budget_ms {
            limits.time_budget = Some(Duration::from_millis(v));
        }
        limits.max_cost = self.max_cost;
        limits
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ConstructKind {
    /// Strip tiling broadcast on a 4-row grid.
    P4Tiling,
    /// Mod-13 lattice broadcast on a large grid.
    Lattice,
    /// Uniform torus multipacking.
    CxcMp,
    /// Uniform torus fractional broadcast (dual side).
    CxcFb,
    /// Row-vector cylinder multipacking.
    PxcMp,
    /// Row-vector grid multipacking.
    PxpMp,
    /// Boundary-thirds grid multipacking.
    BoundaryMp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Markdown,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the exact value by branch and bound.
    Exact {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Print the closed-form upper bound.
    Upper {
        #[command(flatten)]
        graph: GraphArgs,
        /// Also print the formula used.
        #[arg(long)]
        verbose: bool,
    },
    /// Print the closed-form lower bound.
    Lower {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        verbose: bool,
    },
    /// Print the bounds sandwich, optionally with the exact value.
    Report {
        #[command(flatten)]
        graph: GraphArgs,
        /// Also compute the exact value when feasible.
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Print provenance lines after the summary.
        #[arg(long)]
        verbose: bool,
    },
    /// Build a construction and write it as a certificate file.
    Construct {
        #[arg(long, value_enum)]
        kind: ConstructKind,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        /// Lattice class override (0..=12); defaults to the best class.
        #[arg(long)]
        ell: Option<u8>,
        /// Output path for the certificate JSON.
        #[arg(long)]
        out: std::path::PathBuf,
    },
    /// Re-verify a certificate file; exits 0 iff the claim holds.
    Verify { path: std::path::PathBuf },
    /// Emit a grid of bounds over ranges of m and n.
    Table {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        m_from: u32,
        #[arg(long)]
        m_to: u32,
        #[arg(long)]
        n_from: u32,
        #[arg(long)]
        n_to: u32,
        /// Comma-separated subset of lower, upper, exact, gap.
        #[arg(long, default_value = "lower,upper,gap")]
        columns: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

/// Runs the CLI against the given arguments, writing to `out`. The first
/// argument is the program name, as in `std::env::args`.
pub fn run<I, S>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(out, "{e}");
            // Help and version requests are successful exits.
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(out, "error: {msg}");
            EXIT_USAGE
        }
    }
}

/// Convenience entry point for the binary: real process arguments, stdout.
pub fn run_from_env() -> i32 {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    run(std::env::args_os(), &mut out)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, String> {
    match cli.cmd {
        Cmd::Exact { graph, budget } => {
            let g = graph.graph()?;
            let limits = budget.limits();
            match exact::exact_bnb(&g, &limits) {
                Ok(outcome) if outcome.proved_optimal => {
                    wline(out, format!("exact={}", outcome.value));
                    Ok(EXIT_OK)
                }
                Ok(outcome) => {
                    wline(
                        out,
                        format!(
                            "incumbent={} (budget exhausted, not proved optimal)",
                            outcome.value
                        ),
                    );
                    Ok(EXIT_BUDGET)
                }
                Err(ExactError::BudgetExceeded) => {
                    wline(out, "budget exhausted before any solution was found".into());
                    Ok(EXIT_BUDGET)
                }
                Err(ExactError::NoSolutionUnderCap(c)) => {
                    wline(out, format!("no dominating broadcast of cost <= {c}"));
                    Ok(EXIT_OK)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Cmd::Upper { graph, verbose } => {
            let g = graph.graph()?;
            let b = bounds::upper_bound(&g).map_err(|e| e.to_string())?;
            wline(out, format!("upper={}", b.value));
            if verbose {
                wline(out, format!("provenance: {}", b.provenance));
            }
            Ok(EXIT_OK)
        }
        Cmd::Lower { graph, verbose } => {
            let g = graph.graph()?;
            let b = bounds::lower_bound(&g).map_err(|e| e.to_string())?;
            wline(out, format!("lower={}", b.value));
            if verbose {
                wline(out, format!("provenance: {}", b.provenance));
            }
            Ok(EXIT_OK)
        }
        Cmd::Report {
            graph,
            exact,
            budget,
            verbose,
        } => {
            let g = graph.graph()?;
            let limits = budget.limits();
            let report = bounds::bound_report(&g, exact, &limits).map_err(|e| e.to_string())?;
            wline(out, report.summary());
            if verbose {
                print_report_detail(&report, out);
            }
            Ok(EXIT_OK)
        }
        Cmd::Construct {
            kind,
            m,
            n,
            ell,
            out: path,
        } => {
            let cert = build_certificate(kind, m as u64, n as u64, ell)?;
            std::fs::write(&path, cert.to_json()).map_err(|e| e.to_string())?;
            wline(
                out,
                format!(
                    "wrote {} ({:?} claim, bound {})",
                    path.display(),
                    cert.claim.direction,
                    cert.claim.bound
                ),
            );
            Ok(EXIT_OK)
        }
        Cmd::Verify { path } => {
            let raw = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
            match Certificate::from_json(&raw).and_then(|c| verify_certificate(&c)) {
                Ok(msg) => {
                    wline(out, format!("verified: {msg}"));
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    wline(out, format!("FAILED: {e}"));
                    Ok(EXIT_VERIFY_FAILED)
                }
            }
        }
        Cmd::Table {
            family,
            m_from,
            m_to,
            n_from,
            n_to,
            columns,
            format,
            budget,
        } => {
            let columns = parse_columns(&columns)?;
            // Empty ranges emit an empty table; non-empty ranges must start
            // at the family minima.
            if m_from <= m_to && n_from <= n_to {
                GridGraph::new(family, m_from, n_from).map_err(|e| e.to_string())?;
            }
            let text = emit_table(
                family,
                (m_from, m_to),
                (n_from, n_to),
                &columns,
                format,
                &budget.limits(),
            )?;
            let _ = write!(out, "{text}");
            Ok(EXIT_OK)
        }
    }
}

fn wline(out: &mut dyn Write, s: String) {
    let _ = writeln!(out, "{s}");
}

fn print_report_detail(report: &BoundReport, out: &mut dyn Write) {
    wline(out, format!("graph: {}", report.graph));
    wline(
        out,
        format!("lower provenance: {}", report.lower.provenance),
    );
    wline(
        out,
        format!("upper provenance: {}", report.upper.provenance),
    );
    if let Some(e) = &report.exact {
        wline(out, format!("exact provenance: {}", e.provenance));
    }
    for cert in &report.certificates {
        wline(
            out,
            format!(
                "certificate: {:?} {:?} bound {} ({})",
                cert.kind, cert.claim.direction, cert.claim.bound, cert.provenance
            ),
        );
    }
}

fn build_certificate(
    kind: ConstructKind,
    m: u64,
    n: u64,
    ell: Option<u8>,
) -> Result<Certificate, String> {
    match kind {
        ConstructKind::P4Tiling => {
            if m != 4 {
                return Err("strip tilings are defined on 4-row grids (--m 4)".into());
            }
            let b = constructions::p4_tiling(n).map_err(|e| e.to_string())?;
            Ok(Certificate::for_broadcast(&b, "strip tiling".into()))
        }
        ConstructKind::Lattice => {
            let class = match ell {
                Some(e) => constructions::LatticeClass::new(e)
                    .ok_or_else(|| "lattice class must be 0..=12".to_string())?,
                None => {
                    constructions::best_lattice_ell(m, n)
                        .map_err(|e| e.to_string())?
                        .0
                }
            };
            let b = constructions::lattice_broadcast(m, n, class).map_err(|e| e.to_string())?;
            Ok(Certificate::for_broadcast(
                &b,
                format!("lattice broadcast, class {class}"),
            ))
        }
        ConstructKind::CxcMp => {
            let pair = constructions::cxc_multipacking_pair(m, n).map_err(|e| e.to_string())?;
            Ok(Certificate::for_lp_side(
                &pair.multipacking,
                "uniform torus packing".into(),
            ))
        }
        ConstructKind::CxcFb => {
            let pair = constructions::cxc_multipacking_pair(m, n).map_err(|e| e.to_string())?;
            Ok(Certificate::for_lp_side(
                &pair.fractional_broadcast,
                "uniform torus fractional broadcast".into(),
            ))
        }
        ConstructKind::PxcMp => {
            let w = constructions::pxc_vector_multipacking(m, n).map_err(|e| e.to_string())?;
            Ok(Certificate::for_multipacking(
                &w,
                "row-vector cylinder packing".into(),
            ))
        }
        ConstructKind::PxpMp => {
            let w = constructions::pxp_multipacking_from_vector(m, n).map_err(|e| e.to_string())?;
            Ok(Certificate::for_multipacking(
                &w,
                "row-vector grid packing".into(),
            ))
        }
        ConstructKind::BoundaryMp => {
            let g = GridGraph::new(Family::PxP, m as u32, n as u32).map_err(|e| e.to_string())?;
            let w = constructions::boundary_thirds_multipacking(&g).map_err(|e| e.to_string())?;
            Ok(Certificate::for_multipacking(
                &w,
                "boundary-thirds packing".into(),
            ))
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Column {
    Lower,
    Upper,
    Exact,
    Gap,
}

impl Column {
    fn name(self) -> &'static str {
        match self {
            Column::Lower => "lower",
            Column::Upper => "upper",
            Column::Exact => "exact",
            Column::Gap => "gap",
        }
    }
}

fn parse_columns(s: &str) -> Result<Vec<Column>, String> {
    s.split(',')
        .map(|c| match c.trim() {
            "lower" => Ok(Column::Lower),
            "upper" => Ok(Column::Upper),
            "exact" => Ok(Column::Exact),
            "gap" => Ok(Column::Gap),
            other => Err(format!("unknown column `{other}`")),
        })
        .collect()
}

/// Renders a bounds table over the requested ranges. Rows are emitted in
/// (m, n) order regardless of computation order.
fn emit_table(
    family: Family,
    (m_from, m_to): (u32, u32),
    (n_from, n_to): (u32, u32),
    columns: &[Column],
    format: TableFormat,
    limits: &SearchLimits,
) -> Result<String, String> {
    let mut rows: Vec<(u32, u32, Vec<Option<u64>>)> = Vec::new();
    let want_exact = columns.contains(&Column::Exact);
    for m in m_from..=m_to {
        for n in n_from..=n_to {
            let g = GridGraph::new(family, m, n).map_err(|e| e.to_string())?;
            let report = bounds::bound_report(&g, want_exact, limits).map_err(|e| e.to_string())?;
            let mut cells = Vec::new();
            for c in columns {
                cells.push(match c {
                    Column::Lower => Some(report.lower.value),
                    Column::Upper => Some(report.upper.value),
                    Column::Exact => report.exact.as_ref().map(|b| b.value),
                    Column::Gap => Some(report.upper.value - report.lower.value),
                });
            }
            rows.push((m, n, cells));
        }
    }

    let mut text = String::new();
    match format {
        TableFormat::Csv => {
            let header: Vec<&str> = ["m", "n"]
                .into_iter()
                .chain(columns.iter().map(|c| c.name()))
                .collect();
            let _ = writeln!(text, "{}", header.join(","));
            for (m, n, cells) in rows {
                let mut fields = vec![m.to_string(), n.to_string()];
                fields.extend(cells.iter().map(|c| cell_text(*c)));
                let _ = writeln!(text, "{}", fields.join(","));
            }
        }
        TableFormat::Markdown => {
            let header: Vec<&str> = ["m", "n"]
                .into_iter()
                .chain(columns.iter().map(|c| c.name()))
                .collect();
            let _ = writeln!(text, "| {} |", header.join(" | "));
            let _ = writeln!(text, "|{}|", vec!["---"; header.len()].join("|"));
            for (m, n, cells) in rows {
                let mut fields = vec![m.to_string(), n.to_string()];
                fields.extend(cells.iter().map(|c| cell_text(*c)));
                let _ = writeln!(text, "| {} |", fields.join(" | "));
            }
        }
        TableFormat::Json => {
            let objects: Vec<serde_json::Value> = rows
                .into_iter()
                .map(|(m, n, cells)| {
                    let mut obj = serde_json::Map::new();
                    obj.insert("m".into(), m.into());
                    obj.insert("n".into(), n.into());
                    for (c, v) in columns.iter().zip(cells) {
                        obj.insert(
                            c.name().into(),
                            v.map(Into::into).unwrap_or(serde_json::Value::Null),
                        );
                    }
                    serde_json::Value::Object(obj)
                })
                .collect();
            let _ = writeln!(
                text,
                "{}",
                serde_json::to_string_pretty(&objects).expect("table serializes")
            );
        }
    }
    Ok(text)
}

fn cell_text(v: Option<u64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}
