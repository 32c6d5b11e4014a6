//! Command-line front end for `pauli-geom`.
//!
//! [`execute`] renders a command to a string; the binary only adds the
//! thread pool, file output, timing and exit codes. Output never depends on
//! the thread count.

mod export;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use pauli_geom::geometry::{
    build_pauli_graph_with, classify_hyperplane, dual_structure, enumerate_mcs_with, find_ovoids_with,
    find_spreads_with, mermin_arrangement, mub_deviation, partition_report, perp_set, verify_polarization,
    BuildOptions, HyperplaneClassification, IncidenceStructure, PartitionName, PauliGraphBundle,
};
use pauli_geom::par::Exec;
use pauli_geom::pauli::SystemParams;
use pauli_geom::ring_lines::{builtin_ring, projective_line, RingName};
use pauli_geom::verify::{run_suite, two_qubit_sets, Suite};

pub use export::{graph_export, GraphExport};

/// Spreads whose bases deviate less than this are reported as unbiased.
pub const MUB_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Parser)]
#[command(name = "pauli-geom", version, about = "Pauli graphs of qudits and their finite geometries")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads; 1 runs every kernel sequentially.
    #[arg(long, global = true, env = "PAULI_GEOM_THREADS")]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct System {
    /// Prime qudit dimension.
    #[arg(long)]
    pub p: u32,
    /// Number of qudits.
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Commutation graph with its invariants.
    Graph {
        #[command(flatten)]
        system: System,
        /// Compare every pair against monomial commutation while building.
        #[arg(long)]
        debug_oracle: bool,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
    /// Maximal commuting sets (lines).
    Mcs {
        #[command(flatten)]
        system: System,
    },
    /// Spreads of lines with their deviation from mutual unbiasedness.
    Spreads {
        #[command(flatten)]
        system: System,
        /// Stop after this many spreads.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Classify point sets as hyperplanes. Without --subset every perp-set
    /// and every ovoid is listed.
    Hyperplanes {
        #[command(flatten)]
        system: System,
        /// Comma-separated point labels; repeatable.
        #[arg(long)]
        subset: Vec<String>,
        /// Work in the dual structure (points are lines, named by line name).
        #[arg(long)]
        dual: bool,
        /// Stop after this many ovoids.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Mermin square arrangement and its row and column products.
    Mermin {
        #[command(flatten)]
        system: System,
        /// Nine comma-separated labels forming a grid; defaults to the
        /// two-qubit Mermin square.
        #[arg(long)]
        subset: Option<String>,
    },
    /// Projective line over a small ring.
    Ringline {
        #[arg(long)]
        ring: RingName,
    },
    /// Check one of the named vertex partitions.
    Partition {
        #[arg(long)]
        name: PartitionName,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments or a command that does not apply; exit code 2.
    #[error("{0}")]
    Usage(String),
    #[error("failed to serialize output: {0}")]
    Json(#[from] serde_json::Error),
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    VerificationFailed,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::VerificationFailed => 1,
        }
    }
}

/// Rendered output of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub body: String,
    pub status: Status,
}

impl Output {
    fn ok(body: String) -> Self {
        Self {
            body,
            status: Status::Success,
        }
    }

    fn checked(body: String, passed: bool) -> Self {
        let status = if passed { Status::Success } else { Status::VerificationFailed };
        Self { body, status }
    }
}

/// Exec strategy implied by the thread setting.
pub fn exec_for(threads: Option<usize>) -> Exec {
    match threads {
        Some(1) => Exec::Sequential,
        _ => Exec::default(),
    }
}

/// Runs `cli` on a dedicated rayon pool sized by `--threads`.
pub fn execute_in_pool(cli: &Cli) -> Result<Output, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
        .map_err(usage)?;
    pool.install(|| execute(cli))
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let exec = exec_for(cli.threads);
    if cli.format == Format::Dot && !matches!(cli.command, Command::Graph { .. }) {
        return Err(usage("--format dot is only available for `graph`"));
    }
    match &cli.command {
        Command::Graph { system, debug_oracle } => {
            let bundle = build(*system, exec, *debug_oracle)?;
            let export = graph_export(&bundle, exec);
            let body = match cli.format {
                Format::Text => export::to_text(&export),
                Format::Json => json(&export)?,
                Format::Dot => export::to_dot(&export),
            };
            Ok(Output::ok(body))
        }
        Command::Verify { suite } => verify(*suite, cli.format),
        Command::Mcs { system } => {
            let bundle = build(*system, exec, false)?;
            let s = enumerate_mcs_with(&bundle, exec).map_err(usage)?;
            mcs(&bundle, &s, cli.format)
        }
        Command::Spreads { system, limit } => spreads(*system, *limit, exec, cli.format),
        Command::Hyperplanes {
            system,
            subset,
            dual,
            limit,
        } => hyperplanes(*system, subset, *dual, *limit, exec, cli.format),
        Command::Mermin { system, subset } => mermin(*system, subset.as_deref(), exec, cli.format),
        Command::Ringline { ring } => ringline(*ring, cli.format),
        Command::Partition { name } => partition(*name, exec, cli.format),
    }
}

fn build(system: System, exec: Exec, debug_oracle: bool) -> Result<PauliGraphBundle, CliError> {
    let params = SystemParams::new(system.p, system.n).map_err(usage)?;
    build_pauli_graph_with(&params, BuildOptions { exec, debug_oracle }).map_err(usage)
}

fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn split_labels(list: &str) -> Vec<&str> {
    list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}

#[derive(Serialize)]
struct Params {
    p: u32,
    n: usize,
}

impl From<System> for Params {
    fn from(s: System) -> Self {
        Self { p: s.p, n: s.n }
    }
}

fn verify(suite: Suite, format: Format) -> Result<Output, CliError> {
    let report = run_suite(suite);
    let body = match format {
        Format::Json => json(&report)?,
        _ => {
            let mut out = String::new();
            for g in &report.groups {
                let _ = writeln!(out, "[{}] {}", if g.passed() { "PASS" } else { "FAIL" }, g.name);
                for c in &g.checks {
                    let tag = match (c.informational, c.passed) {
                        (true, _) => "info",
                        (false, true) => "ok",
                        (false, false) => "FAIL",
                    };
                    let _ = writeln!(out, "  {tag:<4} {}: expected {}, measured {}", c.name, c.expected, c.measured);
                }
            }
            let _ = writeln!(out, "suite {}: {}", suite, if report.passed { "PASS" } else { "FAIL" });
            out
        }
    };
    Ok(Output::checked(body, report.passed))
}

#[derive(Serialize)]
struct LineOut {
    name: String,
    points: Vec<String>,
}

fn mcs(bundle: &PauliGraphBundle, s: &IncidenceStructure, format: Format) -> Result<Output, CliError> {
    let lines: Vec<LineOut> = (0..s.line_count())
        .map(|l| LineOut {
            name: s.line_name(l).to_string(),
            points: s.line_labels(l).into_iter().map(String::from).collect(),
        })
        .collect();
    let params = bundle.params();
    let body = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct McsOut {
                params: Params,
                lines: Vec<LineOut>,
            }
            json(&McsOut {
                params: Params { p: params.p(), n: params.n() },
                lines,
            })?
        }
        _ => {
            let mut out = format!(
                "{} maximal commuting sets of {} operators (p = {}, n = {})\n",
                lines.len(),
                params.dim() - 1,
                params.p(),
                params.n()
            );
            for l in &lines {
                let _ = writeln!(out, "{}: {}", l.name, l.points.join(" "));
            }
            out
        }
    };
    Ok(Output::ok(body))
}

fn spreads(system: System, limit: Option<usize>, exec: Exec, format: Format) -> Result<Output, CliError> {
    #[derive(Serialize)]
    struct SpreadOut {
        lines: Vec<String>,
        mub_deviation: f64,
        unbiased: bool,
    }
    let bundle = build(system, exec, false)?;
    let s = enumerate_mcs_with(&bundle, exec).map_err(usage)?;
    let found = find_spreads_with(&s, limit, exec);
    let mut rows = Vec::with_capacity(found.len());
    for spread in &found {
        let lines: Vec<Vec<usize>> = spread.iter().map(|&l| s.line(l).to_vec()).collect();
        let dev = mub_deviation(&bundle, &lines).map_err(usage)?;
        rows.push(SpreadOut {
            lines: spread.iter().map(|&l| s.line_name(l).to_string()).collect(),
            mub_deviation: dev,
            unbiased: dev < MUB_TOLERANCE,
        });
    }
    let body = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct SpreadsOut {
                params: Params,
                spreads: Vec<SpreadOut>,
            }
            json(&SpreadsOut {
                params: system.into(),
                spreads: rows,
            })?
        }
        _ => {
            let mut out = format!("{} spreads (p = {}, n = {})\n", rows.len(), system.p, system.n);
            for (k, r) in rows.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "{:>3}: {}  deviation {:.2e}{}",
                    k + 1,
                    r.lines.join(" "),
                    r.mub_deviation,
                    if r.unbiased { "" } else { "  BIASED" }
                );
            }
            out
        }
    };
    Ok(Output::ok(body))
}

fn hyperplanes(
    system: System,
    subsets: &[String],
    dual: bool,
    limit: Option<usize>,
    exec: Exec,
    format: Format,
) -> Result<Output, CliError> {
    #[derive(Serialize)]
    struct Row {
        source: String,
        points: Vec<String>,
        #[serde(flatten)]
        classification: HyperplaneClassification,
        reference_label: Option<String>,
    }
    let bundle = build(system, exec, false)?;
    let primal = enumerate_mcs_with(&bundle, exec).map_err(usage)?;
    let s = if dual { dual_structure(&primal) } else { primal };

    let mut sets: Vec<(String, Vec<usize>)> = Vec::new();
    if subsets.is_empty() {
        for x in 0..s.point_count() {
            let perp = perp_set(&s, x).map_err(usage)?;
            sets.push((format!("perp({})", s.point_label(x)), perp));
        }
        for (k, o) in find_ovoids_with(&s, limit, exec).into_iter().enumerate() {
            sets.push((format!("ovoid {}", k + 1), o));
        }
    } else {
        for list in subsets {
            let points = split_labels(list)
                .into_iter()
                .map(|l| s.point_index(l).ok_or_else(|| usage(format!("unknown point {l}"))))
                .collect::<Result<Vec<_>, _>>()?;
            sets.push(("subset".to_string(), points));
        }
    }
    let rows: Vec<Row> = sets
        .into_iter()
        .map(|(source, mut points)| {
            points.sort_unstable();
            points.dedup();
            let classification = classify_hyperplane(&s, &points);
            Row {
                source,
                points: points.iter().map(|&x| s.point_label(x).to_string()).collect(),
                reference_label: classification.reference.map(|x| s.point_label(x).to_string()),
                classification,
            }
        })
        .collect();
    let body = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct HyperplanesOut {
                params: Params,
                dual: bool,
                sets: Vec<Row>,
            }
            json(&HyperplanesOut {
                params: system.into(),
                dual,
                sets: rows,
            })?
        }
        _ => {
            let mut out = String::new();
            for r in &rows {
                let c = &r.classification;
                let mut kind = format!("{:?}", c.kind);
                if let Some(x) = &r.reference_label {
                    let _ = write!(kind, " of {x}");
                }
                if let Some((a, b)) = c.grid {
                    let _ = write!(kind, " {a}x{b}");
                }
                let profile: Vec<String> = c.profile.iter().map(|(m, k)| format!("{k} lines meet {m}")).collect();
                let _ = writeln!(
                    out,
                    "{} [{}]: {} ({})",
                    r.source,
                    r.points.join(" "),
                    kind,
                    profile.join(", ")
                );
            }
            out
        }
    };
    Ok(Output::ok(body))
}

fn mermin(system: System, subset: Option<&str>, exec: Exec, format: Format) -> Result<Output, CliError> {
    let bundle = build(system, exec, false)?;
    let labels: Vec<&str> = match subset {
        Some(list) => split_labels(list),
        None if (system.p, system.n) == (2, 2) => two_qubit_sets::MS.to_vec(),
        None => return Err(usage("mermin needs --subset outside the two-qubit system")),
    };
    let s = enumerate_mcs_with(&bundle, exec).map_err(usage)?;
    let grid = bundle.vertices_of(&labels).map_err(usage)?;
    let arr = mermin_arrangement(&s, &grid).map_err(usage)?;
    let pol = verify_polarization(&bundle, &arr).map_err(usage)?;
    let table: Vec<Vec<String>> = arr
        .iter()
        .map(|row| row.iter().map(|&v| bundle.label(v).to_string()).collect())
        .collect();
    let phases = |xs: &[pauli_geom::pauli::PhaseScalar]| xs.iter().map(ToString::to_string).collect::<Vec<_>>();
    let (rows, columns) = (phases(&pol.rows), phases(&pol.columns));
    let witness = pol.is_kochen_specker_witness();
    let body = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct MerminOut {
                params: Params,
                arrangement: Vec<Vec<String>>,
                row_products: Vec<String>,
                column_products: Vec<String>,
                contradiction: bool,
            }
            json(&MerminOut {
                params: system.into(),
                arrangement: table,
                row_products: rows,
                column_products: columns,
                contradiction: witness,
            })?
        }
        _ => {
            let width = table.iter().flatten().map(String::len).max().unwrap_or(1);
            let mut out = String::new();
            for (row, phase) in table.iter().zip(&rows) {
                let cells: Vec<String> = row.iter().map(|l| format!("{l:>width$}")).collect();
                let _ = writeln!(out, "{}   row {phase}", cells.join(" "));
            }
            let _ = writeln!(out, "columns {}", columns.join(" "));
            let _ = writeln!(out, "no noncontextual assignment: {witness}");
            out
        }
    };
    Ok(Output::ok(body))
}

fn ringline(name: RingName, format: Format) -> Result<Output, CliError> {
    #[derive(Serialize)]
    struct PointOut {
        label: String,
        pairs: usize,
    }
    let ring = builtin_ring(name);
    let line = projective_line(&ring);
    let points: Vec<PointOut> = (0..line.point_count())
        .map(|x| PointOut {
            label: line.label(x).to_string(),
            pairs: line.class_members(x).len(),
        })
        .collect();
    let neighbor: Vec<(usize, usize)> = line.neighbor_graph().edges().collect();
    let units: Vec<String> = ring.units().into_iter().map(|a| ring.label(a).to_string()).collect();
    let body = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct RingLineOut {
                ring: String,
                order: usize,
                commutative: bool,
                units: Vec<String>,
                points: Vec<PointOut>,
                neighbor_edges: Vec<(usize, usize)>,
            }
            json(&RingLineOut {
                ring: name.to_string(),
                order: ring.order(),
                commutative: ring.is_commutative(),
                units,
                points,
                neighbor_edges: neighbor,
            })?
        }
        _ => {
            let mut out = format!(
                "projective line over {} (order {}, {} units): {} points\n",
                name,
                ring.order(),
                units.len(),
                points.len()
            );
            for (x, pt) in points.iter().enumerate() {
                let nb: Vec<&str> = line.neighbor_graph().neighbors(x).iter().map(|y| line.label(y)).collect();
                let nb = if nb.is_empty() { "-".to_string() } else { nb.join(" ") };
                let _ = writeln!(out, "{} ({} pairs) neighbours: {}", pt.label, pt.pairs, nb);
            }
            let _ = writeln!(out, "neighbour pairs {}", neighbor.len());
            out
        }
    };
    Ok(Output::ok(body))
}

fn partition(name: PartitionName, exec: Exec, format: Format) -> Result<Output, CliError> {
    let (p, n) = name.system();
    let bundle = build(System { p, n }, exec, false)?;
    let report = partition_report(&bundle, name).map_err(usage)?;
    let body = match format {
        Format::Json => json(&report)?,
        _ => {
            let mut out = format!("partition {name} (p = {p}, n = {n})\n");
            for part in &report.parts {
                let _ = writeln!(out, "  {} ({}): {}", part.name, part.members.len(), part.members.join(" "));
            }
            for c in &report.checks {
                let tag = if c.passed { "ok" } else { "FAIL" };
                let _ = writeln!(out, "  {tag:<4} {}: {}", c.clause, c.detail);
            }
            let _ = writeln!(out, "{}", if report.passed() { "PASS" } else { "FAIL" });
            out
        }
    };
    Ok(Output::checked(body, report.passed()))
}
