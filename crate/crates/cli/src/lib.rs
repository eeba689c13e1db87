//! Command-line front end for the `skewcode` library.
//!
//! Every command returns its standard output as a string together with the
//! exit code: 0 when all claims hold, 1 on a mismatch or a failed internal
//! cross-check, 2 on unusable input.

pub mod corpus;
pub mod error;
pub mod pipeline;
pub mod render;
pub mod search;
pub mod spec;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use skewcode::{duality, Effort, Error, Field, FieldSpec, LinearCode, Matrix, MinDistance, RCode};

pub use error::CliError;
use pipeline::{Report, Status};
use spec::{parse_codes, CodeFile};

#[derive(Debug, Parser)]
#[command(
    name = "skewcode",
    version,
    about = "Skew constacyclic codes over F_q^l, Gray images and CSS parameters"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Largest number of codewords a single enumeration may visit.
    #[arg(long, default_value_t = Effort::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long)]
    pub workers: Option<usize>,
    /// Print machine-readable JSON instead of text.
    #[arg(long)]
    pub json: bool,
    /// Also write one CSV row per code to this file.
    #[arg(long, value_name = "PATH")]
    pub csv: Option<PathBuf>,
}

impl Common {
    pub fn effort(&self) -> Result<Effort, CliError> {
        let workers = self
            .workers
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        Ok(Effort::new(self.budget, workers)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Direct,
    Macwilliams,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the codes in a JSON file and check their claimed parameters.
    Verify {
        path: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Check the bundled examples and tables.
    Reproduce {
        #[arg(long, value_enum, default_value = "all")]
        table: corpus::Table,
        #[command(flatten)]
        common: Common,
    },
    /// Minimum distance of the Gray image of each code, or of a generator
    /// matrix file `{"field": {..}, "rows": [[..], ..]}`.
    Mindist {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        #[command(flatten)]
        common: Common,
    },
    /// Dual-containment of every component, by the polynomial criteria and
    /// by linear algebra.
    DualCheck {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Quantum parameters of the codes in a JSON file.
    Quantum {
        path: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Enumerate monic right divisors of x^n - alpha and rank their codes.
    Search(search::SearchArgs),
}

/// Output of a command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Verify { path, common } => {
            let files = read_codes(&path)?;
            report_command("verify", &files, &common, Layout::Detailed)
        }
        Command::Reproduce { table, common } => {
            report_command("reproduce", &corpus::load(table), &common, Layout::Table)
        }
        Command::Quantum { path, common } => {
            let files = read_codes(&path)?;
            report_command("quantum", &files, &common, Layout::Quantum)
        }
        Command::Mindist {
            path,
            method,
            common,
        } => mindist(&path, method, &common),
        Command::DualCheck { path, json } => dual_check(&read_codes(&path)?, json),
        Command::Search(args) => search::run(&args),
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn read_codes(path: &Path) -> Result<Vec<CodeFile>, CliError> {
    parse_codes(&read_text(path)?)
}

enum Layout {
    Detailed,
    Table,
    Quantum,
}

fn report_command(
    command: &str,
    files: &[CodeFile],
    common: &Common,
    layout: Layout,
) -> Result<Outcome, CliError> {
    let effort = common.effort()?;
    let reports = files
        .iter()
        .map(|f| pipeline::verify(f, &effort))
        .collect::<Result<Vec<Report>, _>>()?;
    if let Some(path) = &common.csv {
        render::write_csv(path, &reports)?;
    }
    let stdout = if common.json {
        render::json(command, &reports)
    } else {
        match layout {
            Layout::Detailed => render::detailed(&reports),
            Layout::Table => {
                let claims: Vec<_> = files.iter().map(|f| &f.claims).collect();
                render::table(&reports, &claims)
            }
            Layout::Quantum => quantum_text(&reports),
        }
    };
    let code = if reports.iter().any(|r| r.status == Status::Mismatch) {
        1
    } else {
        0
    };
    Ok(Outcome { stdout, code })
}

fn quantum_text(reports: &[Report]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = write!(out, "{}: ", r.name);
        match (&r.quantum, &r.duality) {
            (Some(q), _) => {
                let kind = match q.params.kind {
                    skewcode::DistanceKind::Exact => "exact",
                    skewcode::DistanceKind::LowerBound => "lower bound",
                    skewcode::DistanceKind::Estimate => "estimate",
                };
                let _ = write!(out, "{} {} (distance: {kind})", q.params, q.params.class);
                if let Some(lit) = q.literal_k {
                    let _ = write!(out, "; dim C - nl would give k = {lit}");
                }
            }
            (None, Some(_)) => out.push_str("the code does not contain its dual"),
            (None, None) => out.push_str(
                r.error
                    .as_deref()
                    .unwrap_or("no quantum construction requested"),
            ),
        }
        let _ = writeln!(out, " [{}]", r.status);
    }
    out
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    field: spec::FieldSection,
    rows: Vec<Vec<String>>,
}

fn mindist(path: &Path, method: MethodArg, common: &Common) -> Result<Outcome, CliError> {
    let text = read_text(path)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| CliError::Json(e.to_string()))?;
    let effort = common.effort()?;
    let mut named: Vec<(String, LinearCode)> = Vec::new();
    if value.get("rows").is_some() {
        let m: MatrixFile =
            serde_json::from_value(value).map_err(|e| CliError::Json(e.to_string()))?;
        let field = Field::new(match m.field.modulus {
            Some(modulus) => FieldSpec::new(m.field.p, m.field.m, modulus),
            None => FieldSpec::default_for(m.field.p, m.field.m)?,
        })?;
        let rows = m
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| field.parse(e))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let cols = rows.first().map_or(0, Vec::len);
        let gen = Matrix::from_rows(cols, &rows)?;
        named.push((path.display().to_string(), LinearCode::new(field, &gen)));
    } else {
        for f in parse_codes(&text)? {
            let built = f.build()?;
            let code = RCode::build(built.spec)?;
            named.push((f.name.clone(), built.gray.image(&code)?));
        }
    }

    let mut out = String::new();
    let mut rows = Vec::new();
    for (name, code) in &named {
        let md = distance_by(code, method, &effort)?;
        let d = md.d.map_or_else(|| "-".to_string(), |d| d.to_string());
        let bound = if md.exact { "" } else { "<=" };
        let _ = writeln!(
            out,
            "{name}: [{}, {}, {bound}{d}]_{} ({})",
            code.n(),
            code.k(),
            code.field().order(),
            render::method_name(md.method)
        );
        rows.push(serde_json::json!({
            "name": name, "n": code.n(), "k": code.k(), "q": code.field().order(),
            "d": md.d, "exact": md.exact, "method": md.method,
        }));
    }
    if let Some(p) = &common.csv {
        write_mindist_csv(p, &named, &rows)?;
    }
    if common.json {
        let v = serde_json::json!({"schema": render::SCHEMA, "command": "mindist", "codes": rows});
        out = serde_json::to_string_pretty(&v).expect("serializable") + "\n";
    }
    Ok(Outcome {
        stdout: out,
        code: 0,
    })
}

fn write_mindist_csv(
    path: &Path,
    named: &[(String, LinearCode)],
    rows: &[serde_json::Value],
) -> Result<(), CliError> {
    let io = |e: csv::Error| CliError::Io {
        path: path.display().to_string(),
        source: e.into(),
    };
    let mut w = csv::Writer::from_path(path).map_err(io)?;
    w.write_record(["name", "q", "n", "k", "d", "exact"])
        .map_err(io)?;
    for ((name, code), row) in named.iter().zip(rows) {
        w.write_record([
            name.clone(),
            code.field().order().to_string(),
            code.n().to_string(),
            code.k().to_string(),
            row["d"]
                .as_u64()
                .map_or_else(String::new, |d| d.to_string()),
            row["exact"].to_string(),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Distance by the requested method. `auto` runs both exact methods when
/// both fit the budget and treats disagreement as an oracle violation.
fn distance_by(
    code: &LinearCode,
    method: MethodArg,
    effort: &Effort,
) -> Result<MinDistance, CliError> {
    let q = code.field().order();
    Ok(match method {
        MethodArg::Direct => code.min_distance_direct(effort)?,
        MethodArg::Macwilliams => code.min_distance_macwilliams(effort)?,
        MethodArg::Auto => {
            let direct_ok = effort.allows(q, code.k());
            let dual_ok = effort.allows(q, code.n() - code.k());
            match (direct_ok, dual_ok) {
                (true, true) => {
                    let a = code.min_distance_direct(effort)?;
                    let b = code.min_distance_macwilliams(effort)?;
                    if a.d != b.d {
                        return Err(Error::Oracle(format!(
                            "direct enumeration gives {:?}, MacWilliams gives {:?}",
                            a.d, b.d
                        ))
                        .into());
                    }
                    if code.k() <= code.n() - code.k() {
                        a
                    } else {
                        b
                    }
                }
                _ => code.min_distance(effort),
            }
        }
    })
}

fn dual_check(files: &[CodeFile], json: bool) -> Result<Outcome, CliError> {
    let mut out = String::new();
    let mut entries = Vec::new();
    for f in files {
        let built = f.build()?;
        let code = RCode::build(built.spec)?;
        let _ = writeln!(out, "{}", f.name);
        let mut comps = Vec::new();
        for (i, c) in code.components().iter().enumerate() {
            let ring = c.ring();
            let report = duality::euclidean_report(c)?;
            let linalg = duality::contains_euclidean_dual(c.code());
            let criterion = report.hypotheses.all().then_some(report.dual_containing);
            if criterion.is_some_and(|v| v != linalg) {
                return Err(Error::Oracle(format!(
                    "{} component {i}: Euclidean criterion and linear algebra disagree",
                    f.name
                ))
                .into());
            }
            let _ = write!(
                out,
                "  component {i}: g = {}, h = {}",
                ring.format(c.generator()),
                ring.format(&report.cofactor)
            );
            match &report.dual_generator {
                Some(hd) => {
                    let _ = writeln!(out, ", h+ = {}", ring.format(hd));
                    let _ = writeln!(
                        out,
                        "    euclidean: g | h+ {}, linear algebra {}",
                        yes_no(report.dual_containing),
                        yes_no(linalg)
                    );
                }
                None => {
                    let _ = writeln!(out);
                    let _ = writeln!(
                        out,
                        "    euclidean: criterion does not apply, linear algebra {}",
                        yes_no(linalg)
                    );
                }
            }
            let mut ann = None;
            if ring.theta().is_identity() {
                let crit = duality::is_annihilator_dual_containing(c)?;
                let la = duality::annihilator_dual(c)?.is_subcode_of(c.code());
                if crit != la {
                    return Err(Error::Oracle(format!(
                        "{} component {i}: g | h and linear algebra disagree",
                        f.name
                    ))
                    .into());
                }
                let _ = writeln!(
                    out,
                    "    annihilator: g | h {}, linear algebra {}",
                    yes_no(crit),
                    yes_no(la)
                );
                ann = Some(crit);
            }
            comps.push(serde_json::json!({
                "component": i,
                "generator": ring.format(c.generator()),
                "cofactor": ring.format(&report.cofactor),
                "hypotheses": report.hypotheses,
                "dual_generator": report.dual_generator.as_ref().map(|g| ring.format(g)),
                "euclidean_criterion": criterion,
                "euclidean_linear_algebra": linalg,
                "annihilator": ann,
            }));
        }
        entries.push(serde_json::json!({"name": f.name, "components": comps}));
    }
    if json {
        let v = serde_json::json!({"schema": render::SCHEMA, "command": "dual-check", "codes": entries});
        out = serde_json::to_string_pretty(&v).expect("serializable") + "\n";
    }
    Ok(Outcome {
        stdout: out,
        code: 0,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
