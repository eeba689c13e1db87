//! Text, JSON and CSV output for pipeline reports.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use skewcode::SingletonClass;

use crate::error::CliError;
use crate::pipeline::{Report, Status};
use crate::spec::ClassClaim;

/// Version tag of the JSON output.
pub const SCHEMA: &str = "skewcode/1";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub reproduced: usize,
    pub bound_only: usize,
    pub mismatch: usize,
}

impl Summary {
    pub fn of(reports: &[Report]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            match r.status {
                Status::Reproduced => s.reproduced += 1,
                Status::BoundOnly => s.bound_only += 1,
                Status::Mismatch => s.mismatch += 1,
            }
        }
        s
    }
}

pub fn json(command: &str, reports: &[Report]) -> String {
    let value = serde_json::json!({
        "schema": SCHEMA,
        "command": command,
        "reports": reports,
        "summary": Summary::of(reports),
    });
    serde_json::to_string_pretty(&value).expect("reports serialize") + "\n"
}

/// One row per report: `name, q, n, k, d, exact` of the classical code and
/// the quantum triple when there is one.
pub fn write_csv(path: &Path, reports: &[Report]) -> Result<(), CliError> {
    let io = |e: csv::Error| CliError::Io {
        path: path.display().to_string(),
        source: e.into(),
    };
    let mut w = csv::Writer::from_path(path).map_err(io)?;
    w.write_record([
        "name",
        "q",
        "n",
        "k",
        "d",
        "exact",
        "quantum_n",
        "quantum_k",
        "quantum_d",
        "quantum_exact",
        "status",
    ])
    .map_err(io)?;
    for r in reports {
        let opt = |v: Option<String>| v.unwrap_or_default();
        let lin = r.linear.as_ref();
        let qp = r.quantum.as_ref().map(|q| q.params);
        w.write_record([
            r.name.clone(),
            r.q.to_string(),
            opt(lin.map(|l| l.n.to_string())),
            opt(lin.map(|l| l.k.to_string())),
            opt(lin.and_then(|l| l.d).map(|d| d.to_string())),
            opt(lin.map(|l| l.exact.to_string())),
            opt(qp.map(|p| p.n.to_string())),
            opt(qp.map(|p| p.k.to_string())),
            opt(qp.map(|p| p.d.to_string())),
            opt(qp.map(|p| p.d_exact().to_string())),
            r.status.to_string(),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| CliError::Io {
        path: path.display().to_string(),
        source: e,
    })
}

fn marker(class: SingletonClass) -> &'static str {
    match class {
        SingletonClass::Mds => " *",
        SingletonClass::AlmostMds => " **",
        SingletonClass::Neither => "",
    }
}

fn claim_marker(class: Option<ClassClaim>) -> &'static str {
    match class {
        Some(ClassClaim::Mds) => " *",
        Some(ClassClaim::AlmostMds) => " **",
        None => "",
    }
}

/// Notes that apply to a whole run, printed once.
fn run_notes(reports: &[Report]) -> Vec<String> {
    let mut notes = Vec::new();
    if reports.iter().any(Report::normalized) {
        notes.push(
            "some generators were scaled to be monic; the codes they generate are unchanged"
                .to_string(),
        );
    }
    if let Some((name, literal)) = reports.iter().find_map(|r| {
        r.quantum
            .as_ref()
            .and_then(|q| q.literal_k)
            .map(|k| (&r.name, k))
    }) {
        notes.push(format!(
            "quantum dimensions are 2 dim C - nl; the reading dim C - nl would give k = {literal} for {name}"
        ));
    }
    notes
}

fn classical_cell(r: &Report) -> String {
    r.linear
        .as_ref()
        .map_or_else(|| "-".to_string(), |l| l.to_string())
}

fn quantum_cell(r: &Report) -> String {
    match &r.quantum {
        Some(q) => format!("{}{}", q.params, marker(q.params.class)),
        None => "-".into(),
    }
}

/// The claims as they would be printed in a table row.
fn claim_cells(r: &Report, claims: &crate::spec::Claims) -> (String, String) {
    let lin = claims.linear.map_or_else(
        || "-".to_string(),
        |[n, k, d]| format!("[{n}, {k}, {d}]_{}", r.q),
    );
    let quant = claims.quantum.map_or_else(
        || "-".to_string(),
        |c| {
            let ge = if c.at_least { ">=" } else { "" };
            format!(
                "[[{}, {}, {ge}{}]]_{}{}",
                c.n,
                c.k,
                c.d,
                r.q,
                claim_marker(claims.quantum_class)
            )
        },
    );
    (lin, quant)
}

/// Status table with one row per entry, followed by the reasons for every
/// row that is not reproduced.
pub fn table(reports: &[Report], claims: &[&crate::spec::Claims]) -> String {
    let header = [
        "name", "computed", "claimed", "quantum", "claimed", "status",
    ];
    let rows: Vec<[String; 6]> = reports
        .iter()
        .zip(claims)
        .map(|(r, c)| {
            let (cl, cq) = claim_cells(r, c);
            [
                r.name.clone(),
                classical_cell(r),
                cl,
                quantum_cell(r),
                cq,
                r.status.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[String]| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(cell);
            } else {
                let _ = write!(s, "{cell:<w$}  ");
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(&header.map(String::from));
    for row in &rows {
        line(row);
    }

    let mut details = String::new();
    for r in reports.iter().filter(|r| r.status != Status::Reproduced) {
        for c in r.checks.iter().filter(|c| c.status != Status::Reproduced) {
            let _ = write!(
                details,
                "{}: {} {}: claimed {}, computed {}",
                r.name, c.item, c.status, c.claimed, c.computed
            );
            if let Some(note) = &c.note {
                let _ = write!(details, " ({note})");
            }
            details.push('\n');
        }
    }
    if !details.is_empty() {
        out.push('\n');
        out.push_str(&details);
    }
    out.push_str(&footer(reports));
    out
}

fn footer(reports: &[Report]) -> String {
    let mut out = String::new();
    let notes = run_notes(reports);
    if !notes.is_empty() {
        out.push('\n');
        for n in notes {
            let _ = writeln!(out, "note: {n}");
        }
    }
    let s = Summary::of(reports);
    let _ = writeln!(
        out,
        "\n{} entries: {} reproduced, {} bound-only, {} mismatch",
        reports.len(),
        s.reproduced,
        s.bound_only,
        s.mismatch
    );
    out
}

/// Detailed report of every entry.
pub fn detailed(reports: &[Report]) -> String {
    let mut out = String::new();
    for (i, r) in reports.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "{} (F_{}, l = {}, n = {})", r.name, r.q, r.l, r.n);
        for g in &r.generators {
            let _ = write!(out, "  g{} = {}", g.component, g.input);
            if g.scale != "1" {
                let _ = write!(out, "  -> {} (scaled by {})", g.monic, g.scale);
            }
            out.push('\n');
        }
        if let Some(d) = &r.dimensions {
            let parts: Vec<String> = d.components.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "  dimension   {} = {}", parts.join(" + "), d.total);
        }
        if let Some(lin) = &r.linear {
            let _ = writeln!(out, "  image       {lin} ({})", method_name(lin.method));
        }
        if let Some(dual) = &r.duality {
            for c in &dual.components {
                let _ = write!(out, "  component {} h = {}", c.component, c.cofactor);
                if let Some(hd) = &c.dual_generator {
                    let _ = write!(out, ", h+ = {hd}");
                }
                let _ = writeln!(out, ", contains dual: {}", yes_no(c.linear_algebra));
            }
            if let Some(l) = &dual.gray_scalar {
                let _ = writeln!(out, "  M M^T       {l} I");
            }
            let _ = writeln!(out, "  dual-containing: {}", yes_no(dual.dual_containing));
        }
        if let Some(q) = &r.quantum {
            let provisional = if q.params.provisional() {
                " (provisional)"
            } else {
                ""
            };
            let _ = writeln!(
                out,
                "  quantum     {} {}{provisional}",
                q.params, q.params.class
            );
        }
        if let Some(e) = &r.error {
            let _ = writeln!(out, "  error       {e}");
        }
        for c in &r.checks {
            let _ = write!(
                out,
                "  {:<11} claimed {}, computed {}: {}",
                c.item, c.claimed, c.computed, c.status
            );
            if let Some(n) = &c.note {
                let _ = write!(out, " ({n})");
            }
            out.push('\n');
        }
        for n in &r.notes {
            let _ = writeln!(out, "  note        {n}");
        }
        let _ = writeln!(out, "  status      {}", r.status);
    }
    out.push_str(&footer(reports));
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn method_name(m: skewcode::codes::Method) -> &'static str {
    match m {
        skewcode::codes::Method::Direct => "direct",
        skewcode::codes::Method::Macwilliams => "MacWilliams",
        skewcode::codes::Method::Search => "upper bound",
    }
}
