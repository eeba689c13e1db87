//! Search over monic right divisors of `x^n - alpha` in one skew ring.

use std::fmt::Write as _;

use clap::Args;
use serde::Serialize;
use skewcode::{duality, Field, FieldSpec, FqCyclicCode, SkewRing};

use crate::error::CliError;
use crate::render;
use crate::{Common, Outcome};

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    /// Characteristic.
    #[arg(long)]
    pub p: u32,
    /// Extension degree.
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    /// Defining polynomial coefficients over F_p, constant term first,
    /// comma separated.
    #[arg(long, value_delimiter = ',')]
    pub modulus: Option<Vec<u32>>,
    /// Frobenius exponent e of theta = sigma_p^e.
    #[arg(long, default_value_t = 0)]
    pub theta: u32,
    /// Derivation parameter s of delta = s (theta - Id).
    #[arg(long, default_value = "0")]
    pub s: String,
    #[arg(long, default_value = "1")]
    pub alpha: String,
    #[arg(long)]
    pub n: usize,
    /// Degree of the divisors.
    #[arg(long)]
    pub degree: usize,
    /// Keep only codes containing their Euclidean dual.
    #[arg(long)]
    pub dual_containing: bool,
    /// Print at most this many codes.
    #[arg(long)]
    pub top: Option<usize>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Clone, Debug, Serialize)]
pub struct Found {
    pub generator: String,
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub exact: bool,
    pub dual_containing: Option<bool>,
}

pub fn run(args: &SearchArgs) -> Result<Outcome, CliError> {
    let found = search(args)?;
    let shown = &found[..args.top.unwrap_or(found.len()).min(found.len())];
    let stdout = if args.common.json {
        let v = serde_json::json!({"schema": render::SCHEMA, "command": "search", "total": found.len(), "codes": shown});
        serde_json::to_string_pretty(&v).expect("serializable") + "\n"
    } else {
        let mut out = String::new();
        let q = args.p.pow(args.m);
        for (i, c) in shown.iter().enumerate() {
            let d = match (c.d, c.exact) {
                (None, _) => "-".to_string(),
                (Some(d), true) => d.to_string(),
                (Some(d), false) => format!("<={d}"),
            };
            let _ = write!(
                out,
                "{:>3}. [{}, {}, {d}]_{q}  {}",
                i + 1,
                c.n,
                c.k,
                c.generator
            );
            if c.dual_containing == Some(true) {
                out.push_str("  dual-containing");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "{} of {} divisors shown", shown.len(), found.len());
        out
    };
    if let Some(path) = &args.common.csv {
        write_csv(path, args.p.pow(args.m), shown)?;
    }
    Ok(Outcome { stdout, code: 0 })
}

/// All matching codes, best first: exact distances before bounds, then by
/// distance, dimension and enumeration order.
pub fn search(args: &SearchArgs) -> Result<Vec<Found>, CliError> {
    let spec = match &args.modulus {
        Some(m) => FieldSpec::new(args.p, args.m, m.clone()),
        None => FieldSpec::default_for(args.p, args.m)?,
    };
    let field = Field::new(spec)?;
    let ring = SkewRing::new(field.clone(), field.aut(args.theta), field.parse(&args.s)?);
    let alpha = field.parse(&args.alpha)?;
    let effort = args.common.effort()?;
    let divisors = ring.monic_right_divisors(args.n, alpha, args.degree, effort.budget())?;

    let mut found = Vec::with_capacity(divisors.len());
    for (idx, g) in divisors.iter().enumerate() {
        let code = FqCyclicCode::new(ring.clone(), args.n, alpha, g)?;
        let dual_containing = if args.dual_containing {
            let hyp = duality::Hypotheses::of(&code);
            if !hyp.all() {
                return Err(CliError::Spec(
                    "dual containment needs s = 0, theta(alpha) = alpha and ord(theta) | n".into(),
                ));
            }
            let v = duality::is_euclidean_dual_containing_fq(&code)?;
            if !v {
                continue;
            }
            Some(v)
        } else {
            None
        };
        let md = code.code().min_distance(&effort);
        found.push((
            idx,
            Found {
                generator: ring.format(g),
                n: args.n,
                k: code.k(),
                d: md.d,
                exact: md.exact,
                dual_containing,
            },
        ));
    }
    found.sort_by(|(ia, a), (ib, b)| {
        b.exact
            .cmp(&a.exact)
            .then(b.d.cmp(&a.d))
            .then(b.k.cmp(&a.k))
            .then(ia.cmp(ib))
    });
    Ok(found.into_iter().map(|(_, f)| f).collect())
}

fn write_csv(path: &std::path::Path, q: u32, rows: &[Found]) -> Result<(), CliError> {
    let io = |e: csv::Error| CliError::Io {
        path: path.display().to_string(),
        source: e.into(),
    };
    let mut w = csv::Writer::from_path(path).map_err(io)?;
    w.write_record(["generator", "q", "n", "k", "d", "exact"])
        .map_err(io)?;
    for f in rows {
        w.write_record([
            f.generator.clone(),
            q.to_string(),
            f.n.to_string(),
            f.k.to_string(),
            f.d.map_or_else(String::new, |d| d.to_string()),
            f.exact.to_string(),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}
