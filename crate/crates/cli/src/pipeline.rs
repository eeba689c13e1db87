//! The verification pipeline: build a code from its description, compute
//! its parameters and compare them with the claims attached to it.

use std::fmt;

use serde::Serialize;
use skewcode::codes::{Dimensions, Method};
use skewcode::duality::{self, Hypotheses};
use skewcode::quantum::{self, classify_singleton, Css, DistanceKind};
use skewcode::{Effort, Error, LinearCode, MinDistance, QuantumParams, RCode, SingletonClass};

use crate::error::CliError;
use crate::spec::{Built, ClassClaim, CodeFile, QuantumClaim, QuantumMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Status {
    #[serde(rename = "REPRODUCED")]
    Reproduced,
    #[serde(rename = "BOUND-ONLY")]
    BoundOnly,
    #[serde(rename = "MISMATCH")]
    Mismatch,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Reproduced => "REPRODUCED",
            Status::BoundOnly => "BOUND-ONLY",
            Status::Mismatch => "MISMATCH",
        })
    }
}

/// One claim compared with the computed value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub item: String,
    pub claimed: String,
    pub computed: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorInfo {
    pub component: usize,
    pub input: String,
    /// The monic generator actually used.
    pub monic: String,
    /// `u` with `u * input = monic`.
    pub scale: String,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearReport {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub exact: bool,
    pub method: Method,
    pub q: u32,
}

impl LinearReport {
    fn new(code: &LinearCode, md: MinDistance) -> Self {
        LinearReport {
            n: code.n(),
            k: code.k(),
            d: md.d,
            exact: md.exact,
            method: md.method,
            q: code.field().order(),
        }
    }
}

impl fmt::Display for LinearReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = match (self.d, self.exact) {
            (None, _) => "-".to_string(),
            (Some(d), true) => d.to_string(),
            (Some(d), false) => format!("<={d}"),
        };
        write!(f, "[{}, {}, {d}]_{}", self.n, self.k, self.q)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentDuality {
    pub component: usize,
    /// `h` with `x^n - a_i = h g_i`.
    pub cofactor: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypotheses: Option<Hypotheses>,
    /// Generator of the dual (`h^dagger`) when the hypotheses hold.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_generator: Option<String>,
    /// Verdict of the polynomial criterion, when it applies.
    pub criterion: Option<bool>,
    /// Verdict of linear algebra on the component code.
    pub linear_algebra: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityInfo {
    pub mode: QuantumMode,
    pub components: Vec<ComponentDuality>,
    /// `lambda` with `M M^T = lambda I` (Euclidean mode).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gray_scalar: Option<String>,
    /// Whether the code handed to the CSS construction contains its dual.
    pub dual_containing: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuantumReport {
    #[serde(flatten)]
    pub params: QuantumParams,
    pub d_exact: bool,
    /// `dim C - nl`, reported next to the dimension actually used.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub literal_k: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    pub q: u32,
    pub l: usize,
    pub n: usize,
    pub generators: Vec<GeneratorInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimensions: Option<Dimensions>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub linear: Option<LinearReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duality: Option<DualityInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quantum: Option<QuantumReport>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub status: Status,
}

impl Report {
    /// Whether some generator was rescaled to be monic.
    pub fn normalized(&self) -> bool {
        self.generators.iter().any(|g| g.scale != "1")
    }

    fn finish(mut self) -> Self {
        self.status = self
            .checks
            .iter()
            .map(|c| c.status)
            .max()
            .unwrap_or(Status::Reproduced);
        if self.error.is_some() {
            self.status = Status::Mismatch;
        }
        self
    }
}

/// Runs the whole pipeline on one description.
///
/// Unusable input is an `Err`; a generator that does not divide its
/// modulus yields a report with status `MISMATCH`. Internal cross-check
/// failures are returned as `Error::Oracle`.
pub fn verify(file: &CodeFile, effort: &Effort) -> Result<Report, CliError> {
    let built = file.build()?;
    let field = built.spec.field().clone();
    let mut report = Report {
        name: file.name.clone(),
        group: file.group.clone(),
        q: field.order(),
        l: built.spec.ring.l(),
        n: built.spec.n,
        generators: Vec::new(),
        dimensions: None,
        closed: None,
        linear: None,
        duality: None,
        quantum: None,
        checks: Vec::new(),
        error: None,
        notes: file.notes.clone(),
        status: Status::Reproduced,
    };

    let code = match RCode::build(built.spec.clone()) {
        Ok(c) => c,
        Err(e @ Error::NotRightDivisor { .. }) => {
            report.checks.push(Check {
                item: "divisibility".into(),
                claimed: "right divisors".into(),
                computed: e.to_string(),
                status: Status::Mismatch,
                note: None,
            });
            report.error = Some(e.to_string());
            return Ok(report.finish());
        }
        Err(e) => return Err(e.into()),
    };
    report.generators = generator_info(&built, &code);
    report.dimensions = Some(code.dimensions());

    let closed = built.spec.closure_check()?;
    report.closed = Some(closed);
    if !closed {
        return Err(
            Error::Oracle("a divisor generated a code that is not closed under T".into()).into(),
        );
    }

    let image = built.gray.image(&code)?;
    let css = match file.quantum {
        QuantumMode::None => None,
        QuantumMode::Euclidean => {
            let info = euclidean_duality(&code, &built, &image)?;
            let css = if info.dual_containing {
                Some(quantum::css_single(&image, effort)?)
            } else {
                None
            };
            report.duality = Some(info);
            css
        }
        QuantumMode::Annihilator => {
            let comp = match code.components() {
                [c] => c,
                _ => {
                    return Err(CliError::Spec(format!(
                        "{}: annihilator mode needs l = 1",
                        file.name
                    )))
                }
            };
            let info = annihilator_duality(comp)?;
            let css = if info.dual_containing {
                Some(quantum::css_annihilator(comp, effort)?)
            } else {
                None
            };
            report.duality = Some(info);
            css
        }
    };
    let classical = match &css {
        Some(Css { classical, .. }) => *classical,
        None => image.min_distance(effort),
    };
    let linear = LinearReport::new(&image, classical);
    if let Some(Css { params, .. }) = css {
        let literal = quantum::literal_dimension(&code);
        report.quantum = Some(QuantumReport {
            params,
            d_exact: params.d_exact(),
            literal_k: (file.quantum == QuantumMode::Euclidean && literal != params.k)
                .then_some(literal),
        });
    }

    compare_linear(&mut report.checks, file, &linear);
    compare_quantum(
        &mut report.checks,
        file,
        report.duality.as_ref(),
        report.quantum.as_ref(),
    );
    report.linear = Some(linear);
    Ok(report.finish())
}

fn generator_info(built: &Built, code: &RCode) -> Vec<GeneratorInfo> {
    let field = code.field();
    code.components()
        .iter()
        .enumerate()
        .map(|(i, c)| GeneratorInfo {
            component: i,
            input: built.inputs[i].clone(),
            monic: c.ring().format(c.generator()),
            scale: field.format(c.scale()),
            degree: c.generator().degree().unwrap_or(0),
        })
        .collect()
}

fn euclidean_duality(
    code: &RCode,
    built: &Built,
    image: &LinearCode,
) -> Result<DualityInfo, CliError> {
    let mut components = Vec::new();
    let mut all_criterion = Some(true);
    for (i, c) in code.components().iter().enumerate() {
        let report = duality::euclidean_report(c)?;
        let linear_algebra = duality::contains_euclidean_dual(c.code());
        let criterion = report.hypotheses.all().then_some(report.dual_containing);
        if let Some(v) = criterion {
            if v != linear_algebra {
                return Err(Error::Oracle(format!(
                    "component {i}: divisibility says {v}, linear algebra says {linear_algebra}"
                ))
                .into());
            }
        }
        all_criterion = match (all_criterion, criterion) {
            (Some(a), Some(b)) => Some(a && b),
            _ => None,
        };
        components.push(ComponentDuality {
            component: i,
            cofactor: c.ring().format(&report.cofactor),
            hypotheses: Some(report.hypotheses),
            dual_generator: report.dual_generator.as_ref().map(|g| c.ring().format(g)),
            criterion,
            linear_algebra,
        });
    }
    let lambda = built.gray.orthogonality_scalar();
    let image_contains = duality::contains_euclidean_dual(image);
    if let (Some(true), Some(_)) = (all_criterion, lambda) {
        if !image_contains {
            return Err(Error::Oracle("dual-containing components with an orthogonal Gray map gave an image that does not contain its dual".into()).into());
        }
    }
    Ok(DualityInfo {
        mode: QuantumMode::Euclidean,
        components,
        gray_scalar: lambda.map(|l| code.field().format(l)),
        dual_containing: image_contains,
    })
}

fn annihilator_duality(c: &skewcode::FqCyclicCode) -> Result<DualityInfo, CliError> {
    let criterion = duality::is_annihilator_dual_containing(c)?;
    let linear_algebra = duality::annihilator_dual(c)?.is_subcode_of(c.code());
    if criterion != linear_algebra {
        return Err(Error::Oracle(format!(
            "g | h says {criterion}, linear algebra says {linear_algebra}"
        ))
        .into());
    }
    Ok(DualityInfo {
        mode: QuantumMode::Annihilator,
        components: vec![ComponentDuality {
            component: 0,
            cofactor: c.ring().format(c.cofactor()),
            hypotheses: None,
            dual_generator: None,
            criterion: Some(criterion),
            linear_algebra,
        }],
        gray_scalar: None,
        dual_containing: criterion,
    })
}

fn bracket(n: usize, k: usize, d: usize) -> String {
    format!("[{n}, {k}, {d}]")
}

fn compare_linear(checks: &mut Vec<Check>, file: &CodeFile, got: &LinearReport) {
    let computed = got.to_string();
    if let Some([n, k, d]) = file.claims.linear {
        let (status, note) = if n != got.n || k != got.k {
            (
                Status::Mismatch,
                Some("length or dimension differs".to_string()),
            )
        } else {
            distance_status(d, got)
        };
        checks.push(Check {
            item: "linear".into(),
            claimed: bracket(n, k, d),
            computed: computed.clone(),
            status,
            note,
        });
    }
    let target = match file.claims.remark.as_deref() {
        Some("MDS") => Some((got.n + 1).saturating_sub(got.k)),
        Some("Almost MDS") => Some(got.n.saturating_sub(got.k)),
        _ => None,
    };
    if let (Some(target), Some(remark)) = (target, &file.claims.remark) {
        let (status, note) = distance_status(target, got);
        checks.push(Check {
            item: "remark".into(),
            claimed: format!("{remark} (d = {target})"),
            computed,
            status,
            note,
        });
    }
}

/// Compares a claimed distance with an exact value or an upper bound.
fn distance_status(claimed: usize, got: &LinearReport) -> (Status, Option<String>) {
    match got.d {
        None => (Status::Mismatch, Some("the code is zero".into())),
        Some(d) if got.exact => {
            if d == claimed {
                (Status::Reproduced, None)
            } else {
                (Status::Mismatch, Some(format!("exact distance is {d}")))
            }
        }
        Some(bound) => {
            if bound < claimed {
                (
                    Status::Mismatch,
                    Some(format!("a codeword of weight {bound} exists")),
                )
            } else {
                (
                    Status::BoundOnly,
                    Some("exact distance exceeds the budget".into()),
                )
            }
        }
    }
}

fn quantum_string(c: &QuantumClaim, q: u32) -> String {
    let ge = if c.at_least { ">=" } else { "" };
    format!("[[{}, {}, {ge}{}]]_{q}", c.n, c.k, c.d)
}

/// The quantum distance when it is settled: exact, or `k = 0` where the
/// code has no words outside its dual and `d(C)` is used.
fn settled_distance(p: &QuantumParams) -> Option<usize> {
    match p.kind {
        DistanceKind::Exact => Some(p.d),
        DistanceKind::LowerBound if p.k == 0 => Some(p.d),
        _ => None,
    }
}

fn compare_quantum(
    checks: &mut Vec<Check>,
    file: &CodeFile,
    duality: Option<&DualityInfo>,
    quantum: Option<&QuantumReport>,
) {
    let claim = match file.claims.quantum {
        Some(c) => c,
        None => return,
    };
    let q = file.field.p.pow(file.field.m);
    let claimed = quantum_string(&claim, q);
    let p = match quantum {
        Some(r) => r.params,
        None => {
            let reason = match duality {
                None => "no quantum construction requested".to_string(),
                Some(_) => "the code does not contain its dual".to_string(),
            };
            checks.push(Check {
                item: "quantum".into(),
                claimed,
                computed: "-".into(),
                status: Status::Mismatch,
                note: Some(reason),
            });
            return;
        }
    };
    let computed = p.to_string();
    let mut notes = Vec::new();
    if !claim.at_least && 2 * claim.d as i64 > claim.n as i64 - claim.k + 2 {
        notes.push("the claim violates the quantum Singleton bound".to_string());
    }
    let status = if claim.n != p.n || claim.k != p.k {
        notes.push("length or dimension differs".into());
        Status::Mismatch
    } else {
        match (settled_distance(&p), p.kind) {
            (Some(d), _) => {
                let ok = if claim.at_least {
                    d >= claim.d
                } else {
                    d == claim.d
                };
                if !ok {
                    notes.push(format!("the distance is {d}"));
                }
                if ok {
                    Status::Reproduced
                } else {
                    Status::Mismatch
                }
            }
            (None, DistanceKind::LowerBound) => {
                if claim.at_least && p.d >= claim.d {
                    Status::Reproduced
                } else if !claim.at_least && claim.d < p.d {
                    notes.push(format!("the distance is at least {}", p.d));
                    Status::Mismatch
                } else {
                    notes.push("only the lower bound d(C) is known".into());
                    Status::BoundOnly
                }
            }
            (None, _) => {
                notes.push("the classical distance is only an estimate".into());
                Status::BoundOnly
            }
        }
    };
    checks.push(Check {
        item: "quantum".into(),
        claimed,
        computed,
        status,
        note: (!notes.is_empty()).then(|| notes.join("; ")),
    });

    if let Some(class) = file.claims.quantum_class {
        let want = match class {
            ClassClaim::Mds => SingletonClass::Mds,
            ClassClaim::AlmostMds => SingletonClass::AlmostMds,
        };
        let (status, computed, note) = match settled_distance(&p) {
            Some(d) => {
                let got = classify_singleton(p.n, p.k, d);
                (
                    if got == want {
                        Status::Reproduced
                    } else {
                        Status::Mismatch
                    },
                    got.to_string(),
                    None,
                )
            }
            None => (
                Status::BoundOnly,
                format!("{} (provisional)", p.class),
                Some("the quantum distance is not exact".to_string()),
            ),
        };
        checks.push(Check {
            item: "class".into(),
            claimed: want.to_string(),
            computed,
            status,
            note,
        });
    }
}
