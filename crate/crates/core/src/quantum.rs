//! CSS parameters `[[n, 2k - n, d]]_q` from dual-containing codes, and
//! quantum Singleton classification.

use std::fmt;

use serde::Serialize;

use crate::codes::{Effort, FqCyclicCode, LinearCode, MinDistance, Outside, RCode};
use crate::duality;
use crate::error::{Error, Result};
use crate::gray::GrayMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SingletonClass {
    Mds,
    AlmostMds,
    Neither,
}

impl fmt::Display for SingletonClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SingletonClass::Mds => "MDS",
            SingletonClass::AlmostMds => "almost MDS",
            SingletonClass::Neither => "neither",
        })
    }
}

/// How firmly the quantum distance is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceKind {
    /// Minimum weight over `C \ C^perp`, computed exactly.
    Exact,
    /// The exact classical distance `d(C)`, a lower bound.
    LowerBound,
    /// A classical distance that is itself only an upper bound: no
    /// guarantee in either direction.
    Estimate,
}

/// MDS when `2d = n - k + 2`, almost MDS when `2d >= n - k`.
pub fn classify_singleton(n: usize, k: i64, d: usize) -> SingletonClass {
    let n = n as i64;
    let d2 = 2 * d as i64;
    if d2 == n - k + 2 {
        SingletonClass::Mds
    } else if d2 >= n - k {
        SingletonClass::AlmostMds
    } else {
        SingletonClass::Neither
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QuantumParams {
    pub n: usize,
    pub k: i64,
    pub d: usize,
    pub kind: DistanceKind,
    pub q: u32,
    pub class: SingletonClass,
}

impl QuantumParams {
    pub fn d_exact(&self) -> bool {
        self.kind == DistanceKind::Exact
    }

    /// Classification of a distance that is not exact is provisional.
    pub fn provisional(&self) -> bool {
        !self.d_exact()
    }

    /// `2d <= n - k + 2`.
    pub fn within_singleton(&self) -> bool {
        2 * self.d as i64 <= self.n as i64 - self.k + 2
    }
}

impl fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ge = if self.d_exact() { "" } else { ">=" };
        write!(f, "[[{}, {}, {ge}{}]]_{}", self.n, self.k, self.d, self.q)
    }
}

/// A CSS code together with the distance of the classical code it came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Css {
    pub params: QuantumParams,
    pub classical: MinDistance,
}

/// Parameters of the CSS code from `sub ⊆ code` with `sub` the relevant
/// dual: `[[n, dim code - dim sub, d]]` where `d` is the least weight in
/// `code \ sub` when computable, else `d(code)`. `sub_matches_dual` is
/// passed on to [`LinearCode::nested_distance`].
pub fn css_from_nested(
    code: &LinearCode,
    sub: &LinearCode,
    sub_matches_dual: bool,
    effort: &Effort,
) -> Result<Css> {
    let n = code.n();
    let k = code.k() as i64 - sub.k() as i64;
    let q = code.field().order();
    let nested = code.nested_distance(sub, sub_matches_dual, effort)?;
    let (d, kind) = match nested.outside {
        Outside::Exact(d) => (d, DistanceKind::Exact),
        Outside::Empty | Outside::Unknown => {
            let d = nested
                .code
                .d
                .ok_or_else(|| Error::Hypothesis("the zero code gives no quantum code".into()))?;
            (
                d,
                if nested.code.exact {
                    DistanceKind::LowerBound
                } else {
                    DistanceKind::Estimate
                },
            )
        }
    };
    Ok(Css {
        params: QuantumParams {
            n,
            k,
            d,
            kind,
            q,
            class: classify_singleton(n, k, d),
        },
        classical: nested.code,
    })
}

/// CSS with `C_1 = C_2 = C` for a code containing its Euclidean dual.
pub fn css_single(code: &LinearCode, effort: &Effort) -> Result<Css> {
    let dual = code.dual();
    if !dual.is_subcode_of(code) {
        return Err(Error::Hypothesis(
            "the code does not contain its Euclidean dual".into(),
        ));
    }
    css_from_nested(code, &dual, true, effort)
}

/// CSS from the Gray image of a dual-containing code over `R`; needs zero
/// derivations and `M_j M_j^T = lambda I`.
pub fn css_from_r_code(code: &RCode, gray: &GrayMap, effort: &Effort) -> Result<Css> {
    if !duality::is_euclidean_dual_containing_r(code)? {
        return Err(Error::Hypothesis(
            "some component does not contain its dual".into(),
        ));
    }
    if gray.orthogonality_scalar().is_none() {
        return Err(Error::Hypothesis(
            "the Gray map matrices are not scalar-orthogonal".into(),
        ));
    }
    css_single(&gray.image(code)?, effort)
}

/// CSS from a code containing its annihilator dual (`theta = Id`). The
/// annihilator dual is a monomial image of the Euclidean dual, so the two
/// share a weight distribution.
pub fn css_annihilator(code: &FqCyclicCode, effort: &Effort) -> Result<Css> {
    if !duality::is_annihilator_dual_containing(code)? {
        return Err(Error::Hypothesis("g does not divide h".into()));
    }
    let dual = duality::annihilator_dual(code)?;
    css_from_nested(code.code(), &dual, true, effort)
}

/// The dimension a literal reading `sum k_i - nl` would give, for
/// comparison with `2 sum k_i - nl`.
pub fn literal_dimension(code: &RCode) -> i64 {
    code.dim() as i64 - (code.n() * code.l()) as i64
}
