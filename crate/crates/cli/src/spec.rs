//! JSON description of a code together with the parameters claimed for it.

use serde::{Deserialize, Serialize};
use skewcode::{Field, FieldSpec, GrayMap, Matrix, ProductAut, RCodeSpec, RingSpec, SkewRing};

use crate::error::CliError;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSection {
    pub p: u32,
    pub m: u32,
    /// Defining polynomial over `F_p`, constant term first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSection {
    pub l: usize,
    /// Frobenius exponent of each component automorphism.
    pub theta_exps: Vec<u32>,
    pub s: Vec<String>,
    pub a: Vec<String>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraySection {
    /// One matrix used at every position.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
    /// One matrix per position.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<Vec<Vec<Vec<String>>>>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuantumMode {
    /// CSS from the Gray image of a Euclidean dual-containing code.
    Euclidean,
    /// CSS from a code containing its annihilator dual (`l = 1`, `theta = Id`).
    Annihilator,
    #[default]
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuantumClaim {
    pub n: usize,
    pub k: i64,
    pub d: usize,
    /// The distance was stated as a lower bound.
    #[serde(default)]
    pub at_least: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassClaim {
    Mds,
    AlmostMds,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Claims {
    /// `[n, k, d]` of the Gray image.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub linear: Option<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quantum: Option<QuantumClaim>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quantum_class: Option<ClassClaim>,
    /// Free-form remark on the classical code. `MDS` and `Almost MDS` are
    /// checked; anything else is carried along.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub remark: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeFile {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    pub field: FieldSection,
    pub ring: RingSection,
    pub n: usize,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gray: Option<GraySection>,
    #[serde(default)]
    pub quantum: QuantumMode,
    #[serde(default)]
    pub claims: Claims,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tags: Vec<String>,
}

/// Parses a single code object or an array of them.
pub fn parse_codes(text: &str) -> Result<Vec<CodeFile>, CliError> {
    let json = |e: serde_json::Error| CliError::Json(e.to_string());
    let value: serde_json::Value = serde_json::from_str(text).map_err(json)?;
    if value.is_array() {
        serde_json::from_value(value).map_err(json)
    } else {
        Ok(vec![serde_json::from_value(value).map_err(json)?])
    }
}

/// The algebraic objects described by a [`CodeFile`].
#[derive(Clone, Debug)]
pub struct Built {
    pub spec: RCodeSpec,
    pub gray: GrayMap,
    /// Generators as written, before monic normalization.
    pub inputs: Vec<String>,
}

impl CodeFile {
    pub fn field(&self) -> Result<Field, CliError> {
        let spec = match &self.field.modulus {
            Some(m) => FieldSpec::new(self.field.p, self.field.m, m.clone()),
            None => FieldSpec::default_for(self.field.p, self.field.m)?,
        };
        Ok(Field::new(spec)?)
    }

    pub fn build(&self) -> Result<Built, CliError> {
        let field = self.field()?;
        let l = self.ring.l;
        let ring = RingSpec::new(field.clone(), l)?;
        if self.generators.len() != l {
            return Err(CliError::Spec(format!(
                "{}: expected {l} generators, found {}",
                self.name,
                self.generators.len()
            )));
        }
        let theta = ProductAut::new(&ring, self.ring.theta_exps.clone())?;
        let s = ring.parse(&self.ring.s)?;
        let a = ring.parse(&self.ring.a)?;
        let mut gens = Vec::with_capacity(l);
        for (i, text) in self.generators.iter().enumerate() {
            let comp = SkewRing::new(
                field.clone(),
                theta.component(i, field.degree()),
                s.comps[i],
            );
            gens.push(comp.parse(text)?);
        }
        let spec = RCodeSpec::new(ring, theta, s, a, self.n, gens)?;
        let gray = match &self.gray {
            None => GrayMap::identity(field.clone(), l),
            Some(GraySection {
                matrix: Some(m),
                matrices: None,
            }) => GrayMap::broadcast(field.clone(), parse_matrix(&field, m)?)?,
            Some(GraySection {
                matrix: None,
                matrices: Some(ms),
            }) => {
                let mats = ms
                    .iter()
                    .map(|m| parse_matrix(&field, m))
                    .collect::<Result<Vec<_>, _>>()?;
                GrayMap::per_position(field.clone(), mats)?
            }
            Some(_) => {
                return Err(CliError::Spec(format!(
                    "{}: gray needs exactly one of `matrix` and `matrices`",
                    self.name
                )))
            }
        };
        if gray.l() != l {
            return Err(CliError::Spec(format!(
                "{}: Gray matrices must be {l} x {l}",
                self.name
            )));
        }
        Ok(Built {
            spec,
            gray,
            inputs: self.generators.clone(),
        })
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.iter().any(|t| t == tag)
    }
}

fn parse_matrix(field: &Field, rows: &[Vec<String>]) -> Result<Matrix, CliError> {
    let cols = rows.first().map_or(0, |r| r.len());
    let parsed = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|e| field.parse(e))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(cols, &parsed)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SINGLE: &str = r#"{
        "name": "t",
        "field": {"p": 3, "m": 2},
        "ring": {"l": 2, "theta_exps": [1, 1], "s": ["0", "0"], "a": ["1", "2"]},
        "n": 4,
        "generators": ["2x+w+1", "2wx^2+2wx+w"],
        "gray": {"matrix": [["2w", "w"], ["w", "w"]]},
        "quantum": "euclidean",
        "claims": {"linear": [8, 5, 4], "quantum": {"n": 8, "k": 2, "d": 4}, "quantum_class": "mds"}
    }"#;

    #[test]
    fn single_and_array_forms() {
        let one = parse_codes(SINGLE).unwrap();
        assert_eq!(one.len(), 1);
        let many = parse_codes(&format!("[{SINGLE}, {SINGLE}]")).unwrap();
        assert_eq!(many.len(), 2);
        let c = &one[0];
        assert_eq!(c.quantum, QuantumMode::Euclidean);
        assert_eq!(c.claims.quantum_class, Some(ClassClaim::Mds));
        assert!(!c.claims.quantum.unwrap().at_least);
        let built = c.build().unwrap();
        assert_eq!(built.spec.n, 4);
        assert_eq!(built.gray.l(), 2);
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let bad = SINGLE.replace("\"n\": 4", "\"n\": 4, \"length\": 4");
        assert!(matches!(parse_codes(&bad), Err(CliError::Json(_))));
    }

    #[test]
    fn wrong_generator_count() {
        let bad = SINGLE.replace("\"2x+w+1\", ", "");
        let c = &parse_codes(&bad).unwrap()[0];
        assert!(matches!(c.build(), Err(CliError::Spec(_))));
    }

    #[test]
    fn bad_element_is_a_core_error() {
        let bad = SINGLE.replace("2x+w+1", "2x+v");
        let c = &parse_codes(&bad).unwrap()[0];
        assert!(matches!(c.build(), Err(CliError::Core(_))));
    }
}
