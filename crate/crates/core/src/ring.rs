//! The product ring `R = F_q^l`, its componentwise Frobenius automorphisms
//! `Theta = theta_1 x .. x theta_l`, inner derivations `Delta_{Theta,s}` and
//! skew polynomials over `R` kept in split (per-component) form.
//!
//! Component indices are zero-based throughout: `e_0, .., e_{l-1}`.

use crate::error::{Error, Result};
use crate::gf::{Fe, Field, FieldAut};
use crate::skewpoly::{SkewPoly, SkewRing};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    field: Field,
    l: usize,
}

/// An element `(r_1, .., r_l)` of `R`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    pub comps: Vec<Fe>,
}

impl RingElement {
    pub fn new(comps: Vec<Fe>) -> Self {
        RingElement { comps }
    }
}

impl RingSpec {
    pub fn new(field: Field, l: usize) -> Result<Self> {
        if l == 0 {
            return Err(Error::InvalidSpec("the product ring needs l >= 1".into()));
        }
        Ok(RingSpec { field, l })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn zero(&self) -> RingElement {
        RingElement::new(vec![Fe::ZERO; self.l])
    }

    pub fn one(&self) -> RingElement {
        RingElement::new(vec![Fe::ONE; self.l])
    }

    /// The diagonal embedding `a -> (a, .., a)`.
    pub fn diag(&self, a: Fe) -> RingElement {
        RingElement::new(vec![a; self.l])
    }

    /// Standard idempotent `e_i`.
    pub fn idempotent(&self, i: usize) -> Result<RingElement> {
        if i >= self.l {
            return Err(Error::InvalidSpec(format!(
                "idempotent index {i} out of range for l = {}",
                self.l
            )));
        }
        let mut e = self.zero();
        e.comps[i] = Fe::ONE;
        Ok(e)
    }

    fn check(&self, r: &RingElement) -> Result<()> {
        if r.comps.len() != self.l {
            return Err(Error::Dimension(format!(
                "ring element has {} components, expected {}",
                r.comps.len(),
                self.l
            )));
        }
        Ok(())
    }

    fn zip(
        &self,
        a: &RingElement,
        b: &RingElement,
        op: impl Fn(Fe, Fe) -> Fe,
    ) -> Result<RingElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(RingElement::new(
            a.comps
                .iter()
                .zip(&b.comps)
                .map(|(&x, &y)| op(x, y))
                .collect(),
        ))
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.zip(a, b, |x, y| self.field.add(x, y))
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.zip(a, b, |x, y| self.field.sub(x, y))
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.zip(a, b, |x, y| self.field.mul(x, y))
    }

    /// Units of `R` are the elements with no zero component.
    pub fn is_unit(&self, r: &RingElement) -> bool {
        r.comps.len() == self.l && r.comps.iter().all(|c| !c.is_zero())
    }

    pub fn parse(&self, parts: &[impl AsRef<str>]) -> Result<RingElement> {
        if parts.len() != self.l {
            return Err(Error::InvalidSpec(format!(
                "expected {} components, got {}",
                self.l,
                parts.len()
            )));
        }
        let comps = parts
            .iter()
            .map(|p| self.field.parse(p.as_ref()))
            .collect::<Result<_>>()?;
        Ok(RingElement::new(comps))
    }

    pub fn format(&self, r: &RingElement) -> String {
        let parts: Vec<String> = r.comps.iter().map(|&c| self.field.format(c)).collect();
        format!("({})", parts.join(", "))
    }

    /// All `q^l` elements, first component varying fastest.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        let q = self.field.order() as u64;
        let total = q.pow(self.l as u32);
        (0..total).map(move |mut idx| {
            let comps = (0..self.l)
                .map(|_| {
                    let c = Fe((idx % q) as u32);
                    idx /= q;
                    c
                })
                .collect();
            RingElement::new(comps)
        })
    }
}

/// `Theta = sigma_p^{e_1} x .. x sigma_p^{e_l}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProductAut {
    exps: Vec<u32>,
}

impl ProductAut {
    pub fn new(ring: &RingSpec, exps: Vec<u32>) -> Result<Self> {
        if exps.len() != ring.l {
            return Err(Error::InvalidSpec(format!(
                "expected {} automorphism exponents, got {}",
                ring.l,
                exps.len()
            )));
        }
        let m = ring.field.degree();
        Ok(ProductAut {
            exps: exps.into_iter().map(|e| e % m).collect(),
        })
    }

    pub fn identity(ring: &RingSpec) -> Self {
        ProductAut {
            exps: vec![0; ring.l],
        }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn component(&self, i: usize, m: u32) -> FieldAut {
        FieldAut::new(self.exps[i], m)
    }

    /// `Theta(r) = (theta_1(r_1), .., theta_l(r_l))`.
    pub fn apply(&self, ring: &RingSpec, r: &RingElement) -> Result<RingElement> {
        ring.check(r)?;
        let m = ring.field.degree();
        Ok(RingElement::new(
            r.comps
                .iter()
                .enumerate()
                .map(|(i, &c)| ring.field.apply_aut(self.component(i, m), c))
                .collect(),
        ))
    }
}

/// Inner derivation `Delta_{Theta,s}(r) = s (Theta(r) - r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductDerivation {
    pub s: RingElement,
}

impl ProductDerivation {
    pub fn new(s: RingElement) -> Self {
        ProductDerivation { s }
    }

    /// Evaluates `s (Theta(r) - r)` with ring operations on `R`.
    pub fn apply(
        &self,
        ring: &RingSpec,
        theta: &ProductAut,
        r: &RingElement,
    ) -> Result<RingElement> {
        let diff = ring.sub(&theta.apply(ring, r)?, r)?;
        ring.mul(&self.s, &diff)
    }

    /// Evaluates `(delta_{theta_1,s_1}(r_1), .., delta_{theta_l,s_l}(r_l))`.
    pub fn apply_componentwise(
        &self,
        ring: &RingSpec,
        theta: &ProductAut,
        r: &RingElement,
    ) -> Result<RingElement> {
        ring.check(r)?;
        let comps = component_rings(ring, theta, &self.s)?;
        Ok(RingElement::new(
            comps
                .iter()
                .zip(&r.comps)
                .map(|(k, &c)| k.delta(c))
                .collect(),
        ))
    }
}

/// The component rings `F_q[x; theta_i, delta_{theta_i,s_i}]`.
pub fn component_rings(
    ring: &RingSpec,
    theta: &ProductAut,
    s: &RingElement,
) -> Result<Vec<SkewRing>> {
    ring.check(s)?;
    let m = ring.field.degree();
    Ok((0..ring.l)
        .map(|i| SkewRing::new(ring.field.clone(), theta.component(i, m), s.comps[i]))
        .collect())
}

/// `R[x; Theta, Delta_{Theta,s}]`, operated on componentwise.
#[derive(Clone, Debug)]
pub struct RSkewRing {
    ring: RingSpec,
    theta: ProductAut,
    s: RingElement,
    comps: Vec<SkewRing>,
}

/// A skew polynomial over `R` in split form: one `F_q` polynomial per
/// component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RSkewPoly {
    pub comps: Vec<SkewPoly>,
}

impl RSkewRing {
    pub fn new(ring: RingSpec, theta: ProductAut, s: RingElement) -> Result<Self> {
        let comps = component_rings(&ring, &theta, &s)?;
        Ok(RSkewRing {
            ring,
            theta,
            s,
            comps,
        })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn theta(&self) -> &ProductAut {
        &self.theta
    }

    pub fn s(&self) -> &RingElement {
        &self.s
    }

    pub fn components(&self) -> &[SkewRing] {
        &self.comps
    }

    /// Splits coefficients in `R` into `l` polynomials over `F_q`.
    pub fn crt_split(&self, coeffs: &[RingElement]) -> Result<RSkewPoly> {
        for c in coeffs {
            self.ring.check(c)?;
        }
        Ok(RSkewPoly {
            comps: (0..self.ring.l)
                .map(|i| SkewPoly::new(coeffs.iter().map(|c| c.comps[i]).collect()))
                .collect(),
        })
    }

    /// Joins component polynomials into coefficients in `R`, as
    /// `sum_i e_i g_i(x)`. Trailing zero coefficients are dropped.
    pub fn crt_join(&self, poly: &RSkewPoly) -> Result<Vec<RingElement>> {
        if poly.comps.len() != self.ring.l {
            return Err(Error::Dimension(format!(
                "{} component polynomials for l = {}",
                poly.comps.len(),
                self.ring.l
            )));
        }
        let len = poly
            .comps
            .iter()
            .map(|p| p.coeffs().len())
            .max()
            .unwrap_or(0);
        Ok((0..len)
            .map(|k| RingElement::new(poly.comps.iter().map(|p| p.coeff(k)).collect()))
            .collect())
    }

    pub fn mul(&self, a: &RSkewPoly, b: &RSkewPoly) -> RSkewPoly {
        RSkewPoly {
            comps: self
                .comps
                .iter()
                .zip(a.comps.iter().zip(&b.comps))
                .map(|(k, (x, y))| k.mul(x, y))
                .collect(),
        }
    }

    /// `x^n - a`.
    pub fn x_n_minus(&self, n: usize, a: &RingElement) -> Result<RSkewPoly> {
        self.ring.check(a)?;
        Ok(RSkewPoly {
            comps: self
                .comps
                .iter()
                .zip(&a.comps)
                .map(|(k, &ai)| k.x_n_minus(n, ai))
                .collect(),
        })
    }

    /// Right division succeeds with zero remainder in every component.
    pub fn right_divides(&self, g: &RSkewPoly, f: &RSkewPoly) -> Result<bool> {
        for (k, (gi, fi)) in self.comps.iter().zip(g.comps.iter().zip(&f.comps)) {
            if !k.right_divides(gi, fi)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
