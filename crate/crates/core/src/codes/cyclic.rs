use serde::Serialize;

use super::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::Matrix;
use crate::ring::{ProductAut, ProductDerivation, RSkewRing, RingElement, RingSpec};
use crate::skewpoly::{SkewPoly, SkewRing};

/// `T(c) = (alpha theta(c_{n-1}) + delta(c_0), theta(c_0) + delta(c_1), ..,
/// theta(c_{n-2}) + delta(c_{n-1}))`: multiplication by `x` modulo
/// `x^n - alpha` in coordinates.
pub fn pseudo_linear_apply(ring: &SkewRing, alpha: Fe, c: &[Fe]) -> Vec<Fe> {
    let f = ring.field();
    let n = c.len();
    (0..n)
        .map(|j| {
            let shifted = if j == 0 {
                f.mul(alpha, ring.apply_theta(c[n - 1]))
            } else {
                ring.apply_theta(c[j - 1])
            };
            f.add(shifted, ring.delta(c[j]))
        })
        .collect()
}

/// The same map over `R`, computed with ring operations and the global
/// derivation `s (Theta(r) - r)`.
pub fn pseudo_linear_apply_r(
    rs: &RSkewRing,
    a: &RingElement,
    c: &[RingElement],
) -> Result<Vec<RingElement>> {
    let ring = rs.ring();
    let theta = rs.theta();
    let delta = ProductDerivation::new(rs.s().clone());
    let n = c.len();
    (0..n)
        .map(|j| {
            let shifted = if j == 0 {
                ring.mul(a, &theta.apply(ring, &c[n - 1])?)?
            } else {
                theta.apply(ring, &c[j - 1])?
            };
            ring.add(&shifted, &delta.apply(ring, theta, &c[j])?)
        })
        .collect()
}

/// Coefficient vector (length `n`) of the remainder of `f` on right
/// division by `x^n - alpha`.
pub fn reduce_mod(ring: &SkewRing, f: &SkewPoly, n: usize, alpha: Fe) -> Result<Vec<Fe>> {
    let (_, r) = ring.right_divmod(f, &ring.x_n_minus(n, alpha))?;
    Ok(r.to_vec(n))
}

/// Rows `g, T g, .., T^{k-1} g` with `k = n - deg g`. Divisibility is not
/// checked.
pub fn cyclic_rows(ring: &SkewRing, n: usize, alpha: Fe, g: &SkewPoly) -> Result<Matrix> {
    let deg = g.degree().ok_or(Error::DivisionByZero)?;
    if deg > n {
        return Err(Error::InvalidSpec(format!(
            "generator degree {deg} exceeds length {n}"
        )));
    }
    let k = n - deg;
    let mut rows = Vec::with_capacity(k);
    if k > 0 {
        rows.push(g.to_vec(n));
        for t in 1..k {
            let next = pseudo_linear_apply(ring, alpha, &rows[t - 1]);
            rows.push(next);
        }
    }
    Matrix::from_rows(n, &rows)
}

/// Whether the row space of `gen` is mapped into itself by `T`.
pub fn is_closed(ring: &SkewRing, alpha: Fe, gen: &Matrix) -> bool {
    let f = ring.field();
    let images: Vec<Vec<Fe>> = gen
        .row_iter()
        .map(|r| pseudo_linear_apply(ring, alpha, r))
        .collect();
    match Matrix::from_rows(gen.cols(), &images) {
        Ok(img) => img.row_space_within(f, gen),
        Err(_) => false,
    }
}

/// A `(theta, delta, alpha)`-cyclic code `<g>` over `F_q`.
#[derive(Clone, Debug)]
pub struct FqCyclicCode {
    ring: SkewRing,
    n: usize,
    alpha: Fe,
    g: SkewPoly,
    scale: Fe,
    h: SkewPoly,
    code: LinearCode,
}

impl FqCyclicCode {
    /// Builds `<g>`; `g` is left-scaled to be monic and must right-divide
    /// `x^n - alpha`.
    pub fn new(ring: SkewRing, n: usize, alpha: Fe, g: &SkewPoly) -> Result<Self> {
        Self::with_component(ring, n, alpha, g, 0)
    }

    pub(crate) fn with_component(
        ring: SkewRing,
        n: usize,
        alpha: Fe,
        g: &SkewPoly,
        component: usize,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("code length must be positive".into()));
        }
        if alpha.is_zero() {
            return Err(Error::InvalidSpec("alpha must be a unit".into()));
        }
        let (monic, scale) = ring.monic(g)?;
        let modulus = ring.x_n_minus(n, alpha);
        let (h, rem) = ring.right_divmod(&modulus, &monic)?;
        if !rem.is_zero() || monic.degree() > modulus.degree() {
            return Err(Error::NotRightDivisor {
                component,
                poly: ring.format(g),
                modulus: ring.format(&modulus),
            });
        }
        let rows = cyclic_rows(&ring, n, alpha, &monic)?;
        let code = LinearCode::new(ring.field().clone(), &rows);
        Ok(FqCyclicCode {
            ring,
            n,
            alpha,
            g: monic,
            scale,
            h,
            code,
        })
    }

    pub fn ring(&self) -> &SkewRing {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.code.k()
    }

    pub fn alpha(&self) -> Fe {
        self.alpha
    }

    /// Monic generator.
    pub fn generator(&self) -> &SkewPoly {
        &self.g
    }

    /// Unit `u` with `u * g_input = g`; one when the input was monic.
    pub fn scale(&self) -> Fe {
        self.scale
    }

    /// `h` with `x^n - alpha = h g`.
    pub fn cofactor(&self) -> &SkewPoly {
        &self.h
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }
}

/// Data of a `(Theta, Delta_{Theta,s}, a)`-cyclic code over `R = F_q^l`.
#[derive(Clone, Debug)]
pub struct RCodeSpec {
    pub ring: RingSpec,
    pub theta: ProductAut,
    pub s: RingElement,
    pub a: RingElement,
    pub n: usize,
    /// One generator per component, over `F_q[x; theta_i, delta_{theta_i,s_i}]`.
    pub gens: Vec<SkewPoly>,
}

impl RCodeSpec {
    pub fn new(
        ring: RingSpec,
        theta: ProductAut,
        s: RingElement,
        a: RingElement,
        n: usize,
        gens: Vec<SkewPoly>,
    ) -> Result<Self> {
        let l = ring.l();
        if gens.len() != l || s.comps.len() != l || a.comps.len() != l || theta.exps().len() != l {
            return Err(Error::InvalidSpec(format!(
                "expected {l} generators, derivation and constant components"
            )));
        }
        if !ring.is_unit(&a) {
            return Err(Error::InvalidSpec(format!(
                "{} is not a unit",
                ring.format(&a)
            )));
        }
        if n == 0 {
            return Err(Error::InvalidSpec("code length must be positive".into()));
        }
        Ok(RCodeSpec {
            ring,
            theta,
            s,
            a,
            n,
            gens,
        })
    }

    pub fn field(&self) -> &Field {
        self.ring.field()
    }

    pub fn skew_ring(&self) -> Result<RSkewRing> {
        RSkewRing::new(self.ring.clone(), self.theta.clone(), self.s.clone())
    }

    /// Expected dimension `nl - sum deg g_i`.
    pub fn expected_dim(&self) -> usize {
        let total: usize = self.gens.iter().map(|g| g.degree().unwrap_or(0)).sum();
        (self.n * self.ring.l()).saturating_sub(total)
    }

    /// Interleaved `F_q`-spanning set of `sum e_i <g_i>` (component rows
    /// built without checking divisibility).
    fn raw_rows(&self) -> Result<Matrix> {
        let rs = self.skew_ring()?;
        let l = self.ring.l();
        let mut rows = Vec::new();
        for (i, (ring, g)) in rs.components().iter().zip(&self.gens).enumerate() {
            let m = cyclic_rows(ring, self.n, self.a.comps[i], g)?;
            rows.extend(m.row_iter().map(|r| embed(r, i, l)));
        }
        Matrix::from_rows(self.n * l, &rows)
    }

    /// Closure of the span under the pseudo-linear map of `R`, computed on
    /// `R`-vectors with the global derivation.
    pub fn closure_check(&self) -> Result<bool> {
        let rs = self.skew_ring()?;
        let f = self.field();
        let l = self.ring.l();
        let gen = self.raw_rows()?;
        let mut images = Vec::with_capacity(gen.rows());
        for row in gen.row_iter() {
            let vec: Vec<RingElement> = row
                .chunks(l)
                .map(|c| RingElement::new(c.to_vec()))
                .collect();
            let img = pseudo_linear_apply_r(&rs, &self.a, &vec)?;
            images.push(img.into_iter().flat_map(|r| r.comps).collect());
        }
        let img = Matrix::from_rows(self.n * l, &images)?;
        Ok(img.row_space_within(f, &gen))
    }

    /// Closure of each component code under its own pseudo-linear map.
    pub fn component_closures(&self) -> Result<Vec<bool>> {
        let rs = self.skew_ring()?;
        rs.components()
            .iter()
            .zip(&self.gens)
            .enumerate()
            .map(|(i, (ring, g))| {
                let m = cyclic_rows(ring, self.n, self.a.comps[i], g)?;
                Ok(is_closed(ring, self.a.comps[i], &m))
            })
            .collect()
    }
}

/// Places an `F_q` vector in component `i` of an interleaved `R`-vector.
fn embed(row: &[Fe], i: usize, l: usize) -> Vec<Fe> {
    let mut out = vec![Fe::ZERO; row.len() * l];
    for (j, &c) in row.iter().enumerate() {
        out[j * l + i] = c;
    }
    out
}

/// Component dimensions and the total, for reports.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Dimensions {
    pub components: Vec<usize>,
    pub total: usize,
}

/// A validated code `C = sum e_i C_i` over `R`.
#[derive(Clone, Debug)]
pub struct RCode {
    spec: RCodeSpec,
    comps: Vec<FqCyclicCode>,
}

impl RCode {
    pub fn build(spec: RCodeSpec) -> Result<Self> {
        let rs = spec.skew_ring()?;
        let comps = rs
            .components()
            .iter()
            .zip(&spec.gens)
            .enumerate()
            .map(|(i, (ring, g))| {
                FqCyclicCode::with_component(ring.clone(), spec.n, spec.a.comps[i], g, i)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RCode { spec, comps })
    }

    pub fn spec(&self) -> &RCodeSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.spec.n
    }

    pub fn l(&self) -> usize {
        self.spec.ring.l()
    }

    pub fn field(&self) -> &Field {
        self.spec.field()
    }

    pub fn components(&self) -> &[FqCyclicCode] {
        &self.comps
    }

    /// `F_q`-dimension `sum k_i`.
    pub fn dim(&self) -> usize {
        self.comps.iter().map(FqCyclicCode::k).sum()
    }

    pub fn dimensions(&self) -> Dimensions {
        Dimensions {
            components: self.comps.iter().map(FqCyclicCode::k).collect(),
            total: self.dim(),
        }
    }

    /// `F_q`-basis of `C` as interleaved vectors of length `nl`
    /// (position-major, component-minor).
    pub fn interleaved_basis(&self) -> Matrix {
        let l = self.l();
        let rows: Vec<Vec<Fe>> = self
            .comps
            .iter()
            .enumerate()
            .flat_map(|(i, c)| {
                c.code()
                    .generator()
                    .row_iter()
                    .map(move |r| embed(r, i, l))
                    .collect::<Vec<_>>()
            })
            .collect();
        Matrix::from_rows(self.n() * l, &rows).expect("rows have length nl")
    }

    /// `C` as an `F_q`-linear code of length `nl` in interleaved coordinates.
    pub fn interleaved(&self) -> LinearCode {
        LinearCode::new(self.field().clone(), &self.interleaved_basis())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldAut;

    fn f4_ring() -> SkewRing {
        let f = Field::with_default_modulus(2, 2).unwrap();
        let w = f.gen();
        SkewRing::new(f, FieldAut::new(1, 2), w)
    }

    #[test]
    fn plain_cyclic_shift() {
        let f = Field::with_default_modulus(3, 1).unwrap();
        let ring = SkewRing::commutative(f);
        let c = vec![Fe(1), Fe(2), Fe(0), Fe(1)];
        assert_eq!(
            pseudo_linear_apply(&ring, Fe::ONE, &c),
            vec![Fe(1), Fe(1), Fe(2), Fe(0)]
        );
        assert_eq!(
            pseudo_linear_apply(&ring, Fe::ONE, &[Fe::ZERO; 4]),
            vec![Fe::ZERO; 4]
        );
    }

    #[test]
    fn shift_agrees_with_multiplication_by_x() {
        let ring = f4_ring();
        let f = ring.field().clone();
        for seed in 0..64u32 {
            let c: Vec<Fe> = (0..6)
                .map(|j| f.elem((seed * 7 + j * j * 3 + j) % 4).unwrap())
                .collect();
            let via_poly =
                reduce_mod(&ring, &ring.mul_x(&SkewPoly::new(c.clone())), 6, Fe::ONE).unwrap();
            assert_eq!(pseudo_linear_apply(&ring, Fe::ONE, &c), via_poly);
        }
    }

    #[test]
    fn one_row_generator() {
        let ring = f4_ring();
        let g = ring.parse("x^5+x^4+x^3+x^2+x+1").unwrap();
        let code = FqCyclicCode::new(ring, 6, Fe::ONE, &g).unwrap();
        assert_eq!(code.k(), 1);
        assert_eq!(code.code().generator().row(0), &[Fe::ONE; 6]);
    }

    #[test]
    fn constant_generator_gives_full_space() {
        let ring = f4_ring();
        let code = FqCyclicCode::new(ring.clone(), 5, Fe::ONE, &SkewPoly::one()).unwrap();
        assert_eq!(code.k(), 5);
        assert!(is_closed(&ring, Fe::ONE, code.code().generator()));
    }

    #[test]
    fn non_divisor_is_rejected() {
        let ring = f4_ring();
        let g = ring.parse("x^2+x+w").unwrap();
        let err = FqCyclicCode::new(ring, 6, Fe::ONE, &g).unwrap_err();
        assert!(matches!(err, Error::NotRightDivisor { component: 0, .. }));
    }

    #[test]
    fn non_monic_generator_is_scaled() {
        let ring = f4_ring();
        let f = ring.field().clone();
        let g = ring.parse("wx^4+wx^3+wx+w").unwrap();
        let code = FqCyclicCode::new(ring.clone(), 6, Fe::ONE, &g).unwrap();
        assert!(code.generator().is_monic());
        assert_eq!(code.scale(), f.inv(f.gen()).unwrap());
        let raw = cyclic_rows(&ring, 6, Fe::ONE, &g).unwrap();
        assert!(raw.same_row_space(&f, code.code().generator()));
    }
}
