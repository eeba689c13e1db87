//! Euclidean duals of `(theta, 0, alpha)`-cyclic codes through `h^dagger`,
//! and annihilator duals of `(Id, 0, alpha)`-cyclic codes.

use serde::Serialize;

use crate::codes::{FqCyclicCode, LinearCode, RCode};
use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::Matrix;
use crate::skewpoly::{SkewPoly, SkewRing};

/// Which hypotheses of the Euclidean dual theory hold for a component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub zero_derivation: bool,
    pub alpha_fixed: bool,
    pub order_divides_n: bool,
}

impl Hypotheses {
    pub fn of(code: &FqCyclicCode) -> Self {
        let ring = code.ring();
        let m = ring.field().degree();
        Hypotheses {
            zero_derivation: ring.has_zero_derivation(),
            alpha_fixed: ring.apply_theta(code.alpha()) == code.alpha(),
            order_divides_n: code.n().is_multiple_of(ring.theta().order(m) as usize),
        }
    }

    pub fn all(&self) -> bool {
        self.zero_derivation && self.alpha_fixed && self.order_divides_n
    }

    fn require(&self) -> Result<()> {
        if !self.zero_derivation {
            return Err(Error::Hypothesis("the derivation is not zero".into()));
        }
        if !self.alpha_fixed {
            return Err(Error::Hypothesis("alpha is not fixed by theta".into()));
        }
        if !self.order_divides_n {
            return Err(Error::Hypothesis(
                "the order of theta does not divide n".into(),
            ));
        }
        Ok(())
    }
}

/// Euclidean duality facts for one component code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub hypotheses: Hypotheses,
    /// `h` with `x^n - alpha = h g`.
    pub cofactor: SkewPoly,
    /// `h^dagger`, present when the hypotheses hold.
    pub dual_generator: Option<SkewPoly>,
    /// `g` right-divides `h^dagger`.
    pub dual_containing: bool,
}

/// Right quotient of `x^n - alpha` by `g`.
pub fn cofactor_h(ring: &SkewRing, n: usize, alpha: Fe, g: &SkewPoly) -> Result<SkewPoly> {
    let modulus = ring.x_n_minus(n, alpha);
    let (h, r) = ring.right_divmod(&modulus, g)?;
    if !r.is_zero() {
        return Err(Error::NotRightDivisor {
            component: 0,
            poly: ring.format(g),
            modulus: ring.format(&modulus),
        });
    }
    Ok(h)
}

/// `h^dagger`, which generates the Euclidean dual as a
/// `(theta, 0, alpha^{-1})`-cyclic code.
pub fn euclidean_dual_generator(code: &FqCyclicCode) -> Result<SkewPoly> {
    Hypotheses::of(code).require()?;
    code.ring().h_dagger(code.cofactor())
}

/// The dual code generated by `h^dagger`.
pub fn euclidean_dual_code(code: &FqCyclicCode) -> Result<FqCyclicCode> {
    let h_dagger = euclidean_dual_generator(code)?;
    let f = code.ring().field();
    FqCyclicCode::new(
        code.ring().clone(),
        code.n(),
        f.inv(code.alpha())?,
        &h_dagger,
    )
}

/// `C^perp ⊆ C` iff `g` right-divides `h^dagger`.
pub fn is_euclidean_dual_containing_fq(code: &FqCyclicCode) -> Result<bool> {
    let h_dagger = euclidean_dual_generator(code)?;
    code.ring().right_divides(code.generator(), &h_dagger)
}

/// `C^perp ⊆ C` by linear algebra.
pub fn contains_euclidean_dual(code: &LinearCode) -> bool {
    code.dual().is_subcode_of(code)
}

pub fn euclidean_report(code: &FqCyclicCode) -> Result<DualityReport> {
    let hypotheses = Hypotheses::of(code);
    let (dual_generator, dual_containing) = if hypotheses.all() {
        let hd = code.ring().h_dagger(code.cofactor())?;
        let contains = code.ring().right_divides(code.generator(), &hd)?;
        (Some(hd), contains)
    } else {
        (None, false)
    };
    Ok(DualityReport {
        hypotheses,
        cofactor: code.cofactor().clone(),
        dual_generator,
        dual_containing,
    })
}

/// Over `R`: every component code contains its dual.
pub fn is_euclidean_dual_containing_r(code: &RCode) -> Result<bool> {
    for c in code.components() {
        if !is_euclidean_dual_containing_fq(c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `<f | g>`: constant term of `f g` reduced modulo `x^n - alpha`.
pub fn annihilator_form(
    ring: &SkewRing,
    f: &SkewPoly,
    g: &SkewPoly,
    n: usize,
    alpha: Fe,
) -> Result<Fe> {
    let prod = ring.mul(f, g);
    let (_, r) = ring.right_divmod(&prod, &ring.x_n_minus(n, alpha))?;
    Ok(r.coeff(0))
}

/// Gram matrix of the annihilator form in the monomial basis:
/// `A[0][0] = 1`, `A[i][j] = alpha` when `i + j = n` with `i, j >= 1`.
pub fn gram_matrix(n: usize, alpha: Fe) -> Matrix {
    let mut a = Matrix::zeros(n, n);
    a.set(0, 0, Fe::ONE);
    for i in 1..n {
        a.set(i, n - i, alpha);
    }
    a
}

/// The form through the Gram matrix: `f A g^T`.
pub fn annihilator_form_gram(field: &Field, f: &[Fe], g: &[Fe], alpha: Fe) -> Result<Fe> {
    let a = gram_matrix(f.len(), alpha);
    let fa = a.vec_mul(field, f)?;
    Ok(crate::linalg::dot(field, &fa, g))
}

fn require_commutative(code: &FqCyclicCode) -> Result<()> {
    if !code.ring().theta().is_identity() {
        return Err(Error::Hypothesis(
            "annihilator duality needs theta = Id".into(),
        ));
    }
    Ok(())
}

/// `C° = {v : <c | v> = 0 for all c in C}`, the null space of `G A`.
pub fn annihilator_dual(code: &FqCyclicCode) -> Result<LinearCode> {
    require_commutative(code)?;
    let f = code.ring().field();
    let c = code.code();
    if c.k() == 0 {
        return Ok(LinearCode::new(f.clone(), &Matrix::identity(code.n())));
    }
    let ga = c.generator().mul(f, &gram_matrix(code.n(), code.alpha()))?;
    Ok(LinearCode::new(f.clone(), &ga.null_space(f)))
}

/// `C° ⊆ C` iff `g | h` in `F_q[x]`.
pub fn is_annihilator_dual_containing(code: &FqCyclicCode) -> Result<bool> {
    require_commutative(code)?;
    code.ring().right_divides(code.generator(), code.cofactor())
}
