//! Skew polynomial rings `F_q[x; theta, delta]` with `delta = s(theta - Id)`.
//!
//! Multiplication follows the commutation rule `x r = theta(r) x + delta(r)`.
//! Only right division is provided.

use std::ops::Range;

use crate::error::{parse_err, Error, Result};
use crate::gf::{split_signed_terms, Fe, Field, FieldAut};

/// Polynomial with coefficients in `F_q`, constant term first.
///
/// Trailing zeros are never stored; the zero polynomial has no coefficients
/// and degree `None` (minus infinity).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SkewPoly {
    coeffs: Vec<Fe>,
}

impl SkewPoly {
    pub fn new(mut coeffs: Vec<Fe>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SkewPoly { coeffs }
    }

    pub fn zero() -> Self {
        SkewPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        SkewPoly {
            coeffs: vec![Fe::ONE],
        }
    }

    /// `c x^k`.
    pub fn monomial(c: Fe, k: usize) -> Self {
        let mut coeffs = vec![Fe::ZERO; k + 1];
        coeffs[k] = c;
        SkewPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<Fe> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(Fe::ONE)
    }

    /// Coefficient vector padded (or truncated) to length `n`.
    pub fn to_vec(&self, n: usize) -> Vec<Fe> {
        (0..n).map(|i| self.coeff(i)).collect()
    }
}

/// The ring `F_q[x; theta, delta_{theta,s}]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewRing {
    field: Field,
    theta: FieldAut,
    s: Fe,
}

impl SkewRing {
    pub fn new(field: Field, theta: FieldAut, s: Fe) -> Self {
        let theta = FieldAut::new(theta.exp(), field.degree());
        SkewRing { field, theta, s }
    }

    /// The commutative ring `F_q[x]`.
    pub fn commutative(field: Field) -> Self {
        SkewRing::new(field, FieldAut::IDENTITY, Fe::ZERO)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn theta(&self) -> FieldAut {
        self.theta
    }

    pub fn s(&self) -> Fe {
        self.s
    }

    /// True when the derivation vanishes identically.
    pub fn has_zero_derivation(&self) -> bool {
        self.s.is_zero() || self.theta.is_identity()
    }

    pub fn apply_theta(&self, a: Fe) -> Fe {
        self.field.apply_aut(self.theta, a)
    }

    /// `delta(r) = s (theta(r) - r)`.
    pub fn delta(&self, r: Fe) -> Fe {
        let f = &self.field;
        f.mul(self.s, f.sub(self.apply_theta(r), r))
    }

    pub fn add(&self, a: &SkewPoly, b: &SkewPoly) -> SkewPoly {
        let n = a.coeffs.len().max(b.coeffs.len());
        SkewPoly::new(
            (0..n)
                .map(|i| self.field.add(a.coeff(i), b.coeff(i)))
                .collect(),
        )
    }

    pub fn sub(&self, a: &SkewPoly, b: &SkewPoly) -> SkewPoly {
        let n = a.coeffs.len().max(b.coeffs.len());
        SkewPoly::new(
            (0..n)
                .map(|i| self.field.sub(a.coeff(i), b.coeff(i)))
                .collect(),
        )
    }

    /// `c * f` with the constant on the left.
    pub fn scale_left(&self, c: Fe, f: &SkewPoly) -> SkewPoly {
        SkewPoly::new(f.coeffs.iter().map(|&a| self.field.mul(c, a)).collect())
    }

    /// `x * f`.
    pub fn mul_x(&self, f: &SkewPoly) -> SkewPoly {
        let mut out = vec![Fe::ZERO; f.coeffs.len() + 1];
        for (k, &c) in f.coeffs.iter().enumerate() {
            out[k + 1] = self.field.add(out[k + 1], self.apply_theta(c));
            out[k] = self.field.add(out[k], self.delta(c));
        }
        SkewPoly::new(out)
    }

    /// `f * g`, expanding `sum_i f_i (x^i g)` with `x^i g` built by repeated
    /// left multiplication by `x`.
    pub fn mul(&self, f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
        if f.is_zero() || g.is_zero() {
            return SkewPoly::zero();
        }
        let len = f.coeffs.len() + g.coeffs.len() - 1;
        let mut acc = vec![Fe::ZERO; len];
        let mut shifted = g.clone();
        for (i, &fi) in f.coeffs.iter().enumerate() {
            if i > 0 {
                shifted = self.mul_x(&shifted);
            }
            if fi.is_zero() {
                continue;
            }
            for (k, &c) in shifted.coeffs.iter().enumerate() {
                acc[k] = self.field.add(acc[k], self.field.mul(fi, c));
            }
        }
        SkewPoly::new(acc)
    }

    /// `x^n - alpha`.
    pub fn x_n_minus(&self, n: usize, alpha: Fe) -> SkewPoly {
        let mut c = vec![Fe::ZERO; n + 1];
        c[0] = self.field.neg(alpha);
        c[n] = self.field.add(c[n], Fe::ONE);
        SkewPoly::new(c)
    }

    /// Unique `(q, r)` with `f = q g + r` and `deg r < deg g`.
    pub fn right_divmod(&self, f: &SkewPoly, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        let dg = g.degree().ok_or(Error::DivisionByZero)?;
        let Some(df) = f.degree() else {
            return Ok((SkewPoly::zero(), SkewPoly::zero()));
        };
        if df < dg {
            return Ok((SkewPoly::zero(), f.clone()));
        }
        let fld = &self.field;
        // x^k g for k = 0..=df-dg
        let mut shifts = Vec::with_capacity(df - dg + 1);
        shifts.push(g.clone());
        for k in 1..=df - dg {
            let next = self.mul_x(&shifts[k - 1]);
            shifts.push(next);
        }
        let mut quot = vec![Fe::ZERO; df - dg + 1];
        let mut rem = f.coeffs.clone();
        for d in (dg..=df).rev() {
            let lead = rem[d];
            if lead.is_zero() {
                continue;
            }
            let k = d - dg;
            let c = fld.div(lead, shifts[k].coeffs[d])?;
            quot[k] = c;
            for (i, &s) in shifts[k].coeffs.iter().enumerate() {
                rem[i] = fld.sub(rem[i], fld.mul(c, s));
            }
        }
        rem.truncate(dg);
        Ok((SkewPoly::new(quot), SkewPoly::new(rem)))
    }

    /// Whether `g` is a right divisor of `f`.
    pub fn right_divides(&self, g: &SkewPoly, f: &SkewPoly) -> Result<bool> {
        Ok(self.right_divmod(f, g)?.1.is_zero())
    }

    /// Left-scales `g` to a monic polynomial; returns it with the unit used.
    pub fn monic(&self, g: &SkewPoly) -> Result<(SkewPoly, Fe)> {
        let lead = g.leading().ok_or(Error::DivisionByZero)?;
        let u = self.field.inv(lead)?;
        Ok((self.scale_left(u, g), u))
    }

    /// `theta(alpha) = alpha` and `ord(theta) | n`: the conditions under which
    /// `x^n - alpha` is central in `F_q[x; theta, 0]`.
    pub fn is_central(&self, n: usize, alpha: Fe) -> Result<bool> {
        if !self.has_zero_derivation() {
            return Err(Error::Hypothesis(
                "centrality test needs a zero derivation".into(),
            ));
        }
        let ord = self.theta.order(self.field.degree()) as usize;
        Ok(self.apply_theta(alpha) == alpha && n.is_multiple_of(ord))
    }

    /// `h^dagger`: coefficient `i` is `theta^i(h_{deg h - i})`.
    pub fn h_dagger(&self, h: &SkewPoly) -> Result<SkewPoly> {
        if !self.has_zero_derivation() {
            return Err(Error::Hypothesis("h-dagger needs a zero derivation".into()));
        }
        let Some(d) = h.degree() else {
            return Ok(SkewPoly::zero());
        };
        let m = self.field.degree();
        let coeffs = (0..=d)
            .map(|i| {
                self.field
                    .apply_aut(self.theta.pow(i as u64, m), h.coeffs[d - i])
            })
            .collect();
        Ok(SkewPoly::new(coeffs))
    }

    /// Number of monic polynomials of degree `r`.
    pub fn monic_count(&self, r: usize) -> u128 {
        (self.field.order() as u128).saturating_pow(r as u32)
    }

    /// Monic degree-`r` polynomial number `idx`; lower coefficients are the
    /// base-`q` digits of `idx`, constant term least significant.
    pub fn monic_candidate(&self, r: usize, mut idx: u128) -> SkewPoly {
        let q = self.field.order() as u128;
        let mut c = Vec::with_capacity(r + 1);
        for _ in 0..r {
            c.push(Fe((idx % q) as u32));
            idx /= q;
        }
        c.push(Fe::ONE);
        SkewPoly::new(c)
    }

    /// Monic right divisors of `x^n - alpha` of degree `r` among candidates
    /// with index in `range`, in index order. Disjoint ranges can be scanned
    /// independently.
    pub fn right_divisors_in_range(
        &self,
        n: usize,
        alpha: Fe,
        r: usize,
        range: Range<u128>,
    ) -> Vec<(u128, SkewPoly)> {
        let target = self.x_n_minus(n, alpha);
        range
            .filter_map(|idx| {
                let g = self.monic_candidate(r, idx);
                matches!(self.right_divides(&g, &target), Ok(true)).then_some((idx, g))
            })
            .collect()
    }

    /// All monic degree-`r` right divisors of `x^n - alpha`, refusing when the
    /// `q^r` candidates exceed `budget`.
    pub fn monic_right_divisors(
        &self,
        n: usize,
        alpha: Fe,
        r: usize,
        budget: u64,
    ) -> Result<Vec<SkewPoly>> {
        if r > n {
            return Err(Error::InvalidSpec(format!("degree {r} exceeds length {n}")));
        }
        let count = self.monic_count(r);
        if count > budget as u128 {
            return Err(Error::BudgetExceeded {
                needed: count,
                budget,
            });
        }
        Ok(self
            .right_divisors_in_range(n, alpha, r, 0..count)
            .into_iter()
            .map(|(_, g)| g)
            .collect())
    }

    /// Parses terms `c*x^k` joined by `+`/`-`; `c` uses the element grammar
    /// and needs parentheses when it has several terms, e.g. `(w+1)x^2+wx+1`.
    pub fn parse(&self, text: &str) -> Result<SkewPoly> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(parse_err(text, "empty polynomial"));
        }
        let f = &self.field;
        let mut acc: Vec<Fe> = Vec::new();
        for (negative, term) in split_signed_terms(&compact).map_err(|r| parse_err(text, r))? {
            let (coeff, k) = match top_level_x(term) {
                None => (f.parse(term)?, 0),
                Some(pos) => {
                    let head = &term[..pos];
                    let head = head.strip_suffix('*').unwrap_or(head);
                    let coeff = if head.is_empty() {
                        Fe::ONE
                    } else {
                        f.parse(head)?
                    };
                    let tail = &term[pos + 1..];
                    let k = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^')
                            .and_then(|e| e.parse::<usize>().ok())
                            .ok_or_else(|| parse_err(text, format!("bad exponent in {term:?}")))?
                    };
                    (coeff, k)
                }
            };
            if acc.len() <= k {
                acc.resize(k + 1, Fe::ZERO);
            }
            acc[k] = if negative {
                f.sub(acc[k], coeff)
            } else {
                f.add(acc[k], coeff)
            };
        }
        Ok(SkewPoly::new(acc))
    }

    /// Formats a polynomial in the grammar accepted by [`SkewRing::parse`].
    pub fn format(&self, p: &SkewPoly) -> String {
        let f = &self.field;
        let mut terms = Vec::new();
        for (k, &c) in p.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "x".to_string(),
                k => format!("x^{k}"),
            };
            let t = if k == 0 {
                f.format(c)
            } else if c == Fe::ONE {
                mono
            } else if f.is_compound(c) {
                format!("({}){mono}", f.format(c))
            } else {
                format!("{}{mono}", f.format(c))
            };
            terms.push(t);
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

fn top_level_x(term: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in term.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            'x' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4_ring() -> SkewRing {
        let f = Field::with_default_modulus(2, 2).unwrap();
        let w = f.gen();
        SkewRing::new(f.clone(), f.aut(1), w)
    }

    #[test]
    fn commutation_rule() {
        let r = f4_ring();
        let f = r.field().clone();
        let w = f.gen();
        let prod = r.mul(&SkewPoly::monomial(Fe::ONE, 1), &SkewPoly::new(vec![w]));
        assert_eq!(prod, r.parse("(w+1)x+w").unwrap());
    }

    #[test]
    fn parse_and_format() {
        let r = f4_ring();
        let p = r.parse("(w + 1)x^2 + (w + 1)x + w + 1").unwrap();
        assert_eq!(r.format(&p), "(w+1)x^2+(w+1)x+w+1");
        assert_eq!(r.parse(&r.format(&p)).unwrap(), p);
        assert_eq!(r.parse("wx^4+wx^3+wx+w").unwrap().degree(), Some(4));
        assert_eq!(r.parse("x^6-1").unwrap(), r.x_n_minus(6, Fe::ONE));
        assert_eq!(r.parse("0").unwrap(), SkewPoly::zero());
        assert!(r.parse("x^").is_err());
        assert!(r.parse("").is_err());
        assert!(r.parse("(w+1)y").is_err());
    }

    #[test]
    fn zero_degree_is_none() {
        assert_eq!(SkewPoly::zero().degree(), None);
        assert_eq!(SkewPoly::new(vec![Fe::ZERO, Fe::ZERO]).degree(), None);
        assert_eq!(SkewPoly::one().degree(), Some(0));
    }

    #[test]
    fn division_by_zero() {
        let r = f4_ring();
        assert_eq!(
            r.right_divmod(&SkewPoly::one(), &SkewPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn self_division() {
        let r = f4_ring();
        let f = r.parse("x^3+wx+1").unwrap();
        let (q, rem) = r.right_divmod(&f, &f).unwrap();
        assert_eq!(q, SkewPoly::one());
        assert!(rem.is_zero());
    }

    #[test]
    fn commutative_divisibility() {
        let f = Field::with_default_modulus(3, 2).unwrap();
        let r = SkewRing::commutative(f);
        assert!(r
            .right_divides(&r.parse("x+1").unwrap(), &r.parse("x^2-1").unwrap())
            .unwrap());
    }

    #[test]
    fn h_dagger_identity_reverses() {
        let f = Field::with_default_modulus(7, 1).unwrap();
        let r = SkewRing::commutative(f);
        let h = r.parse("x^3+2x^2+3x+4").unwrap();
        assert_eq!(r.h_dagger(&h).unwrap(), r.parse("4x^3+3x^2+2x+1").unwrap());
        assert!(f4_ring().h_dagger(&h).is_err());
    }

    #[test]
    fn centrality_conditions() {
        let f8 = Field::with_default_modulus(2, 3).unwrap();
        assert!(SkewRing::new(f8.clone(), f8.aut(1), Fe::ZERO)
            .is_central(6, Fe::ONE)
            .unwrap());
        assert!(!SkewRing::new(f8.clone(), f8.aut(1), Fe::ZERO)
            .is_central(4, Fe::ONE)
            .unwrap());
        assert!(!SkewRing::new(f8.clone(), f8.aut(1), Fe::ZERO)
            .is_central(6, f8.gen())
            .unwrap());
        let f9 = Field::with_default_modulus(3, 2).unwrap();
        let two = f9.from_int(2);
        assert!(SkewRing::new(f9.clone(), f9.aut(1), Fe::ZERO)
            .is_central(4, two)
            .unwrap());
        assert!(SkewRing::commutative(f9.clone())
            .is_central(5, f9.gen())
            .unwrap());
        assert!(f4_ring().is_central(6, Fe::ONE).is_err());
    }

    #[test]
    fn degree_zero_divisor_is_one() {
        let r = f4_ring();
        let divs = r.monic_right_divisors(6, Fe::ONE, 0, 1 << 20).unwrap();
        assert_eq!(divs, vec![SkewPoly::one()]);
        assert!(matches!(
            r.monic_right_divisors(6, Fe::ONE, 5, 10),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
