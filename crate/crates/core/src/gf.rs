//! Finite fields `F_q = F_p[w]/(f(w))` and their Frobenius automorphisms.
//!
//! Elements are stored as a single integer: the coefficient vector
//! `(c_0, .., c_{m-1})` of the canonical representative read as a base-`p`
//! number, constant term least significant. All operations go through a
//! [`Field`] handle, which is cheap to clone and safe to share between
//! threads.
//!
//! Arithmetic is defined by the polynomial routines at the bottom of this
//! file. For `q <= 256` those routines are tabulated once at construction.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};

/// Fields larger than this are not tabulated.
const TABLE_LIMIT: u32 = 256;
/// Fields larger than this are refused outright.
const MAX_ORDER: u64 = 1 << 16;

/// Characteristic, degree and defining polynomial of a finite field.
///
/// `modulus` holds `m + 1` coefficients over `F_p`, constant term first, and
/// must be monic and irreducible.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    pub modulus: Vec<u32>,
}

impl FieldSpec {
    pub fn new(p: u32, m: u32, modulus: Vec<u32>) -> Self {
        FieldSpec { p, m, modulus }
    }

    /// The defining polynomial used when none is given.
    ///
    /// `F_4: w^2+w+1`, `F_8: w^3+w+1`, `F_9: w^2+2w+2`, `F_16: w^4+w+1`; prime
    /// fields use `w`. Other fields get the first monic irreducible polynomial
    /// (in index order) whose root is primitive.
    pub fn default_for(p: u32, m: u32) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::InvalidField(
                "extension degree must be at least 1".into(),
            ));
        }
        let fixed: Option<Vec<u32>> = match (p, m) {
            (_, 1) => Some(vec![0, 1]),
            (2, 2) => Some(vec![1, 1, 1]),
            (2, 3) => Some(vec![1, 1, 0, 1]),
            (3, 2) => Some(vec![2, 2, 1]),
            (2, 4) => Some(vec![1, 1, 0, 0, 1]),
            _ => None,
        };
        if let Some(modulus) = fixed {
            return Ok(FieldSpec::new(p, m, modulus));
        }
        let q = checked_order(p, m)?;
        let mut tail = vec![0u32; m as usize];
        for idx in 0..q {
            let mut rest = idx;
            for c in tail.iter_mut() {
                *c = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            if tail[0] == 0 {
                continue;
            }
            let mut modulus = tail.clone();
            modulus.push(1);
            if !is_irreducible(p, &modulus) {
                continue;
            }
            let spec = FieldSpec::new(p, m, modulus);
            let field = Field::new(spec.clone())?;
            if field.is_primitive(field.gen()) {
                return Ok(spec);
            }
        }
        Err(Error::InvalidField(format!(
            "no primitive polynomial of degree {m} over F_{p}"
        )))
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.m)
    }
}

/// A field element; meaningful only together with the [`Field`] it came from.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(pub(crate) u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    /// Base-`p` encoding of the coefficient vector.
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A Frobenius power `sigma_p^e`, `0 <= e < m`. `e = 0` is the identity.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldAut {
    exp: u32,
}

impl FieldAut {
    pub const IDENTITY: FieldAut = FieldAut { exp: 0 };

    /// `sigma_p^e` in a field of degree `m`; the exponent is reduced mod `m`.
    pub fn new(exp: u32, m: u32) -> Self {
        FieldAut {
            exp: exp % m.max(1),
        }
    }

    pub fn exp(self) -> u32 {
        self.exp
    }

    pub fn is_identity(self) -> bool {
        self.exp == 0
    }

    /// `self` followed by `other`.
    pub fn then(self, other: FieldAut, m: u32) -> FieldAut {
        FieldAut::new(self.exp + other.exp, m)
    }

    /// Order of the automorphism in `Aut(F_{p^m})`.
    pub fn order(self, m: u32) -> u32 {
        if self.exp == 0 {
            1
        } else {
            m / gcd(self.exp, m)
        }
    }

    /// `self^k`.
    pub fn pow(self, k: u64, m: u32) -> FieldAut {
        let m = m.max(1) as u64;
        FieldAut::new(((self.exp as u64 * (k % m)) % m) as u32, m as u32)
    }
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    frob: Vec<u32>,
}

struct Inner {
    spec: FieldSpec,
    q: u32,
    tables: Option<Tables>,
}

/// Handle to a finite field `F_{p^m}`.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

impl Field {
    /// Validates `spec` (prime `p`, monic irreducible modulus of degree `m`)
    /// and builds the field.
    pub fn new(spec: FieldSpec) -> Result<Field> {
        let FieldSpec { p, m, ref modulus } = spec;
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::InvalidField(
                "extension degree must be at least 1".into(),
            ));
        }
        let q = checked_order(p, m)? as u32;
        if modulus.len() != m as usize + 1 {
            return Err(Error::InvalidField(format!(
                "modulus must have {} coefficients, got {}",
                m + 1,
                modulus.len()
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField(format!(
                "modulus coefficients must lie in [0, {p})"
            )));
        }
        if modulus[m as usize] != 1 {
            return Err(Error::InvalidField("modulus must be monic".into()));
        }
        if !is_irreducible(p, modulus) {
            return Err(Error::InvalidField(format!(
                "modulus {modulus:?} is reducible over F_{p}"
            )));
        }
        let mut inner = Inner {
            spec,
            q,
            tables: None,
        };
        if q <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner.spec));
        }
        Ok(Field(Arc::new(inner)))
    }

    /// Shorthand for [`FieldSpec::default_for`] followed by [`Field::new`].
    pub fn with_default_modulus(p: u32, m: u32) -> Result<Field> {
        Field::new(FieldSpec::default_for(p, m)?)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn characteristic(&self) -> u32 {
        self.0.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.0.spec.m
    }

    /// Number of elements `q = p^m`.
    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    pub fn one(&self) -> Fe {
        Fe::ONE
    }

    /// Residue class of the indeterminate `w`.
    pub fn gen(&self) -> Fe {
        let spec = &self.0.spec;
        if spec.m == 1 {
            // w = -c_0
            Fe((spec.p - spec.modulus[0]) % spec.p)
        } else {
            Fe(spec.p)
        }
    }

    /// Element with index `idx`, if `idx < q`.
    pub fn elem(&self, idx: u32) -> Option<Fe> {
        (idx < self.0.q).then_some(Fe(idx))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Fe {
        let p = self.0.spec.p as i64;
        Fe(v.rem_euclid(p) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Fe> {
        let spec = &self.0.spec;
        if coeffs.len() > spec.m as usize {
            return Err(Error::InvalidField(format!(
                "coefficient vector longer than the degree {}",
                spec.m
            )));
        }
        if coeffs.iter().any(|&c| c >= spec.p) {
            return Err(Error::InvalidField(format!(
                "coefficients must lie in [0, {})",
                spec.p
            )));
        }
        Ok(Fe(encode(spec.p, coeffs)))
    }

    /// Coefficient vector of length `m`, constant term first.
    pub fn coeffs(&self, a: Fe) -> Vec<u32> {
        decode(self.0.spec.p, self.0.spec.m, a.0)
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        match &self.0.tables {
            Some(t) => Fe(t.add[(a.0 * self.0.q + b.0) as usize]),
            None => Fe(ref_add(self.spec(), a.0, b.0)),
        }
    }

    pub fn neg(&self, a: Fe) -> Fe {
        match &self.0.tables {
            Some(t) => Fe(t.neg[a.0 as usize]),
            None => Fe(ref_neg(self.spec(), a.0)),
        }
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        match &self.0.tables {
            Some(t) => Fe(t.mul[(a.0 * self.0.q + b.0) as usize]),
            None => Fe(ref_mul(self.spec(), a.0, b.0)),
        }
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        match &self.0.tables {
            Some(t) => Ok(Fe(t.inv[a.0 as usize])),
            None => Ok(self.pow(a, self.0.q as u64 - 2)),
        }
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a -> a^p`.
    pub fn frobenius(&self, a: Fe) -> Fe {
        match &self.0.tables {
            Some(t) => Fe(t.frob[a.0 as usize]),
            None => self.pow(a, self.0.spec.p as u64),
        }
    }

    /// `sigma_p^e(a) = a^(p^e)`, by `e` successive `p`-th powers.
    pub fn apply_aut(&self, aut: FieldAut, a: Fe) -> Fe {
        (0..aut.exp()).fold(a, |x, _| self.frobenius(x))
    }

    pub fn aut(&self, exp: u32) -> FieldAut {
        FieldAut::new(exp, self.degree())
    }

    /// All `q` elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.0.q).map(Fe)
    }

    /// Multiplicative order of a nonzero element.
    pub fn mul_order(&self, a: Fe) -> Option<u32> {
        if a.is_zero() {
            return None;
        }
        let mut x = a;
        let mut k = 1;
        while x != Fe::ONE {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    pub fn is_primitive(&self, a: Fe) -> bool {
        self.mul_order(a) == Some(self.0.q - 1)
    }

    /// Parses `c_k*w^k + ... + c_0`. Coefficients must lie in `[0, p)`;
    /// the `*` is optional, terms may repeat and parentheses group.
    pub fn parse(&self, text: &str) -> Result<Fe> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(parse_err(text, "empty element"));
        }
        self.parse_sum(&compact, text)
    }

    fn parse_sum(&self, s: &str, orig: &str) -> Result<Fe> {
        let s = strip_outer_parens(s);
        let mut acc = Fe::ZERO;
        for (negative, term) in split_signed_terms(s).map_err(|r| parse_err(orig, r))? {
            let v = if term.starts_with('(') {
                let inner = strip_outer_parens(term);
                if inner.len() == term.len() {
                    return Err(parse_err(orig, format!("unexpected text after {term:?}")));
                }
                self.parse_sum(inner, orig)?
            } else {
                self.parse_monomial(term, orig)?
            };
            acc = if negative {
                self.sub(acc, v)
            } else {
                self.add(acc, v)
            };
        }
        Ok(acc)
    }

    fn parse_monomial(&self, term: &str, orig: &str) -> Result<Fe> {
        let p = self.0.spec.p;
        let digits: String = term.chars().take_while(|c| c.is_ascii_digit()).collect();
        let rest = &term[digits.len()..];
        let coeff = if digits.is_empty() {
            1
        } else {
            let c: u64 = digits
                .parse()
                .map_err(|_| parse_err(orig, "coefficient too large"))?;
            if c >= p as u64 {
                return Err(parse_err(
                    orig,
                    format!("coefficient {c} out of range [0, {p})"),
                ));
            }
            c as u32
        };
        let rest = rest.strip_prefix('*').unwrap_or(rest);
        if rest.is_empty() {
            if digits.is_empty() {
                return Err(parse_err(orig, "empty term"));
            }
            return Ok(Fe(coeff));
        }
        let rest = rest
            .strip_prefix('w')
            .ok_or_else(|| parse_err(orig, format!("unexpected {rest:?}")))?;
        let exp: u64 = if rest.is_empty() {
            1
        } else {
            let e = rest
                .strip_prefix('^')
                .ok_or_else(|| parse_err(orig, format!("unexpected {rest:?}")))?;
            e.parse()
                .map_err(|_| parse_err(orig, format!("bad exponent {e:?}")))?
        };
        Ok(self.mul(Fe(coeff), self.pow(self.gen(), exp)))
    }

    /// Formats an element in the grammar accepted by [`Field::parse`].
    pub fn format(&self, a: Fe) -> String {
        let spec = &self.0.spec;
        if spec.m == 1 {
            return a.0.to_string();
        }
        let coeffs = self.coeffs(a);
        let mut terms = Vec::new();
        for (k, &c) in coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let t = match (k, c) {
                (0, c) => c.to_string(),
                (1, 1) => "w".to_string(),
                (1, c) => format!("{c}w"),
                (k, 1) => format!("w^{k}"),
                (k, c) => format!("{c}w^{k}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }

    /// True when the formatted element needs parentheses as a coefficient.
    pub(crate) fn is_compound(&self, a: Fe) -> bool {
        self.degree() > 1 && self.coeffs(a).iter().filter(|&&c| c != 0).count() > 1
    }
}

fn strip_outer_parens(s: &str) -> &str {
    let mut s = s;
    while s.starts_with('(') && s.ends_with(')') {
        let inner = &s[1..s.len() - 1];
        let mut depth = 0i32;
        let mut balanced = true;
        for c in inner.chars() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            if depth < 0 {
                balanced = false;
                break;
            }
        }
        if balanced && depth == 0 {
            s = inner;
        } else {
            break;
        }
    }
    s
}

/// Splits at top-level `+`/`-`, returning `(negated, term)` pairs.
pub(crate) fn split_signed_terms(s: &str) -> std::result::Result<Vec<(bool, &str)>, String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0usize;
    let mut negative = false;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err("unbalanced parentheses".into());
                }
            }
            '+' | '-' if depth == 0 => {
                let term = &s[start..i];
                if term.is_empty() {
                    if i != 0 {
                        return Err("empty term".into());
                    }
                } else {
                    out.push((negative, term));
                }
                negative = c == '-';
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err("unbalanced parentheses".into());
    }
    let term = &s[start..];
    if term.is_empty() {
        return Err("empty term".into());
    }
    out.push((negative, term));
    Ok(out)
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn checked_order(p: u32, m: u32) -> Result<u64> {
    let mut q: u64 = 1;
    for _ in 0..m {
        q = q.saturating_mul(p as u64);
        if q > MAX_ORDER {
            return Err(Error::InvalidField(format!(
                "F_{p}^{m} exceeds the supported order {MAX_ORDER}"
            )));
        }
    }
    Ok(q)
}

fn encode(p: u32, coeffs: &[u32]) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn decode(p: u32, m: u32, mut idx: u32) -> Vec<u32> {
    (0..m)
        .map(|_| {
            let c = idx % p;
            idx /= p;
            c
        })
        .collect()
}

fn ref_add(spec: &FieldSpec, a: u32, b: u32) -> u32 {
    let p = spec.p;
    let (x, y) = (decode(p, spec.m, a), decode(p, spec.m, b));
    let s: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % p).collect();
    encode(p, &s)
}

fn ref_neg(spec: &FieldSpec, a: u32) -> u32 {
    let p = spec.p;
    let x: Vec<u32> = decode(p, spec.m, a).iter().map(|&c| (p - c) % p).collect();
    encode(p, &x)
}

/// Schoolbook product of coefficient vectors, reduced by the monic modulus.
fn ref_mul(spec: &FieldSpec, a: u32, b: u32) -> u32 {
    let p = spec.p as u64;
    let m = spec.m as usize;
    let (x, y) = (decode(spec.p, spec.m, a), decode(spec.p, spec.m, b));
    let mut prod = vec![0u64; 2 * m - 1];
    for (i, &u) in x.iter().enumerate() {
        for (j, &v) in y.iter().enumerate() {
            prod[i + j] = (prod[i + j] + u as u64 * v as u64) % p;
        }
    }
    for d in (m..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for (k, &f) in spec.modulus[..m].iter().enumerate() {
            let t = d - m + k;
            prod[t] = (prod[t] + (p - c) * f as u64) % p;
        }
    }
    let r: Vec<u32> = prod[..m].iter().map(|&c| c as u32).collect();
    encode(spec.p, &r)
}

fn build_tables(spec: &FieldSpec) -> Tables {
    let q = spec.order() as u32;
    let qs = q as usize;
    let mut add = vec![0; qs * qs];
    let mut mul = vec![0; qs * qs];
    for a in 0..q {
        for b in 0..q {
            add[(a * q + b) as usize] = ref_add(spec, a, b);
            mul[(a * q + b) as usize] = ref_mul(spec, a, b);
        }
    }
    let neg = (0..q).map(|a| ref_neg(spec, a)).collect();
    let mut inv = vec![0; qs];
    for a in 1..q {
        inv[a as usize] = (1..q)
            .find(|&b| mul[(a * q + b) as usize] == 1)
            .unwrap_or(0);
    }
    let frob = (0..q)
        .map(|a| (1..spec.p).fold(a, |acc, _| mul[(acc * q + a) as usize]))
        .collect();
    Tables {
        add,
        mul,
        neg,
        inv,
        frob,
    }
}

/// Remainder of `f` modulo a monic `g` over `F_p`, coefficients constant first.
fn poly_rem_fp(p: u32, f: &[u32], g: &[u32]) -> Vec<u32> {
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    let p = p as u64;
    while r.len() > dg {
        let lead = r.pop().unwrap_or(0);
        if lead != 0 {
            let shift = r.len() - dg;
            for (k, &gk) in g[..dg].iter().enumerate() {
                r[shift + k] = (r[shift + k] + (p - lead) * gk as u64) % p;
            }
        }
    }
    r.into_iter().map(|c| c as u32).collect()
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub(crate) fn is_irreducible(p: u32, modulus: &[u32]) -> bool {
    let deg = modulus.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut g: Vec<u32> = Vec::with_capacity(d + 1);
            let mut rest = idx;
            for _ in 0..d {
                g.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            g.push(1);
            if poly_rem_fp(p, modulus, &g).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> Field {
        Field::with_default_modulus(2, 2).unwrap()
    }
    fn f8() -> Field {
        Field::with_default_modulus(2, 3).unwrap()
    }
    fn f9() -> Field {
        Field::with_default_modulus(3, 2).unwrap()
    }

    #[test]
    fn add_examples() {
        let f = f4();
        let w = f.gen();
        assert_eq!(f.add(w, w), Fe::ZERO);
        let g = f9();
        let w = g.gen();
        let b = g.parse("2w+2").unwrap();
        assert_eq!(g.add(w, b), g.from_int(2));
    }

    #[test]
    fn mul_examples() {
        let f = f4();
        let w = f.gen();
        assert_eq!(f.mul(w, w), f.parse("w+1").unwrap());
        let g = f8();
        let w = g.gen();
        assert_eq!(g.mul(g.parse("w^2").unwrap(), w), g.parse("w+1").unwrap());
    }

    #[test]
    fn inverse_examples() {
        let f = f4();
        assert_eq!(f.inv(Fe::ONE).unwrap(), Fe::ONE);
        assert_eq!(f.inv(f.gen()).unwrap(), f.parse("w+1").unwrap());
        assert_eq!(f.inv(Fe::ZERO), Err(Error::ZeroInverse));
        let g = f9();
        for a in g.elements().skip(1) {
            assert_eq!(g.mul(a, g.inv(a).unwrap()), Fe::ONE);
        }
    }

    #[test]
    fn frobenius_examples() {
        let f = f4();
        assert_eq!(f.apply_aut(f.aut(1), f.gen()), f.parse("w+1").unwrap());
        let g = f8();
        assert_eq!(g.apply_aut(g.aut(2), g.gen()), g.parse("w^2+w").unwrap());
    }

    #[test]
    fn enumeration_order() {
        let f = f4();
        let names: Vec<String> = f.elements().map(|a| f.format(a)).collect();
        assert_eq!(names, ["0", "1", "w", "w+1"]);
        assert_eq!(f9().elements().count(), 9);
        assert_eq!(
            Field::with_default_modulus(2, 4)
                .unwrap()
                .elements()
                .count(),
            16
        );
    }

    #[test]
    fn parse_examples() {
        let g = f8();
        assert_eq!(g.coeffs(g.parse("w^2+w+1").unwrap()), vec![1, 1, 1]);
        assert_eq!(g.parse("0").unwrap(), Fe::ZERO);
        let h = f9();
        assert_eq!(h.coeffs(h.parse("2w+2").unwrap()), vec![2, 2]);
        assert_eq!(h.parse("2*w + 2").unwrap(), h.parse("2w+2").unwrap());
        assert!(matches!(h.parse("3w"), Err(Error::Parse { .. })));
        assert!(matches!(h.parse("w+"), Err(Error::Parse { .. })));
        assert!(matches!(h.parse("x"), Err(Error::Parse { .. })));
        let p17 = Field::with_default_modulus(17, 1).unwrap();
        assert_eq!(p17.parse("16").unwrap().index(), 16);
        assert!(p17.parse("17").is_err());
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(Field::new(FieldSpec::new(4, 1, vec![0, 1])).is_err());
        // w^2 + 1 = (w + 1)^2 over F_2
        assert!(Field::new(FieldSpec::new(2, 2, vec![1, 0, 1])).is_err());
        assert!(Field::new(FieldSpec::new(2, 2, vec![1, 1, 2])).is_err());
        assert!(Field::new(FieldSpec::new(2, 2, vec![1, 1])).is_err());
    }

    #[test]
    fn default_moduli_are_primitive() {
        for (p, m) in [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (2, 5), (3, 3)] {
            let f = Field::with_default_modulus(p, m).unwrap();
            assert!(f.is_primitive(f.gen()), "F_{}^{}", p, m);
        }
    }

    #[test]
    fn automorphism_group_has_m_elements() {
        for (p, m) in [(2, 2), (2, 3), (3, 2), (2, 4)] {
            let f = Field::with_default_modulus(p, m).unwrap();
            let images: std::collections::BTreeSet<Fe> =
                (0..m).map(|e| f.apply_aut(f.aut(e), f.gen())).collect();
            assert_eq!(images.len(), m as usize);
            assert_eq!(f.apply_aut(f.aut(m), f.gen()), f.gen());
        }
    }

    #[test]
    fn aut_order() {
        assert_eq!(FieldAut::new(2, 3).order(3), 3);
        assert_eq!(FieldAut::new(2, 4).order(4), 2);
        assert_eq!(FieldAut::IDENTITY.order(4), 1);
        assert_eq!(
            FieldAut::new(1, 4).then(FieldAut::new(3, 4), 4),
            FieldAut::IDENTITY
        );
    }

    #[test]
    fn untabulated_field_agrees_with_law() {
        // 3^6 = 729 > TABLE_LIMIT, exercises the reference path
        let f = Field::with_default_modulus(3, 6).unwrap();
        let w = f.gen();
        assert!(f.is_primitive(w));
        let a = f.pow(w, 100);
        assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
        assert_eq!(f.pow(a, 729), a);
    }
}
