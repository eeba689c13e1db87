#![allow(dead_code)]

use skewcode::codes::RCode;
use skewcode::{Effort, Fe, Field, GrayMap, Matrix, ProductAut, RCodeSpec, RingSpec, SkewRing};

pub fn field(p: u32, m: u32) -> Field {
    Field::with_default_modulus(p, m).unwrap()
}

pub fn matrix(f: &Field, rows: &[&[&str]]) -> Matrix {
    let rows: Vec<Vec<Fe>> = rows
        .iter()
        .map(|r| r.iter().map(|s| f.parse(s).unwrap()).collect())
        .collect();
    Matrix::from_rows(rows[0].len(), &rows).unwrap()
}

pub struct Setup<'a> {
    pub p: u32,
    pub m: u32,
    pub theta: &'a [u32],
    pub s: &'a [&'a str],
    pub a: &'a [&'a str],
    pub n: usize,
    pub gens: &'a [&'a str],
}

impl Setup<'_> {
    pub fn spec(&self) -> RCodeSpec {
        let f = field(self.p, self.m);
        let ring = RingSpec::new(f.clone(), self.gens.len()).unwrap();
        let theta = ProductAut::new(&ring, self.theta.to_vec()).unwrap();
        let s = ring.parse(self.s).unwrap();
        let a = ring.parse(self.a).unwrap();
        let gens = self
            .gens
            .iter()
            .enumerate()
            .map(|(i, g)| {
                SkewRing::new(f.clone(), theta.component(i, f.degree()), s.comps[i])
                    .parse(g)
                    .unwrap()
            })
            .collect();
        RCodeSpec::new(ring, theta, s, a, self.n, gens).unwrap()
    }

    pub fn code(&self) -> RCode {
        RCode::build(self.spec()).unwrap()
    }
}

pub fn gray(code: &RCode, rows: &[&[&str]]) -> GrayMap {
    GrayMap::broadcast(code.field().clone(), matrix(code.field(), rows)).unwrap()
}

pub fn effort() -> Effort {
    Effort::new(Effort::DEFAULT_BUDGET, 2).unwrap()
}

/// A skew ring `F_q[x; sigma^e, s (sigma^e - Id)]` named by its parameters.
#[derive(Clone, Copy, Debug)]
pub struct Ctx {
    pub p: u32,
    pub m: u32,
    pub theta: u32,
    pub s: &'static str,
}

impl Ctx {
    pub fn ring(&self) -> SkewRing {
        let f = field(self.p, self.m);
        let s = f.parse(self.s).unwrap();
        SkewRing::new(f.clone(), f.aut(self.theta), s)
    }
}

/// Rings with and without derivations, over prime and extension fields.
pub const CONTEXTS: [Ctx; 6] = [
    Ctx {
        p: 2,
        m: 2,
        theta: 1,
        s: "w",
    },
    Ctx {
        p: 2,
        m: 3,
        theta: 1,
        s: "0",
    },
    Ctx {
        p: 3,
        m: 2,
        theta: 1,
        s: "0",
    },
    Ctx {
        p: 3,
        m: 2,
        theta: 1,
        s: "w+1",
    },
    Ctx {
        p: 2,
        m: 4,
        theta: 2,
        s: "w",
    },
    Ctx {
        p: 5,
        m: 2,
        theta: 1,
        s: "2w",
    },
];

pub fn elem(f: &Field, idx: u32) -> Fe {
    f.elem(idx % f.order()).unwrap()
}

/// Polynomial from raw indices, reduced into the field.
pub fn poly(f: &Field, raw: &[u32]) -> skewcode::SkewPoly {
    skewcode::SkewPoly::new(raw.iter().map(|&i| elem(f, i)).collect())
}
