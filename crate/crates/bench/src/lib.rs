//! Fixtures shared by the benchmarks.

use skewcode::{
    Effort, Fe, Field, GrayMap, LinearCode, Matrix, ProductAut, RCode, RCodeSpec, RingSpec,
    SkewPoly, SkewRing,
};

/// `F_{p^m}` with its default modulus.
pub fn field(p: u32, m: u32) -> Field {
    Field::with_default_modulus(p, m).expect("supported field")
}

/// Deterministic pseudo-random polynomial of degree `deg`.
pub fn poly(f: &Field, deg: usize, seed: u32) -> SkewPoly {
    let mut x = seed.wrapping_mul(2_654_435_761).max(1);
    let coeffs = (0..=deg)
        .map(|_| {
            x ^= x << 13;
            x ^= x >> 17;
            x ^= x << 5;
            f.elem(x % f.order()).unwrap()
        })
        .chain(std::iter::once(f.one()))
        .collect();
    SkewPoly::new(coeffs)
}

pub fn effort(workers: usize) -> Effort {
    Effort::new(Effort::DEFAULT_BUDGET, workers).expect("valid effort")
}

/// The `F_9` code with image `[8, 5, 4]_9`, its Gray map and image.
pub fn f9_code() -> (RCode, GrayMap, LinearCode) {
    let f = field(3, 2);
    let ring = RingSpec::new(f.clone(), 2).unwrap();
    let theta = ProductAut::new(&ring, vec![1, 1]).unwrap();
    let s = ring.parse(&["0", "0"]).unwrap();
    let a = ring.parse(&["1", "2"]).unwrap();
    let sigma = SkewRing::new(f.clone(), f.aut(1), Fe::ZERO);
    let gens = vec![
        sigma.parse("2x+w+1").unwrap(),
        sigma.parse("2wx^2+2wx+w").unwrap(),
    ];
    let code = RCode::build(RCodeSpec::new(ring, theta, s, a, 4, gens).unwrap()).unwrap();
    let m = ["2w", "w", "w", "w"].map(|e| f.parse(e).unwrap());
    let gray = GrayMap::broadcast(f, Matrix::new(2, 2, m.to_vec()).unwrap()).unwrap();
    let image = gray.image(&code).unwrap();
    (code, gray, image)
}

/// The `[17, 17 - r]` constacyclic code `<(x - 9)^r>` over `F_17`
/// (`x^17 - 9 = (x - 9)^17`).
pub fn f17_code(r: usize) -> LinearCode {
    let f = field(17, 1);
    let ring = SkewRing::commutative(f.clone());
    let root = ring.parse("x-9").unwrap();
    let g = (1..r).fold(root.clone(), |acc, _| ring.mul(&acc, &root));
    skewcode::FqCyclicCode::new(ring, 17, f.from_int(9), &g)
        .unwrap()
        .code()
        .clone()
}
