mod common;

use common::field;
use std::sync::OnceLock;

use proptest::prelude::*;
use skewcode::{Fe, Field};

const SMALL: [(u32, u32); 9] = [
    (2, 1),
    (3, 1),
    (5, 1),
    (7, 1),
    (2, 2),
    (2, 3),
    (3, 2),
    (2, 4),
    (13, 1),
];

fn all(f: &Field) -> Vec<Fe> {
    f.elements().collect()
}

#[test]
fn ring_axioms_exhaustive() {
    for (p, m) in SMALL {
        let f = field(p, m);
        let els = all(&f);
        assert_eq!(els.len() as u32, f.order());
        for &a in &els {
            assert_eq!(f.add(a, f.zero()), a);
            assert_eq!(f.mul(a, f.one()), a);
            assert_eq!(f.add(a, f.neg(a)), f.zero());
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one(), "F_{p}^{m}");
            }
            for &b in &els {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for &c in &els {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                }
            }
        }
    }
}

#[test]
fn frobenius_is_a_field_automorphism() {
    for (p, m) in SMALL {
        let f = field(p, m);
        let els = all(&f);
        let mut images: Vec<u32> = els.iter().map(|&a| f.frobenius(a).index()).collect();
        images.sort_unstable();
        assert_eq!(images, (0..f.order()).collect::<Vec<_>>());
        for &a in &els {
            assert_eq!(f.frobenius(a), f.pow(a, p as u64));
            assert_eq!(f.pow(a, f.order() as u64), a);
            assert_eq!(f.apply_aut(f.aut(m), a), a);
            for &b in &els {
                assert_eq!(
                    f.frobenius(f.add(a, b)),
                    f.add(f.frobenius(a), f.frobenius(b))
                );
                assert_eq!(
                    f.frobenius(f.mul(a, b)),
                    f.mul(f.frobenius(a), f.frobenius(b))
                );
            }
        }
    }
}

#[test]
fn generator_is_primitive() {
    for (p, m) in SMALL.into_iter().filter(|&(_, m)| m > 1) {
        let f = field(p, m);
        assert!(f.is_primitive(f.gen()), "F_{p}^{m}");
    }
}

#[test]
fn format_parse_round_trip() {
    for (p, m) in SMALL {
        let f = field(p, m);
        for a in f.elements() {
            assert_eq!(f.parse(&f.format(a)).unwrap(), a);
        }
    }
}

fn large() -> impl Strategy<Value = Field> {
    static FIELDS: OnceLock<Vec<Field>> = OnceLock::new();
    let fields = FIELDS.get_or_init(|| {
        [(2, 8), (3, 5), (7, 3), (31, 1), (2, 11)]
            .map(|(p, m)| field(p, m))
            .into()
    });
    proptest::sample::select(fields.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_laws_sampled(f in large(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let (a, b, c) = (common::elem(&f, a), common::elem(&f, b), common::elem(&f, c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        prop_assert_eq!(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
        prop_assert_eq!(f.pow(a, f.order() as u64), a);
        if !b.is_zero() {
            prop_assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
        }
    }
}
