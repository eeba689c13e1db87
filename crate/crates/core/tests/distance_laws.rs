mod common;

use common::{elem, field};
use proptest::collection::vec;
use proptest::prelude::*;
use skewcode::{Effort, Fe, Field, LinearCode, Matrix};

/// Weight of every codeword by encoding all `q^k` messages.
fn brute_weights(code: &LinearCode) -> Vec<u64> {
    let f = code.field();
    let (q, k) = (f.order() as u64, code.k());
    let mut hist = vec![0u64; code.n() + 1];
    for idx in 0..q.pow(k as u32) {
        let msg: Vec<Fe> = (0..k)
            .map(|i| elem(f, ((idx / q.pow(i as u32)) % q) as u32))
            .collect();
        let w = code
            .encode(&msg)
            .unwrap()
            .iter()
            .filter(|c| !c.is_zero())
            .count();
        hist[w] += 1;
    }
    hist
}

fn random_code(f: &Field, n: usize, k: usize, raw: &[u32]) -> LinearCode {
    let rows: Vec<Vec<Fe>> = (0..k)
        .map(|i| (0..n).map(|j| elem(f, raw[i * n + j])).collect())
        .collect();
    LinearCode::new(f.clone(), &Matrix::from_rows(n, &rows).unwrap())
}

fn small_field() -> impl Strategy<Value = Field> {
    prop_oneof![Just((2, 1)), Just((3, 1)), Just((2, 2)), Just((5, 1))]
        .prop_map(|(p, m)| field(p, m))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn enumerator_paths_match_brute_force(f in small_field(), n in 1usize..9, k in 1usize..6, raw in vec(any::<u32>(), 48)) {
        let code = random_code(&f, n, k.min(n), &raw);
        let effort = Effort::new(1 << 20, 2).unwrap();
        let brute = brute_weights(&code);
        prop_assert_eq!(&code.weight_enumerator(&effort).unwrap(), &brute);
        let via_dual = code.weight_enumerator_via_dual(&effort).unwrap();
        prop_assert_eq!(via_dual, brute.iter().map(|&c| c as u128).collect::<Vec<_>>());
        let d = (1..brute.len()).find(|&w| brute[w] > 0);
        prop_assert_eq!(code.min_distance_direct(&effort).unwrap().d, d);
        prop_assert_eq!(code.min_distance_macwilliams(&effort).unwrap().d, d);
        let bound = code.distance_upper_bound();
        prop_assert!(bound.d >= d);
    }

    #[test]
    fn weight_outside_a_subcode_matches_brute_force(
        f in small_field(), n in 2usize..9, k in 2usize..6, cut in 0usize..5, raw in vec(any::<u32>(), 48),
    ) {
        let code = random_code(&f, n, k.min(n), &raw);
        let basis = code.generator().to_rows();
        let sub = LinearCode::new(f.clone(), &Matrix::from_rows(n, &basis[..cut.min(basis.len())]).unwrap());
        // words of C not in S, found naively
        let q = f.order() as u64;
        let mut best: Option<usize> = None;
        for idx in 0..q.pow(code.k() as u32) {
            let msg: Vec<Fe> = (0..code.k()).map(|i| elem(&f, ((idx / q.pow(i as u32)) % q) as u32)).collect();
            let word = code.encode(&msg).unwrap();
            if !sub.contains(&word) {
                let w = word.iter().filter(|c| !c.is_zero()).count();
                best = Some(best.map_or(w, |b| b.min(w)));
            }
        }
        let big = Effort::new(1 << 20, 1).unwrap();
        prop_assert_eq!(code.min_weight_outside(&sub, &big).unwrap(), best);
        // a budget too small for C itself forces the dual path
        let small = Effort::new(q.pow(sub.k().max(code.n() - code.k()) as u32), 1).unwrap();
        if !small.allows(f.order(), code.k()) {
            prop_assert_eq!(code.min_weight_outside(&sub, &small).unwrap(), best);
        }
    }

    #[test]
    fn worker_count_does_not_change_results(n in 4usize..12, raw in vec(any::<u32>(), 72)) {
        let f = field(3, 1);
        let code = random_code(&f, n, 6.min(n), &raw);
        let one = code.weight_enumerator(&Effort::new(1 << 20, 1).unwrap()).unwrap();
        for w in [2, 4, 8] {
            prop_assert_eq!(&code.weight_enumerator(&Effort::new(1 << 20, w).unwrap()).unwrap(), &one);
        }
    }
}
