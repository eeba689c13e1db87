//! Linear codes over `F_q`, skew cyclic codes built from generator
//! polynomials, and the minimum distance engine.

mod cyclic;
pub(crate) mod enumerate;
pub mod macwilliams;

use std::fmt;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use cyclic::{
    cyclic_rows, is_closed, pseudo_linear_apply, pseudo_linear_apply_r, reduce_mod, Dimensions,
    FqCyclicCode, RCode, RCodeSpec,
};

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::Matrix;
use enumerate::{check_budget, sweep, word_count, Collect};

/// Enumeration budget and worker pool shared by the distance routines.
#[derive(Clone)]
pub struct Effort {
    budget: u64,
    workers: usize,
    pool: Arc<rayon::ThreadPool>,
}

impl fmt::Debug for Effort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Effort")
            .field("budget", &self.budget)
            .field("workers", &self.workers)
            .finish()
    }
}

impl Effort {
    pub const DEFAULT_BUDGET: u64 = 1 << 26;

    /// Number of random information sets tried when a code is too large to
    /// enumerate.
    const BOUND_TRIALS: usize = 200;

    pub fn new(budget: u64, workers: usize) -> Result<Self> {
        let workers = workers.max(1);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::InvalidSpec(format!("cannot start worker pool: {e}")))?;
        Ok(Effort {
            budget,
            workers,
            pool: Arc::new(pool),
        })
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    /// Same pool, different budget.
    pub fn with_budget(&self, budget: u64) -> Self {
        Effort {
            budget,
            ..self.clone()
        }
    }

    pub(crate) fn pool(&self) -> &rayon::ThreadPool {
        &self.pool
    }

    /// Whether `q^k` words fit in the budget.
    pub fn allows(&self, q: u32, k: usize) -> bool {
        word_count(q, k) <= self.budget as u128
    }
}

impl Default for Effort {
    fn default() -> Self {
        let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
        Effort::new(Self::DEFAULT_BUDGET, workers).expect("default worker pool")
    }
}

/// How a distance value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Direct,
    Macwilliams,
    /// Best weight seen on generator rows and random information sets; an
    /// upper bound only.
    Search,
}

/// Minimum distance of a code. `d` is `None` for the zero code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinDistance {
    pub d: Option<usize>,
    pub exact: bool,
    pub method: Method,
}

/// Least weight of `C \ S` for a subcode `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "weight")]
pub enum Outside {
    /// `S = C`.
    Empty,
    Exact(usize),
    /// Neither a sweep of `C` nor the weight distributions fit the budget.
    Unknown,
}

/// Minimum distance of `C` together with the least weight outside a subcode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestedDistance {
    pub code: MinDistance,
    pub outside: Outside,
}

/// A linear `[n, k]` code over `F_q` given by a full-rank generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    field: Field,
    gen: Matrix,
}

impl LinearCode {
    /// Spans the rows of `gen`; dependent rows are dropped.
    pub fn new(field: Field, gen: &Matrix) -> Self {
        let gen = if gen.rank(&field) == gen.rows() {
            gen.clone()
        } else {
            gen.row_basis(&field)
        };
        LinearCode { field, gen }
    }

    pub fn zero(field: Field, n: usize) -> Self {
        LinearCode {
            field,
            gen: Matrix::zeros(0, n),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn contains(&self, v: &[Fe]) -> bool {
        self.gen.row_space_contains(&self.field, v)
    }

    /// `self` is a subcode of `other`.
    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.gen.row_space_within(&self.field, &other.gen)
    }

    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.k() == other.k() && self.gen.same_row_space(&self.field, &other.gen)
    }

    /// Euclidean dual; its generator is the null space of `G`.
    pub fn dual(&self) -> LinearCode {
        if self.k() == 0 {
            return LinearCode {
                field: self.field.clone(),
                gen: Matrix::identity(self.n()),
            };
        }
        LinearCode {
            field: self.field.clone(),
            gen: self.gen.null_space(&self.field),
        }
    }

    /// Codeword for message `msg` (length `k`).
    pub fn encode(&self, msg: &[Fe]) -> Result<Vec<Fe>> {
        if self.k() == 0 {
            return Ok(vec![Fe::ZERO; self.n()]);
        }
        self.gen.vec_mul(&self.field, msg)
    }

    /// Weight distribution `A_0..A_n` by enumerating all `q^k` codewords.
    pub fn weight_enumerator(&self, effort: &Effort) -> Result<Vec<u64>> {
        if self.k() == 0 {
            let mut hist = vec![0; self.n() + 1];
            hist[0] = 1;
            return Ok(hist);
        }
        Ok(sweep(&self.field, &self.gen, self.k(), Collect::Histogram, effort)?.histogram)
    }

    /// Weight distribution computed from the dual's distribution.
    pub fn weight_enumerator_via_dual(&self, effort: &Effort) -> Result<Vec<u128>> {
        let dual = self.dual().weight_enumerator(effort)?;
        macwilliams::transform(self.field.order(), &dual)
    }

    /// Exact minimum distance by enumerating the code.
    pub fn min_distance_direct(&self, effort: &Effort) -> Result<MinDistance> {
        let d = if self.k() == 0 {
            None
        } else {
            sweep(&self.field, &self.gen, self.k(), Collect::MinMarked, effort)?.min_marked
        };
        Ok(MinDistance {
            d,
            exact: true,
            method: Method::Direct,
        })
    }

    /// Exact minimum distance through the dual weight distribution.
    pub fn min_distance_macwilliams(&self, effort: &Effort) -> Result<MinDistance> {
        check_budget(self.field.order(), self.n() - self.k(), effort)?;
        let hist = self.weight_enumerator_via_dual(effort)?;
        Ok(MinDistance {
            d: (1..hist.len()).find(|&w| hist[w] > 0),
            exact: true,
            method: Method::Macwilliams,
        })
    }

    /// Exact distance by the cheaper feasible path, or an upper bound when
    /// neither path fits the budget.
    pub fn min_distance(&self, effort: &Effort) -> MinDistance {
        let q = self.field.order();
        let (k, r) = (self.k(), self.n() - self.k());
        let direct_ok = effort.allows(q, k);
        let dual_ok = effort.allows(q, r);
        let result = if direct_ok && (!dual_ok || k <= r) {
            self.min_distance_direct(effort)
        } else if dual_ok {
            self.min_distance_macwilliams(effort)
        } else {
            return self.distance_upper_bound();
        };
        result.expect("budget checked above")
    }

    /// Least weight among generator rows, the reduced echelon rows and the
    /// systematic rows of random information sets. Deterministic.
    pub fn distance_upper_bound(&self) -> MinDistance {
        let f = &self.field;
        let weight = |row: &[Fe]| row.iter().filter(|c| !c.is_zero()).count();
        let min_row = |m: &Matrix| m.row_iter().map(weight).filter(|&w| w > 0).min();
        let mut best = min_row(&self.gen);
        let mut consider = |w: Option<usize>| {
            if let Some(w) = w {
                best = Some(best.map_or(w, |b: usize| b.min(w)));
            }
        };
        consider(min_row(&self.gen.row_basis(f)));

        let n = self.n();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut perm: Vec<usize> = (0..n).collect();
        for _ in 0..Effort::BOUND_TRIALS {
            perm.shuffle(&mut rng);
            let permuted = self.gen.select_columns(&perm);
            consider(min_row(&permuted.row_basis(f)));
        }
        MinDistance {
            d: best,
            exact: false,
            method: Method::Search,
        }
    }

    /// Minimum weight over `self \ sub` where `sub` is a subcode.
    ///
    /// Sweeps `self` with the rows outside `sub` marked, or, when `self` is
    /// too large, subtracts the weight distribution of `sub` from the one of
    /// `self` obtained through its dual. Returns `Ok(None)` when the two
    /// codes coincide.
    pub fn min_weight_outside(&self, sub: &LinearCode, effort: &Effort) -> Result<Option<usize>> {
        if !sub.is_subcode_of(self) {
            return Err(Error::Hypothesis("the second code is not a subcode".into()));
        }
        if sub.k() == self.k() {
            return Ok(None);
        }
        let q = self.field.order();
        if effort.allows(q, self.k()) {
            let basis = extend_basis(&self.field, &sub.gen, &self.gen)?;
            let marked = self.k() - sub.k();
            return Ok(sweep(&self.field, &basis, marked, Collect::MinMarked, effort)?.min_marked);
        }
        check_budget(q, self.n() - self.k(), effort)?;
        check_budget(q, sub.k(), effort)?;
        let whole = self.weight_enumerator_via_dual(effort)?;
        let inner = sub.weight_enumerator(effort)?;
        for w in 1..whole.len() {
            if whole[w] < inner[w] as u128 {
                return Err(Error::Oracle(format!(
                    "subcode has more words of weight {w} than the code"
                )));
            }
            if whole[w] > inner[w] as u128 {
                return Ok(Some(w));
            }
        }
        Err(Error::Oracle(
            "distinct codes with equal weight distributions".into(),
        ))
    }

    /// `d(C)` and the least weight of `C \ sub` from as few sweeps as
    /// possible.
    ///
    /// When `sub_matches_dual` is set the caller promises that `sub` has the
    /// weight distribution of `C^perp` (it is `C^perp` or a monomial image of
    /// it); one sweep of the dual then yields both numbers.
    pub fn nested_distance(
        &self,
        sub: &LinearCode,
        sub_matches_dual: bool,
        effort: &Effort,
    ) -> Result<NestedDistance> {
        if !sub.is_subcode_of(self) {
            return Err(Error::Hypothesis("the second code is not a subcode".into()));
        }
        if sub_matches_dual && sub.k() != self.n() - self.k() {
            return Err(Error::Hypothesis(
                "the subcode does not have the dimension of the dual".into(),
            ));
        }
        if sub.k() == self.k() {
            return Ok(NestedDistance {
                code: self.min_distance(effort),
                outside: Outside::Empty,
            });
        }
        let q = self.field.order();
        let (k, r) = (self.k(), self.n() - self.k());
        let direct_ok = effort.allows(q, k);
        let dual_ok = effort.allows(q, r);
        if direct_ok && (!dual_ok || k <= r || !(sub_matches_dual || effort.allows(q, sub.k()))) {
            let basis = extend_basis(&self.field, &sub.gen, &self.gen)?;
            let res = sweep(&self.field, &basis, k - sub.k(), Collect::Histogram, effort)?;
            return Ok(NestedDistance {
                code: MinDistance {
                    d: (1..res.histogram.len()).find(|&w| res.histogram[w] > 0),
                    exact: true,
                    method: Method::Direct,
                },
                outside: res.min_marked.map_or(Outside::Empty, Outside::Exact),
            });
        }
        if !dual_ok {
            return Ok(NestedDistance {
                code: self.distance_upper_bound(),
                outside: Outside::Unknown,
            });
        }
        let dual_hist = self.dual().weight_enumerator(effort)?;
        let whole = macwilliams::transform(q, &dual_hist)?;
        let code = MinDistance {
            d: (1..whole.len()).find(|&w| whole[w] > 0),
            exact: true,
            method: Method::Macwilliams,
        };
        let inner = if sub_matches_dual {
            dual_hist
        } else if effort.allows(q, sub.k()) {
            sub.weight_enumerator(effort)?
        } else {
            return Ok(NestedDistance {
                code,
                outside: Outside::Unknown,
            });
        };
        for w in 1..whole.len() {
            if whole[w] < inner[w] as u128 {
                return Err(Error::Oracle(format!(
                    "subcode has more words of weight {w} than the code"
                )));
            }
            if whole[w] > inner[w] as u128 {
                return Ok(NestedDistance {
                    code,
                    outside: Outside::Exact(w),
                });
            }
        }
        Err(Error::Oracle(
            "distinct codes with equal weight distributions".into(),
        ))
    }
}

/// Rows of `code` completing a basis of `sub` to a basis of `code`, listed
/// first, followed by a basis of `sub`.
fn extend_basis(field: &Field, sub: &Matrix, code: &Matrix) -> Result<Matrix> {
    let sub = sub.row_basis(field);
    let mut current = sub.clone();
    let mut extra = Vec::new();
    for row in code.row_iter() {
        let candidate = current.stack(&Matrix::from_rows(code.cols(), &[row.to_vec()])?)?;
        if candidate.rank(field) > current.rows() {
            current = candidate;
            extra.push(row.to_vec());
        }
    }
    Matrix::from_rows(code.cols(), &extra)?.stack(&sub)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn effort() -> Effort {
        Effort::new(1 << 20, 2).unwrap()
    }

    #[test]
    fn full_space_weights() {
        let f = Field::with_default_modulus(2, 1).unwrap();
        let code = LinearCode::new(f, &Matrix::identity(2));
        assert_eq!(code.weight_enumerator(&effort()).unwrap(), vec![1, 2, 1]);
        assert_eq!(code.dual().k(), 0);
    }

    #[test]
    fn zero_code() {
        let f = Field::with_default_modulus(3, 1).unwrap();
        let code = LinearCode::zero(f, 4);
        assert_eq!(
            code.weight_enumerator(&effort()).unwrap(),
            vec![1, 0, 0, 0, 0]
        );
        assert_eq!(code.min_distance_direct(&effort()).unwrap().d, None);
        assert_eq!(code.dual().k(), 4);
    }

    #[test]
    fn single_row_distance_is_its_weight() {
        let f = Field::with_default_modulus(2, 2).unwrap();
        let w = f.gen();
        let row = vec![w, Fe::ZERO, Fe::ONE, w, Fe::ZERO];
        let code = LinearCode::new(f, &Matrix::from_rows(5, &[row]).unwrap());
        assert_eq!(code.min_distance(&effort()).d, Some(3));
    }

    #[test]
    fn both_paths_agree() {
        let f = Field::with_default_modulus(3, 2).unwrap();
        let rows: Vec<Vec<Fe>> = (0..3)
            .map(|i| {
                (0..7)
                    .map(|j| f.elem(((i * 5 + j * j + 2) % 9) as u32).unwrap())
                    .collect()
            })
            .collect();
        let code = LinearCode::new(f, &Matrix::from_rows(7, &rows).unwrap());
        let e = effort();
        let direct: Vec<u128> = code
            .weight_enumerator(&e)
            .unwrap()
            .into_iter()
            .map(u128::from)
            .collect();
        assert_eq!(direct, code.weight_enumerator_via_dual(&e).unwrap());
        let a = code.min_distance_direct(&e).unwrap();
        let b = code.min_distance_macwilliams(&e).unwrap();
        assert_eq!(a.d, b.d);
        let bound = code.distance_upper_bound();
        assert!(bound.d.unwrap() >= a.d.unwrap());
    }

    #[test]
    fn dual_is_orthogonal() {
        let f = Field::with_default_modulus(2, 2).unwrap();
        let w = f.gen();
        let g = Matrix::from_rows(
            4,
            &[
                vec![Fe::ONE, w, Fe::ZERO, Fe::ONE],
                vec![Fe::ZERO, Fe::ONE, w, w],
            ],
        )
        .unwrap();
        let code = LinearCode::new(f.clone(), &g);
        let dual = code.dual();
        assert_eq!(code.k() + dual.k(), 4);
        for a in code.generator().row_iter() {
            for b in dual.generator().row_iter() {
                assert_eq!(crate::linalg::dot(&f, a, b), Fe::ZERO);
            }
        }
    }

    #[test]
    fn outside_weight_of_nested_pair() {
        let f = Field::with_default_modulus(2, 1).unwrap();
        // repetition code inside the even-weight code of length 4
        let even = LinearCode::new(
            f.clone(),
            &Matrix::from_rows(
                4,
                &[
                    vec![Fe(1), Fe(1), Fe(0), Fe(0)],
                    vec![Fe(0), Fe(1), Fe(1), Fe(0)],
                    vec![Fe(0), Fe(0), Fe(1), Fe(1)],
                ],
            )
            .unwrap(),
        );
        let rep = LinearCode::new(f, &Matrix::from_rows(4, &[vec![Fe(1); 4]]).unwrap());
        let e = effort();
        assert_eq!(even.min_weight_outside(&rep, &e).unwrap(), Some(2));
        // same answer through weight distributions
        let tight = e.with_budget(4);
        assert_eq!(even.min_weight_outside(&rep, &tight).unwrap(), Some(2));
        assert_eq!(rep.min_weight_outside(&rep, &e).unwrap(), None);
        assert!(rep.min_weight_outside(&even, &e).is_err());
    }

    #[test]
    fn nested_distance_paths_agree() {
        let f = Field::with_default_modulus(2, 1).unwrap();
        let one = Fe::ONE;
        let z = Fe::ZERO;
        // [7,4] Hamming code and its dual simplex code
        let ham = LinearCode::new(
            f,
            &Matrix::from_rows(
                7,
                &[
                    vec![one, z, z, z, z, one, one],
                    vec![z, one, z, z, one, z, one],
                    vec![z, z, one, z, one, one, z],
                    vec![z, z, z, one, one, one, one],
                ],
            )
            .unwrap(),
        );
        let dual = ham.dual();
        let e = effort();
        let a = ham.nested_distance(&dual, true, &e).unwrap();
        assert_eq!(a.code.d, Some(3));
        assert_eq!(a.outside, Outside::Exact(3));
        // the dual path: 2^3 words fit, 2^4 do not
        let b = ham.nested_distance(&dual, true, &e.with_budget(8)).unwrap();
        assert_eq!(
            (b.code.method, b.code.d, b.outside),
            (Method::Macwilliams, Some(3), Outside::Exact(3))
        );
        let c = ham
            .nested_distance(&dual, false, &e.with_budget(8))
            .unwrap();
        assert_eq!(c.outside, Outside::Exact(3));
        let none = ham.nested_distance(&dual, true, &e.with_budget(4)).unwrap();
        assert_eq!(none.outside, Outside::Unknown);
        assert!(!none.code.exact);
        assert_eq!(
            ham.nested_distance(&ham, false, &e).unwrap().outside,
            Outside::Empty
        );
    }
}
