//! Exhaustive codeword enumeration.
//!
//! A code of dimension `k` over `F_{p^m}` is swept as an `F_p`-space with
//! `km` digit rows `w^t * g_j`. Messages are visited in modular Gray-code
//! order: at step `t` the digit `v_p(t)` is incremented mod `p`, so each new
//! word costs one row addition. The top digits are fixed per shard; shard
//! count depends only on the code, never on the worker count, and shard
//! results are merged in index order.

use rayon::prelude::*;

use super::Effort;
use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::Matrix;

/// Upper limit on the number of shards a sweep is cut into.
const MAX_SHARDS: u64 = 1024;

/// What to collect while sweeping.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Collect {
    /// Minimum weight among words whose marked digits are not all zero.
    MinMarked,
    /// Full weight histogram (the marked minimum is collected as well).
    Histogram,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct SweepResult {
    pub min_marked: Option<usize>,
    pub histogram: Vec<u64>,
}

impl SweepResult {
    fn merge(mut self, other: SweepResult) -> SweepResult {
        self.min_marked = match (self.min_marked, other.min_marked) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        if self.histogram.is_empty() {
            self.histogram = other.histogram;
        } else {
            for (a, b) in self.histogram.iter_mut().zip(other.histogram) {
                *a += b;
            }
        }
        self
    }
}

/// Number of messages `q^k`, saturating.
pub(crate) fn word_count(q: u32, k: usize) -> u128 {
    let mut total: u128 = 1;
    for _ in 0..k {
        total = total.saturating_mul(q as u128);
    }
    total
}

pub(crate) fn check_budget(q: u32, k: usize, effort: &Effort) -> Result<()> {
    let needed = word_count(q, k);
    if needed > effort.budget() as u128 {
        return Err(Error::BudgetExceeded {
            needed,
            budget: effort.budget(),
        });
    }
    Ok(())
}

trait Adder: Sync {
    fn add(&self, acc: &mut [u16], row: &[u16]);

    /// Adds `row` into `acc` and returns the new weight of `acc`.
    #[inline]
    fn add_weight(&self, acc: &mut [u16], row: &[u16]) -> usize {
        self.add(acc, row);
        acc.iter().filter(|&&c| c != 0).count()
    }
}

struct XorAdd;

impl Adder for XorAdd {
    #[inline]
    fn add(&self, acc: &mut [u16], row: &[u16]) {
        for (a, &b) in acc.iter_mut().zip(row) {
            *a ^= b;
        }
    }

    #[inline]
    fn add_weight(&self, acc: &mut [u16], row: &[u16]) -> usize {
        let mut wt = 0;
        for (a, &b) in acc.iter_mut().zip(row) {
            *a ^= b;
            wt += (*a != 0) as usize;
        }
        wt
    }
}

struct ModAdd(u16);

impl Adder for ModAdd {
    #[inline]
    fn add(&self, acc: &mut [u16], row: &[u16]) {
        let p = self.0;
        for (a, &b) in acc.iter_mut().zip(row) {
            let s = *a + b;
            *a = if s >= p { s - p } else { s };
        }
    }

    #[inline]
    fn add_weight(&self, acc: &mut [u16], row: &[u16]) -> usize {
        let p = self.0;
        let mut wt = 0;
        for (a, &b) in acc.iter_mut().zip(row) {
            let s = *a + b;
            let s = if s >= p { s - p } else { s };
            *a = s;
            wt += (s != 0) as usize;
        }
        wt
    }
}

struct TableAdd {
    q: usize,
    table: Vec<u16>,
}

impl Adder for TableAdd {
    #[inline]
    fn add(&self, acc: &mut [u16], row: &[u16]) {
        for (a, &b) in acc.iter_mut().zip(row) {
            *a = self.table[*a as usize * self.q + b as usize];
        }
    }
}

struct FieldAdd(Field);

impl Adder for FieldAdd {
    fn add(&self, acc: &mut [u16], row: &[u16]) {
        for (a, &b) in acc.iter_mut().zip(row) {
            *a = self.0.add(Fe(*a as u32), Fe(b as u32)).0 as u16;
        }
    }
}

/// Sweep over every `F_q`-combination of the rows of `basis`. The first
/// `marked` rows are the marked ones.
pub(crate) fn sweep(
    field: &Field,
    basis: &Matrix,
    marked: usize,
    collect: Collect,
    effort: &Effort,
) -> Result<SweepResult> {
    check_budget(field.order(), basis.rows(), effort)?;
    let p = field.characteristic();
    let m = field.degree() as usize;
    let q = field.order();
    let n = basis.cols();

    let mut digit_rows = Vec::with_capacity(basis.rows() * m);
    let mut digit_marked = Vec::with_capacity(basis.rows() * m);
    for (j, row) in basis.row_iter().enumerate() {
        let mut scale = Fe::ONE;
        for _ in 0..m {
            digit_rows.push(
                row.iter()
                    .map(|&c| field.mul(scale, c).0 as u16)
                    .collect::<Vec<u16>>(),
            );
            digit_marked.push(j < marked);
            scale = field.mul(scale, field.gen());
        }
    }
    let plan = Plan {
        p,
        n,
        rows: digit_rows,
        marked: digit_marked,
        collect,
    };

    if p == 2 {
        plan.run(&XorAdd, effort)
    } else if m == 1 {
        plan.run(&ModAdd(p as u16), effort)
    } else if q <= 256 {
        let qs = q as usize;
        let mut table = vec![0u16; qs * qs];
        for a in 0..qs {
            for b in 0..qs {
                table[a * qs + b] = field.add(Fe(a as u32), Fe(b as u32)).0 as u16;
            }
        }
        plan.run(&TableAdd { q: qs, table }, effort)
    } else {
        plan.run(&FieldAdd(field.clone()), effort)
    }
}

struct Plan {
    p: u32,
    n: usize,
    rows: Vec<Vec<u16>>,
    marked: Vec<bool>,
    collect: Collect,
}

impl Plan {
    fn run<A: Adder>(&self, adder: &A, effort: &Effort) -> Result<SweepResult> {
        let digits = self.rows.len();
        let p = self.p as u64;
        let mut top = 0;
        let mut shards: u64 = 1;
        while top < digits && shards * p <= MAX_SHARDS {
            shards *= p;
            top += 1;
        }
        let low = digits - top;
        let results: Vec<SweepResult> = effort.pool().install(|| {
            (0..shards)
                .into_par_iter()
                .map(|z| self.shard(adder, z, low))
                .collect()
        });
        Ok(results.into_iter().fold(self.empty(), SweepResult::merge))
    }

    fn empty(&self) -> SweepResult {
        SweepResult {
            min_marked: None,
            histogram: match self.collect {
                Collect::Histogram => vec![0; self.n + 1],
                Collect::MinMarked => Vec::new(),
            },
        }
    }

    /// Enumerates the `p^low` words whose top digits spell `z` in base `p`.
    fn shard<A: Adder>(&self, adder: &A, mut z: u64, low: usize) -> SweepResult {
        let p = self.p as u16;
        let mut word = vec![0u16; self.n];
        let mut marked_nonzero = 0usize;
        for d in low..self.rows.len() {
            let v = (z % self.p as u64) as u16;
            z /= self.p as u64;
            for _ in 0..v {
                adder.add(&mut word, &self.rows[d]);
            }
            if v != 0 && self.marked[d] {
                marked_nonzero += 1;
            }
        }

        let mut state = vec![0u16; low];
        let mut counter = vec![0u16; low];
        let mut out = self.empty();
        let mut best = usize::MAX;
        let histogram = self.collect == Collect::Histogram;
        let mut wt = word.iter().filter(|&&c| c != 0).count();
        loop {
            if histogram {
                out.histogram[wt] += 1;
            }
            if marked_nonzero > 0 && wt < best {
                best = wt;
            }

            // base-p odometer over the step counter; the digit where the
            // carry stops is v_p(t)
            let mut i = 0;
            while i < low && counter[i] == p - 1 {
                counter[i] = 0;
                i += 1;
            }
            if i == low {
                break;
            }
            counter[i] += 1;

            let old = state[i];
            state[i] = if old + 1 == p { 0 } else { old + 1 };
            wt = adder.add_weight(&mut word, &self.rows[i]);
            if self.marked[i] {
                if old == 0 {
                    marked_nonzero += 1;
                } else if state[i] == 0 {
                    marked_nonzero -= 1;
                }
            }
        }
        if best != usize::MAX {
            out.min_marked = Some(best);
        }
        out
    }
}
