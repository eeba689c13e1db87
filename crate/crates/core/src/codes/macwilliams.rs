//! Weight enumerator transform between a code and its Euclidean dual.

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};

/// Binomial coefficients `C(a, b)` for `0 <= a, b <= n`.
fn binomials(n: usize) -> Vec<Vec<BigInt>> {
    let mut c = vec![vec![BigInt::from(0); n + 1]; n + 1];
    for a in 0..=n {
        c[a][0] = BigInt::from(1);
        for b in 1..=a {
            c[a][b] = &c[a - 1][b - 1] + &c[a - 1][b];
        }
    }
    c
}

/// Given the weight distribution `dual` of a code `D` of length `n` over
/// `F_q`, returns the weight distribution of `D^perp`:
/// `A_j = |D|^{-1} sum_w B_w K_j(w)` with Krawtchouk polynomials
/// `K_j(w) = sum_s (-1)^s (q-1)^{j-s} C(w,s) C(n-w,j-s)`.
///
/// Fails with an oracle error if any count is negative or fractional.
pub fn transform(q: u32, dual: &[u64]) -> Result<Vec<u128>> {
    let n = dual.len() - 1;
    let size: BigInt = dual.iter().map(|&b| BigInt::from(b)).sum();
    if size == BigInt::from(0) {
        return Err(Error::Oracle("empty weight distribution".into()));
    }
    let binom = binomials(n);
    let qm1 = BigInt::from(q - 1);
    let mut powers = vec![BigInt::from(1); n + 1];
    for i in 1..=n {
        powers[i] = &powers[i - 1] * &qm1;
    }

    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut total = BigInt::from(0);
        for (w, &b) in dual.iter().enumerate() {
            if b == 0 {
                continue;
            }
            let mut k = BigInt::from(0);
            for s in 0..=j.min(w) {
                if j - s > n - w {
                    continue;
                }
                let term = &powers[j - s] * &binom[w][s] * &binom[n - w][j - s];
                if s % 2 == 0 {
                    k += term;
                } else {
                    k -= term;
                }
            }
            total += k * BigInt::from(b);
        }
        if &total % &size != BigInt::from(0) {
            return Err(Error::Oracle(format!(
                "weight count A_{j} is not an integer"
            )));
        }
        let value = total / &size;
        let value: BigUint = value
            .try_into()
            .map_err(|_| Error::Oracle(format!("weight count A_{j} is negative")))?;
        let value: u128 = value
            .try_into()
            .map_err(|_| Error::Oracle(format!("weight count A_{j} overflows u128")))?;
        out.push(value);
    }
    Ok(out)
}
