//! `H_{N,ℓ}`, `p_{N,ℓ}` and the φ/ψ column functions.

use crate::error::{Error, Result};
use crate::numeric::{ComplexValue, LaurentPoly};

/// Exponent of `H_{N,ℓ}`: `[ℓ]_{2N} - N` when `[ℓ]_{2N} >= N`, else `None`
/// (the function vanishes).
pub fn h_exponent(n: usize, ell: i64) -> Option<i64> {
    let n = n as i64;
    let r = ell.rem_euclid(2 * n);
    (r >= n).then_some(r - n)
}

/// `H_{N,ℓ}(v)`; `ℓ` is reduced mod `2N` into `0..2N`, negative values included.
pub fn h_func(n: usize, ell: i64, v: &ComplexValue) -> ComplexValue {
    match h_exponent(n, ell) {
        Some(e) => v.powi(e),
        None => ComplexValue::zero(v.precision()),
    }
}

/// `p_{N,ℓ}(v) = v^{-(ℓ+1)} - v^{N-1} H_{N,ℓ}(1/v)` as a Laurent polynomial.
pub fn p_laurent(n: usize, ell: usize) -> LaurentPoly {
    let mut p = LaurentPoly::monomial(1, -(ell as i64) - 1);
    if let Some(e) = h_exponent(n, ell as i64) {
        p.add_term(-1, n as i64 - 1 - e);
    }
    p
}

/// `p_{N,ℓ}(v)`; `v = 0` is a pole.
pub fn p_poly(n: usize, ell: usize, v: &ComplexValue) -> Result<ComplexValue> {
    check_n(n)?;
    if v.is_zero() {
        return Err(Error::Pole(format!("p_{{{n},{ell}}}(v) at v = 0")));
    }
    p_laurent(n, ell).eval(v)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("N must be at least 1".into()));
    }
    Ok(())
}

fn check_index(n: usize, k: usize, l: usize, i: usize) -> Result<()> {
    check_n(n)?;
    if k == 0 || l == 0 {
        return Err(Error::Domain(format!("need K, L >= 1, got K={k}, L={l}")));
    }
    if i == 0 || i > k + l {
        return Err(Error::Domain(format!(
            "column index {i} outside 1..={}",
            k + l
        )));
    }
    Ok(())
}

/// Moment column `φ_i` for ACUE(N):
///
/// * `i <= K`: `v^{N+L+K-i} - v^L H_{N,K-i}(v)`
/// * `i > K`: `v^{K+L-i} - v^{L+N-1} H_{N,i-K-1}(1/v)`
///
/// Every exponent that survives is non-negative, so `φ_i` is a polynomial.
pub fn phi_poly(n: usize, k: usize, l: usize, i: usize) -> Result<LaurentPoly> {
    check_index(n, k, l, i)?;
    let (n, k, l, i) = (n as i64, k as i64, l as i64, i as i64);
    Ok(if i <= k {
        let mut p = LaurentPoly::monomial(1, n + l + k - i);
        if let Some(e) = h_exponent(n as usize, k - i) {
            p.add_term(-1, l + e);
        }
        p
    } else {
        let mut p = LaurentPoly::monomial(1, k + l - i);
        if let Some(e) = h_exponent(n as usize, i - k - 1) {
            p.add_term(-1, l + n - 1 - e);
        }
        p
    })
}

/// Moment column `ψ_i` for CUE(N): `v^{N+L+K-i}` for `i <= K`, else `v^{K+L-i}`.
pub fn psi_poly(n: usize, k: usize, l: usize, i: usize) -> Result<LaurentPoly> {
    check_index(n, k, l, i)?;
    let (n, k, l, i) = (n as i64, k as i64, l as i64, i as i64);
    Ok(if i <= k {
        LaurentPoly::monomial(1, n + l + k - i)
    } else {
        LaurentPoly::monomial(1, k + l - i)
    })
}

pub fn phi_column(
    n: usize,
    k: usize,
    l: usize,
    i: usize,
    v: &ComplexValue,
) -> Result<ComplexValue> {
    phi_poly(n, k, l, i)?.eval(v)
}

pub fn psi_column(
    n: usize,
    k: usize,
    l: usize,
    i: usize,
    v: &ComplexValue,
) -> Result<ComplexValue> {
    psi_poly(n, k, l, i)?.eval(v)
}
