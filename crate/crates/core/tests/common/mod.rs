//! Test-side oracles, written without the library's ensemble or formula code.
#![allow(dead_code)]

use acue_lab::numeric::{relative_error, ComplexValue, Precision};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const P: Precision = Precision::DEFAULT;

pub fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::from_f64(P, re, im)
}

/// `(p_re / q_re) + i (p_im / q_im)` at full precision.
pub fn frac(p_re: i64, q_re: i64, p_im: i64, q_im: i64) -> ComplexValue {
    let re = &ComplexValue::from_i64(P, p_re) / &ComplexValue::from_i64(P, q_re);
    let im = &ComplexValue::from_i64(P, p_im) / &ComplexValue::from_i64(P, q_im);
    &re + &(&im * &ComplexValue::i(P))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_c(rng: &mut impl Rng, r: f64) -> ComplexValue {
    c(rng.random_range(-r..r), rng.random_range(-r..r))
}

pub fn random_vec(rng: &mut impl Rng, len: usize, r: f64) -> Vec<ComplexValue> {
    (0..len).map(|_| random_c(rng, r)).collect()
}

pub fn assert_close(value: &ComplexValue, reference: &ComplexValue, tol: f64, what: &str) {
    let err = relative_error(value, reference);
    assert!(
        err < tol,
        "{what}: rel err {err:e} >= {tol:e}\n  value  {value}\n  oracle {reference}"
    );
}

/// `2^{-bits}`.
pub fn two_pow(bits: i32) -> f64 {
    2f64.powi(-bits)
}

/// ACUE(N) by brute force: every N-subset of the 2N-th roots, weighted by
/// `∏_{j<k} |x_j - x_k|^2 / (2N)^N`, with subsets generated by bitmask.
pub fn acue_average<F>(n: usize, f: F) -> ComplexValue
where
    F: Fn(&[ComplexValue]) -> ComplexValue,
{
    let m = 2 * n;
    let roots: Vec<ComplexValue> = (0..m)
        .map(|k| ComplexValue::root_of_unity(P, k as i64, m as u64))
        .collect();
    let norm = ComplexValue::from_i64(P, (m as i64).pow(n as u32));
    let mut total = c(0.0, 0.0);
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize != n {
            continue;
        }
        let pts: Vec<ComplexValue> = (0..m)
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| roots[b].clone())
            .collect();
        let mut w = c(1.0, 0.0);
        for a in 0..n {
            for b in a + 1..n {
                let d = &pts[a] - &pts[b];
                w *= &(&d * &d.conj());
            }
        }
        total += &(&w * &f(&pts));
    }
    &total / &norm
}

pub fn char_poly_plus(pts: &[ComplexValue], v: &ComplexValue) -> ComplexValue {
    let one = c(1.0, 0.0);
    pts.iter()
        .fold(one.clone(), |acc, w| &acc * &(&one + &(v * w)))
}

pub fn moment_oracle(n: usize, k: usize, shifts: &[ComplexValue]) -> ComplexValue {
    acue_average(n, |pts| {
        let det = pts.iter().fold(c(1.0, 0.0), |acc, w| &acc * w);
        shifts.iter().fold(det.powi(-(k as i64)), |acc, v| {
            &acc * &char_poly_plus(pts, v)
        })
    })
}

pub fn ratio_oracle(n: usize, vs: &[ComplexValue], us: &[ComplexValue]) -> ComplexValue {
    acue_average(n, |pts| {
        vs.iter().zip(us).fold(c(1.0, 0.0), |acc, (v, u)| {
            &acc * &(&char_poly_plus(pts, v) / &char_poly_plus(pts, u))
        })
    })
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<ComplexValue>]) -> ComplexValue {
    let n = m.len();
    if n == 0 {
        return c(1.0, 0.0);
    }
    let mut total = c(0.0, 0.0);
    for j in 0..n {
        let minor: Vec<Vec<ComplexValue>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &cofactor_det(&minor);
        if j % 2 == 0 {
            total += &term;
        } else {
            total -= &term;
        }
    }
    total
}

/// `s_λ(x)` as the sum over semistandard tableaux of shape `λ` with entries
/// in `1..=|x|` of `∏ x_{entry}`.
pub fn schur_by_tableaux(lambda: &[usize], xs: &[ComplexValue]) -> ComplexValue {
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut filling = vec![vec![0usize; lambda.first().copied().unwrap_or(0)]; lambda.len()];
    let mut total = c(0.0, 0.0);
    fill(&cells, 0, &mut filling, xs, &mut total);
    total
}

fn fill(
    cells: &[(usize, usize)],
    idx: usize,
    t: &mut Vec<Vec<usize>>,
    xs: &[ComplexValue],
    total: &mut ComplexValue,
) {
    if idx == cells.len() {
        let term = cells
            .iter()
            .fold(c(1.0, 0.0), |acc, &(r, col)| &acc * &xs[t[r][col] - 1]);
        *total += &term;
        return;
    }
    let (r, col) = cells[idx];
    let lo_row = if col > 0 { t[r][col - 1] } else { 1 };
    let lo_col = if r > 0 { t[r - 1][col] + 1 } else { 1 };
    for e in lo_row.max(lo_col)..=xs.len() {
        t[r][col] = e;
        fill(cells, idx + 1, t, xs, total);
    }
}

/// All partitions of `m` with at most `max_len` parts.
pub fn partitions(m: usize, max_len: usize) -> Vec<Vec<usize>> {
    fn go(
        m: usize,
        max_part: usize,
        max_len: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if m == 0 {
            out.push(prefix.clone());
            return;
        }
        if prefix.len() == max_len {
            return;
        }
        for p in (1..=m.min(max_part)).rev() {
            prefix.push(p);
            go(m - p, p, max_len, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, max_len, &mut Vec::new(), &mut out);
    out
}

/// `ℓ`-th Taylor coefficient at 0 by the trapezoid rule on `|u| = radius`.
pub fn taylor_coefficient<F>(f: F, ell: usize, radius: f64, points: usize) -> ComplexValue
where
    F: Fn(&ComplexValue) -> ComplexValue,
{
    let mut total = c(0.0, 0.0);
    for m in 0..points {
        let u = &c(radius, 0.0) * &ComplexValue::root_of_unity(P, m as i64, points as u64);
        total += &(&f(&u) * &u.powi(-(ell as i64)));
    }
    &total / &ComplexValue::from_i64(P, points as i64)
}
