//! Partitions, Schur polynomials and the elementary/homogeneous bases.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{
    alternant_ratio, relative_error, ComplexValue, Confluence, LaurentPoly, Precision,
};
use crate::report::EvalReport;

/// Weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Domain(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The hook `(a, 1^b)`; `a >= 1`.
    pub fn hook(a: usize, b: usize) -> Result<Self> {
        if a == 0 {
            return Err(Error::Domain("hook arm a must be at least 1".into()));
        }
        let mut parts = vec![a];
        parts.extend(std::iter::repeat_n(1, b));
        Ok(Partition(parts))
    }

    /// The rectangle `⟨width^height⟩`: `height` parts all equal to `width`.
    pub fn rectangle(width: usize, height: usize) -> Self {
        if width == 0 {
            return Partition::empty();
        }
        Partition(vec![width; height])
    }

    /// `(1^j)`, the single column.
    pub fn column(j: usize) -> Self {
        Partition(vec![1; j])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ_i` with the zero-padding convention, 1-based.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn precision_of(xs: &[ComplexValue]) -> Precision {
    xs.iter()
        .map(ComplexValue::precision)
        .min()
        .unwrap_or_default()
}

/// `s_λ(x_1..x_n) = det(x_j^(λ_i + n - i)) / det(x_j^(n - i))`.
///
/// Coincident variables (closer than the precision's confluence threshold)
/// are handled by derivative columns. A partition longer than `n` gives 0.
pub fn schur_eval(lambda: &Partition, xs: &[ComplexValue]) -> ComplexValue {
    let n = xs.len();
    let prec = precision_of(xs);
    if lambda.len() > n {
        return ComplexValue::zero(prec);
    }
    if n == 0 {
        return ComplexValue::one(prec);
    }
    let rows: Vec<LaurentPoly> = (1..=n)
        .map(|i| LaurentPoly::monomial(1, (lambda.part(i) + n - i) as i64))
        .collect();
    alternant_ratio(&rows, xs, Confluence::Allow)
        .expect("monomial alternant is square with non-negative exponents")
}

/// Elementary symmetric polynomial `e_j`.
pub fn elementary(j: i64, xs: &[ComplexValue]) -> Result<ComplexValue> {
    let j = usize::try_from(j).map_err(|_| Error::Domain(format!("e_{j}: negative degree")))?;
    let prec = precision_of(xs);
    if j > xs.len() {
        return Ok(ComplexValue::zero(prec));
    }
    // e[t] over the variables seen so far
    let mut e = vec![ComplexValue::zero(prec); j + 1];
    e[0] = ComplexValue::one(prec);
    for x in xs {
        for t in (1..=j).rev() {
            let add = &e[t - 1] * x;
            e[t] += &add;
        }
    }
    Ok(e.swap_remove(j))
}

/// Power sum `p_k = Σ x^k`.
pub fn power_sum(k: usize, xs: &[ComplexValue]) -> ComplexValue {
    let prec = precision_of(xs);
    let terms: Vec<ComplexValue> = xs.iter().map(|x| x.powi(k as i64)).collect();
    crate::numeric::complex::sum(prec, &terms)
}

/// Complete homogeneous symmetric polynomial `h_k`, from Newton's identity
/// `k h_k = Σ_{i=1}^k p_i h_{k-i}`.
pub fn homogeneous(k: i64, xs: &[ComplexValue]) -> Result<ComplexValue> {
    let k = usize::try_from(k).map_err(|_| Error::Domain(format!("h_{k}: negative degree")))?;
    let prec = precision_of(xs);
    let p: Vec<ComplexValue> = (0..=k).map(|i| power_sum(i, xs)).collect();
    let mut h = Vec::with_capacity(k + 1);
    h.push(ComplexValue::one(prec));
    for m in 1..=k {
        let mut acc = ComplexValue::zero(prec);
        for i in 1..=m {
            acc += &(&p[i] * &h[m - i]);
        }
        h.push(&acc / &ComplexValue::from_i64(prec, m as i64));
    }
    Ok(h.swap_remove(k))
}

/// The Schur expansion of `e_j h_k` in `N = |xs|` variables, as the list of
/// partitions whose Schur polynomials sum to it.
pub fn pieri_terms(j: usize, k: usize, n: usize) -> Result<Vec<Partition>> {
    if j > n {
        return Err(Error::Domain(format!(
            "e_{j} in {n} variables: need j <= N"
        )));
    }
    Ok(match (j, k) {
        (0, 0) => vec![Partition::empty()],
        (0, k) => vec![Partition::hook(k, 0)?],
        (j, 0) => vec![Partition::column(j)],
        (j, k) if j < n => vec![Partition::hook(k + 1, j - 1)?, Partition::hook(k, j)?],
        (_, k) => vec![Partition::hook(k + 1, n - 1)?],
    })
}

/// Verifies `e_j h_k` against its Pieri expansion into hook Schur polynomials.
pub fn pieri_check(j: usize, k: usize, xs: &[ComplexValue]) -> Result<EvalReport> {
    let prec = precision_of(xs);
    let terms = pieri_terms(j, k, xs.len())?;
    let lhs = &elementary(j as i64, xs)? * &homogeneous(k as i64, xs)?;
    let schur: Vec<ComplexValue> = terms.iter().map(|lambda| schur_eval(lambda, xs)).collect();
    let rhs = crate::numeric::complex::sum(prec, &schur);
    Ok(EvalReport::new(
        format!("pieri-e{j}h{k}"),
        lhs,
        rhs,
        prec.rel_tol(),
    ))
}

/// `E_ACUE(N) s_(a,1^b)`: `(-1)^b` when `a + b ≡ 0 (mod 2N)`, else 0.
pub fn hook_expectation(n: usize, a: usize, b: usize) -> Result<i32> {
    if a == 0 {
        return Err(Error::Domain("hook arm a must be at least 1".into()));
    }
    if b + 1 > n {
        return Err(Error::Domain(format!(
            "hook (a,1^{b}) has length {} > N = {n}",
            b + 1
        )));
    }
    Ok(if (a + b).is_multiple_of(2 * n) {
        if b.is_multiple_of(2) {
            1
        } else {
            -1
        }
    } else {
        0
    })
}

/// Relative agreement of a Schur value with a reference, for diagnostics.
pub fn schur_discrepancy(lambda: &Partition, xs: &[ComplexValue], reference: &ComplexValue) -> f64 {
    relative_error(&schur_eval(lambda, xs), reference)
}
