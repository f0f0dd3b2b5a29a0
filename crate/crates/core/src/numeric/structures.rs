//! Vandermonde and Cauchy structures, plus a numeric probe of determinantal
//! condensation.

use crate::error::{Error, Result};
use crate::numeric::complex::{product, ComplexValue};
use crate::numeric::matrix::ComplexMatrix;
use crate::numeric::poly::Polynomial;
use crate::numeric::precision::Precision;
use crate::report::{EvalReport, LadderStep};

/// `Δ(x_1, ..., x_n) = ∏_{j<k} (x_j - x_k)`. Empty and singleton inputs give 1.
pub fn vandermonde(xs: &[ComplexValue]) -> ComplexValue {
    let Some(first) = xs.first() else {
        return ComplexValue::one(Precision::DEFAULT);
    };
    let mut acc = ComplexValue::one(first.precision());
    for j in 0..xs.len() {
        for k in j + 1..xs.len() {
            acc *= &(&xs[j] - &xs[k]);
        }
    }
    acc
}

/// `□(u; v) = ∏_i ∏_j (u_i - v_j)`.
pub fn cauchy_product(us: &[ComplexValue], vs: &[ComplexValue]) -> Result<ComplexValue> {
    if us.len() != vs.len() {
        return Err(Error::Dimension(format!(
            "|u| = {} but |v| = {}",
            us.len(),
            vs.len()
        )));
    }
    let Some(first) = us.first() else {
        return Ok(ComplexValue::one(Precision::DEFAULT));
    };
    let factors: Vec<ComplexValue> = us
        .iter()
        .flat_map(|u| vs.iter().map(move |v| u - v))
        .collect();
    Ok(product(first.precision(), &factors))
}

/// Checks the pairwise separation that a Cauchy matrix `1/(u_i - v_j)` needs.
pub fn check_cauchy_shifts(us: &[ComplexValue], vs: &[ComplexValue]) -> Result<()> {
    if us.len() != vs.len() {
        return Err(Error::Dimension(format!(
            "|u| = {} but |v| = {}",
            us.len(),
            vs.len()
        )));
    }
    let Some(first) = us.first() else {
        return Err(Error::Dimension("empty shift sets".into()));
    };
    let thr = first.precision().threshold();
    for (i, u) in us.iter().enumerate() {
        for (j, v) in vs.iter().enumerate() {
            if u.dist(v) < thr {
                return Err(Error::Pole(format!("u_{} = v_{} ({u})", i + 1, j + 1)));
            }
        }
    }
    for (name, xs) in [("u", us), ("v", vs)] {
        if let Some((a, b)) = crate::numeric::alternant::first_coincident_pair(xs, thr) {
            return Err(Error::Pole(format!(
                "{name}_{} = {name}_{} ({})",
                a + 1,
                b + 1,
                xs[a]
            )));
        }
    }
    Ok(())
}

/// The Cauchy matrix `(1/(u_i - v_j))`.
pub fn cauchy_matrix(us: &[ComplexValue], vs: &[ComplexValue]) -> Result<ComplexMatrix> {
    ComplexMatrix::from_fn(us.len(), vs.len(), |i, j| (&us[i] - &vs[j]).recip())
}

/// Compares `det(1/(u_i - v_j))` against `Δ(u_J..u_1) Δ(v_1..v_J) / □(u; v)`.
pub fn cauchy_det_check(us: &[ComplexValue], vs: &[ComplexValue]) -> Result<EvalReport> {
    check_cauchy_shifts(us, vs)?;
    let prec = us[0].precision().min(vs[0].precision());
    let lhs = cauchy_matrix(us, vs)?.det()?;
    let reversed: Vec<ComplexValue> = us.iter().rev().cloned().collect();
    let rhs = &(&vandermonde(&reversed) * &vandermonde(vs)) / &cauchy_product(us, vs)?;
    Ok(EvalReport::new(
        "cauchy-determinant",
        lhs,
        rhs,
        prec.rel_tol(),
    ))
}

/// Which condensation variant to probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CondensationOrder {
    /// Leading `q` rows collapse, divided by `Δ(u_q, ..., u_1)`; row `i`
    /// becomes `f^(i-1)(a)/(i-1)!`.
    Leading,
    /// Leading `q` rows collapse, divided by `Δ(u_1, ..., u_q)`; row `i`
    /// becomes `f^(q-i)(a)/(q-i)!`.
    LeadingReversed,
    /// Trailing `q` rows collapse, divided by `Δ(u_J, ..., u_{J-q+1})`.
    Trailing,
}

/// Geometric ε-ladder used to approach the confluent point `u_i = a + ε σ^i`.
#[derive(Debug, Clone)]
pub struct Ladder {
    pub sigma: (f64, f64),
    pub eps: Vec<f64>,
}

impl Ladder {
    /// `ε = 10^-1, 10^-2, ...`, stopping before `ε^(q(q-1)/2)` eats more than
    /// half the working digits, and at `10^-10` at most.
    pub fn for_precision(prec: Precision, q: usize) -> Self {
        let digits = f64::from(prec.bits()) / 2.0 * std::f64::consts::LOG10_2;
        let pairs = (q * q.saturating_sub(1) / 2).max(1) as f64;
        let steps = ((digits / pairs).floor() as i32).clamp(2, 10);
        Ladder {
            sigma: (0.8, 0.45),
            eps: (1..=steps).map(|m| 10f64.powi(-m)).collect(),
        }
    }
}

/// Probes `lim det(f_j(u_i)) / Δ(...)` against the confluent determinant.
///
/// `fs` holds the `J` column functions; `q` rows collapse onto `a`; the other
/// `J - q` rows sit at `tail_points`. The reported value is a Richardson
/// extrapolation of the last two ladder steps.
pub fn condensation_check(
    fs: &[Polynomial],
    q: usize,
    a: &ComplexValue,
    tail_points: &[ComplexValue],
    order: CondensationOrder,
) -> Result<EvalReport> {
    let ladder = Ladder::for_precision(a.precision(), q);
    condensation_check_with(fs, q, a, tail_points, order, &ladder)
}

pub fn condensation_check_with(
    fs: &[Polynomial],
    q: usize,
    a: &ComplexValue,
    tail_points: &[ComplexValue],
    order: CondensationOrder,
    ladder: &Ladder,
) -> Result<EvalReport> {
    let j = fs.len();
    if q == 0 || q > j {
        return Err(Error::Dimension(format!(
            "need 1 <= q <= J, got q = {q}, J = {j}"
        )));
    }
    if tail_points.len() != j - q {
        return Err(Error::Dimension(format!(
            "{} tail points for J - q = {}",
            tail_points.len(),
            j - q
        )));
    }
    if ladder.eps.len() < 2 {
        return Err(Error::Dimension("ladder needs at least two steps".into()));
    }
    let prec = a.precision();
    let collapsed_rows = match order {
        CondensationOrder::Leading | CondensationOrder::LeadingReversed => 0..q,
        CondensationOrder::Trailing => j - q..j,
    };
    let derivative_order = |row: usize| -> usize {
        match order {
            CondensationOrder::Leading => row,
            CondensationOrder::LeadingReversed => q - 1 - row,
            CondensationOrder::Trailing => row - (j - q),
        }
    };
    let tail_of = |row: usize| -> &ComplexValue {
        match order {
            CondensationOrder::Trailing => &tail_points[row],
            _ => &tail_points[row - q],
        }
    };

    let confluent = ComplexMatrix::from_fn(j, j, |row, col| {
        if collapsed_rows.contains(&row) {
            fs[col].eval_scaled_derivative(derivative_order(row), a)
        } else {
            fs[col].eval(tail_of(row))
        }
    })?
    .det()?;

    let sigma = ComplexValue::from_f64(prec, ladder.sigma.0, ladder.sigma.1);
    let mut steps = Vec::with_capacity(ladder.eps.len());
    for &eps in &ladder.eps {
        let eps_c = ComplexValue::from_f64(prec, eps, 0.0);
        // u_i = a + ε σ^i with the 1-based index of the collapsing row
        let points: Vec<ComplexValue> = (0..j)
            .map(|row| {
                if collapsed_rows.contains(&row) {
                    let i = (row - collapsed_rows.start + 1) as i64;
                    a + &(&eps_c * &sigma.powi(i))
                } else {
                    tail_of(row).clone()
                }
            })
            .collect();
        let det = ComplexMatrix::from_fn(j, j, |row, col| fs[col].eval(&points[row]))?.det()?;
        let collapsed = &points[collapsed_rows.clone()];
        let delta_args: Vec<ComplexValue> = match order {
            CondensationOrder::LeadingReversed => collapsed.to_vec(),
            _ => collapsed.iter().rev().cloned().collect(),
        };
        let value = &det / &vandermonde(&delta_args);
        steps.push(LadderStep {
            eps,
            rel_err: crate::numeric::relative_error(&value, &confluent),
            value,
        });
    }

    let (prev, last) = (&steps[steps.len() - 2], &steps[steps.len() - 1]);
    let ratio = prev.eps / last.eps;
    let r = ComplexValue::from_f64(prec, ratio, 0.0);
    let extrapolated =
        &(&(&r * &last.value) - &prev.value) / &ComplexValue::from_f64(prec, ratio - 1.0, 0.0);
    let label = match order {
        CondensationOrder::Leading => "condensation-leading",
        CondensationOrder::LeadingReversed => "condensation-leading-reversed",
        CondensationOrder::Trailing => "condensation-trailing",
    };
    Ok(EvalReport::new(label, extrapolated, confluent, 1e-10).with_ladder(steps))
}
