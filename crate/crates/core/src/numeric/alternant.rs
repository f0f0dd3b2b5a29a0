//! Alternant ratios `det(f_i(x_j)) / Δ(x)` with a confluent limit.
//!
//! When points coincide, the columns belonging to a cluster of multiplicity
//! `m` at `w` become `f_i^(r)(w) / r!` for `r = 0..m`. The same substitution
//! is applied to the Vandermonde matrix `(x_j^(n-i))`, so the ratio of the
//! two confluent determinants is the limit of the original ratio and no sign
//! bookkeeping is needed.

use crate::error::{Error, Result};
use crate::numeric::complex::ComplexValue;
use crate::numeric::matrix::ComplexMatrix;
use crate::numeric::poly::LaurentPoly;
use crate::numeric::structures::vandermonde;

/// What to do when two evaluation points are within the confluence threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Confluence {
    /// Switch to derivative columns for the coincident cluster.
    #[default]
    Allow,
    /// Report a conditioning error.
    Reject,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PointGroup {
    pub value: ComplexValue,
    pub multiplicity: usize,
}

/// Clusters points greedily: each point joins the first existing cluster
/// whose representative lies within `threshold`, else starts a new one.
pub fn group_points(points: &[ComplexValue], threshold: f64) -> Vec<PointGroup> {
    let mut groups: Vec<PointGroup> = Vec::new();
    for x in points {
        match groups.iter_mut().find(|g| g.value.dist(x) < threshold) {
            Some(g) => g.multiplicity += 1,
            None => groups.push(PointGroup {
                value: x.clone(),
                multiplicity: 1,
            }),
        }
    }
    groups
}

/// First pair `(j, k)`, `j < k`, closer than `threshold`.
pub fn first_coincident_pair(points: &[ComplexValue], threshold: f64) -> Option<(usize, usize)> {
    for j in 0..points.len() {
        for k in j + 1..points.len() {
            if points[j].dist(&points[k]) < threshold {
                return Some((j, k));
            }
        }
    }
    None
}

/// `det(rows[i](points[j])) / Δ(points)` with `Δ = ∏_{j<k} (x_j - x_k)`.
pub fn alternant_ratio(
    rows: &[LaurentPoly],
    points: &[ComplexValue],
    confluence: Confluence,
) -> Result<ComplexValue> {
    let n = points.len();
    if rows.len() != n {
        return Err(Error::Dimension(format!(
            "{} row functions for {} points",
            rows.len(),
            n
        )));
    }
    if n == 0 {
        return Err(Error::Dimension("alternant of size zero".into()));
    }
    let threshold = points[0].precision().threshold();
    match first_coincident_pair(points, threshold) {
        None => {
            let numerator = ComplexMatrix::try_from_fn(n, n, |i, j| rows[i].eval(&points[j]))?.det()?;
            Ok(&numerator / &vandermonde(points))
        }
        Some((j, k)) if confluence == Confluence::Reject => Err(Error::Conditioning(format!(
            "points {} and {} (1-based) coincide within {threshold:e}; request confluent evaluation",
            j + 1,
            k + 1
        ))),
        Some(_) => {
            let groups = group_points(points, threshold);
            let vander_rows: Vec<LaurentPoly> =
                (0..n).map(|i| LaurentPoly::monomial(1, (n - 1 - i) as i64)).collect();
            let numerator = confluent_matrix(rows, &groups)?.det()?;
            let denominator = confluent_matrix(&vander_rows, &groups)?.det()?;
            Ok(&numerator / &denominator)
        }
    }
}

/// Matrix with column blocks `f_i^(r)(w_g) / r!`, `r < m_g`, per cluster.
pub fn confluent_matrix(rows: &[LaurentPoly], groups: &[PointGroup]) -> Result<ComplexMatrix> {
    let columns: Vec<(&ComplexValue, usize)> = groups
        .iter()
        .flat_map(|g| (0..g.multiplicity).map(move |r| (&g.value, r)))
        .collect();
    ComplexMatrix::try_from_fn(rows.len(), columns.len(), |i, j| {
        let (w, r) = columns[j];
        rows[i].eval_scaled_derivative(r, w)
    })
}
