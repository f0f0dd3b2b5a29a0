//! Polynomials with exact scaled derivatives.
//!
//! Confluent determinants need `f^(r)(a) / r!` for each row function. Both
//! representations here produce those values directly from the coefficients,
//! with no numerical differentiation.

use crate::error::{Error, Result};
use crate::numeric::complex::ComplexValue;
use crate::numeric::precision::Precision;

/// Dense polynomial, coefficients in ascending powers.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<ComplexValue>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<ComplexValue>) -> Self {
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[ComplexValue] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &ComplexValue) -> ComplexValue {
        self.eval_scaled_derivative(0, x)
    }

    /// `f^(r)(x) / r!`, via `Σ_k c_k C(k, r) x^(k-r)` in Horner form.
    pub fn eval_scaled_derivative(&self, r: usize, x: &ComplexValue) -> ComplexValue {
        let prec = x.precision();
        let mut acc = ComplexValue::zero(prec);
        for k in (r..self.coeffs.len()).rev() {
            let binom = ComplexValue::from_i64(prec, binomial(k as i64, r) as i64);
            acc = &(&acc * x) + &(&self.coeffs[k] * &binom);
        }
        acc
    }
}

/// Sparse Laurent polynomial with integer coefficients: `Σ c x^e`.
///
/// The moment columns and Schur alternant rows are all of this form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: Vec<(i64, i64)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn monomial(coeff: i64, exponent: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(coeff, exponent);
        p
    }

    pub fn add_term(&mut self, coeff: i64, exponent: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.iter_mut().find(|(_, e)| *e == exponent) {
            Some(term) => term.0 += coeff,
            None => self.terms.push((coeff, exponent)),
        }
        self.terms.retain(|(c, _)| *c != 0);
        self.terms.sort_by_key(|t| std::cmp::Reverse(t.1));
    }

    pub fn minus(mut self, other: &LaurentPoly) -> Self {
        for &(c, e) in &other.terms {
            self.add_term(-c, e);
        }
        self
    }

    /// `(coefficient, exponent)` pairs sorted by decreasing exponent.
    pub fn terms(&self) -> &[(i64, i64)] {
        &self.terms
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.last().map(|t| t.1)
    }

    pub fn eval(&self, x: &ComplexValue) -> Result<ComplexValue> {
        self.eval_scaled_derivative(0, x)
    }

    /// `f^(r)(x) / r!` using generalised binomials, so negative exponents work.
    pub fn eval_scaled_derivative(&self, r: usize, x: &ComplexValue) -> Result<ComplexValue> {
        let prec: Precision = x.precision();
        let mut acc = ComplexValue::zero(prec);
        for &(c, e) in &self.terms {
            let b = binomial(e, r);
            if b == 0 {
                continue;
            }
            let shifted = e - r as i64;
            if shifted < 0 && x.is_zero() {
                return Err(Error::Pole(format!("x^{shifted} evaluated at x = 0")));
            }
            let coeff = i64::try_from(b * i128::from(c)).map_err(|_| {
                Error::Domain(format!("coefficient overflow in derivative of order {r}"))
            })?;
            acc += &(&ComplexValue::from_i64(prec, coeff) * &x.powi(shifted));
        }
        Ok(acc)
    }
}

/// Generalised binomial `e (e-1) ... (e-r+1) / r!` for any integer `e`.
pub fn binomial(e: i64, r: usize) -> i128 {
    let mut num: i128 = 1;
    for t in 0..r as i128 {
        num = num * (i128::from(e) - t) / (t + 1);
    }
    num
}
