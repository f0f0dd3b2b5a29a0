//! Ratio kernels, the ACUE/CUE ratio determinants and the two-by-two swap forms.

use crate::error::{Error, Result};
use crate::numeric::structures::check_cauchy_shifts;
use crate::numeric::{ComplexMatrix, ComplexValue};

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("N must be at least 1".into()));
    }
    Ok(())
}

/// `|u^{2N} - 1|` below the pole threshold counts as a root of unity.
pub(super) fn check_off_roots(n: usize, us: &[ComplexValue]) -> Result<()> {
    for (i, u) in us.iter().enumerate() {
        let un = u.powi(n as i64);
        let gap = (&(&un * &un) - &ComplexValue::one(u.precision())).abs_f64();
        if gap < u.precision().threshold() {
            return Err(Error::Pole(format!(
                "u_{} = {u} is a {}-th root of unity (|u^{} - 1| = {gap:e})",
                i + 1,
                2 * n,
                2 * n
            )));
        }
    }
    Ok(())
}

/// `|u| < 1`, or a pole error when `u` is within threshold of the unit circle.
pub(super) fn inside_flag(i: usize, u: &ComplexValue) -> Result<bool> {
    let modulus = u.abs_f64();
    if (modulus - 1.0).abs() < u.precision().threshold() {
        return Err(Error::Pole(format!(
            "u_{} = {u} lies on the unit circle",
            i + 1
        )));
    }
    Ok(modulus < 1.0)
}

/// `𝔢_N(u, v) = (1 - u^N v^N) / (1 - u^{2N})`, unchecked.
pub fn acue_kernel(n: usize, u: &ComplexValue, v: &ComplexValue) -> ComplexValue {
    let one = ComplexValue::one(u.precision());
    let un = u.powi(n as i64);
    let vn = v.powi(n as i64);
    &(&one - &(&un * &vn)) / &(&one - &(&un * &un))
}

/// `e_N(u, v)`: 1 for `|u| < 1`, `(v/u)^N` for `|u| > 1`.
pub fn cue_kernel(n: usize, u: &ComplexValue, v: &ComplexValue) -> Result<ComplexValue> {
    check_n(n)?;
    if inside_flag(0, u)? {
        Ok(ComplexValue::one(u.precision()))
    } else {
        Ok(&v.powi(n as i64) / &u.powi(n as i64))
    }
}

/// `E_ACUE(N) det(1 + v g) / det(1 + u g) = 𝔢_N(u, v)`.
pub fn one_ratio_acue(n: usize, v: &ComplexValue, u: &ComplexValue) -> Result<ComplexValue> {
    check_n(n)?;
    check_off_roots(n, std::slice::from_ref(u))?;
    Ok(acue_kernel(n, u, v))
}

/// `f_N(u, v) = 𝔢_N(u, v) / (u - v)`.
pub fn f_kernel(n: usize, u: &ComplexValue, v: &ComplexValue) -> Result<ComplexValue> {
    check_n(n)?;
    check_cauchy_shifts(std::slice::from_ref(u), std::slice::from_ref(v))?;
    check_off_roots(n, std::slice::from_ref(u))?;
    Ok(&acue_kernel(n, u, v) / &(u - v))
}

fn kernel_ratio<F>(us: &[ComplexValue], vs: &[ComplexValue], kernel: F) -> Result<ComplexValue>
where
    F: Fn(&ComplexValue, &ComplexValue) -> Result<ComplexValue>,
{
    let cauchy = ComplexMatrix::from_fn(us.len(), vs.len(), |i, j| (&us[i] - &vs[j]).recip())?;
    let weighted = ComplexMatrix::try_from_fn(us.len(), vs.len(), |i, j| {
        Ok(cauchy.get(i, j) * &kernel(&us[i], &vs[j])?)
    })?;
    Ok(&weighted.det()? / &cauchy.det()?)
}

/// `E_ACUE(N) ∏_j det(1 + v_j g) / det(1 + u_j g)` as
/// `det(𝔢_N(u_i, v_j) / (u_i - v_j)) / det(1 / (u_i - v_j))`.
pub fn acue_ratio(n: usize, vs: &[ComplexValue], us: &[ComplexValue]) -> Result<ComplexValue> {
    check_n(n)?;
    check_cauchy_shifts(us, vs)?;
    check_off_roots(n, us)?;
    kernel_ratio(us, vs, |u, v| Ok(acue_kernel(n, u, v)))
}

/// The same determinant ratio assembled from one-ratio expectations.
pub fn bos_compose(n: usize, vs: &[ComplexValue], us: &[ComplexValue]) -> Result<ComplexValue> {
    check_n(n)?;
    check_cauchy_shifts(us, vs)?;
    kernel_ratio(us, vs, |u, v| one_ratio_acue(n, v, u))
}

/// `E_CUE(N) ∏_j det(1 + v_j G) / det(1 + u_j G)` with kernel `e_N`.
pub fn cue_ratio(n: usize, vs: &[ComplexValue], us: &[ComplexValue]) -> Result<ComplexValue> {
    check_n(n)?;
    check_cauchy_shifts(us, vs)?;
    for (i, u) in us.iter().enumerate() {
        inside_flag(i, u)?;
    }
    kernel_ratio(us, vs, |u, v| cue_kernel(n, u, v))
}

fn nonzero(name: &str, x: &ComplexValue) -> Result<()> {
    if x.abs_f64() < x.precision().threshold() {
        return Err(Error::Pole(format!("{name} = 0")));
    }
    Ok(())
}

struct SwapTerms {
    first: ComplexValue,
    second: ComplexValue,
}

/// The two CUE swap terms
/// `(1-βγ)(1-αδ)/((1-δγ)(1-αβ))` and `(αβ)^N (1-γ/α)(1-δ/β)/((1-1/(αβ))(1-γδ))`.
fn swap_terms(
    n: usize,
    alpha: &ComplexValue,
    beta: &ComplexValue,
    gamma: &ComplexValue,
    delta: &ComplexValue,
) -> Result<SwapTerms> {
    check_n(n)?;
    nonzero("α", alpha)?;
    nonzero("β", beta)?;
    let one = ComplexValue::one(alpha.precision());
    let ab = alpha * beta;
    let gd = gamma * delta;
    nonzero("1 - αβ", &(&one - &ab))?;
    nonzero("1 - γδ", &(&one - &gd))?;
    let first = &(&(&one - &(beta * gamma)) * &(&one - &(alpha * delta)))
        / &(&(&one - &gd) * &(&one - &ab));
    let second = &(&ab.powi(n as i64) * &(&(&one - &(gamma / alpha)) * &(&one - &(delta / beta))))
        / &(&(&one - &ab.recip()) * &(&one - &gd));
    Ok(SwapTerms { first, second })
}

/// `E_CUE(N) det(1-αG) det(1-βG*) / (det(1-γG) det(1-δG*))` for `|γ|, |δ| < 1`.
pub fn swap2_cue(
    n: usize,
    alpha: &ComplexValue,
    beta: &ComplexValue,
    gamma: &ComplexValue,
    delta: &ComplexValue,
) -> Result<ComplexValue> {
    for (name, x) in [("γ", gamma), ("δ", delta)] {
        if x.abs_f64() >= 1.0 {
            return Err(Error::Domain(format!(
                "the CUE swap form needs |{name}| < 1, got {x}"
            )));
        }
    }
    let t = swap_terms(n, alpha, beta, gamma, delta)?;
    Ok(&t.first + &t.second)
}

/// ACUE counterpart of [`swap2_cue`]; `γ` and `δ` only need to avoid the
/// `2N`-th roots of unity.
pub fn swap2_acue(
    n: usize,
    alpha: &ComplexValue,
    beta: &ComplexValue,
    gamma: &ComplexValue,
    delta: &ComplexValue,
) -> Result<ComplexValue> {
    let t = swap_terms(n, alpha, beta, gamma, delta)?;
    let prec = alpha.precision();
    let one = ComplexValue::one(prec);
    let thr = prec.threshold();
    let n = n as i64;
    let g2 = &one - &gamma.powi(2 * n);
    let d2 = &one - &delta.powi(2 * n);
    for (name, x) in [("1 - γ^{2N}", &g2), ("1 - δ^{2N}", &d2)] {
        if x.abs_f64() < thr {
            return Err(Error::Pole(format!("{name} = 0")));
        }
    }
    let gn = gamma.powi(n);
    let dn = delta.powi(n);
    let f1 = &(&(&one - &(&alpha.powi(n) * &gn)) / &g2) * &(&(&one - &(&beta.powi(n) * &dn)) / &d2);
    let f2 =
        &(&(&one - &(&beta.powi(-n) * &gn)) / &g2) * &(&(&one - &(&alpha.powi(-n) * &dn)) / &d2);
    Ok(&(&t.first * &f1) + &(&t.second * &f2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{relative_error, Precision};

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::from_f64(Precision::DEFAULT, re, im)
    }

    #[test]
    fn one_ratio_examples() {
        let u = c(0.3, 0.8);
        for n in 1..=4 {
            assert_eq!(one_ratio_acue(n, &u, &u).unwrap(), c(1.0, 0.0));
            assert_eq!(
                one_ratio_acue(n, &c(2.0, -1.0), &c(0.0, 0.0)).unwrap(),
                c(1.0, 0.0)
            );
        }
        let v = c(-1.1, 0.25);
        let one = c(1.0, 0.0);
        let two_point =
            &(&(&(&one + &v) / &(&one + &u)) + &(&(&one - &v) / &(&one - &u))) / &c(2.0, 0.0);
        assert!(relative_error(&one_ratio_acue(1, &v, &u).unwrap(), &two_point) < 1e-70);
        assert!(matches!(
            one_ratio_acue(
                3,
                &v,
                &ComplexValue::root_of_unity(Precision::DEFAULT, 1, 6)
            ),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn cue_kernel_branches() {
        let v = c(0.5, 0.5);
        assert_eq!(
            cue_ratio(3, std::slice::from_ref(&v), &[c(0.2, 0.1)]).unwrap(),
            c(1.0, 0.0)
        );
        let u = c(1.5, -0.5);
        let r = cue_ratio(3, std::slice::from_ref(&v), std::slice::from_ref(&u)).unwrap();
        assert!(relative_error(&r, &(&v.powi(3) / &u.powi(3))) < 1e-70);
        assert!(matches!(
            cue_ratio(2, &[v], &[c(0.6, 0.8)]),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn j1_ratios_reduce_to_kernel() {
        let (v, u) = (c(0.4, -0.9), c(1.3, 0.2));
        for n in 1..=3 {
            let one = one_ratio_acue(n, &v, &u).unwrap();
            assert!(
                relative_error(
                    &acue_ratio(n, std::slice::from_ref(&v), std::slice::from_ref(&u)).unwrap(),
                    &one
                ) < 1e-70
            );
            assert!(
                relative_error(
                    &bos_compose(n, std::slice::from_ref(&v), std::slice::from_ref(&u)).unwrap(),
                    &one
                ) < 1e-70
            );
        }
    }

    #[test]
    fn coincidence_errors_name_indices() {
        let vs = [c(0.1, 0.0), c(0.2, 0.0)];
        let us = [c(0.3, 0.0), c(0.1, 0.0)];
        let err = acue_ratio(2, &vs, &us).unwrap_err();
        assert!(err.to_string().contains("u_2 = v_1"), "{err}");
        let err = acue_ratio(2, &vs, &[c(0.5, 0.0), c(0.5, 0.0)]).unwrap_err();
        assert!(err.to_string().contains("u_1 = u_2"), "{err}");
    }

    #[test]
    fn swap_cue_at_zero_denominators() {
        let (a, b) = (c(0.3, 0.4), c(-0.7, 1.1));
        let zero = c(0.0, 0.0);
        for n in 1..=4 {
            let ab = &a * &b;
            let expected = crate::numeric::complex::sum(
                Precision::DEFAULT,
                &(0..=n as i64).map(|k| ab.powi(k)).collect::<Vec<_>>(),
            );
            let got = swap2_cue(n, &a, &b, &zero, &zero).unwrap();
            assert!(relative_error(&got, &expected) < 1e-60, "N={n}");
        }
        assert!(matches!(
            swap2_cue(2, &a, &b, &c(1.2, 0.0), &zero),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            swap2_cue(2, &a, &a.recip(), &zero, &zero),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn swap_forms_match_substituted_ratios() {
        let (a, b, g, d) = (c(0.3, 0.4), c(-0.7, 1.1), c(0.2, -0.5), c(-0.4, 0.1));
        let minus_one = c(-1.0, 0.0);
        let vs = [-&a, &minus_one / &b];
        let us = [-&g, &minus_one / &d];
        for n in 1..=4 {
            let pref = &b.powi(n as i64) / &d.powi(n as i64);
            let cue = &pref * &cue_ratio(n, &vs, &us).unwrap();
            assert!(
                relative_error(&swap2_cue(n, &a, &b, &g, &d).unwrap(), &cue) < 1e-60,
                "CUE N={n}"
            );
            let acue = &pref * &acue_ratio(n, &vs, &us).unwrap();
            assert!(
                relative_error(&swap2_acue(n, &a, &b, &g, &d).unwrap(), &acue) < 1e-60,
                "ACUE N={n}"
            );
        }
    }
}
