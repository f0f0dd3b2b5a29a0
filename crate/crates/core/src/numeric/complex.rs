//! Arbitrary-precision complex scalars.
//!
//! [`ComplexValue`] pairs two MPFR floats. Binary operations run at the
//! smaller of the two operand precisions, so mixing a 128-bit and a 256-bit
//! value yields a 128-bit result.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex64;
use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numeric::precision::Precision;

#[derive(Clone, PartialEq)]
pub struct ComplexValue {
    re: Float,
    im: Float,
}

impl ComplexValue {
    /// Builds a value from two floats. Panics if either part carries fewer
    /// than [`Precision::MIN_BITS`] bits.
    pub fn new(re: Float, im: Float) -> Self {
        assert!(
            re.prec() >= Precision::MIN_BITS && im.prec() >= Precision::MIN_BITS,
            "ComplexValue parts need at least {} bits",
            Precision::MIN_BITS
        );
        ComplexValue { re, im }
    }

    pub fn zero(prec: Precision) -> Self {
        Self::from_i64(prec, 0)
    }

    pub fn one(prec: Precision) -> Self {
        Self::from_i64(prec, 1)
    }

    pub fn i(prec: Precision) -> Self {
        ComplexValue {
            re: Float::with_val(prec.bits(), 0),
            im: Float::with_val(prec.bits(), 1),
        }
    }

    pub fn from_i64(prec: Precision, n: i64) -> Self {
        ComplexValue {
            re: Float::with_val(prec.bits(), n),
            im: Float::with_val(prec.bits(), 0),
        }
    }

    /// Lifts an `f64` pair exactly (every double is representable at >= 64 bits).
    pub fn from_f64(prec: Precision, re: f64, im: f64) -> Self {
        ComplexValue {
            re: Float::with_val(prec.bits(), re),
            im: Float::with_val(prec.bits(), im),
        }
    }

    pub fn from_c64(prec: Precision, z: Complex64) -> Self {
        Self::from_f64(prec, z.re, z.im)
    }

    pub fn real(re: Float) -> Self {
        let im = Float::with_val(re.prec(), 0);
        Self::new(re, im)
    }

    /// Parses two decimal strings directly at the target precision.
    pub fn parse_parts(prec: Precision, re: &str, im: &str) -> Result<Self> {
        let parse = |s: &str| -> Result<Float> {
            let t = s.trim();
            let parsed = Float::parse(t).map_err(|e| Error::Parse(format!("{t:?}: {e}")))?;
            Ok(Float::with_val(prec.bits(), parsed))
        };
        Ok(ComplexValue {
            re: parse(re)?,
            im: parse(im)?,
        })
    }

    /// `e(k/m) = exp(2πi k/m)`.
    pub fn root_of_unity(prec: Precision, k: i64, m: u64) -> Self {
        assert!(m > 0, "root of unity of order zero");
        let k = k.rem_euclid(m as i64);
        if (4 * k) % m as i64 == 0 {
            let (re, im) = [(1, 0), (0, 1), (-1, 0), (0, -1)][(4 * k / m as i64) as usize];
            return ComplexValue {
                re: Float::with_val(prec.bits(), re),
                im: Float::with_val(prec.bits(), im),
            };
        }
        let guard = prec.bits() + 32;
        let mut angle = Float::with_val(guard, Constant::Pi);
        angle *= 2 * k;
        angle /= m;
        let (s, c) = angle.sin_cos(Float::new(guard));
        ComplexValue {
            re: Float::with_val(prec.bits(), c),
            im: Float::with_val(prec.bits(), s),
        }
    }

    pub fn precision(&self) -> Precision {
        Precision::new(self.re.prec().min(self.im.prec())).expect("parts hold >= 64 bits")
    }

    fn bits(&self) -> u32 {
        self.re.prec().min(self.im.prec())
    }

    pub fn re(&self) -> &Float {
        &self.re
    }

    pub fn im(&self) -> &Float {
        &self.im
    }

    pub fn into_parts(self) -> (Float, Float) {
        (self.re, self.im)
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    /// Rounds both parts to `prec`.
    pub fn with_precision(&self, prec: Precision) -> Self {
        ComplexValue {
            re: Float::with_val(prec.bits(), &self.re),
            im: Float::with_val(prec.bits(), &self.im),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm_sqr(&self) -> Float {
        let p = self.bits();
        Float::with_val(
            p,
            self.re
                .mul_add_ref(&self.re, &Float::with_val(p, self.im.square_ref())),
        )
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.bits(), self.re.hypot_ref(&self.im))
    }

    pub fn abs_f64(&self) -> f64 {
        self.abs().to_f64()
    }

    pub fn conj(&self) -> Self {
        ComplexValue {
            re: self.re.clone(),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }

    pub fn recip(&self) -> Self {
        Self::one(self.precision()) / self
    }

    /// Integer power by repeated squaring; negative exponents invert.
    pub fn powi(&self, exp: i64) -> Self {
        let mut base = if exp < 0 { self.recip() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one(self.precision());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn exp(&self) -> Self {
        let p = self.bits();
        let modulus = Float::with_val(p, self.re.exp_ref());
        let (s, c) = self.im.clone().sin_cos(Float::new(p));
        ComplexValue {
            re: Float::with_val(p, &modulus * &c),
            im: Float::with_val(p, &modulus * &s),
        }
    }

    pub fn scale(&self, factor: &Float) -> Self {
        let p = self.bits().min(factor.prec());
        ComplexValue {
            re: Float::with_val(p, &self.re * factor),
            im: Float::with_val(p, &self.im * factor),
        }
    }

    /// `|self - other|` as an `f64` (underflows to zero, which the threshold
    /// checks treat as coincidence).
    pub fn dist(&self, other: &ComplexValue) -> f64 {
        (self - other).abs_f64()
    }

    /// Decimal strings for both parts with enough digits to round-trip at
    /// the value's precision.
    pub fn to_decimal_strings(&self) -> (String, String) {
        (
            self.re.to_string_radix(10, None),
            self.im.to_string_radix(10, None),
        )
    }
}

/// `|value - reference| / |reference|`, falling back to the absolute error
/// when the reference is exactly zero.
pub fn relative_error(value: &ComplexValue, reference: &ComplexValue) -> f64 {
    let diff = (value - reference).abs();
    let scale = reference.abs();
    if scale.is_zero() {
        diff.to_f64()
    } else {
        Float::with_val(diff.prec(), &diff / &scale).to_f64()
    }
}

/// Sums in iteration order (deterministic).
pub fn sum<'a, I>(prec: Precision, items: I) -> ComplexValue
where
    I: IntoIterator<Item = &'a ComplexValue>,
{
    let mut acc = ComplexValue::zero(prec);
    for x in items {
        acc += x;
    }
    acc
}

pub fn product<'a, I>(prec: Precision, items: I) -> ComplexValue
where
    I: IntoIterator<Item = &'a ComplexValue>,
{
    let mut acc = ComplexValue::one(prec);
    for x in items {
        acc *= x;
    }
    acc
}

impl fmt::Debug for ComplexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ComplexValue({self})")
    }
}

impl fmt::Display for ComplexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20);
        let re = self.re.to_string_radix(10, Some(digits));
        let im_abs = Float::with_val(self.im.prec(), self.im.abs_ref());
        let im = im_abs.to_string_radix(10, Some(digits));
        let sign = if self.im.is_sign_negative() { '-' } else { '+' };
        write!(f, "{re}{sign}{im}i")
    }
}

impl<'a> Add<&'a ComplexValue> for &'a ComplexValue {
    type Output = ComplexValue;
    fn add(self, rhs: &ComplexValue) -> ComplexValue {
        let p = self.bits().min(rhs.bits());
        ComplexValue {
            re: Float::with_val(p, &self.re + &rhs.re),
            im: Float::with_val(p, &self.im + &rhs.im),
        }
    }
}

impl<'a> Sub<&'a ComplexValue> for &'a ComplexValue {
    type Output = ComplexValue;
    fn sub(self, rhs: &ComplexValue) -> ComplexValue {
        let p = self.bits().min(rhs.bits());
        ComplexValue {
            re: Float::with_val(p, &self.re - &rhs.re),
            im: Float::with_val(p, &self.im - &rhs.im),
        }
    }
}

impl<'a> Mul<&'a ComplexValue> for &'a ComplexValue {
    type Output = ComplexValue;
    fn mul(self, rhs: &ComplexValue) -> ComplexValue {
        let p = self.bits().min(rhs.bits());
        ComplexValue {
            re: Float::with_val(p, &self.re * &rhs.re - &self.im * &rhs.im),
            im: Float::with_val(p, &self.re * &rhs.im + &self.im * &rhs.re),
        }
    }
}

impl<'a> Div<&'a ComplexValue> for &'a ComplexValue {
    type Output = ComplexValue;
    fn div(self, rhs: &ComplexValue) -> ComplexValue {
        let p = self.bits().min(rhs.bits());
        // Smith's algorithm keeps intermediate magnitudes bounded.
        let guard = p + 16;
        let (c, d) = (&rhs.re, &rhs.im);
        if c.is_zero() && d.is_zero() {
            let nan = || Float::with_val(p, f64::NAN);
            return ComplexValue {
                re: nan(),
                im: nan(),
            };
        }
        let (re, im) = if Float::with_val(guard, c.abs_ref()) >= Float::with_val(guard, d.abs_ref())
        {
            let r = Float::with_val(guard, d / c);
            let den = Float::with_val(guard, c + Float::with_val(guard, d * &r));
            let re =
                Float::with_val(guard, &self.re + Float::with_val(guard, &self.im * &r)) / &den;
            let im =
                Float::with_val(guard, &self.im - Float::with_val(guard, &self.re * &r)) / &den;
            (re, im)
        } else {
            let r = Float::with_val(guard, c / d);
            let den = Float::with_val(guard, d + Float::with_val(guard, c * &r));
            let re =
                Float::with_val(guard, Float::with_val(guard, &self.re * &r) + &self.im) / &den;
            let im =
                Float::with_val(guard, Float::with_val(guard, &self.im * &r) - &self.re) / &den;
            (re, im)
        };
        ComplexValue {
            re: Float::with_val(p, re),
            im: Float::with_val(p, im),
        }
    }
}

impl Neg for &ComplexValue {
    type Output = ComplexValue;
    fn neg(self) -> ComplexValue {
        ComplexValue {
            re: Float::with_val(self.re.prec(), -&self.re),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }
}

impl Neg for ComplexValue {
    type Output = ComplexValue;
    fn neg(self) -> ComplexValue {
        ComplexValue {
            re: -self.re,
            im: -self.im,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<ComplexValue> for ComplexValue {
            type Output = ComplexValue;
            fn $method(self, rhs: ComplexValue) -> ComplexValue { (&self).$method(&rhs) }
        }
        impl<'a> $tr<&'a ComplexValue> for ComplexValue {
            type Output = ComplexValue;
            fn $method(self, rhs: &ComplexValue) -> ComplexValue { (&self).$method(rhs) }
        }
        impl<'a> $tr<ComplexValue> for &'a ComplexValue {
            type Output = ComplexValue;
            fn $method(self, rhs: ComplexValue) -> ComplexValue { self.$method(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&ComplexValue> for ComplexValue {
    fn add_assign(&mut self, rhs: &ComplexValue) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&ComplexValue> for ComplexValue {
    fn sub_assign(&mut self, rhs: &ComplexValue) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&ComplexValue> for ComplexValue {
    fn mul_assign(&mut self, rhs: &ComplexValue) {
        *self = &*self * rhs;
    }
}

impl Pow<i64> for &ComplexValue {
    type Output = ComplexValue;
    fn pow(self, exp: i64) -> ComplexValue {
        self.powi(exp)
    }
}

#[derive(Serialize, Deserialize)]
struct WireComplex {
    re: String,
    im: String,
    precision_bits: u32,
}

impl Serialize for ComplexValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (re, im) = self.to_decimal_strings();
        WireComplex {
            re,
            im,
            precision_bits: self.bits(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ComplexValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = WireComplex::deserialize(deserializer)?;
        let prec = Precision::new(wire.precision_bits).map_err(D::Error::custom)?;
        ComplexValue::parse_parts(prec, &wire.re, &wire.im).map_err(D::Error::custom)
    }
}
