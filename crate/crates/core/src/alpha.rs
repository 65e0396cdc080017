//! Exact arithmetic on the fractal real line R^alpha.
//!
//! An element a^alpha is stored by its base a; the displayed value is
//! spow(a, alpha) with the signed-power convention
//! spow(u, b) = sign(u)|u|^b. Addition and multiplication act on bases
//! (a^alpha + b^alpha = (a+b)^alpha, a^alpha b^alpha = (ab)^alpha), so the
//! algebra is exact wherever base arithmetic is. Values are ordered by
//! base order; that is a toolkit convention (u -> u^alpha is strictly
//! increasing), not something the source algebra defines.

use std::cmp::Ordering;
use std::fmt;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::Rational;

/// Signed power: sign(u) * |u|^b, with spow(u, 0) = 1 and spow(u, 1) = u exact.
///
/// This is the convention that closes the alpha-type algebra under negation:
/// -(a^alpha) = (-a)^alpha.
pub fn spow(u: f64, b: f64) -> f64 {
    if b == 0.0 {
        1.0
    } else if b == 1.0 {
        u
    } else if u == 0.0 {
        if b > 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    } else if u < 0.0 {
        -(-u).powf(b)
    } else {
        u.powf(b)
    }
}

/// The fractal order alpha, 0 < alpha <= 1. Global parameter of every computation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Alpha(f64);

impl Alpha {
    /// The classical order; every operation reduces to real arithmetic.
    pub const ONE: Alpha = Alpha(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 && value <= 1.0 {
            Ok(Alpha(value))
        } else {
            Err(Error::InvalidAlpha(value))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element a^alpha of R^alpha, stored by its base a.
///
/// Two fractal numbers are equal iff their bases are bit-equal at the same
/// alpha. The displayed value is `value()` = spow(base, alpha).
#[derive(Debug, Clone, Copy)]
pub struct FractalNumber {
    base: f64,
    alpha: Alpha,
}

impl FractalNumber {
    pub fn from_base(base: f64, alpha: Alpha) -> Self {
        FractalNumber { base, alpha }
    }

    /// Inverse display map: base = spow(v, 1/alpha).
    pub fn from_value(value: f64, alpha: Alpha) -> Self {
        FractalNumber {
            base: spow(value, 1.0 / alpha.value()),
            alpha,
        }
    }

    pub fn zero(alpha: Alpha) -> Self {
        FractalNumber { base: 0.0, alpha }
    }

    pub fn one(alpha: Alpha) -> Self {
        FractalNumber { base: 1.0, alpha }
    }

    pub fn base(self) -> f64 {
        self.base
    }

    pub fn alpha(self) -> Alpha {
        self.alpha
    }

    /// Displayed value spow(base, alpha).
    pub fn value(self) -> f64 {
        spow(self.base, self.alpha.value())
    }

    fn check_alpha(self, rhs: FractalNumber) -> Result<()> {
        if self.alpha == rhs.alpha {
            Ok(())
        } else {
            Err(Error::AlphaMismatch {
                lhs: self.alpha.value(),
                rhs: rhs.alpha.value(),
            })
        }
    }

    /// a^alpha + b^alpha = (a+b)^alpha.
    pub fn add(self, rhs: FractalNumber) -> Result<FractalNumber> {
        self.check_alpha(rhs)?;
        Ok(FractalNumber::from_base(self.base + rhs.base, self.alpha))
    }

    pub fn sub(self, rhs: FractalNumber) -> Result<FractalNumber> {
        self.check_alpha(rhs)?;
        Ok(FractalNumber::from_base(self.base - rhs.base, self.alpha))
    }

    /// a^alpha b^alpha = (ab)^alpha.
    pub fn mul(self, rhs: FractalNumber) -> Result<FractalNumber> {
        self.check_alpha(rhs)?;
        Ok(FractalNumber::from_base(self.base * rhs.base, self.alpha))
    }

    pub fn div(self, rhs: FractalNumber) -> Result<FractalNumber> {
        self.check_alpha(rhs)?;
        if rhs.base == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(FractalNumber::from_base(self.base / rhs.base, self.alpha))
    }

    /// -(a^alpha) = (-a)^alpha.
    pub fn neg(self) -> FractalNumber {
        FractalNumber::from_base(-self.base, self.alpha)
    }

    /// Rational power on the base. Integer exponents iterate the fractal
    /// product exactly (so (a^alpha)^2 has base a^2, positive for a < 0);
    /// fractional exponents require base >= 0.
    pub fn pow(self, k: Rational) -> Result<FractalNumber> {
        if k.is_integer() {
            let n = k
                .to_integer()
                .to_i32()
                .ok_or_else(|| Error::Precondition("exponent too large".into()))?;
            if self.base == 0.0 && n < 0 {
                return Err(Error::DivisionByZero);
            }
            return Ok(FractalNumber::from_base(self.base.powi(n), self.alpha));
        }
        let kf = k.to_f64().expect("rational fits in f64");
        if self.base < 0.0 {
            return Err(Error::domain(
                format!("{}^{}", self.base, k),
                "negative base under non-integer power",
            ));
        }
        Ok(FractalNumber::from_base(self.base.powf(kf), self.alpha))
    }

    /// Base order (equivalently display order; the map is strictly increasing).
    pub fn cmp(self, rhs: FractalNumber) -> Result<Ordering> {
        self.check_alpha(rhs)?;
        self.base
            .partial_cmp(&rhs.base)
            .ok_or_else(|| Error::domain("cmp", "non-finite base"))
    }
}

impl PartialEq for FractalNumber {
    fn eq(&self, other: &Self) -> bool {
        self.alpha == other.alpha && self.base == other.base
    }
}

impl fmt::Display for FractalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})^{}", self.base, self.alpha)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(v: f64) -> Alpha {
        Alpha::new(v).unwrap()
    }

    fn fb(base: f64, al: f64) -> FractalNumber {
        FractalNumber::from_base(base, a(al))
    }

    #[test]
    fn alpha_range() {
        assert!(Alpha::new(0.5).is_ok());
        assert!(Alpha::new(1.0).is_ok());
        assert_eq!(Alpha::new(0.0), Err(Error::InvalidAlpha(0.0)));
        assert_eq!(Alpha::new(1.5), Err(Error::InvalidAlpha(1.5)));
        assert_eq!(Alpha::new(-0.5), Err(Error::InvalidAlpha(-0.5)));
        assert!(Alpha::new(f64::NAN).is_err());
    }

    #[test]
    fn add_is_base_addition() {
        // (base 3)^0.5 + (base 1)^0.5 = (base 4)^0.5, display 2
        let s = fb(3.0, 0.5).add(fb(1.0, 0.5)).unwrap();
        assert_eq!(s.base(), 4.0);
        assert_eq!(s.value(), 2.0);
        // a^alpha + 0^alpha = a^alpha
        let x = fb(2.5, 0.5);
        assert_eq!(x.add(FractalNumber::zero(a(0.5))).unwrap(), x);
        // additive inverse
        let z = fb(-2.0, 0.5).add(fb(2.0, 0.5)).unwrap();
        assert_eq!(z.base(), 0.0);
        assert_eq!(z.value(), 0.0);
    }

    #[test]
    fn mul_is_base_multiplication() {
        // (base 2)^0.5 * (base 3)^0.5 = (base 6)^0.5, display sqrt(6)
        let p = fb(2.0, 0.5).mul(fb(3.0, 0.5)).unwrap();
        assert_eq!(p.base(), 6.0);
        assert!((p.value() - 2.449489742783178).abs() < 1e-15);
        // identities
        let x = fb(-7.25, 0.5);
        assert_eq!(x.mul(FractalNumber::one(a(0.5))).unwrap(), x);
        assert_eq!(
            x.mul(FractalNumber::zero(a(0.5))).unwrap(),
            FractalNumber::zero(a(0.5))
        );
    }

    #[test]
    fn sub_div_neg_pow() {
        let q = fb(4.0, 0.5).div(fb(2.0, 0.5)).unwrap();
        assert_eq!(q.base(), 2.0);
        let r = fb(4.0, 0.5).pow(Rational::new(1, 2)).unwrap();
        assert_eq!(r.base(), 2.0);
        let n = fb(5.0, 0.5).neg();
        assert_eq!(n.base(), -5.0);
        assert!((n.value() + 2.23606797749979).abs() < 1e-15);
        assert_eq!(
            fb(1.0, 0.5).div(fb(0.0, 0.5)),
            Err(Error::DivisionByZero)
        );
        assert!(fb(-2.0, 0.5).pow(Rational::new(1, 2)).is_err());
        // integer powers iterate the fractal product: base (-2)^2 = +4
        assert_eq!(fb(-2.0, 0.5).pow(Rational::from_integer(2)).unwrap().base(), 4.0);
    }

    #[test]
    fn alpha_mismatch_rejected() {
        let e = fb(1.0, 0.5).add(fb(1.0, 0.75));
        assert!(matches!(e, Err(Error::AlphaMismatch { .. })));
    }

    #[test]
    fn ordering_is_base_order() {
        assert_eq!(fb(2.0, 0.5).cmp(fb(3.0, 0.5)).unwrap(), Ordering::Less);
        assert_eq!(fb(-1.0, 0.5).cmp(fb(0.0, 0.5)).unwrap(), Ordering::Less);
        let x = fb(1.25, 0.5);
        assert_eq!(x.cmp(x).unwrap(), Ordering::Equal);
    }

    #[test]
    fn round_trip_from_value() {
        let x = FractalNumber::from_value(2.0, a(0.5));
        assert!((x.base() - 4.0).abs() < 1e-12);
        assert_eq!(FractalNumber::from_value(0.0, a(0.5)).base(), 0.0);
        let n = FractalNumber::from_value(-2.0, a(0.5));
        assert!((n.base() + 4.0).abs() < 1e-12);
        // within 1e-12 relative across |base| in [1e-6, 1e6]
        for &al in &[0.2, 0.25, 0.5, 0.75, 0.9, 1.0] {
            let alpha = a(al);
            for exp in -6..=6 {
                for &sign in &[-1.0, 1.0] {
                    let base = sign * 10f64.powi(exp) * 1.37;
                    let x = FractalNumber::from_base(base, alpha);
                    let back = FractalNumber::from_value(x.value(), alpha);
                    assert!(
                        ((back.base() - base) / base).abs() < 1e-12,
                        "base={base} alpha={al}: {}",
                        back.base()
                    );
                }
            }
        }
    }

    #[test]
    fn alpha_one_is_classical() {
        let x = fb(3.7, 1.0);
        assert_eq!(x.value(), 3.7);
        assert_eq!(fb(2.0, 1.0).add(fb(3.0, 1.0)).unwrap().value(), 5.0);
    }

    #[test]
    fn spow_conventions() {
        assert_eq!(spow(0.0, 0.0), 1.0);
        assert_eq!(spow(-3.0, 1.0), -3.0);
        assert_eq!(spow(0.0, 0.5), 0.0);
        assert_eq!(spow(-4.0, 0.5), -2.0);
        assert_eq!(spow(4.0, 0.5), 2.0);
        assert_eq!(spow(0.0, -1.0), f64::INFINITY);
    }
}
