//! Coefficient rings shared by the tensor layer, the symbolic kernel and the
//! numeric evaluators.
//!
//! Three concrete rings are supported: exact rationals, exact Gaussian
//! rationals and `f64`. A forward-mode [`Dual`] number is also provided so
//! that the same tensor formulas can be differentiated along one direction.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// Exact rational number.
pub type Rational = Ratio<i64>;

/// Exact Gaussian rational `p + q i` with `p, q` rational.
pub type GaussRational = Complex<Rational>;

/// Shorthand for `n / d` as an exact rational.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// A commutative ring with a canonical embedding of the rationals.
///
/// Implemented by the scalar rings and by the symbolic jet polynomials, so
/// that one tensor formula can be evaluated exactly, numerically, or
/// symbolically.
pub trait Ring:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_ratio(r: Rational) -> Self;
    fn is_zero(&self) -> bool;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(Rational::from_integer(n))
    }

    /// Multiply by an exact rational constant.
    fn scale(self, r: Rational) -> Self {
        if Zero::is_zero(&r) {
            Self::zero()
        } else if r.is_one() {
            self
        } else {
            self * Self::from_ratio(r)
        }
    }
}

/// A ring whose elements have a size, so that identities can be judged with
/// a tolerance. Exact rings report their magnitude exactly enough to decide
/// zero versus nonzero.
pub trait Scalar: Ring {
    fn magnitude(&self) -> f64;

    /// Whether this ring is exact (rational or Gaussian rational).
    fn is_exact() -> bool;
}

fn ratio_to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_ratio(r: Rational) -> Self {
        r
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Scalar for Rational {
    fn magnitude(&self) -> f64 {
        ratio_to_f64(&self.abs())
    }
    fn is_exact() -> bool {
        true
    }
}

impl Ring for GaussRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_ratio(r: Rational) -> Self {
        Complex::new(r, Rational::from_integer(0))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Scalar for GaussRational {
    fn magnitude(&self) -> f64 {
        ratio_to_f64(&self.re).hypot(ratio_to_f64(&self.im))
    }
    fn is_exact() -> bool {
        true
    }
}

impl Ring for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_ratio(r: Rational) -> Self {
        ratio_to_f64(&r)
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
}

impl Scalar for f64 {
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    fn is_exact() -> bool {
        false
    }
}

/// The imaginary unit as a Gaussian rational.
pub fn gi() -> GaussRational {
    Complex::new(Rational::from_integer(0), Rational::from_integer(1))
}

/// Embed a rational into the Gaussian rationals.
pub fn gr(r: Rational) -> GaussRational {
    Complex::new(r, Rational::from_integer(0))
}

/// Forward-mode dual number `value + slope·ε` with `ε² = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Dual {
    pub value: f64,
    pub slope: f64,
}

impl Dual {
    pub fn new(value: f64, slope: f64) -> Self {
        Self { value, slope }
    }
}

impl Add for Dual {
    type Output = Dual;
    fn add(self, o: Dual) -> Dual {
        Dual::new(self.value + o.value, self.slope + o.slope)
    }
}

impl Sub for Dual {
    type Output = Dual;
    fn sub(self, o: Dual) -> Dual {
        Dual::new(self.value - o.value, self.slope - o.slope)
    }
}

impl Mul for Dual {
    type Output = Dual;
    fn mul(self, o: Dual) -> Dual {
        Dual::new(self.value * o.value, self.value * o.slope + self.slope * o.value)
    }
}

impl Neg for Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual::new(-self.value, -self.slope)
    }
}

impl Ring for Dual {
    fn zero() -> Self {
        Dual::default()
    }
    fn one() -> Self {
        Dual::new(1.0, 0.0)
    }
    fn from_ratio(r: Rational) -> Self {
        Dual::new(ratio_to_f64(&r), 0.0)
    }
    fn is_zero(&self) -> bool {
        self.value == 0.0 && self.slope == 0.0
    }
}

impl Scalar for Dual {
    fn magnitude(&self) -> f64 {
        self.value.abs().max(self.slope.abs())
    }
    fn is_exact() -> bool {
        false
    }
}

/// Render a rational as `n` or `n/d`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Render a Gaussian rational as `(re+imi)`.
pub fn fmt_gauss(z: &GaussRational) -> String {
    let im = fmt_rational(&z.im.abs());
    let sign = if z.im.is_negative() { '-' } else { '+' };
    format!("({}{}{}i)", fmt_rational(&z.re), sign, im)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_product_rule() {
        let x = Dual::new(3.0, 1.0);
        let y = x * x * x;
        assert_eq!(y.value, 27.0);
        assert_eq!(y.slope, 27.0);
    }

    #[test]
    fn gaussian_formatting() {
        assert_eq!(fmt_gauss(&(gi() * gr(q(-3, 4)))), "(0-3/4i)");
        assert_eq!(fmt_gauss(&gr(q(5, 1))), "(5+0i)");
    }

    #[test]
    fn scale_short_circuits() {
        assert_eq!(2.5f64.scale(q(0, 1)), 0.0);
        assert_eq!(q(2, 3).scale(q(3, 2)), q(1, 1));
    }
}
