//! The ground field: rational functions in `t = q^(1/2)` over ℚ.
//!
//! Every [`Scalar`] is stored in a canonical form, so structural equality is field equality.

mod format;
mod laurent;
mod poly;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use laurent::Laurent;
pub use poly::Poly;

use crate::error::{Error, Result};

/// `numerator / denominator` where the denominator is a monic polynomial in `t` with nonzero
/// constant term, coprime to the numerator. Any power of `t` lives in the numerator.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    num: Laurent,
    den: Poly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { num: Laurent::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Scalar { num: Laurent::one(), den: Poly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Scalar::from_laurent(Laurent::from(c))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Scalar::from_laurent(Laurent::from(c))
    }

    pub fn from_laurent(num: Laurent) -> Self {
        Scalar { num, den: Poly::one() }
    }

    /// `t^e`, i.e. `q^(e/2)`.
    pub fn t_pow(e: i64) -> Self {
        Scalar::from_laurent(Laurent::monomial(BigRational::one(), e))
    }

    /// `q^k = t^(2k)`.
    pub fn q_pow(k: i64) -> Self {
        Scalar::t_pow(2 * k)
    }

    /// `c · t^e`.
    pub fn monomial(c: BigRational, e: i64) -> Self {
        Scalar::from_laurent(Laurent::monomial(c, e))
    }

    /// Canonicalizes an arbitrary quotient of Laurent polynomials.
    pub fn from_fraction(num: Laurent, den: Laurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = num.mul_t_pow(-den.shift());
        Ok(Scalar::reduce(num, den.body().clone()))
    }

    /// `num / den` with `den(0) != 0`; removes the common factor and makes `den` monic.
    fn reduce(num: Laurent, den: Poly) -> Self {
        debug_assert!(!den.is_zero() && !den.coeff(0).is_zero());
        if num.is_zero() {
            return Scalar::zero();
        }
        if den.degree() == Some(0) {
            let c = den.coeffs()[0].recip();
            return Scalar { num: num.scale(&c), den: Poly::one() };
        }
        let g = num.body().gcd(&den);
        let (body, den) = if g.is_one() {
            (num.body().clone(), den)
        } else {
            (num.body().div_exact(&g), den.div_exact(&g))
        };
        let lead = den.leading().unwrap().clone();
        if lead.is_one() {
            Scalar { num: Laurent::from_poly(num.shift(), body), den }
        } else {
            let inv = lead.recip();
            Scalar { num: Laurent::from_poly(num.shift(), body.scale(&inv)), den: den.scale(&inv) }
        }
    }

    pub fn numerator(&self) -> &Laurent {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// `Some((c, e))` when the value is `c·t^e`.
    pub fn as_monomial(&self) -> Option<(&BigRational, i64)> {
        if self.den.is_one() {
            self.num.as_monomial()
        } else {
            None
        }
    }

    /// `Some(e)` when the value is exactly `t^e`.
    pub fn as_t_power(&self) -> Option<i64> {
        self.as_monomial().and_then(|(c, e)| c.is_one().then_some(e))
    }

    pub fn add_ref(&self, other: &Scalar) -> Scalar {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return Scalar::from_laurent(self.num.add(&other.num));
        }
        if self.den == other.den {
            // the sum may share factors with the common denominator
            return Scalar::reduce(self.num.add(&other.num), self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            let num = self.num.mul_poly(&other.den).add(&other.num.mul_poly(&self.den));
            if num.is_zero() {
                return Scalar::zero();
            }
            // coprime denominators: the product is still coprime to the new numerator
            return Scalar { num, den: self.den.mul(&other.den) };
        }
        let a = self.den.div_exact(&g);
        let b = other.den.div_exact(&g);
        let num = self.num.mul_poly(&b).add(&other.num.mul_poly(&a));
        Scalar::reduce(num, a.mul(&other.den))
    }

    pub fn neg_ref(&self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub_ref(&self, other: &Scalar) -> Scalar {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Scalar::from_laurent(self.num.mul(&other.num));
        }
        let (a, d) = cancel(&self.num, &other.den);
        let (c, b) = cancel(&other.num, &self.den);
        Scalar { num: a.mul(&c), den: b.mul(&d) }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let body = self.num.body();
        let lead = body.leading().unwrap().recip();
        let num = Laurent::from_poly(-self.num.shift(), self.den.scale(&lead));
        Ok(Scalar { num, den: body.scale(&lead) })
    }

    pub fn div_ref(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul_ref(&other.inv()?))
    }

    pub fn scale(&self, c: &BigRational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_t_pow(&self, e: i64) -> Scalar {
        Scalar { num: self.num.mul_t_pow(e), den: self.den.clone() }
    }

    pub fn pow(&self, k: i64) -> Result<Scalar> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        if let Some((c, e)) = self.as_monomial() {
            return Ok(Scalar::monomial(num_traits::pow(c.clone(), k as usize), e * k));
        }
        let mut base = self.clone();
        let mut acc = Scalar::one();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_ref(&base);
            }
        }
        Ok(acc)
    }

    /// The bar involution `t ↦ t⁻¹`.
    pub fn bar(&self) -> Scalar {
        if self.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() {
            return Scalar::from_laurent(self.num.bar());
        }
        let dd = self.den.degree().unwrap() as i64;
        let num = self.num.bar().mul_t_pow(dd);
        // reversed monic denominator: constant term 1, leading term den(0) != 0
        let rev = self.den.reversed();
        let inv = rev.leading().unwrap().recip();
        Scalar { num: num.scale(&inv), den: rev.scale(&inv) }
    }

    /// True iff the denominator does not vanish at `t = 1` (membership in the local ring at 1).
    pub fn in_a1(&self) -> bool {
        !self.den.eval_one().is_zero()
    }

    /// Substitutes `t = 1`.
    pub fn eval_at_one(&self) -> Result<BigRational> {
        let d = self.den.eval_one();
        if d.is_zero() {
            return Err(Error::DenominatorVanishesAtOne);
        }
        Ok(self.num.eval_one() / d)
    }

    /// Substitutes a rational value for `t`; `None` at a pole.
    pub fn eval(&self, t: &BigRational) -> Option<BigRational> {
        if t.is_zero() {
            return None;
        }
        let d = self.den.eval(t);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(t) / d)
    }

    /// Size measure used for pivot selection.
    pub fn complexity(&self) -> (usize, usize) {
        let (a, b) = self.num.body().complexity();
        let (c, d) = self.den.complexity();
        (a + c, b + d)
    }
}

/// Removes the common factor of a numerator and a (coprime-to-`t`) denominator.
fn cancel(num: &Laurent, den: &Poly) -> (Laurent, Poly) {
    if den.is_one() {
        return (num.clone(), den.clone());
    }
    let g = num.body().gcd(den);
    if g.is_one() {
        (num.clone(), den.clone())
    } else {
        (Laurent::from_poly(num.shift(), num.body().div_exact(&g)), den.div_exact(&g))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl From<i64> for Scalar {
    fn from(c: i64) -> Self {
        Scalar::from_int(c)
    }
}

impl From<BigInt> for Scalar {
    fn from(c: BigInt) -> Self {
        Scalar::from_rational(BigRational::from_integer(c))
    }
}

impl From<BigRational> for Scalar {
    fn from(c: BigRational) -> Self {
        Scalar::from_rational(c)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$inner(rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$inner(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$inner(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::div_ref`] for a checked version.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.div_ref(rhs).expect("division by zero scalar")
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a.add_ref(&b))
    }
}

impl std::iter::Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |a, b| a.mul_ref(&b))
    }
}

/// `q - q⁻¹`.
pub fn q_minus_q_inv() -> Scalar {
    Scalar::q_pow(1) - Scalar::q_pow(-1)
}

/// The symmetric q-integer `[m] = (q^m - q^-m)/(q - q^-1)`.
pub fn q_integer(m: i64) -> Scalar {
    (Scalar::q_pow(m) - Scalar::q_pow(-m)) / q_minus_q_inv()
}

#[cfg(test)]
mod tests;
