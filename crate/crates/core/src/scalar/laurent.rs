use num_rational::BigRational;
use num_traits::Zero;

use super::poly::Poly;

/// Laurent polynomial `t^shift · body(t)` with rational coefficients.
///
/// Normal form: `body` has a nonzero constant term, or is zero (then `shift == 0`).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Laurent {
    shift: i64,
    body: Poly,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { shift: 0, body: Poly::zero() }
    }

    pub fn one() -> Self {
        Laurent { shift: 0, body: Poly::one() }
    }

    pub fn monomial(c: BigRational, e: i64) -> Self {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent { shift: e, body: Poly::constant(c) }
    }

    /// `t^shift · p`, renormalized.
    pub fn from_poly(shift: i64, p: Poly) -> Self {
        if p.is_zero() {
            return Laurent::zero();
        }
        let v = p.valuation();
        Laurent { shift: shift + v as i64, body: p.shift_down(v) }
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(terms: I) -> Self {
        let terms: Vec<(i64, BigRational)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|(e, _)| *e).min() else {
            return Laurent::zero();
        };
        let hi = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Laurent::from_poly(lo, Poly::from_coeffs(coeffs))
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn body(&self) -> &Poly {
        &self.body
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.body.is_one()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> + '_ {
        self.body
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.shift + k as i64, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.shift)
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.body.degree().map(|d| self.shift + d as i64)
    }

    /// `Some((c, e))` when this is the single term `c·t^e`.
    pub fn as_monomial(&self) -> Option<(&BigRational, i64)> {
        (self.body.degree() == Some(0)).then(|| (&self.body.coeffs()[0], self.shift))
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.shift.min(other.shift);
        let a = self.body.shift_up((self.shift - lo) as usize);
        let b = other.body.shift_up((other.shift - lo) as usize);
        Laurent::from_poly(lo, a.add(&b))
    }

    pub fn neg(&self) -> Laurent {
        Laurent { shift: self.shift, body: self.body.neg() }
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        if self.is_zero() || other.is_zero() {
            return Laurent::zero();
        }
        // constant terms are nonzero, so their product is too
        Laurent { shift: self.shift + other.shift, body: self.body.mul(&other.body) }
    }

    pub fn mul_poly(&self, p: &Poly) -> Laurent {
        Laurent::from_poly(self.shift, self.body.mul(p))
    }

    pub fn scale(&self, c: &BigRational) -> Laurent {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent { shift: self.shift, body: self.body.scale(c) }
    }

    pub fn mul_t_pow(&self, e: i64) -> Laurent {
        if self.is_zero() {
            return Laurent::zero();
        }
        Laurent { shift: self.shift + e, body: self.body.clone() }
    }

    pub fn eval_one(&self) -> BigRational {
        self.body.eval_one()
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let v = self.body.eval(t);
        if self.shift >= 0 {
            v * num_traits::pow(t.clone(), self.shift as usize)
        } else {
            v / num_traits::pow(t.clone(), (-self.shift) as usize)
        }
    }

    /// `t ↦ t⁻¹`.
    pub fn bar(&self) -> Laurent {
        match self.body.degree() {
            None => Laurent::zero(),
            Some(d) => Laurent::from_poly(-self.shift - d as i64, self.body.reversed()),
        }
    }
}

impl From<BigRational> for Laurent {
    fn from(c: BigRational) -> Self {
        Laurent::monomial(c, 0)
    }
}

impl From<i64> for Laurent {
    fn from(c: i64) -> Self {
        Laurent::monomial(BigRational::from_integer(c.into()), 0)
    }
}
