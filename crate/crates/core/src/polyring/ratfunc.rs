use num_integer::Integer;
use num_traits::{One, Zero};

use super::{MultiPoly, PolyError};

/// Unreduced fraction of two polynomials on one registry.
///
/// Equality is defined by cross-multiplication and is independent of
/// reduction.  Construction strips the shared integer content of numerator
/// and denominator; no multivariate gcd is ever computed.
#[derive(Debug, Clone)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if !num.registry().names().eq(den.registry().names()) {
            return Err(PolyError::RegistryMismatch);
        }
        let mut rf = RatFunc { num, den };
        rf.strip_content();
        Ok(rf)
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let den = MultiPoly::one(p.registry());
        RatFunc { num: p, den }
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn strip_content(&mut self) {
        if self.num.is_zero() {
            self.den = MultiPoly::one(self.den.registry());
            return;
        }
        let g = self.num.content().gcd(&self.den.content());
        if !g.is_one() && !g.is_zero() {
            self.num = self.num.div_content(&g).expect("content divides");
            self.den = self.den.div_content(&g).expect("content divides");
        }
    }

    /// Collapses to a polynomial (denominator 1) when the denominator
    /// divides the numerator exactly.
    pub fn reduced(self) -> Self {
        if self.den.is_one() {
            return self;
        }
        match self.num.exact_div(&self.den) {
            Ok(q) => RatFunc::from_poly(q),
            Err(_) => self,
        }
    }

    /// True when the fraction is a polynomial with denominator 1 as stored.
    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &RatFunc) -> Result<RatFunc, PolyError> {
        let num = &self.num.checked_mul(&other.den)? + &other.num.checked_mul(&self.den)?;
        RatFunc::new(num, self.den.checked_mul(&other.den)?)
    }

    pub fn sub(&self, other: &RatFunc) -> Result<RatFunc, PolyError> {
        let num = self
            .num
            .checked_mul(&other.den)?
            .checked_sub(&other.num.checked_mul(&self.den)?)?;
        RatFunc::new(num, self.den.checked_mul(&other.den)?)
    }

    pub fn mul(&self, other: &RatFunc) -> Result<RatFunc, PolyError> {
        RatFunc::new(
            self.num.checked_mul(&other.num)?,
            self.den.checked_mul(&other.den)?,
        )
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc, PolyError> {
        if other.num.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        RatFunc::new(
            self.num.checked_mul(&other.den)?,
            self.den.checked_mul(&other.num)?,
        )
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<RatFunc, PolyError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// Cross-multiplication equality: `num1*den2 == num2*den1`.
    pub fn eq_cross(&self, other: &RatFunc) -> bool {
        let l = self.num.checked_mul(&other.den).expect("same registry");
        let r = other.num.checked_mul(&self.den).expect("same registry");
        l == r
    }

    pub fn eq_poly(&self, p: &MultiPoly) -> bool {
        self.eq_cross(&RatFunc::from_poly(p.clone()))
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::VarRegistry;

    #[test]
    fn cross_mult_identities() {
        let r = VarRegistry::new(["x", "y"]).unwrap();
        let x = MultiPoly::var(&r, "x").unwrap();
        let y = MultiPoly::var(&r, "y").unwrap();
        let one = MultiPoly::one(&r);

        // (x/y) * (y/x) == 1
        let a = RatFunc::new(x.clone(), y.clone()).unwrap();
        let b = RatFunc::new(y.clone(), x.clone()).unwrap();
        let prod = a.mul(&b).unwrap();
        assert!(prod.eq_poly(&one));
        assert!(prod.is_one());

        // 1/1 + x/1 == (1+x)/1
        let s = RatFunc::from_poly(one.clone())
            .add(&RatFunc::from_poly(x.clone()))
            .unwrap();
        assert!(s.eq_poly(&(&one + &x)));

        // (x^2-y^2)/(x-y) == (x+y)/1
        let num = x.pow(2).checked_sub(&y.pow(2)).unwrap();
        let den = x.checked_sub(&y).unwrap();
        let f = RatFunc::new(num, den).unwrap();
        assert!(f.eq_poly(&(&x + &y)));
        assert!(f.reduced().is_poly());
    }

    #[test]
    fn zero_denominator_rejected() {
        let r = VarRegistry::new(["x"]).unwrap();
        let x = MultiPoly::var(&r, "x").unwrap();
        assert!(matches!(
            RatFunc::new(x.clone(), MultiPoly::zero(&r)),
            Err(PolyError::DivisionByZero)
        ));
        let f = RatFunc::from_poly(x);
        let z = RatFunc::from_poly(MultiPoly::zero(&r));
        assert!(matches!(f.div(&z), Err(PolyError::DivisionByZero)));
    }
}
