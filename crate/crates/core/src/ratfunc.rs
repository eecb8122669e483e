//! Reduced quotients of univariate polynomials.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::Rational;

/// `numerator / denominator` with coprime parts and a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: UniPoly,
    denominator: UniPoly,
}

impl RationalFunction {
    pub fn new(numerator: UniPoly, denominator: UniPoly) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if numerator.is_zero() {
            return Ok(Self::zero());
        }
        let g = numerator.gcd(&denominator);
        let (mut num, r1) = numerator.div_rem(&g)?;
        let (mut den, r2) = denominator.div_rem(&g)?;
        debug_assert!(r1.is_zero() && r2.is_zero());
        let lc = den.leading().expect("nonzero").recip();
        num = num.scale(&lc);
        den = den.scale(&lc);
        Ok(Self {
            numerator: num,
            denominator: den,
        })
    }

    pub fn zero() -> Self {
        Self {
            numerator: UniPoly::zero(),
            denominator: UniPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    pub fn from_poly(p: UniPoly) -> Self {
        Self {
            numerator: p,
            denominator: UniPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let num = &(&self.numerator * &other.denominator) + &(&other.numerator * &self.denominator);
        let den = &self.denominator * &other.denominator;
        Self::new(num, den).expect("product of nonzero denominators")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            &self.numerator * &other.numerator,
            &self.denominator * &other.denominator,
        )
        .expect("product of nonzero denominators")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Self::new(
            &self.numerator * &other.denominator,
            &self.denominator * &other.numerator,
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.numerator.scale(c), self.denominator.clone()).expect("nonzero denominator")
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.denominator.eval(x);
        if d.is_zero() {
            return Err(Error::VanishingFactor {
                factor: format!("denominator {} at {}", self.denominator, x),
            });
        }
        Ok(self.numerator.eval(x) / d)
    }

    /// Limit as the variable tends to infinity.
    ///
    /// Zero when the numerator has lower degree, the ratio of leading
    /// coefficients when degrees match, an error otherwise.
    pub fn limit_at_infinity(&self) -> Result<Rational> {
        let Some(nd) = self.numerator.degree() else {
            return Ok(Rational::zero());
        };
        let dd = self.denominator.degree().expect("nonzero");
        match nd.cmp(&dd) {
            std::cmp::Ordering::Less => Ok(Rational::zero()),
            std::cmp::Ordering::Equal => Ok(self.numerator.leading().unwrap()
                / self.denominator.leading().unwrap()),
            std::cmp::Ordering::Greater => Err(Error::InfiniteLimit {
                num_degree: nd,
                den_degree: dd,
            }),
        }
    }

    /// `self / x^m`.
    pub fn div_x_pow(&self, m: usize) -> Self {
        Self::new(
            self.numerator.clone(),
            &self.denominator * &UniPoly::monomial(m, Rational::one()),
        )
        .expect("nonzero denominator")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == UniPoly::one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn reduces_to_canonical_form() {
        // (x^2 - 1) / (2x - 2) = (x + 1)/2 … stored as (x/2 + 1/2) / 1
        let f = RationalFunction::new(UniPoly::from_ints(&[-1, 0, 1]), UniPoly::from_ints(&[-2, 2]))
            .unwrap();
        assert_eq!(f.denominator(), &UniPoly::one());
        assert_eq!(f.numerator(), &UniPoly::new(vec![rat(1, 2), rat(1, 2)]));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(UniPoly::one(), UniPoly::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn limits() {
        let f = RationalFunction::new(UniPoly::from_ints(&[1, 3]), UniPoly::from_ints(&[5, 6]))
            .unwrap();
        assert_eq!(f.limit_at_infinity().unwrap(), rat(1, 2));
        let g = RationalFunction::new(UniPoly::from_ints(&[1]), UniPoly::from_ints(&[5, 6]))
            .unwrap();
        assert_eq!(g.limit_at_infinity().unwrap(), int(0));
        let h = RationalFunction::from_poly(UniPoly::x());
        assert!(matches!(h.limit_at_infinity(), Err(Error::InfiniteLimit { .. })));
    }

    #[test]
    fn field_operations() {
        let a = RationalFunction::new(UniPoly::one(), UniPoly::x()).unwrap();
        let b = RationalFunction::new(UniPoly::one(), UniPoly::from_ints(&[1, 1])).unwrap();
        // 1/x - 1/(x+1) = 1/(x(x+1))
        let d = a.sub(&b);
        assert_eq!(d.denominator(), &UniPoly::from_ints(&[0, 1, 1]));
        assert_eq!(d.numerator(), &UniPoly::one());
        assert_eq!(d.eval(&int(2)).unwrap(), rat(1, 6));
        assert!(d.eval(&int(0)).is_err());
        assert_eq!(a.div(&a).unwrap(), RationalFunction::one());
    }
}
