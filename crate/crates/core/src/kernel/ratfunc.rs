//! Rational functions in one variable kept in a canonical normal form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// `num/den` with `gcd(num, den) = 1` and a monic denominator.
///
/// Because the normal form is canonical, structural equality is
/// mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero("rational function"));
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_constant() {
                (num, den)
            } else {
                (
                    num.exact_div(&g).unwrap().expect("gcd divides"),
                    den.exact_div(&g).unwrap().expect("gcd divides"),
                )
            }
        };
        let l = den.lead().expect("nonzero denominator").clone();
        if l.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = l.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Constant value, if this is a constant function.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.is_polynomial() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    /// `f(x + c)`; shifting preserves the normal form.
    pub fn shift(&self, c: &Rational) -> Self {
        RationalFunction {
            num: self.num.shift(c),
            den: self.den.shift(c),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero("rational function"));
        }
        let inv = RationalFunction::normalize(rhs.den.clone(), rhs.num.clone());
        Ok(self * &inv)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Poly {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.coeffs()[0].is_one()
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::normalize(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let rhs_cof = rhs.den.exact_div(&g).unwrap().expect("gcd divides");
        let self_cof = self.den.exact_div(&g).unwrap().expect("gcd divides");
        let num = &(&self.num * &rhs_cof) + &(&rhs.num * &self_cof);
        let den = &self.den * &rhs_cof;
        RationalFunction::normalize(num, den)
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        // Cross-cancellation keeps the product reduced.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let div = |p: &Poly, g: &Poly| {
            if g.is_constant() {
                p.clone()
            } else {
                p.exact_div(g).unwrap().expect("gcd divides")
            }
        };
        let num = &div(&self.num, &g1) * &div(&rhs.num, &g2);
        let den = &div(&self.den, &g2) * &div(&rhs.den, &g1);
        let l = den.lead().expect("nonzero").clone();
        if l.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = l.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<Poly> for RationalFunction {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{int, rat};

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_ints(num), Poly::from_ints(den)).unwrap()
    }

    #[test]
    fn inverse_pairs_cancel() {
        let quarter_x = rf(&[1], &[0, 4]);
        assert_eq!(&quarter_x * &rf(&[0, 4], &[1]), RationalFunction::one());
        assert!((&quarter_x + &rf(&[-1], &[0, 4])).is_zero());
    }

    #[test]
    fn m1_on_constant_sums_to_one() {
        // (2x-1)/(4x) + (2x+1)/(4x)
        let s = &rf(&[-1, 2], &[0, 4]) + &rf(&[1, 2], &[0, 4]);
        assert_eq!(s, RationalFunction::one());
    }

    #[test]
    fn normal_form_is_monic_and_reduced() {
        // (2x^2 - 2)/(4x - 4) = (x + 1)/2
        let f = rf(&[-2, 0, 2], &[-4, 4]);
        assert_eq!(f.den(), &Poly::one());
        assert_eq!(f.num(), &Poly::from_coeffs(vec![rat(1, 2), rat(1, 2)]));
        let g = rf(&[3], &[6, 3]);
        assert_eq!(g.den(), &Poly::from_ints(&[2, 1]));
        assert_eq!(g.num(), &Poly::from_ints(&[1]));
    }

    #[test]
    fn division_by_zero_function_is_an_error() {
        assert!(RationalFunction::one().checked_div(&RationalFunction::zero()).is_err());
        assert!(RationalFunction::new(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn shift_and_eval_agree() {
        let f = rf(&[1, 2, 2], &[0, 4]);
        let shifted = f.shift(&int(1));
        assert_eq!(shifted.eval(&int(2)), f.eval(&int(3)));
        assert_eq!(f.eval(&int(0)), None);
    }
}
