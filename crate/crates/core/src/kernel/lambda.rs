//! Polynomials in the grid variable λ = x².

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{write_poly, Poly};
use super::rational::Rational;
use crate::error::{Error, Result};

/// A polynomial in λ, coefficients lowest degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LambdaPoly(Poly);

impl LambdaPoly {
    pub fn zero() -> Self {
        LambdaPoly(Poly::zero())
    }

    pub fn one() -> Self {
        LambdaPoly(Poly::one())
    }

    pub fn constant(c: Rational) -> Self {
        LambdaPoly(Poly::constant(c))
    }

    /// `λ` itself.
    pub fn lambda() -> Self {
        LambdaPoly(Poly::x())
    }

    /// `λ^n`.
    pub fn monomial(n: usize) -> Self {
        LambdaPoly(Poly::monomial(Rational::one(), n))
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        LambdaPoly(Poly::from_coeffs(coeffs))
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        LambdaPoly(Poly::from_ints(coeffs))
    }

    /// `λ + c`.
    pub fn linear(c: Rational) -> Self {
        LambdaPoly(Poly::linear(c))
    }

    pub fn as_poly(&self) -> &Poly {
        &self.0
    }

    pub fn coeffs(&self) -> &[Rational] {
        self.0.coeffs()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.0.coeff(i)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.0.lead()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn eval(&self, lambda: &Rational) -> Rational {
        self.0.eval(lambda)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LambdaPoly(self.0.scale(c))
    }

    /// `q(c·λ)`.
    pub fn scale_argument(&self, c: &Rational) -> Self {
        LambdaPoly(self.0.scale_argument(c))
    }

    /// The constant `c` with `self = c·other`, if one exists.
    ///
    /// Two zero polynomials are proportional with constant 0; a nonzero
    /// polynomial is never proportional to zero.
    pub fn ratio_to(&self, other: &LambdaPoly) -> Option<Rational> {
        match (self.lead(), other.lead()) {
            (None, None) => Some(Rational::zero()),
            (None, Some(_)) => Some(Rational::zero()),
            (Some(_), None) => None,
            (Some(a), Some(b)) => {
                if self.degree() != other.degree() {
                    return None;
                }
                let c = a / b;
                (other.scale(&c) == *self).then_some(c)
            }
        }
    }
}

/// Substitutes λ ↦ x², giving an even polynomial of degree `2·deg q`.
pub fn lambda_embed(q: &LambdaPoly) -> Poly {
    q.0.compose_square()
}

/// Inverse of [`lambda_embed`]: the unique `q` with `q(x²) = p(x)`.
pub fn lambda_extract(p: &Poly) -> Result<LambdaPoly> {
    if let Some(degree) = p
        .coeffs()
        .iter()
        .enumerate()
        .find(|(i, c)| i % 2 == 1 && !c.is_zero())
        .map(|(i, _)| i)
    {
        return Err(Error::OddPartPresent { degree });
    }
    let coeffs = p.coeffs().iter().step_by(2).cloned().collect();
    Ok(LambdaPoly::from_coeffs(coeffs))
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.coeffs(), "λ")
    }
}

impl Add<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: &LambdaPoly) -> LambdaPoly {
        LambdaPoly(&self.0 + &rhs.0)
    }
}

impl Sub<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: &LambdaPoly) -> LambdaPoly {
        LambdaPoly(&self.0 - &rhs.0)
    }
}

impl Mul<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: &LambdaPoly) -> LambdaPoly {
        LambdaPoly(&self.0 * &rhs.0)
    }
}

impl Neg for &LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        LambdaPoly(-&self.0)
    }
}

impl Add for LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: LambdaPoly) -> LambdaPoly {
        &self + &rhs
    }
}

impl Sub for LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: LambdaPoly) -> LambdaPoly {
        &self - &rhs
    }
}

impl Mul for LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: LambdaPoly) -> LambdaPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embed_examples() {
        assert_eq!(lambda_embed(&LambdaPoly::lambda()), Poly::from_ints(&[0, 0, 1]));
        assert_eq!(
            lambda_embed(&LambdaPoly::from_ints(&[3, 0, 1])),
            Poly::from_ints(&[3, 0, 0, 0, 1])
        );
        assert!(lambda_embed(&LambdaPoly::zero()).is_zero());
    }

    #[test]
    fn extract_examples() {
        assert_eq!(
            lambda_extract(&Poly::from_ints(&[3, 0, 0, 0, 1])).unwrap(),
            LambdaPoly::from_ints(&[3, 0, 1])
        );
        assert_eq!(
            lambda_extract(&Poly::from_ints(&[0, 0, 0, 1])),
            Err(Error::OddPartPresent { degree: 3 })
        );
        assert_eq!(
            lambda_extract(&Poly::from_ints(&[2, 0, 2])).unwrap(),
            LambdaPoly::from_ints(&[2, 2])
        );
    }

    #[test]
    fn ratio_detection() {
        let p = LambdaPoly::from_ints(&[2, 4]);
        let q = LambdaPoly::from_ints(&[1, 2]);
        assert_eq!(p.ratio_to(&q), Some(Rational::from_integer(2.into())));
        assert_eq!(LambdaPoly::from_ints(&[1, 4]).ratio_to(&q), None);
        assert_eq!(LambdaPoly::zero().ratio_to(&q), Some(Rational::zero()));
        assert_eq!(q.ratio_to(&LambdaPoly::zero()), None);
    }
}
