//! Difference operators `Σ_k c_k(x)·T^k` on the grid λ = x².

pub mod sheun;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::kernel::{
    format_rational, int, lambda_embed, lambda_extract, parse_rational, LambdaPoly, Poly, Rational, RationalFunction,
};

pub use sheun::{generic_sheun, heun_racah_embed, mult_x_identity, sheun_basis, SHeunBasis};

/// A finite sum of shifts `T^k f(x) = f(x + k)` with rational-function
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DifferenceOperator {
    terms: BTreeMap<i32, RationalFunction>,
}

impl DifferenceOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::multiplication(RationalFunction::one())
    }

    /// Pointwise multiplication by `f(x)`.
    pub fn multiplication(f: RationalFunction) -> Self {
        Self::from_terms([(0, f)])
    }

    /// Multiplication by a constant.
    pub fn scalar(c: Rational) -> Self {
        Self::multiplication(RationalFunction::constant(c))
    }

    /// `T^k`.
    pub fn shift(k: i32) -> Self {
        Self::from_terms([(k, RationalFunction::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, RationalFunction)>) -> Self {
        let mut op = Self::zero();
        for (k, c) in terms {
            op.accumulate(k, c);
        }
        op
    }

    fn accumulate(&mut self, k: i32, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&k) {
            Some(prev) => {
                let sum = &prev + &c;
                if !sum.is_zero() {
                    self.terms.insert(k, sum);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<i32, RationalFunction> {
        &self.terms
    }

    pub fn coeff(&self, k: i32) -> RationalFunction {
        self.terms.get(&k).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn support(&self) -> Vec<i32> {
        self.terms.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The scalar `c` with `self = c·Id`, if it is one.
    pub fn as_scalar(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).and_then(RationalFunction::as_constant),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        DifferenceOperator {
            terms: self.terms.iter().map(|(&k, f)| (k, f.scale(c))).collect(),
        }
    }

    /// Left multiplication by the function `f(x)`.
    pub fn left_mul(&self, f: &RationalFunction) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, c)| (k, f * c)))
    }

    /// `self ∘ rhs`: the coefficient of `T^{j+k}` collects `a_j(x)·b_k(x+j)`.
    pub fn compose(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (&j, a) in &self.terms {
            let shift = int(j as i64);
            for (&k, b) in &rhs.terms {
                out.accumulate(j + k, a * &b.shift(&shift));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        &self.compose(rhs) - &rhs.compose(self)
    }

    /// `{A, B} = AB + BA`.
    pub fn anticommutator(&self, rhs: &Self) -> Self {
        &self.compose(rhs) + &rhs.compose(self)
    }

    /// The highest offset with a nonzero coefficient, used to report residuals.
    pub fn leading_term(&self) -> Option<(i32, &RationalFunction)> {
        self.terms.iter().next_back().map(|(&k, c)| (k, c))
    }

    /// Acts on a polynomial in λ and returns a polynomial in λ.
    ///
    /// The sum `Σ c_k(x)·p(x + k)` is brought over the lcm of the coefficient
    /// denominators and must divide exactly.
    pub fn apply(&self, q: &LambdaPoly) -> Result<LambdaPoly> {
        if self.is_zero() || q.is_zero() {
            return Ok(LambdaPoly::zero());
        }
        let p = lambda_embed(q);
        let mut lcm = Poly::one();
        for c in self.terms.values() {
            let g = lcm.gcd(c.den());
            lcm = &lcm * &c.den().exact_div(&g)?.expect("gcd divides");
        }
        let mut num = Poly::zero();
        for (&k, c) in &self.terms {
            let cof = lcm.exact_div(c.den())?.expect("lcm is a multiple");
            num = &num + &(&(c.num() * &cof) * &p.shift(&int(k as i64)));
        }
        let (quot, rem) = num.div_rem(&lcm)?;
        if !rem.is_zero() {
            let reduced = RationalFunction::new(num, lcm)?;
            return Err(Error::NotPolynomial {
                denominator: reduced.den().to_string(),
            });
        }
        // A constant lcm leaves a scale factor in the quotient already.
        lambda_extract(&quot)
    }

    /// `{"+1": [[num…], [den…]], "0": …}` with rational-string coefficients.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (&k, c) in &self.terms {
            let strings =
                |p: &Poly| Value::Array(p.coeffs().iter().map(|r| Value::String(format_rational(r))).collect());
            map.insert(offset_key(k), Value::Array(vec![strings(c.num()), strings(c.den())]));
        }
        Value::Object(map)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("operator JSON: {what}"));
        let map = value.as_object().ok_or_else(|| bad("expected an object"))?;
        let poly = |v: &Value| -> Result<Poly> {
            let arr = v.as_array().ok_or_else(|| bad("expected a coefficient array"))?;
            let coeffs = arr
                .iter()
                .map(|c| {
                    c.as_str()
                        .ok_or_else(|| bad("coefficients must be strings"))
                        .and_then(parse_rational)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Poly::from_coeffs(coeffs))
        };
        let mut terms = Vec::new();
        for (key, v) in map {
            let k: i32 = key
                .strip_prefix('+')
                .unwrap_or(key)
                .parse()
                .map_err(|_| bad("offset keys must be integers"))?;
            let pair = v
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| bad("expected [num, den]"))?;
            terms.push((k, RationalFunction::new(poly(&pair[0])?, poly(&pair[1])?)?));
        }
        Ok(Self::from_terms(terms))
    }
}

fn offset_key(k: i32) -> String {
    if k > 0 {
        format!("+{k}")
    } else {
        k.to_string()
    }
}

impl fmt::Display for DifferenceOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&k, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "[{c}]")?,
                _ => write!(f, "[{c}]·T^{}", offset_key(k))?,
            }
        }
        Ok(())
    }
}

impl Add<&DifferenceOperator> for &DifferenceOperator {
    type Output = DifferenceOperator;
    fn add(self, rhs: &DifferenceOperator) -> DifferenceOperator {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.accumulate(k, c.clone());
        }
        out
    }
}

impl Sub<&DifferenceOperator> for &DifferenceOperator {
    type Output = DifferenceOperator;
    fn sub(self, rhs: &DifferenceOperator) -> DifferenceOperator {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.accumulate(k, -c);
        }
        out
    }
}

impl Neg for &DifferenceOperator {
    type Output = DifferenceOperator;
    fn neg(self) -> DifferenceOperator {
        DifferenceOperator {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for DifferenceOperator {
    type Output = DifferenceOperator;
    fn neg(self) -> DifferenceOperator {
        -&self
    }
}

/// Operator product is composition.
impl Mul<&DifferenceOperator> for &DifferenceOperator {
    type Output = DifferenceOperator;
    fn mul(self, rhs: &DifferenceOperator) -> DifferenceOperator {
        self.compose(rhs)
    }
}

/// Scalar multiple.
impl Mul<&DifferenceOperator> for &Rational {
    type Output = DifferenceOperator;
    fn mul(self, rhs: &DifferenceOperator) -> DifferenceOperator {
        rhs.scale(self)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<DifferenceOperator> for DifferenceOperator {
            type Output = DifferenceOperator;
            fn $m(self, rhs: DifferenceOperator) -> DifferenceOperator {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&DifferenceOperator> for DifferenceOperator {
            type Output = DifferenceOperator;
            fn $m(self, rhs: &DifferenceOperator) -> DifferenceOperator {
                (&self).$m(rhs)
            }
        }
        impl $tr<DifferenceOperator> for &DifferenceOperator {
            type Output = DifferenceOperator;
            fn $m(self, rhs: DifferenceOperator) -> DifferenceOperator {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Mul<DifferenceOperator> for Rational {
    type Output = DifferenceOperator;
    fn mul(self, rhs: DifferenceOperator) -> DifferenceOperator {
        rhs.scale(&self)
    }
}

impl Mul<&DifferenceOperator> for Rational {
    type Output = DifferenceOperator;
    fn mul(self, rhs: &DifferenceOperator) -> DifferenceOperator {
        rhs.scale(&self)
    }
}

/// Linear combination `Σ c_i·A_i`.
pub fn combine<'a>(terms: impl IntoIterator<Item = (Rational, &'a DifferenceOperator)>) -> DifferenceOperator {
    terms
        .into_iter()
        .fold(DifferenceOperator::zero(), |acc, (c, op)| &acc + &op.scale(&c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_ints(num), Poly::from_ints(den)).unwrap()
    }

    /// Pointwise oracle: evaluate `A` on a function of `x` at a sample point.
    fn eval_on(op: &DifferenceOperator, f: &dyn Fn(&Rational) -> Rational, x: &Rational) -> Rational {
        op.terms()
            .iter()
            .map(|(&k, c)| c.eval(x).unwrap() * f(&(x + int(k as i64))))
            .fold(Rational::zero(), |a, b| a + b)
    }

    fn l_op() -> DifferenceOperator {
        DifferenceOperator::from_terms([(1, rf(&[1], &[0, 4])), (-1, rf(&[-1], &[0, 4]))])
    }

    #[test]
    fn l_squared_coefficients_from_direct_accumulation() {
        let l = l_op();
        let l2 = l.compose(&l);
        // (1/(4x))·(1/(4(x+1)))
        assert_eq!(l2.coeff(2), &rf(&[1], &[0, 4]) * &rf(&[1], &[4, 4]));
        assert_eq!(l2.coeff(2), rf(&[1], &[0, 16, 16]));
        // (1/(4x))·(−1/(4(x+1))) + (−1/(4x))·(1/(4(x−1)))
        let expected = &(&rf(&[1], &[0, 4]) * &rf(&[-1], &[4, 4])) + &(&rf(&[-1], &[0, 4]) * &rf(&[1], &[-4, 4]));
        assert_eq!(l2.coeff(0), expected);
        assert_eq!(l2.support(), vec![-2, 0, 2]);
    }

    #[test]
    fn compose_agrees_with_pointwise_oracle() {
        let a = DifferenceOperator::from_terms([(1, rf(&[-1, 2], &[0, 4])), (-1, rf(&[1, 2], &[0, 4]))]);
        let b = DifferenceOperator::from_terms([
            (1, rf(&[3, 0, 1], &[1, 1])),
            (0, rf(&[2], &[1])),
            (-2, rf(&[0, 1], &[5, 1])),
        ]);
        let ab = a.compose(&b);
        let f = |x: &Rational| x * x * x - rat(1, 3) * x + int(2);
        for t in [rat(7, 3), rat(-11, 5), rat(13, 2)] {
            let inner = |y: &Rational| eval_on(&b, &f, y);
            assert_eq!(eval_on(&ab, &f, &t), eval_on(&a, &inner, &t));
        }
    }

    #[test]
    fn identity_and_zero_behave() {
        let l = l_op();
        assert_eq!(DifferenceOperator::identity().compose(&l), l);
        assert_eq!(l.compose(&DifferenceOperator::identity()), l);
        assert!(l.commutator(&l).is_zero());
        assert!((&l - &l).is_zero());
        assert_eq!(DifferenceOperator::scalar(rat(3, 2)).as_scalar(), Some(rat(3, 2)));
        assert_eq!(l.as_scalar(), None);
    }

    #[test]
    fn apply_on_small_powers() {
        let l = l_op();
        assert_eq!(l.apply(&LambdaPoly::lambda()).unwrap(), LambdaPoly::one());
        assert_eq!(
            l.apply(&LambdaPoly::monomial(2)).unwrap(),
            LambdaPoly::from_ints(&[2, 2])
        );
        assert!(l.apply(&LambdaPoly::one()).unwrap().is_zero());
    }

    #[test]
    fn apply_detects_non_polynomial_results() {
        let half_shift = DifferenceOperator::from_terms([(1, rf(&[1], &[0, 1]))]);
        assert!(matches!(
            half_shift.apply(&LambdaPoly::one()),
            Err(Error::NotPolynomial { .. })
        ));
        let odd = DifferenceOperator::shift(1);
        assert!(matches!(
            odd.apply(&LambdaPoly::lambda()),
            Err(Error::OddPartPresent { degree: 1 })
        ));
    }

    #[test]
    fn json_round_trip() {
        let l = l_op();
        let v = l.to_json();
        assert_eq!(v["+1"][1], serde_json::json!(["0", "1"]));
        assert_eq!(v["+1"][0], serde_json::json!(["1/4"]));
        assert_eq!(DifferenceOperator::from_json(&v).unwrap(), l);
    }
}
