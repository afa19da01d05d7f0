use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kernel::{format_rational, int, rat, Rational};

/// Wilson parameters `(a, b, c, d)` with their derived symmetric functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamSet {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e1: Rational,
    pub e2: Rational,
    pub e3: Rational,
    pub e4: Rational,
    /// `1/(a+b−c−d)`, absent when `a+b = c+d`.
    pub sigma: Option<Rational>,
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    /// As printed in the S₊ action.
    pub xi: Rational,
}

impl ParamSet {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        let e1 = &a + &b + &c + &d;
        let e2 = &a * &b + &a * &c + &a * &d + &b * &c + &b * &d + &c * &d;
        let e3 = &a * &b * &c + &a * &b * &d + &a * &c * &d + &b * &c * &d;
        let e4 = &a * &b * &c * &d;
        let diff = &a + &b - &c - &d;
        let sigma = (!diff.is_zero()).then(|| diff.recip());
        let e1sq = &e1 * &e1;
        let alpha = &e1sq / int(2) - rat(4, 3) * &e2;
        let beta = -(&e1sq * &e1) + int(4) * &e2 * &e1 - int(8) * &e3;
        let gamma = rat(3, 4) * &alpha * &e1sq - &e1sq * &e2 + int(8) * &e1 * &e3 - int(32) * &e4;
        let xi = (int(1) - int(2) * &e1sq + &e1sq * &e1sq - int(256) * &e4) / int(2);
        ParamSet {
            a,
            b,
            c,
            d,
            e1,
            e2,
            e3,
            e4,
            sigma,
            alpha,
            beta,
            gamma,
            xi,
        }
    }

    pub fn from_slice(p: &[Rational]) -> Result<Self> {
        match p {
            [a, b, c, d] => Ok(Self::new(a.clone(), b.clone(), c.clone(), d.clone())),
            _ => Err(Error::Parse(format!(
                "expected 4 parameters (a,b,c,d), got {}",
                p.len()
            ))),
        }
    }

    pub fn values(&self) -> [Rational; 4] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]
    }

    pub fn sigma(&self) -> Result<Rational> {
        self.sigma.clone().ok_or(Error::SigmaUndefined)
    }

    /// The value of ξ that reproduces the S₊ action exactly:
    /// `(1 − 2e1² + e1⁴ − 256e4)/16`.
    pub fn xi_corrected(&self) -> Rational {
        &self.xi / int(8)
    }

    /// Parameters shifted by `(da, db, dc, dd)`.
    pub fn shifted(&self, da: &Rational, db: &Rational, dc: &Rational, dd: &Rational) -> Self {
        Self::new(&self.a + da, &self.b + db, &self.c + dc, &self.d + dd)
    }

    /// Shift by `(sa, sb, sc, sd)` halves, e.g. `[-1, -1, 1, 1]` is `(a−½, b−½, c+½, d+½)`.
    pub fn shifted_halves(&self, s: [i64; 4]) -> Self {
        let h = |k: i64| rat(k, 2);
        self.shifted(&h(s[0]), &h(s[1]), &h(s[2]), &h(s[3]))
    }

    /// `(p[perm[0]], p[perm[1]], p[perm[2]], p[perm[3]])`.
    pub fn permuted(&self, perm: [usize; 4]) -> Self {
        let v = self.values();
        Self::new(
            v[perm[0]].clone(),
            v[perm[1]].clone(),
            v[perm[2]].clone(),
            v[perm[3]].clone(),
        )
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.values().iter().map(format_rational).collect()
    }
}

impl fmt::Display for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

/// All 24 permutations of four slots, in lexicographic order.
pub fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for i in 0..4 {
        for j in (0..4).filter(|&j| j != i) {
            for k in (0..4).filter(|&k| k != i && k != j) {
                out.push([i, j, k, 6 - i - j - k]);
            }
        }
    }
    out
}
