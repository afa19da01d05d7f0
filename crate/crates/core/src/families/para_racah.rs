//! Para-Racah polynomials and their quadratic bi-lattice.
//!
//! The closed forms for `A_{n,k}` and `η_n` mix Pochhammer symbols with
//! negative or integer-degenerate arguments. Each symbol is kept as a pair
//! (finite part, order of vanishing) so that zeros in numerators and
//! denominators cancel the way the underlying limit does. This also makes
//! the characteristic polynomial `P_{N+1}` available.

use std::ops::Mul;

use num_traits::{One, Zero};

use super::wilson::{phi, require_nonzero_pochhammer};
use crate::error::{Error, Result};
use crate::kernel::{format_rational, int, LambdaPoly, Rational};

/// A value `c·ε^order` in a formal infinitesimal ε.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Ordered {
    value: Rational,
    order: i32,
}

impl Ordered {
    fn finite(value: Rational) -> Self {
        Ordered { value, order: 0 }
    }

    fn recip(&self) -> Self {
        Ordered {
            value: self.value.recip(),
            order: -self.order,
        }
    }
}

impl Mul for Ordered {
    type Output = Ordered;
    fn mul(self, rhs: Ordered) -> Ordered {
        Ordered {
            value: self.value * rhs.value,
            order: self.order + rhs.order,
        }
    }
}

/// `(a)_m` for any integer `m`, with `(a)_{−m} = 1/∏_{i=1}^{m}(a−i)`.
/// Each zero factor contributes one order of ε.
fn poch_ordered(a: &Rational, m: i64) -> Ordered {
    let mut out = Ordered::finite(Rational::one());
    if m >= 0 {
        for i in 0..m {
            let f = a + int(i);
            if f.is_zero() {
                out.order += 1;
            } else {
                out.value *= f;
            }
        }
    } else {
        for i in 1..=-m {
            let f = a - int(i);
            if f.is_zero() {
                out.order -= 1;
            } else {
                out.value /= f;
            }
        }
    }
    out
}

fn product(items: impl IntoIterator<Item = Ordered>) -> Ordered {
    items.into_iter().fold(Ordered::finite(Rational::one()), |a, b| a * b)
}

/// `N = 2j + p` with `p ∈ {0, 1}`.
pub fn split_parity(big_n: usize) -> (usize, usize) {
    (big_n / 2, big_n % 2)
}

/// `P_n(λ | a, c, w)` for `0 ≤ n ≤ N + 1`; `n = N + 1` is the characteristic polynomial.
pub fn para_racah(n: usize, big_n: usize, a: &Rational, c: &Rational, w: &Rational) -> Result<LambdaPoly> {
    if n > big_n + 1 {
        return Err(Error::IndexOutOfRange(format!(
            "para-Racah degree n = {n} exceeds N + 1 = {}",
            big_n + 1
        )));
    }
    if w.is_zero() {
        return Err(Error::DivisionByZero("para-Racah parameter w"));
    }
    let (j, p) = split_parity(big_n);
    let (ji, pi, ni, nn) = (j as i64, p as i64, n as i64, big_n as i64);
    let ac = a + c;
    let shifted = a - c - int(ji - 1 + pi);
    require_nonzero_pochhammer("a+c", &ac, n)?;
    require_nonzero_pochhammer("a-c-j+1-p", &shifted, n)?;
    let one = int(1);
    let w_ord = Ordered::finite(w.clone());

    let eta = if n <= j {
        product([
            poch_ordered(&one, ni),
            poch_ordered(&int(-ji), ni),
            poch_ordered(&ac, ni),
            poch_ordered(&shifted, ni),
            poch_ordered(&int(-ni), ni).recip(),
            poch_ordered(&int(ni - nn), ni).recip(),
        ])
    } else {
        product([
            w_ord.clone(),
            poch_ordered(&one, ni),
            poch_ordered(&int(-ji), ji),
            poch_ordered(&one, ni - ji - 1),
            poch_ordered(&ac, ni),
            poch_ordered(&shifted, ni),
            poch_ordered(&int(-ni), ni).recip(),
            poch_ordered(&int(ni - nn), nn - ni).recip(),
            poch_ordered(&one, 2 * ni - 1 - nn).recip(),
        ])
    };

    let mut out = LambdaPoly::zero();
    for k in 0..=n {
        let ki = k as i64;
        let a_nk = if k <= j {
            product([
                poch_ordered(&int(-ni), ki),
                poch_ordered(&int(ni - nn), ki),
                product([
                    poch_ordered(&one, ki),
                    poch_ordered(&int(-ji), ki),
                    poch_ordered(&ac, ki),
                    poch_ordered(&shifted, ki),
                ])
                .recip(),
            ])
        } else {
            product([
                w_ord.recip(),
                poch_ordered(&int(-ni), ki),
                poch_ordered(&int(ni - nn), nn - ni),
                poch_ordered(&one, ni + ki - 1 - nn),
                product([
                    poch_ordered(&one, ki),
                    poch_ordered(&int(-ji), ji),
                    poch_ordered(&one, ki - ji - 1),
                    poch_ordered(&ac, ki),
                    poch_ordered(&shifted, ki),
                ])
                .recip(),
            ])
        };
        let term = eta.clone() * a_nk;
        match term.order {
            o if o > 0 => continue,
            0 => out = &out + &phi(a, k).scale(&term.value),
            _ => {
                return Err(Error::SingularPochhammer {
                    symbol: format!("η_{n}·A_{{{n},{k}}} at N = {big_n}"),
                    factor: format!("pole of order {}", -term.order),
                })
            }
        }
    }
    Ok(out)
}

/// The support of the para-Racah orthogonality, as λ-values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiLattice {
    /// `x_{2s} = −(s+a)²`, `x_{2s+1} = −(s+c)²`, in index order.
    pub points: Vec<Rational>,
    pub n: usize,
    pub j: usize,
    pub p: usize,
}

pub fn para_racah_lattice(big_n: usize, a: &Rational, c: &Rational) -> Result<BiLattice> {
    if big_n < 1 {
        return Err(Error::IndexOutOfRange("bi-lattice needs N ≥ 1".into()));
    }
    let (j, p) = split_parity(big_n);
    let mut points = Vec::with_capacity(big_n + 1);
    for s in 0..=j {
        let sa = a + int(s as i64);
        points.push(-(&sa * &sa));
        if s < j + p {
            let sc = c + int(s as i64);
            points.push(-(&sc * &sc));
        }
    }
    debug_assert_eq!(points.len(), big_n + 1);
    for first in 0..points.len() {
        for second in first + 1..points.len() {
            if points[first] == points[second] {
                return Err(Error::DegenerateLattice {
                    first,
                    second,
                    value: format_rational(&points[first]),
                });
            }
        }
    }
    Ok(BiLattice { points, n: big_n, j, p })
}
