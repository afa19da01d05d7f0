//! Wilson, scaled Wilson and continuous dual Hahn polynomials in λ = x².

use num_traits::{One, Zero};

use super::params::ParamSet;
use crate::error::{Error, Result};
use crate::kernel::{format_rational, int, rat, LambdaPoly, Rational};

/// Rising factorial `(a)_n = a(a+1)…(a+n−1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, n: usize) -> Rational {
    let mut out = Rational::one();
    let mut f = a.clone();
    for _ in 0..n {
        out *= &f;
        f += Rational::one();
    }
    out
}

/// `φ_k(λ) = ∏_{j<k} ((a+j)² + λ)`, the product `(a+ix)_k (a−ix)_k`.
pub fn phi(a: &Rational, k: usize) -> LambdaPoly {
    (0..k).fold(LambdaPoly::one(), |acc, j| {
        let aj = a + int(j as i64);
        &acc * &LambdaPoly::linear(&aj * &aj)
    })
}

/// Fails if `(base)_k` has a zero factor for some `k ≤ n`, i.e. `base + i = 0`
/// for some `i < n`.
pub(crate) fn require_nonzero_pochhammer(name: &str, base: &Rational, n: usize) -> Result<()> {
    for i in 0..n {
        let f = base + int(i as i64);
        if f.is_zero() {
            return Err(Error::SingularPochhammer {
                symbol: format!("({name})_{n} with {name} = {}", format_rational(base)),
                factor: format!("{name} + {i}"),
            });
        }
    }
    Ok(())
}

/// `W_n(λ | a,b,c,d) = (a+b)_n(a+c)_n(a+d)_n ₄F₃(−n, n+e1−1, a+ix, a−ix; a+b, a+c, a+d; 1)`.
pub fn wilson(n: usize, p: &ParamSet) -> Result<LambdaPoly> {
    let ab = &p.a + &p.b;
    let ac = &p.a + &p.c;
    let ad = &p.a + &p.d;
    require_nonzero_pochhammer("a+b", &ab, n)?;
    require_nonzero_pochhammer("a+c", &ac, n)?;
    require_nonzero_pochhammer("a+d", &ad, n)?;
    let top = int(n as i64) + &p.e1 - int(1);
    let minus_n = int(-(n as i64));
    let mut sum = LambdaPoly::zero();
    let mut kfact = Rational::one();
    for k in 0..=n {
        if k > 0 {
            kfact *= int(k as i64);
        }
        // (x)_n / (x)_k = (x+k)_{n−k}
        let prefactor = [&ab, &ac, &ad]
            .iter()
            .map(|x| pochhammer(&(*x + int(k as i64)), n - k))
            .fold(Rational::one(), |acc, v| acc * v);
        let c = pochhammer(&minus_n, k) * pochhammer(&top, k) * prefactor / &kfact;
        if !c.is_zero() {
            sum = &sum + &phi(&p.a, k).scale(&c);
        }
    }
    Ok(sum)
}

/// `W̃_n(λ) = W_n(−λ/4)`.
pub fn wilson_scaled(n: usize, p: &ParamSet) -> Result<LambdaPoly> {
    Ok(wilson(n, p)?.scale_argument(&rat(-1, 4)))
}

/// `S_n(λ | a,b,c) = (a+b)_n(a+c)_n ₃F₂(−n, a+ix, a−ix; a+b, a+c; 1)`.
pub fn cont_dual_hahn(n: usize, a: &Rational, b: &Rational, c: &Rational) -> Result<LambdaPoly> {
    let ab = a + b;
    let ac = a + c;
    require_nonzero_pochhammer("a+b", &ab, n)?;
    require_nonzero_pochhammer("a+c", &ac, n)?;
    let minus_n = int(-(n as i64));
    let mut sum = LambdaPoly::zero();
    let mut kfact = Rational::one();
    for k in 0..=n {
        if k > 0 {
            kfact *= int(k as i64);
        }
        let prefactor = pochhammer(&(&ab + int(k as i64)), n - k) * pochhammer(&(&ac + int(k as i64)), n - k);
        let coeff = pochhammer(&minus_n, k) * prefactor / &kfact;
        sum = &sum + &phi(a, k).scale(&coeff);
    }
    Ok(sum)
}
