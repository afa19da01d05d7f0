//! Named operator combinations: the linear element P(s,t), the structure
//! operators μ, μ*, τ, τ*, the universal generators U, V, Y, R and the
//! Sklyanin generators S₀, S₃, S₊, S₋.

use crate::error::{Error, Result};
use crate::families::{permutations4, ParamSet};
use crate::kernel::{int, rat, Rational};
use crate::ops::{combine, sheun_basis, DifferenceOperator, SHeunBasis};

/// `P(s,t) = u L + v M1 + w M2` with `u = ((1+2s)(1+2t)−1)/4`, `v = (1+s+t)/2`, `w = 1/2`.
pub fn p_op(s: &Rational, t: &Rational) -> DifferenceOperator {
    p_op_in(&sheun_basis(), s, t)
}

fn p_op_in(b: &SHeunBasis, s: &Rational, t: &Rational) -> DifferenceOperator {
    let one = int(1);
    let two = int(2);
    let u = ((&one + &two * s) * (&one + &two * t) - &one) / int(4);
    let v = (&one + s + t) / &two;
    combine([(u, &b.l), (v, &b.m1), (rat(1, 2), &b.m2)])
}

/// `μ = P(2a−1, 2b−1)`.
pub fn mu(p: &ParamSet) -> DifferenceOperator {
    p_op(&(int(2) * &p.a - int(1)), &(int(2) * &p.b - int(1)))
}

/// `μ* = P(2c, 2d)`.
pub fn mustar(p: &ParamSet) -> DifferenceOperator {
    p_op(&(int(2) * &p.c), &(int(2) * &p.d))
}

/// `τ = 4L`, independent of the parameters.
pub fn tau() -> DifferenceOperator {
    sheun_basis().l.scale(&int(4))
}

/// Which transcription of a printed formula to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Transcription {
    AsPrinted,
    Corrected,
}

/// `τ* = a1 L + a2 M1 + a3 M2 + a4 R1 + a5 R2` with coefficients in `e1..e4`.
///
/// The corrected form has `a5 = +1/8`; with the printed `−1/8` the operator
/// does not map `W̃_n` to a multiple of `W̃_{n+1}`.
pub fn taustar_with(p: &ParamSet, which: Transcription) -> DifferenceOperator {
    let b = sheun_basis();
    let a1 = int(4) * &p.e4 - &p.e3 + (&p.e1 - int(1)) / int(4);
    let a2 = &p.e3 - &p.e2 / int(2) + &p.e1 / int(8);
    let a3 = &p.e2 / int(2) - rat(5, 8) * &p.e1 + rat(1, 2);
    let a4 = &p.e1 / int(4) - rat(3, 8);
    let a5 = match which {
        Transcription::AsPrinted => rat(-1, 8),
        Transcription::Corrected => rat(1, 8),
    };
    combine([(a1, &b.l), (a2, &b.m1), (a3, &b.m2), (a4, &b.r1), (a5, &b.r2)])
}

pub fn taustar(p: &ParamSet) -> DifferenceOperator {
    taustar_with(p, Transcription::Corrected)
}

pub fn taustar_printed(p: &ParamSet) -> DifferenceOperator {
    taustar_with(p, Transcription::AsPrinted)
}

/// The four structure operators at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureSet {
    pub mu: DifferenceOperator,
    pub mustar: DifferenceOperator,
    pub tau: DifferenceOperator,
    pub taustar: DifferenceOperator,
    pub params: ParamSet,
}

/// Builds μ, μ*, τ, τ*. Requires `a+b ≠ c+d` so that σ exists.
pub fn structure_set(p: &ParamSet) -> Result<StructureSet> {
    p.sigma()?;
    Ok(StructureSet {
        mu: mu(p),
        mustar: mustar(p),
        tau: tau(),
        taustar: taustar(p),
        params: p.clone(),
    })
}

/// The 24-term average of `u μ^π + v μ*^π` next to its closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetrizedMu {
    pub average: DifferenceOperator,
    pub closed_form: DifferenceOperator,
    /// `ν` with `average = ν · closed_form`.
    pub normalization: Rational,
}

/// `½[(u−v) − e1(u+v)] M1 − ½(u+v) M2 + [e1(u−v)/2 − 2e2(u+v)/3] L`.
pub fn symmetrized_mu_closed_form(u: &Rational, v: &Rational, p: &ParamSet) -> DifferenceOperator {
    let b = sheun_basis();
    let (d, s) = (u - v, u + v);
    let m1 = (&d - &p.e1 * &s) / int(2);
    let m2 = -&s / int(2);
    let l = &p.e1 * &d / int(2) - rat(2, 3) * &p.e2 * &s;
    combine([(m1, &b.m1), (m2, &b.m2), (l, &b.l)])
}

pub fn symmetrized_mu(u: &Rational, v: &Rational, p: &ParamSet) -> Result<SymmetrizedMu> {
    let mut total = DifferenceOperator::zero();
    for perm in permutations4() {
        let q = p.permuted(perm);
        total = &total + &combine([(u.clone(), &mu(&q)), (v.clone(), &mustar(&q))]);
    }
    let average = total.scale(&rat(1, 24));
    let closed_form = symmetrized_mu_closed_form(u, v, p);
    let normalization = [int(1), int(-1)]
        .into_iter()
        .find(|nu| average == closed_form.scale(nu))
        .or_else(|| closed_form.is_zero().then(|| int(1)))
        .ok_or_else(|| Error::ClosedFormMismatch {
            offset: (&average - &closed_form).leading_term().map_or(0, |(k, _)| k),
        })?;
    Ok(SymmetrizedMu {
        average,
        closed_form,
        normalization,
    })
}

/// `U, V, Y, R`; they depend on the parameters through `e1` alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalSet {
    pub u: DifferenceOperator,
    pub v: DifferenceOperator,
    pub y: DifferenceOperator,
    pub r: DifferenceOperator,
    pub e1: Rational,
}

pub fn universal_set(e1: &Rational) -> UniversalSet {
    let b = sheun_basis();
    let e1sq = e1 * e1;
    let u = &b.m1 + &b.l.scale(e1);
    let v = combine([(int(1), &b.m2), (e1.clone(), &b.m1), (&e1sq / int(2), &b.l)]);
    let y = b.l.clone();
    let r = combine([
        (int(1), &b.r2),
        (int(2) * e1 - int(3), &b.r1),
        ((int(3) * &e1sq - int(10) * e1 + int(4)) / int(2), &b.m2),
        ((e1 + int(1)) * (&e1sq - int(4) * e1 + int(2)) / int(2), &b.m1),
        (
            (&e1sq * &e1sq - int(4) * &e1sq * e1 - int(8) * &e1sq + int(24) * e1 - int(8)) / int(8),
            &b.l,
        ),
    ]);
    UniversalSet {
        u,
        v,
        y,
        r,
        e1: e1.clone(),
    }
}

/// `S₀, S₃, S₊, S₋` at spin-like parameter `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SklyaninSet {
    pub s0: DifferenceOperator,
    pub s3: DifferenceOperator,
    pub splus: DifferenceOperator,
    pub sminus: DifferenceOperator,
    pub s_param: Rational,
}

impl SklyaninSet {
    pub fn generators(&self) -> [(&'static str, &DifferenceOperator); 4] {
        [
            ("S0", &self.s0),
            ("S3", &self.s3),
            ("S+", &self.splus),
            ("S-", &self.sminus),
        ]
    }
}

/// `e1 = 2 − 2s`.
pub fn e1_from_s(s: &Rational) -> Rational {
    int(2) - int(2) * s
}

/// Generators from the universal set at `e1 = 2 − 2s` through
/// `S₀ = 4Y−4U`, `S₃ = 4U−2Y−4V`, `S₊ = 16R−14Y−8U+24V`, `S₋ = −2Y`.
pub fn sklyanin_from_universal(s: &Rational) -> SklyaninSet {
    let w = universal_set(&e1_from_s(s));
    SklyaninSet {
        s0: combine([(int(4), &w.y), (int(-4), &w.u)]),
        s3: combine([(int(4), &w.u), (int(-2), &w.y), (int(-4), &w.v)]),
        splus: combine([(int(16), &w.r), (int(-14), &w.y), (int(-8), &w.u), (int(24), &w.v)]),
        sminus: w.y.scale(&int(-2)),
        s_param: s.clone(),
    }
}

/// The realization written directly in the S-Heun basis.
///
/// The printed L-coefficient of S₊ is `−2(4s²−1)(4s²−8s−1)`; the corrected
/// one has the opposite sign.
pub fn sklyanin_direct(s: &Rational, which: Transcription) -> SklyaninSet {
    let b = sheun_basis();
    let t = int(2) * s - int(1);
    let s2 = s * s;
    let l_sign = match which {
        Transcription::AsPrinted => int(-1),
        Transcription::Corrected => int(1),
    };
    let splus = combine([
        (
            l_sign * int(2) * (int(4) * &s2 - int(1)) * (int(4) * &s2 - int(8) * s - int(1)),
            &b.l,
        ),
        (int(-8) * &t * (int(4) * &s2 - int(4) * s - int(1)), &b.m1),
        (int(8) * &t * (int(6) * s + int(1)), &b.m2),
        (int(-16) * (int(4) * s - int(1)), &b.r1),
        (int(16), &b.r2),
    ]);
    SklyaninSet {
        s0: combine([(int(4) * &t, &b.l), (int(-4), &b.m1)]),
        s3: combine([(int(-2) * &t * &t, &b.l), (int(4) * &t, &b.m1), (int(-4), &b.m2)]),
        splus,
        sminus: b.l.scale(&int(-2)),
        s_param: s.clone(),
    }
}

/// Builds the generators through the universal set and checks them against
/// the corrected direct realization.
pub fn sklyanin_set(s: &Rational) -> Result<SklyaninSet> {
    let iso = sklyanin_from_universal(s);
    let direct = sklyanin_direct(s, Transcription::Corrected);
    for ((name, a), (_, b)) in iso.generators().into_iter().zip(direct.generators()) {
        if let Some((offset, c)) = (a - b).leading_term() {
            return Err(Error::RealizationMismatch {
                generator: name,
                offset,
                residual: c.to_string(),
            });
        }
    }
    Ok(iso)
}

/// Whether `op` is a scalar multiple of the identity equal to `value`.
pub fn is_scalar(op: &DifferenceOperator, value: &Rational) -> bool {
    match op.as_scalar() {
        Some(c) => &c == value,
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::LambdaPoly;
    use crate::ops::sheun::lambda_op;

    fn sample() -> ParamSet {
        ParamSet::new(rat(3, 2), rat(5, 4), rat(7, 3), rat(9, 5))
    }

    #[test]
    fn p_at_origin_is_lambda_times_l() {
        let b = sheun_basis();
        assert_eq!(p_op(&int(0), &int(0)), lambda_op().compose(&b.l));
    }

    #[test]
    fn p_on_constants() {
        let (s, t) = (rat(2, 7), rat(-5, 3));
        let image = p_op(&s, &t).apply(&LambdaPoly::one()).unwrap();
        assert_eq!(image, LambdaPoly::constant((&s + &t) / int(2)));
    }

    #[test]
    fn mustar_is_shifted_mu() {
        let p = sample();
        let h = rat(1, 2);
        let q = ParamSet::new(&p.c + &h, &p.d + &h, &p.a - &h, &p.b - &h);
        assert_eq!(mustar(&p), mu(&q));
        assert_eq!(structure_set(&p).unwrap().tau, sheun_basis().l.scale(&int(4)));
    }

    #[test]
    fn sigma_is_required() {
        let p = ParamSet::new(int(1), int(4), int(2), int(3));
        assert_eq!(structure_set(&p), Err(Error::SigmaUndefined));
    }

    #[test]
    fn taustar_is_permutation_invariant() {
        let p = sample();
        let t = taustar(&p);
        for perm in permutations4() {
            assert_eq!(taustar(&p.permuted(perm)), t);
        }
    }

    #[test]
    fn symmetrized_mu_measures_normalization() {
        let p = sample();
        let zero = symmetrized_mu(&int(0), &int(0), &p).unwrap();
        assert!(zero.average.is_zero());
        let diff = symmetrized_mu(&int(1), &int(-1), &p).unwrap();
        assert_eq!(diff.closed_form, universal_set(&p.e1).u);
        assert_eq!(diff.normalization, int(-1));
        let sum = symmetrized_mu(&int(1), &int(1), &p).unwrap();
        assert_eq!(sum.normalization, int(-1));
    }

    #[test]
    fn universal_r_at_zero() {
        let b = sheun_basis();
        let expected = combine([
            (int(1), &b.r2),
            (int(-3), &b.r1),
            (int(2), &b.m2),
            (int(1), &b.m1),
            (int(-1), &b.l),
        ]);
        assert_eq!(universal_set(&int(0)).r, expected);
        assert_eq!(universal_set(&rat(3, 5)).y, b.l);
    }

    #[test]
    fn sklyanin_constructions_agree() {
        for s in [rat(1, 3), rat(-7, 4), int(2)] {
            let set = sklyanin_set(&s).unwrap();
            assert_eq!(set.sminus, sheun_basis().l.scale(&int(-2)));
            let w = universal_set(&e1_from_s(&s));
            assert!((&(&set.s0 + &w.u.scale(&int(4))) - &w.y.scale(&int(4))).is_zero());
            let printed = sklyanin_direct(&s, Transcription::AsPrinted);
            assert_eq!(printed.s0, set.s0);
            assert_eq!(printed.s3, set.s3);
            assert_ne!(printed.splus, set.splus);
        }
        let half = sklyanin_direct(&rat(1, 2), Transcription::AsPrinted);
        assert_eq!(half.s0, sheun_basis().m1.scale(&int(-4)));
    }
}
