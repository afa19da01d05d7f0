//! The S-Heun generators on λ = x² and the operators built directly from them.

use num_traits::Zero;

use super::{combine, DifferenceOperator};
use crate::error::{Error, Result};
use crate::kernel::{format_rational, int, rat, LambdaPoly, Poly, Rational, RationalFunction};

/// The five generators L, M1, M2, R1, R2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SHeunBasis {
    pub l: DifferenceOperator,
    pub m1: DifferenceOperator,
    pub m2: DifferenceOperator,
    pub r1: DifferenceOperator,
    pub r2: DifferenceOperator,
}

/// `p(x)/(4x)`.
fn over_4x(p: Poly) -> RationalFunction {
    RationalFunction::new(p, Poly::from_ints(&[0, 4])).expect("nonzero denominator")
}

/// Multiplication by λ = x².
pub fn lambda_op() -> DifferenceOperator {
    DifferenceOperator::multiplication(RationalFunction::from_poly(Poly::from_ints(&[0, 0, 1])))
}

pub fn sheun_basis() -> SHeunBasis {
    let l = DifferenceOperator::from_terms([
        (1, over_4x(Poly::from_ints(&[1]))),
        (-1, over_4x(Poly::from_ints(&[-1]))),
    ]);
    let m1 = DifferenceOperator::from_terms([
        (1, over_4x(Poly::from_ints(&[-1, 2]))),
        (-1, over_4x(Poly::from_ints(&[1, 2]))),
    ]);
    let m2 = DifferenceOperator::from_terms([
        (1, over_4x(Poly::from_ints(&[1, -2, 2]))),
        (-1, over_4x(Poly::from_ints(&[-1, -2, -2]))),
    ]);
    let x = lambda_op();
    let r1 = x.compose(&m1);
    let r2 = x.compose(&m2);
    SHeunBasis { l, m1, m2, r1, r2 }
}

/// The operator `A1·T⁺ + A2·T⁻` whose coefficients are fixed by `u0..u4`.
pub fn generic_sheun(u: [Rational; 5]) -> DifferenceOperator {
    let [u0, u1, u2, u3, u4] = u;
    // u2 + u3 λ + u4 λ² − u0 λ' − u1 λ' λ, with λ' the neighbouring grid value.
    let numerator = |neighbour: Poly| {
        let lam = Poly::from_ints(&[0, 0, 1]);
        let base = Poly::from_coeffs(vec![
            u2.clone(),
            Rational::zero(),
            u3.clone(),
            Rational::zero(),
            u4.clone(),
        ]);
        &(&base - &neighbour.scale(&u0)) - &(&neighbour * &lam).scale(&u1)
    };
    let below = Poly::from_ints(&[1, -2, 1]);
    let above = Poly::from_ints(&[1, 2, 1]);
    DifferenceOperator::from_terms([(1, over_4x(numerator(below))), (-1, over_4x(-numerator(above)))])
}

/// Builds the quadratic expression for multiplication by λ and checks that
/// it collapses to the single term `{0 ↦ x²}`.
pub fn mult_x_identity() -> Result<DifferenceOperator> {
    let b = sheun_basis();
    let h = rat(1, 2);
    let r_sum = &b.r1 + &b.r2;
    let m_diff = &b.m1 - &b.l;
    let x = &(&r_sum * &m_diff) - &combine([(h.clone(), &(&b.r1 * &b.m2)), (h, &(&b.r2 * &b.m1))]);
    let residual = &x - &lambda_op();
    match residual.leading_term() {
        None => Ok(x),
        Some((offset, c)) => Err(Error::IdentityFailed {
            offset,
            residual: c.to_string(),
        }),
    }
}

/// Parameters of the Heun–Racah operator entering the embedding.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeunRacahParams {
    pub t0: Rational,
    pub t1: Rational,
    pub u0: Rational,
    pub u1: Rational,
    pub u2: Rational,
    pub v0: Rational,
    pub v1: Rational,
    pub v2: Rational,
    pub v3: Rational,
}

/// Coefficients `a1..a9` of the embedding.
pub fn heun_racah_coefficients(p: &HeunRacahParams) -> [Rational; 9] {
    let a1 = (&p.t1 + &p.u2) / int(4) - &p.v3 / int(16);
    let a2 = -&p.t1 / int(8) + int(8) * &p.u0 + &p.u1 - int(2) * &p.v1 + &p.v3 / int(16);
    let a3 = (-int(8) * &p.t0 - &p.t1 - int(64) * &p.u0 - int(3) * &p.u2 + int(16) * &p.v1 + int(2) * &p.v2) / int(4);
    let a4 = &p.u2 / int(4) - &a2;
    let a5 = &p.v3 / int(16);
    let a6 = &a3 - int(2) * &p.u1;
    let a7 = int(8) * &p.u0;
    let a8 = p.t0.clone();
    let a9 = -&p.t0 - int(24) * &p.u0 + int(16) * &p.v0;
    [a1, a2, a3, a4, a5, a6, a7, a8, a9]
}

/// Assembles `R1(a1 M1 + a2 M2 + a3 L) + R2(a4 M1 + a5 M2 + a6 L)
/// plus a7 L M2 + a8 M2² + a9 L²` and checks on `λ^0..λ^max_degree` that it raises the
/// degree by at most one.
pub fn heun_racah_embed(p: &HeunRacahParams, max_degree: usize) -> Result<(DifferenceOperator, [Rational; 9])> {
    let a = heun_racah_coefficients(p);
    let b = sheun_basis();
    let inner1 = combine([(a[0].clone(), &b.m1), (a[1].clone(), &b.m2), (a[2].clone(), &b.l)]);
    let inner2 = combine([(a[3].clone(), &b.m1), (a[4].clone(), &b.m2), (a[5].clone(), &b.l)]);
    let op = &(&(&b.r1 * &inner1) + &(&b.r2 * &inner2))
        + &combine([
            (a[6].clone(), &(&b.l * &b.m2)),
            (a[7].clone(), &(&b.m2 * &b.m2)),
            (a[8].clone(), &(&b.l * &b.l)),
        ]);
    for n in 0..=max_degree {
        let image = op.apply(&LambdaPoly::monomial(n))?;
        if let Some(d) = image.degree() {
            if d > n + 1 {
                return Err(Error::DegreeRaisingViolated { input: n, output: d });
            }
        }
    }
    Ok((op, a))
}

/// Text form of an `a`-table, one entry per line.
pub fn format_coefficients(a: &[Rational]) -> String {
    a.iter()
        .enumerate()
        .map(|(i, c)| format!("a{} = {}", i + 1, format_rational(c)))
        .collect::<Vec<_>>()
        .join("\n")
}
