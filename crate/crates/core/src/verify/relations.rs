//! Relation tables and the suites that evaluate them.

use rayon::prelude::*;

use super::expr::{eval_expr, relation_residual, Env};
use super::report::{CorrectionOutcome, VerificationReport};
use super::sample::Sampler;
use crate::kernel::{int, rat, LambdaPoly, Rational};
use crate::ops::sheun::{heun_racah_embed, lambda_op, HeunRacahParams};
use crate::ops::{generic_sheun, mult_x_identity, sheun_basis, DifferenceOperator};
use crate::structure::{sklyanin_direct, sklyanin_from_universal, universal_set, SklyaninSet, Transcription};

/// A printed relation, with the candidate correction tried when it fails.
#[derive(Clone, Copy, Debug)]
pub struct RelationSpec {
    pub text: &'static str,
    pub correction: Option<(&'static str, &'static str)>,
}

impl RelationSpec {
    const fn plain(text: &'static str) -> Self {
        RelationSpec { text, correction: None }
    }

    const fn corrected(text: &'static str, description: &'static str, fixed: &'static str) -> Self {
        RelationSpec {
            text,
            correction: Some((description, fixed)),
        }
    }

    /// Display form, with `Sp`/`Sm` written as `S+`/`S-`.
    pub fn id(&self) -> String {
        display(self.text)
    }
}

fn display(text: &str) -> String {
    text.replace("Sp", "S+").replace("Sm", "S-")
}

pub const STAB: [RelationSpec; 3] = [
    RelationSpec::plain("[L,M1] = 2L^2"),
    RelationSpec::plain("[L,M2] = {M1,L}"),
    RelationSpec::plain("[M1,M2] = {M2,L} - 4L^2"),
];

pub const APPENDIX: [RelationSpec; 14] = [
    RelationSpec::plain("[L,M1] = 2L^2"),
    RelationSpec::plain("[L,M2] = {M1,L}"),
    RelationSpec::plain("[M1,M2] = {M2,L} - 4L^2"),
    RelationSpec::plain("[L,R1] = M1^2 + L^2 + {M1,L} + 1/2{M2,L}"),
    RelationSpec::plain("[L,R2] = M1^2 + L^2 + {M1,L} + 1/2{M2,L} + {M1,M2}"),
    RelationSpec::corrected(
        "[M1,R1] = 2M1^2 - 3L^2 + {M1,M2} - 1/2{M1,L} - {M2,L}",
        "+3L^2 in place of -3L^2",
        "[M1,R1] = 2M1^2 + 3L^2 + {M1,M2} - 1/2{M1,L} - {M2,L}",
    ),
    RelationSpec::plain("[M1,R2] = M1^2 + M2^2 + 7L^2 + 2{R2,L} - 5/2{M1,L} - 5{M2,L}"),
    RelationSpec::plain("[R1,M2] = 3L^2 - M1^2 - M2^2 + 2{R1+R2,L} - {R1,M1} - {M1,M2} - 5{M1,L} - 9/2{M2,L}"),
    RelationSpec::corrected(
        "[R2,M2] = Y^2 - M1^2 - M2^2 + {R1,M1-M2} - {M1,M2} + 1/2{M1,L}",
        "Y read as L",
        "[R2,M2] = L^2 - M1^2 - M2^2 + {R1,M1-M2} - {M1,M2} + 1/2{M1,L}",
    ),
    RelationSpec::corrected(
        "[R2,R1] = 2R1^2 + M1^2 + 2M2^2 + 3L^2 + 1/2{R2-R1,L} - 3/2{R1+R2,M2} + {M1,M2} + 3/2{M1,L} - 1/2{M2,Y}",
        "Y read as L",
        "[R2,R1] = 2R1^2 + M1^2 + 2M2^2 + 3L^2 + 1/2{R2-R1,L} - 3/2{R1+R2,M2} + {M1,M2} + 3/2{M1,L} - 1/2{M2,L}",
    ),
    RelationSpec::corrected(
        "M1^2 - {M1,M2} + 3L^2 = 1",
        "{M2,L} in place of {M1,M2}",
        "M1^2 - {M2,L} + 3L^2 = 1",
    ),
    RelationSpec::corrected(
        "{R1-R2,L} + M2^2 + {M2,L} - 3L^2 = -3",
        "right-hand side +3",
        "{R1-R2,L} + M2^2 + {M2,L} - 3L^2 = 3",
    ),
    RelationSpec::corrected(
        "-2{R1,L} - 3L^2 + {M1,M2} + 2{M1+M2,L} = 4",
        "-2L^2 and right-hand side -4",
        "-2{R1,L} - 2L^2 + {M1,M2} + 2{M1+M2,L} = -4",
    ),
    RelationSpec::corrected(
        "M1^2 + 1/2L^2 + {R1,M1-M2} - 5/2{R1,L} - 2{R2,L} + {R1+R2,M1} + 1/4{M1,M2} + 6{M1,L} + 4{M2,L} = 0",
        "{R2,M1} in place of {R1+R2,M1}",
        "M1^2 + 1/2L^2 + {R1,M1-M2} - 5/2{R1,L} - 2{R2,L} + {R2,M1} + 1/4{M1,M2} + 6{M1,L} + 4{M2,L} = 0",
    ),
];

pub const UNIVERSAL: [RelationSpec; 6] = [
    RelationSpec::plain("[V,Y] = -{U,Y}"),
    RelationSpec::plain("[U,Y] = -{Y,Y}"),
    RelationSpec::plain("[U,V] = {V,Y} - 2{Y,Y}"),
    RelationSpec::plain("[R,Y] = {U,U} - {U,V} + {V,Y}"),
    RelationSpec::plain("[R,V] = 2{V,Y} - {Y,Y} - {V,V} - {U,R}"),
    RelationSpec::plain("[R,U] = {U,V} + 2{V,Y} - 2{U,Y} - {V,V} - {Y,Y} - {R,Y}"),
];

pub const SKLYANIN: [RelationSpec; 6] = [
    RelationSpec::plain("[S0,Sm] = -2{Sm,Sm}"),
    RelationSpec::plain("[S0,Sp] = 16{S3,Sm} - 16{Sm,Sm} + 2{Sp,Sm} - 4{S3,S3}"),
    RelationSpec::plain("[Sp,Sm] = 2{S0,S3}"),
    RelationSpec::plain("[S0,S3] = 2{S3,Sm} - 8{Sm,Sm}"),
    RelationSpec::plain("[S3,Sp] = {S0,Sp}"),
    RelationSpec::plain("[S3,Sm] = -{S0,Sm}"),
];

pub const STAB_CASIMIR: &str = "M1^2 - {M2,L} + 3L^2";
pub const Q1: &str = "U^2 - {V,Y} + 3Y^2";
pub const Q2: &str = "U^2 + V^2 - {U,V} - {U,Y} - {R,Y}";
pub const C1: &str = "S0^2 + S3^2 + 1/2{Sp,Sm}";
pub const C2: &str = "1/2{Sp,Sm} + 2{Sm,S3} + S3^2 - 6{Sm,Sm}";

/// `L, M1, M2, R1, R2` and `X`.
pub fn sheun_env() -> Env {
    let b = sheun_basis();
    Env::new()
        .op("L", b.l)
        .op("M1", b.m1)
        .op("M2", b.m2)
        .op("R1", b.r1)
        .op("R2", b.r2)
        .op("X", lambda_op())
}

/// `U, V, Y, R` at `e1`, with `e1` available as a scalar.
pub fn universal_env(e1: &Rational) -> Env {
    let w = universal_set(e1);
    Env::new()
        .op("U", w.u)
        .op("V", w.v)
        .op("Y", w.y)
        .op("R", w.r)
        .scalar("e1", e1.clone())
}

/// `S0, S3, Sp, Sm`, with `s` available as a scalar.
pub fn sklyanin_env(set: &SklyaninSet) -> Env {
    Env::new()
        .op("S0", set.s0.clone())
        .op("S3", set.s3.clone())
        .op("Sp", set.splus.clone())
        .op("Sm", set.sminus.clone())
        .scalar("s", set.s_param.clone())
}

/// Evaluates one relation (and its correction on failure) in `env`.
pub fn check_relation(suite: &str, spec: &RelationSpec, env: &Env, params: &[Rational]) -> VerificationReport {
    let report = VerificationReport::new(suite, spec.id(), params);
    let report = match relation_residual(spec.text, env) {
        Ok(residual) => report.with_residual(&residual),
        Err(e) => report.fail(e.to_string()),
    };
    match (report.status, spec.correction) {
        (super::Status::Fail, Some((description, fixed))) => {
            let outcome = match relation_residual(fixed, env) {
                Ok(residual) => CorrectionOutcome::from_residual(description, &residual),
                Err(e) => CorrectionOutcome::from_check(description, false, e.to_string()),
            };
            report.with_correction(outcome)
        }
        _ => report,
    }
}

/// Runs every relation of `specs` on every environment, relation-major.
pub(crate) fn run_table(suite: &str, specs: &[RelationSpec], envs: &[(Env, Vec<Rational>)]) -> Vec<VerificationReport> {
    let jobs: Vec<(usize, usize)> = (0..specs.len())
        .flat_map(|r| (0..envs.len()).map(move |t| (r, t)))
        .collect();
    jobs.par_iter()
        .map(|&(r, t)| check_relation(suite, &specs[r], &envs[t].0, &envs[t].1))
        .collect()
}

/// Checks that `text` evaluates to `value` times the identity.
pub fn check_scalar(
    suite: &str,
    id: &str,
    text: &str,
    value: &Rational,
    env: &Env,
    params: &[Rational],
) -> VerificationReport {
    let report = VerificationReport::new(suite, id, params);
    match eval_expr(text, env) {
        Ok(op) => {
            let measured = op
                .as_scalar()
                .map(|c| super::report::fmt_r(&c))
                .unwrap_or_else(|| "not scalar".into());
            report
                .with_residual(&(&op - &DifferenceOperator::scalar(value.clone())))
                .constant("value", measured)
        }
        Err(e) => report.fail(e.to_string()),
    }
}

/// Checks that `text` commutes with each of `generators`.
pub fn check_central(
    suite: &str,
    id: &str,
    text: &str,
    generators: &[&str],
    env: &Env,
    params: &[Rational],
) -> VerificationReport {
    let report = VerificationReport::new(suite, id, params);
    let c = match eval_expr(text, env) {
        Ok(c) => c,
        Err(e) => return report.fail(e.to_string()),
    };
    for g in generators {
        let op = match eval_expr(g, env) {
            Ok(op) => op,
            Err(e) => return report.fail(e.to_string()),
        };
        let residual = c.commutator(&op);
        if !residual.is_zero() {
            return report
                .with_residual(&residual)
                .note(format!("fails against {}", display(g)));
        }
    }
    report
}

pub(crate) fn sample_scalars(sampler: &mut Sampler, trials: usize) -> Vec<Rational> {
    (0..trials).map(|_| sampler.rational()).collect()
}

/// The parameter-free relations among the generators themselves, plus the
/// Heun–Racah embedding at sampled coefficients.
pub fn verify_sheun(trials: usize, seed: u64) -> Vec<VerificationReport> {
    const SUITE: &str = "sheun";
    let b = sheun_basis();
    let x = lambda_op();
    let mut out = Vec::new();

    let report = VerificationReport::new(SUITE, "(R1+R2)(M1-L) - 1/2R1 M2 - 1/2R2 M1 = X", &[]);
    out.push(match mult_x_identity() {
        Ok(_) => report,
        Err(e) => report.fail(e.to_string()),
    });

    let env = sheun_env();
    for text in ["1/2(M1+M2) = X L", "R1 = X M1", "R2 = X M2"] {
        out.push(check_relation(SUITE, &RelationSpec::plain(text), &env, &[]));
    }

    let delta = |i: usize| -> [Rational; 5] { std::array::from_fn(|j| int((i == j) as i64)) };
    let deltas: [(usize, &str, DifferenceOperator); 3] = [
        (2, "L", b.l.clone()),
        (0, "1/2(M1-M2)", (&b.m1 - &b.m2).scale(&rat(1, 2))),
        (3, "X L", x.compose(&b.l)),
    ];
    for (i, name, expected) in deltas {
        let id = format!("generic S-Heun operator at u = e{i} is {name}");
        out.push(VerificationReport::new(SUITE, id, &[]).with_residual(&(&generic_sheun(delta(i)) - &expected)));
    }

    out.extend(leading_term_laws(10));

    let mut sampler = Sampler::new(seed, 0);
    let draws: Vec<[Rational; 9]> = (0..trials).map(|_| sampler.rationals::<9>()).collect();
    let hr: Vec<VerificationReport> = draws
        .par_iter()
        .map(|v| {
            let p = HeunRacahParams {
                t0: v[0].clone(),
                t1: v[1].clone(),
                u0: v[2].clone(),
                u1: v[3].clone(),
                u2: v[4].clone(),
                v0: v[5].clone(),
                v1: v[6].clone(),
                v2: v[7].clone(),
                v3: v[8].clone(),
            };
            let report =
                VerificationReport::new(SUITE, "Heun-Racah embedding raises degree by at most one (n <= 6)", v);
            match heun_racah_embed(&p, 6) {
                Ok(_) => report,
                Err(e) => report.fail(e.to_string()),
            }
        })
        .collect();
    out.extend(hr);
    out
}

/// Degree and leading-coefficient laws of the generators on `λ^n`, `n ≤ n_max`.
pub fn leading_term_laws(n_max: usize) -> Vec<VerificationReport> {
    const SUITE: &str = "sheun";
    let b = sheun_basis();
    let half_diff = (&b.m1 - &b.m2).scale(&rat(1, 2));
    // (name, operator, expected degree shift, expected lead, exact degree)
    type Law<'a> = (&'a str, &'a DifferenceOperator, i64, Option<fn(i64) -> Rational>);
    let laws: [Law; 6] = [
        ("L λ^n = n λ^(n-1) + ...", &b.l, -1, Some(int)),
        ("1/2(M1-M2) λ^n = (1-n) λ^n + ...", &half_diff, 0, Some(|n| int(1 - n))),
        ("deg M1 λ^n <= n", &b.m1, 0, None),
        ("deg M2 λ^n <= n", &b.m2, 0, None),
        ("R1 λ^n = λ^(n+1) + ...", &b.r1, 1, Some(|_| int(1))),
        ("R2 λ^n = (2n-1) λ^(n+1) + ...", &b.r2, 1, Some(|n| int(2 * n - 1))),
    ];
    laws.iter()
        .map(|(id, op, shift, lead)| {
            let report = VerificationReport::new(SUITE, *id, &[]);
            for n in 0..=n_max {
                let image = match op.apply(&LambdaPoly::monomial(n)) {
                    Ok(p) => p,
                    Err(e) => return report.fail(format!("n = {n}: {e}")),
                };
                let ni = n as i64;
                let target = ni + shift;
                let got = image.coeff(target.max(0) as usize);
                let above_ok = image.degree().is_none_or(|d| (d as i64) <= target);
                let lead_ok = match lead {
                    Some(f) if target >= 0 => got == f(ni),
                    Some(f) => f(ni) == int(0),
                    None => true,
                };
                if !above_ok || !lead_ok {
                    return report.fail(format!("n = {n}: image {image}"));
                }
            }
            report
        })
        .collect()
}

/// The three relations of the stabilizing algebra.
pub fn verify_stab() -> Vec<VerificationReport> {
    run_table("stab", &STAB, &[(sheun_env(), Vec::new())])
}

/// Every relation of the quadratic-relation table, with corrections.
pub fn verify_appendix() -> Vec<VerificationReport> {
    run_table("appendix", &APPENDIX, &[(sheun_env(), Vec::new())])
}

/// The six universal relations and the centrality of `Q1`, `Q2` at sampled `e1`.
pub fn verify_universal_relations(trials: usize, seed: u64, stream: u64) -> Vec<VerificationReport> {
    let mut sampler = Sampler::new(seed, stream);
    let envs: Vec<(Env, Vec<Rational>)> = sample_scalars(&mut sampler, trials)
        .into_iter()
        .map(|e1| (universal_env(&e1), vec![e1]))
        .collect();
    let mut out = run_table("universal", &UNIVERSAL, &envs);
    for (id, text) in [("Q1 central", Q1), ("Q2 central", Q2)] {
        let central: Vec<_> = envs
            .par_iter()
            .map(|(env, p)| check_central("universal", id, text, &["U", "V", "Y", "R"], env, p))
            .collect();
        out.extend(central);
    }
    out
}

/// The six Sklyanin relations with generators built through the universal set.
pub fn verify_sklyanin_relations(trials: usize, seed: u64, stream: u64) -> Vec<VerificationReport> {
    let mut sampler = Sampler::new(seed, stream);
    let envs: Vec<(Env, Vec<Rational>)> = sample_scalars(&mut sampler, trials)
        .into_iter()
        .map(|s| (sklyanin_env(&sklyanin_from_universal(&s)), vec![s]))
        .collect();
    run_table("sklyanin", &SKLYANIN, &envs)
}

/// Casimir values and centrality, and the agreement of the two Sklyanin realizations.
pub fn verify_casimirs(trials: usize, seed: u64) -> Vec<VerificationReport> {
    verify_casimirs_on(trials, seed, super::Suite::Casimir.stream())
}

pub(crate) fn verify_casimirs_on(trials: usize, seed: u64, stream: u64) -> Vec<VerificationReport> {
    const SUITE: &str = "casimir";
    let mut out = vec![check_scalar(
        SUITE,
        "C = M1^2 - {M2,L} + 3L^2 = 1",
        STAB_CASIMIR,
        &int(1),
        &sheun_env(),
        &[],
    )];

    let mut sampler = Sampler::new(seed, stream);
    let e1s = sample_scalars(&mut sampler, trials);
    let ss = sample_scalars(&mut sampler, trials);
    let uenvs: Vec<(Env, Vec<Rational>)> = e1s.iter().map(|e1| (universal_env(e1), vec![e1.clone()])).collect();
    let senvs: Vec<(Env, Vec<Rational>)> = ss
        .iter()
        .map(|s| (sklyanin_env(&sklyanin_from_universal(s)), vec![s.clone()]))
        .collect();

    let q1: Vec<_> = uenvs
        .par_iter()
        .map(|(env, p)| check_scalar(SUITE, "Q1 = 1", Q1, &int(1), env, p))
        .collect();
    let q2: Vec<_> = uenvs
        .par_iter()
        .map(|(env, p)| {
            let e1 = &p[0];
            check_scalar(SUITE, "Q2 = (e1-2)(e1-4)", Q2, &((e1 - int(2)) * (e1 - int(4))), env, p)
        })
        .collect();
    let c1: Vec<_> = senvs
        .par_iter()
        .map(|(env, p)| {
            let t = int(2) * &p[0] + int(1);
            check_scalar(SUITE, "C1 = 16(2s+1)^2", C1, &(int(16) * &t * &t), env, p)
        })
        .collect();
    let c2: Vec<_> = senvs
        .par_iter()
        .map(|(env, p)| {
            let s = &p[0];
            check_scalar(SUITE, "C2 = 64s(s+1)", C2, &(int(64) * s * (s + int(1))), env, p)
        })
        .collect();
    out.extend(q1);
    out.extend(q2);
    out.extend(c1);
    out.extend(c2);

    for (id, text) in [("Q1 central", Q1), ("Q2 central", Q2)] {
        let r: Vec<_> = uenvs
            .par_iter()
            .map(|(env, p)| check_central(SUITE, id, text, &["U", "V", "Y", "R"], env, p))
            .collect();
        out.extend(r);
    }
    for (id, text) in [("C1 central", C1), ("C2 central", C2)] {
        let r: Vec<_> = senvs
            .par_iter()
            .map(|(env, p)| check_central(SUITE, id, text, &["S0", "S3", "Sp", "Sm"], env, p))
            .collect();
        out.extend(r);
    }

    let realization: Vec<Vec<VerificationReport>> = ss
        .par_iter()
        .map(|s| {
            let iso = sklyanin_from_universal(s);
            let printed = sklyanin_direct(s, Transcription::AsPrinted);
            let fixed = sklyanin_direct(s, Transcription::Corrected);
            let params = [s.clone()];
            iso.generators()
                .into_iter()
                .zip(printed.generators())
                .zip(fixed.generators())
                .map(|(((name, a), (_, p)), (_, f))| {
                    let id = format!("{name}: direct realization = isomorphism image (e1 = 2-2s)");
                    let report = VerificationReport::new(SUITE, id, &params).with_residual(&(a - p));
                    if report.status == super::Status::Fail {
                        report.with_correction(CorrectionOutcome::from_residual(
                            "opposite sign of the L coefficient in S+",
                            &(a - f),
                        ))
                    } else {
                        report
                    }
                })
                .collect()
        })
        .collect();
    // Generator-major order, tuples inside.
    for g in 0..4 {
        out.extend(realization.iter().map(|r| r[g].clone()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Status;

    #[test]
    fn stab_passes_and_perturbation_is_caught() {
        let reports = verify_stab();
        assert_eq!(reports.len(), 3);
        assert!(reports.iter().all(|r| r.status == Status::Pass));
        let bad = check_relation("stab", &RelationSpec::plain("[L,M1] = 3L^2"), &sheun_env(), &[]);
        assert_eq!(bad.status, Status::Fail);
        assert_eq!(bad.residual_offset, Some(2));
    }

    #[test]
    fn appendix_scalar_line_fails_as_printed() {
        let r = check_relation("appendix", &APPENDIX[10], &sheun_env(), &[]);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.correction.unwrap().status, Status::Pass);
    }

    #[test]
    fn undefined_symbol_is_a_failure_not_a_fault() {
        let r = check_relation("appendix", &APPENDIX[8], &sheun_env(), &[]);
        assert_eq!(r.status, Status::Fail);
        assert!(r.residual_coeff.unwrap().contains("`Y`"));
    }

    #[test]
    fn q2_at_three_is_minus_identity() {
        let r = check_scalar("casimir", "Q2", Q2, &int(-1), &universal_env(&int(3)), &[int(3)]);
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.empirical_constants["value"], "-1");
    }

    #[test]
    fn c2_vanishes_at_zero() {
        let env = sklyanin_env(&sklyanin_from_universal(&int(0)));
        assert!(eval_expr(C2, &env).unwrap().is_zero());
    }

    #[test]
    fn leading_terms_hold_to_degree_ten() {
        assert!(leading_term_laws(10).iter().all(|r| r.status == Status::Pass));
    }
}
