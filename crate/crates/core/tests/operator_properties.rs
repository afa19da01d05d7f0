use proptest::prelude::*;
use sheun::families::{permutations4, wilson_scaled, ParamSet};
use sheun::kernel::{int, rat, LambdaPoly, Poly, Rational, RationalFunction};
use sheun::ops::sheun::lambda_op;
use sheun::ops::{combine, generic_sheun, sheun_basis, DifferenceOperator};
use sheun::structure::{mu, mustar, taustar, universal_set};

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=40).prop_map(|(n, d)| rat(n, d))
}

fn generators() -> Vec<DifferenceOperator> {
    let b = sheun_basis();
    vec![b.l, b.m1, b.m2, b.r1, b.r2, lambda_op(), DifferenceOperator::identity()]
}

/// A random combination of the S-Heun generators, λ and the identity.
fn operator() -> impl Strategy<Value = DifferenceOperator> {
    prop::collection::vec(rational(), 7).prop_map(|c| {
        let g = generators();
        combine(c.into_iter().zip(g.iter()))
    })
}

/// Arbitrary operators with shifts in -2..=2 and rational-function coefficients.
fn raw_operator() -> impl Strategy<Value = DifferenceOperator> {
    prop::collection::vec((-2i32..=2, rational(), rational(), rational()), 0..=3).prop_map(|terms| {
        DifferenceOperator::from_terms(terms.into_iter().map(|(k, a, b, c)| {
            let num = Poly::from_coeffs(vec![a, b]);
            let den = Poly::from_coeffs(vec![c, int(1)]);
            (k, RationalFunction::new(num, den).unwrap())
        }))
    })
}

fn lambda_poly() -> impl Strategy<Value = LambdaPoly> {
    prop::collection::vec(rational(), 0..=4).prop_map(LambdaPoly::from_coeffs)
}

fn params() -> impl Strategy<Value = ParamSet> {
    prop::array::uniform4(rational()).prop_map(|[a, b, c, d]| ParamSet::new(a, b, c, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn composition_is_associative(a in raw_operator(), b in raw_operator(), c in raw_operator()) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn commutator_is_antisymmetric(a in operator(), b in operator()) {
        prop_assert_eq!(a.commutator(&b), -b.commutator(&a));
        prop_assert_eq!(a.anticommutator(&b), b.anticommutator(&a));
        prop_assert!(a.commutator(&a).is_zero());
    }

    #[test]
    fn brackets_are_bilinear(a in operator(), b in operator(), c in operator(), s in rational(), t in rational()) {
        let lin = combine([(s.clone(), &a), (t.clone(), &b)]);
        prop_assert_eq!(
            lin.commutator(&c),
            combine([(s.clone(), &a.commutator(&c)), (t.clone(), &b.commutator(&c))])
        );
        prop_assert_eq!(
            c.anticommutator(&lin),
            combine([(s, &c.anticommutator(&a)), (t, &c.anticommutator(&b))])
        );
    }

    #[test]
    fn jacobi_identity(a in operator(), b in operator(), c in operator()) {
        let sum = &(&a.commutator(&b.commutator(&c)) + &b.commutator(&c.commutator(&a))) + &c.commutator(&a.commutator(&b));
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn stored_coefficients_are_nonzero(a in raw_operator(), b in raw_operator()) {
        for op in [a.compose(&b), &a - &a, a.commutator(&b)] {
            prop_assert!(op.terms().values().all(|c| !c.is_zero()));
        }
    }

    #[test]
    fn apply_is_a_module_action(a in operator(), b in operator(), q in lambda_poly(), r in lambda_poly()) {
        let aq = a.apply(&q).unwrap();
        prop_assert_eq!(a.compose(&b).apply(&q).unwrap(), a.apply(&b.apply(&q).unwrap()).unwrap());
        prop_assert_eq!(a.apply(&(&q + &r)).unwrap(), &aq + &a.apply(&r).unwrap());
        prop_assert_eq!((&a + &b).apply(&q).unwrap(), &aq + &b.apply(&q).unwrap());
    }

    #[test]
    fn generic_sheun_raises_degree_by_at_most_one(u in prop::array::uniform5(rational()), n in 0usize..=10) {
        let op = generic_sheun(u);
        let image = op.apply(&LambdaPoly::monomial(n)).unwrap();
        prop_assert!(image.degree().is_none_or(|d| d <= n + 1));
    }

    #[test]
    fn json_round_trip(a in raw_operator()) {
        prop_assert_eq!(DifferenceOperator::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn taustar_is_permutation_invariant(p in params(), k in 0usize..24) {
        let perm = permutations4()[k];
        prop_assert_eq!(taustar(&p.permuted(perm)), taustar(&p));
    }

    #[test]
    fn q_eigenvalue_on_scaled_wilson(p in params(), n in 0usize..=4) {
        let Ok(w) = wilson_scaled(n, &p) else { return Ok(()) };
        prop_assume!(!w.is_zero());
        let q = mustar(&p).compose(&mu(&p));
        let e1 = &p.a + &p.b + &p.c + &p.d;
        let nn = int(n as i64);
        let eigen = &nn * (&nn + &e1 - int(1)) + (&p.c + &p.d) * (&p.a + &p.b - int(1));
        prop_assert_eq!(q.apply(&w).unwrap(), w.scale(&eigen));
    }

    #[test]
    fn universal_generators_match_their_definitions(e1 in rational()) {
        let b = sheun_basis();
        let set = universal_set(&e1);
        prop_assert_eq!(set.y, b.l.clone());
        prop_assert_eq!(set.u, combine([(int(1), &b.m1), (e1.clone(), &b.l)]));
        let half_sq = &e1 * &e1 / int(2);
        prop_assert_eq!(set.v, combine([(int(1), &b.m2), (e1, &b.m1), (half_sq, &b.l)]));
    }
}

#[test]
fn leading_term_laws_up_to_degree_ten() {
    let b = sheun_basis();
    let half_diff = combine([(rat(1, 2), &b.m1), (rat(-1, 2), &b.m2)]);
    for n in 0..=10usize {
        let q = LambdaPoly::monomial(n);
        let ni = int(n as i64);
        let l = b.l.apply(&q).unwrap();
        if n == 0 {
            assert!(l.is_zero());
        } else {
            assert_eq!(l.degree(), Some(n - 1));
            assert_eq!(l.coeff(n - 1), ni);
        }
        assert_eq!(half_diff.apply(&q).unwrap().coeff(n), int(1) - &ni);
        assert!(b.m1.apply(&q).unwrap().degree() <= Some(n));
        assert!(b.m2.apply(&q).unwrap().degree() <= Some(n));
        let r1 = b.r1.apply(&q).unwrap();
        let r2 = b.r2.apply(&q).unwrap();
        assert_eq!((r1.degree(), r1.coeff(n + 1)), (Some(n + 1), int(1)));
        assert_eq!(r2.coeff(n + 1), int(2 * n as i64 - 1));
    }
}
