use proptest::prelude::*;

use axial_core::algebra::Element;
use axial_core::axis::verify_axis;
use axial_core::catalog::{check_derivation_criterion, run_suite, AxisPair, Tier};
use axial_core::constructions::{axis_pair_with_lambda_dim, spin_factor, SpinFactorSpec};
use axial_core::format::{format_algebra, parse_algebra};
use axial_core::linalg::Matrix;
use axial_core::parallel::Execution;
use axial_core::scalar::{FieldSpec, Scalar};

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rationals),
        prop::sample::select(vec![5u64, 7, 11, 101]).prop_map(|p| FieldSpec::prime(p).unwrap()),
    ]
}

/// A value of `(a,b)` other than 1.
fn lambda(f: FieldSpec) -> impl Strategy<Value = Scalar> {
    (-9i64..10, 1i64..7)
        .prop_map(move |(n, d)| f.div(&f.from_i64(n), &f.from_i64(d)))
        .prop_filter_map("defined and not 1", move |r| r.ok().filter(|l| *l != f.one()))
}

fn element(f: FieldSpec, dim: usize, raw: &[i64]) -> Vec<Scalar> {
    (0..dim).map(|i| f.from_i64(raw[i % raw.len()])).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn spin_pairs_satisfy_the_mandatory_tier(
        (f, l) in field().prop_flat_map(|f| (Just(f), lambda(f))),
        m in 2usize..4,
    ) {
        let fx = axis_pair_with_lambda_dim(f, &l, m).unwrap();
        let p = AxisPair::new(&fx.algebra, fx.element("a").unwrap(), fx.element("b").unwrap()).unwrap();
        prop_assert_eq!(&p.lambda, &l);
        let reports = run_suite(&p, Tier::Mandatory, None, Execution::Parallel).unwrap();
        for r in &reports {
            prop_assert!(r.failures.is_empty(), "{} failed at λ = {}", r.id, l);
        }
        prop_assert!(check_derivation_criterion(&p).unwrap().consistent());
    }

    #[test]
    fn decomposition_lands_in_eigenspaces(
        (f, l) in field().prop_flat_map(|f| (Just(f), lambda(f))),
        raw in prop::collection::vec(-20i64..21, 1..6),
    ) {
        let fx = axis_pair_with_lambda_dim(f, &l, 3).unwrap();
        let alg = &fx.algebra;
        let cert = verify_axis(alg, fx.element("a").unwrap()).unwrap();
        let x = alg.element(element(f, alg.dim(), &raw)).unwrap();
        let d = cert.decompose(&x).unwrap();
        prop_assert_eq!(cert.reconstruct(&d), x);
        prop_assert!(alg.in_span(cert.zero_space(), &d.x0));
        prop_assert!(alg.in_span(cert.half_space(), &d.xhalf));
    }

    #[test]
    fn miyamoto_is_an_involutive_automorphism(
        (f, l) in field().prop_flat_map(|f| (Just(f), lambda(f))),
        raw in prop::collection::vec(-5i64..6, 1..6),
    ) {
        let fx = axis_pair_with_lambda_dim(f, &l, 3).unwrap();
        let alg = &fx.algebra;
        let cert = verify_axis(alg, fx.element("b").unwrap()).unwrap();
        let tau = cert.miyamoto();
        prop_assert!(alg.is_automorphism(&tau).unwrap().passed());
        prop_assert_eq!(tau.mul(&tau), Matrix::identity(f, alg.dim()));
        let x: Element = alg.element(element(f, alg.dim(), &raw)).unwrap();
        let d = cert.decompose(&x).unwrap();
        let flipped = alg.sub(&x, &alg.scale(&f.from_i64(2), &d.xhalf).unwrap()).unwrap();
        prop_assert_eq!(alg.apply(&tau, &x).unwrap(), flipped);
    }

    #[test]
    fn spin_factor_text_round_trip(
        f in field(),
        entries in prop::collection::vec(-3i64..4, 6),
    ) {
        let mut b = Matrix::zeros(f, 3, 3);
        let mut it = entries.iter();
        for i in 0..3 {
            for j in i..3 {
                let v = f.from_i64(*it.next().unwrap());
                b.set(i, j, v.clone());
                b.set(j, i, v);
            }
        }
        let alg = spin_factor(&SpinFactorSpec { field: f, b }).unwrap();
        let back = parse_algebra(&format_algebra(&alg)).unwrap();
        prop_assert!(back.same_structure(&alg));
    }
}
