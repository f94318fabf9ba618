mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;

use common::r;
use nichols_core::braidcore::{hecke_check, Braiding};
use nichols_core::families::{antiflip, cpn_cotangent_braiding, diagonal, flip, frt_braiding, RConvention};
use nichols_core::linalg::{inverse, FieldMatrix, SubspaceBasis};
use nichols_core::nichols::{
    analyze, finite_dimensionality_scan, graded_dims, graded_dims_with, kernel_a2, koszul_check, quadratic_dims,
    quadratic_dual_dims, with_backend, Backend, Ranker,
};
use nichols_core::qfield::QRational;

fn sym(d: usize, pairs: &[(usize, usize, i64)]) -> BTreeMap<usize, QRational> {
    pairs.iter().map(|&(i, j, c)| (i * d + j, QRational::from_int(c))).collect()
}

#[test]
fn graded_dims_examples() {
    assert_eq!(graded_dims(&antiflip(3).unwrap(), 4), vec![1, 3, 3, 1, 0]);
    assert_eq!(graded_dims(&flip(2).unwrap(), 4), vec![1, 2, 3, 4, 5]);
    assert_eq!(graded_dims(&cpn_cotangent_braiding(3, None).unwrap(), 4), vec![1, 3, 3, 1, 0]);
}

#[test]
fn kernel_examples() {
    let a = kernel_a2(&antiflip(2).unwrap());
    let expected = SubspaceBasis::new(4, vec![sym(2, &[(0, 0, 1)]), sym(2, &[(1, 1, 1)]), sym(2, &[(0, 1, 1), (1, 0, 1)])]).unwrap();
    assert!(a.same_span(&expected));
    let f = kernel_a2(&flip(2).unwrap());
    assert!(f.same_span(&SubspaceBasis::new(4, vec![sym(2, &[(0, 1, 1), (1, 0, -1)])]).unwrap()));
    let c = kernel_a2(&cpn_cotangent_braiding(3, None).unwrap());
    assert_eq!(c.dim(), 6);
    for i in 0..3 {
        assert!(c.contains(&sym(3, &[(i, i, 1)])));
    }
}

#[test]
fn quadratic_examples() {
    assert_eq!(quadratic_dims(&antiflip(2).unwrap(), 3), vec![1, 2, 1, 0]);
    assert_eq!(quadratic_dims(&flip(2).unwrap(), 3), vec![1, 2, 3, 4]);
    let c = cpn_cotangent_braiding(3, None).unwrap();
    assert_eq!(quadratic_dims(&c, 4), graded_dims(&c, 4));
}

#[test]
fn dual_examples() {
    assert_eq!(quadratic_dual_dims(&antiflip(2).unwrap(), 4), vec![1, 2, 3, 4, 5]);
    assert_eq!(quadratic_dual_dims(&flip(2).unwrap(), 4), vec![1, 2, 1, 0, 0]);
    assert_eq!(quadratic_dual_dims(&cpn_cotangent_braiding(2, None).unwrap(), 4), vec![1, 2, 3, 4, 5]);
}

#[test]
fn koszul_examples() {
    assert!(koszul_check(&antiflip(3).unwrap(), 5).passes);
    assert!(koszul_check(&flip(3).unwrap(), 5).passes);
    let c = koszul_check(&cpn_cotangent_braiding(3, None).unwrap(), 6);
    assert!(c.passes);
    assert_eq!(c.degrees.len(), 6);
}

#[test]
fn koszul_identity_detects_failure() {
    let bad = nichols_core::nichols::koszul_identity(&[1, 2, 2], &[1, 2, 3]);
    assert!(bad[0].passes);
    assert_eq!(bad[1].value, 3 - 4 + 2);
    assert!(!bad[1].passes);
}

#[test]
fn scan_examples() {
    let a = finite_dimensionality_scan(&antiflip(2).unwrap(), 4);
    assert_eq!((a.top_degree, a.total_dimension), (Some(2), Some(4)));
    let f = finite_dimensionality_scan(&flip(2).unwrap(), 6);
    assert_eq!(f.top_degree, None);
    let c = finite_dimensionality_scan(&cpn_cotangent_braiding(4, None).unwrap(), 5);
    assert_eq!((c.top_degree, c.total_dimension), (Some(4), Some(16)));
}

#[test]
fn low_degrees_are_uniform() {
    for b in [flip(3).unwrap(), diagonal(&[vec![r("q"), r("2")], vec![r("3"), r("q^2")]]).unwrap()] {
        let d = graded_dims(&b, 3);
        assert_eq!((d[0], d[1]), (1, b.dim()));
    }
}

#[test]
fn nichols_is_a_quotient_of_the_quadratic_cover() {
    let cases = [
        diagonal(&[vec![r("q"), r("-1")], vec![r("-1"), r("-1")]]).unwrap(),
        diagonal(&[vec![r("-1"), r("q")], vec![r("1/q"), r("-1")]]).unwrap(),
        diagonal(&[vec![r("-1"), r("-1")], vec![r("-1"), r("-1")]]).unwrap(),
        frt_braiding(2, RConvention::R, &QRational::one()).unwrap(),
        diagonal(&[vec![r("q^2"), r("q")], vec![r("q"), r("-1")]]).unwrap(),
    ];
    for b in cases {
        let n = graded_dims(&b, 4);
        let a = quadratic_dims(&b, 4);
        assert!(n.iter().zip(&a).all(|(x, y)| x <= y), "{n:?} vs {a:?}");
    }
}

#[test]
fn hecke_with_generic_lambda_is_quadratic() {
    for b in [
        cpn_cotangent_braiding(2, None).unwrap(),
        frt_braiding(3, RConvention::R, &r("-1/q")).unwrap(),
        frt_braiding(2, RConvention::RBar, &r("-q")).unwrap(),
    ] {
        let h = hecke_check(&b).unwrap();
        assert!(h.lambda().unwrap().as_constant().is_none());
        assert_eq!(graded_dims(&b, 4), quadratic_dims(&b, 4));
    }
}

fn conjugated(b: &Braiding, p: &FieldMatrix) -> Braiding {
    let pp = p.kron(p);
    let m = &(&pp * b.matrix()) * &inverse(&pp).unwrap();
    Braiding::new_unchecked(b.dim(), m)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn graded_dims_are_basis_independent(vals in proptest::collection::vec(-4i64..=4, 4), seed in 0u64..500) {
        let p = FieldMatrix::from_entries(2, 2, vals.iter().enumerate().map(|(k, &v)| (k / 2, k % 2, QRational::from_int(v)))).unwrap();
        prop_assume!(nichols_core::linalg::rank(&p) == 2);
        let b = cpn_cotangent_braiding(2, None).unwrap();
        let c = conjugated(&b, &p);
        let (dims, _) = with_backend(Backend::Specialized { seed }, |rk| graded_dims_with(&c, 4, rk)).unwrap();
        prop_assert_eq!(dims, graded_dims(&b, 4));
    }
}

#[test]
fn specialized_backend_matches_exact() {
    let b = cpn_cotangent_braiding(3, None).unwrap();
    for seed in 0..3 {
        let (dims, ranker) = with_backend(Backend::Specialized { seed }, |rk| graded_dims_with(&b, 4, rk)).unwrap();
        assert_eq!(dims, graded_dims(&b, 4));
        assert!(ranker.point().is_some());
    }
}

#[test]
fn poles_trigger_reselection() {
    // 1/(q - x0) has a pole exactly at the first point of the stream
    let x0 = nichols_core::linalg::SpecializationPoints::from_seed(1).next().unwrap();
    let shift = QRational::from_rational(&x0);
    let b = diagonal(&[vec![(&QRational::q() - &shift).inv().unwrap()]]).unwrap();
    let mut seen = Vec::new();
    let (dims, ranker) = with_backend(Backend::Specialized { seed: 1 }, |rk| {
        seen.push(rk.point().unwrap().clone());
        graded_dims_with(&b, 2, rk)
    })
    .unwrap();
    assert_eq!(dims, vec![1, 1, 1]);
    assert_eq!(seen.len(), 2);
    assert_ne!(ranker.point(), Some(&x0));

    let mut attempts = 0;
    let always = with_backend(Backend::Specialized { seed: 1 }, |_| -> nichols_core::Result<()> {
        attempts += 1;
        Err(nichols_core::Error::Pole { point: "x".into(), denominator: "d".into() })
    });
    assert!(matches!(always, Err(nichols_core::Error::Pole { .. })));
    assert_eq!(attempts, nichols_core::nichols::MAX_POINT_ATTEMPTS);
    assert!(graded_dims_with(&b, 2, &Ranker::At(x0)).is_err());
}

#[test]
fn report_fields() {
    let rep = analyze("cpn", &cpn_cotangent_braiding(2, None).unwrap(), 3, Backend::Exact).unwrap();
    assert_eq!(rep.nichols_dims, vec![1, 2, 1, 0]);
    assert_eq!(rep.finite_dimensional_at, Some(2));
    assert_eq!(rep.total_dimension, Some(4));
    assert!(!rep.diagonal.is_diagonal);
    assert!(!rep.screening);
    let spec = analyze("cpn", &cpn_cotangent_braiding(2, None).unwrap(), 3, Backend::Specialized { seed: 4 }).unwrap();
    assert!(spec.screening);
    assert_eq!(spec.nichols_dims, rep.nichols_dims);
    assert_eq!(spec.quadratic_dims, rep.quadratic_dims);
}
