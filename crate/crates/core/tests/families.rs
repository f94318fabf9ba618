mod common;

use std::collections::BTreeMap;

use common::{binom, mahonian, r, s3_transpositions, s3_violation, tensor_index};
use nichols_core::braidcore::{check_braid_equation, Braiding, Permutation};
use nichols_core::families::{
    antiflip, bundle_braiding, bundle_braiding_with, check_yd, cpn_cotangent_braiding, cpn_yd_braiding,
    cpn_yd_scaled_braiding, diagonal, flip, frt_braiding, frt_matrix, proportionality_scalar, quantum_determinant_terms,
    transposition_module, yd_group_braiding, GroupData, RConvention, YDGroupModule, YdVerdict, YdViolation,
};
use nichols_core::linalg::{image_basis, kernel_basis, FieldMatrix, SubspaceBasis};
use nichols_core::nichols::graded_dims;
use nichols_core::qfield::QRational;
use nichols_core::Error;

fn e(n: usize, i: usize, j: usize) -> BTreeMap<usize, QRational> {
    BTreeMap::from([(tensor_index(n, &[i, j]), QRational::one())])
}

fn one_plus(b: &Braiding) -> FieldMatrix {
    &FieldMatrix::identity(b.dim() * b.dim()) + b.matrix()
}

#[test]
fn every_constructor_satisfies_the_braid_equation() {
    let mut all = vec![flip(3).unwrap(), antiflip(3).unwrap(), diagonal(&[vec![r("q"), r("3")], vec![r("-2"), r("1/q")]]).unwrap()];
    for n in 1..=3 {
        all.push(frt_braiding(n, RConvention::R, &r("q+1")).unwrap());
        all.push(frt_braiding(n, RConvention::RBar, &QRational::one()).unwrap());
        all.push(cpn_cotangent_braiding(n, None).unwrap());
        all.push(bundle_braiding(n).unwrap());
        all.push(cpn_yd_braiding(n).unwrap());
        all.push(cpn_yd_scaled_braiding(n).unwrap());
    }
    for b in all {
        assert!(check_braid_equation(b.dim(), b.matrix()).unwrap().holds());
    }
}

#[test]
fn flip_examples() {
    let f = flip(2).unwrap();
    assert_eq!(f.image(0, 1), BTreeMap::from([((1, 0), QRational::one())]));
    for d in 1..=3 {
        assert_eq!(antiflip(d).unwrap(), flip(d).unwrap().scale(&QRational::from_int(-1)).unwrap());
    }
    assert!(diagonal(&[vec![QRational::zero()]]).is_err());
}

#[test]
fn diagonal_q_line_has_q_factorial_symmetrizers() {
    let b = diagonal(&[vec![QRational::q()]]).unwrap();
    assert_eq!(graded_dims(&b, 3), vec![1, 1, 1, 1]);
    // [n]_q! = Π_k (1 + q + ... + q^{k-1})
    let mut fact = QRational::one();
    for n in 1..=4 {
        let qint = (0..n).fold(QRational::zero(), |acc, k| &acc + &QRational::q_pow(k));
        fact = &fact * &qint;
        let a = nichols_core::braidcore::quantum_symmetrizer(&b, n as usize).unwrap();
        assert_eq!(a.get(0, 0), fact);
    }
}

#[test]
fn frt_examples() {
    assert_eq!(frt_braiding(1, RConvention::R, &QRational::one()).unwrap().matrix().get(0, 0), QRational::q());
    let f = frt_braiding(2, RConvention::R, &QRational::one()).unwrap();
    let m = f.matrix();
    let n = 4;
    // (σ - q)(σ + q^-1) = 0
    let p = &(m - &FieldMatrix::scalar(n, &QRational::q())) * &(m + &FieldMatrix::scalar(n, &r("1/q")));
    assert!(p.is_zero());
    for k in 1..=4 {
        let c = frt_braiding(k, RConvention::R, &r("-1/q")).unwrap();
        let m = c.matrix();
        let p = &(m + &FieldMatrix::identity(k * k)) * &(m - &FieldMatrix::scalar(k * k, &r("q^-2")));
        assert!(p.is_zero());
    }
    assert!(frt_braiding(2, RConvention::R, &QRational::zero()).is_err());
    // the swap coefficient q - q^-1 sits on e_i ⊗ e_j with i > j
    assert_eq!(f.image(1, 0), BTreeMap::from([((0, 1), QRational::one()), ((1, 0), QRational::nu())]));
}

#[test]
fn frt_conventions_are_related_by_inversion_and_transposition() {
    for n in 1..=4 {
        let s = r("q^2 - 3");
        let a = frt_braiding(n, RConvention::R, &s).unwrap();
        let b = frt_braiding(n, RConvention::RBar, &s.substitute_inverse()).unwrap();
        for k in 0..n {
            for l in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        let lhs = b.matrix().get(k * n + l, i * n + j);
                        let rhs = a.matrix().get(l * n + k, j * n + i).substitute_inverse();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
        assert_eq!(&frt_matrix(n, RConvention::R) * &frt_matrix(n, RConvention::RBar), FieldMatrix::identity(n * n));
    }
}

#[test]
fn cpn_examples() {
    let line = cpn_cotangent_braiding(1, None).unwrap();
    assert_eq!(line.matrix().get(0, 0), QRational::from_int(-1));
    assert_eq!(graded_dims(&line, 2), vec![1, 1, 0]);
    let c3 = cpn_cotangent_braiding(3, None).unwrap();
    assert_eq!(kernel_basis(&one_plus(&c3)).dim(), 6);
    assert_eq!(image_basis(&one_plus(&c3)).dim(), 3);
    assert_eq!(cpn_cotangent_braiding(2, None).unwrap(), frt_braiding(2, RConvention::R, &r("-q^-1")).unwrap());
    let custom = cpn_cotangent_braiding(2, Some(&r("q"))).unwrap();
    assert_eq!(custom, frt_braiding(2, RConvention::R, &QRational::q()).unwrap());
    assert!(cpn_cotangent_braiding(2, Some(&QRational::zero())).is_err());
}

#[test]
fn cpn_kernel_and_image() {
    for n in 1..=4 {
        let c = cpn_cotangent_braiding(n, None).unwrap();
        let ker = kernel_basis(&one_plus(&c));
        assert_eq!(ker.dim(), n + binom(n, 2));
        for i in 0..n {
            assert!(ker.contains(&e(n, i, i)));
        }
        assert_eq!(image_basis(&one_plus(&c)).dim(), binom(n, 2));
    }
}

#[test]
fn cpn_kernel_vectors_in_closed_form() {
    // ker = span{e_i⊗e_i, e_i⊗e_j + q e_j⊗e_i}, Im = span{e_i⊗e_j - q^-1 e_j⊗e_i}, i < j
    let n = 3;
    let c = cpn_cotangent_braiding(n, None).unwrap();
    let mut ker = Vec::new();
    let mut im = Vec::new();
    for i in 0..n {
        ker.push(e(n, i, i));
        for j in i + 1..n {
            let mut v = e(n, i, j);
            v.insert(tensor_index(n, &[j, i]), QRational::q());
            ker.push(v);
            let mut w = e(n, i, j);
            w.insert(tensor_index(n, &[j, i]), r("-1/q"));
            im.push(w);
        }
    }
    let kb = SubspaceBasis::new(n * n, ker).unwrap();
    let ib = SubspaceBasis::new(n * n, im).unwrap();
    assert!(kb.same_span(&kernel_basis(&one_plus(&c))));
    assert!(ib.same_span(&image_basis(&one_plus(&c))));
}

#[test]
fn bundle_braiding_is_a_multiple_of_the_cotangent_braiding() {
    for n in 1..=3 {
        let b = bundle_braiding(n).unwrap();
        assert_eq!(proportionality_scalar(&b, &cpn_cotangent_braiding(n, None).unwrap()), Some(r("-q^2")));
    }
}

#[test]
fn bundle_support_shapes() {
    let n = 3;
    let bar = bundle_braiding_with(n, RConvention::RBar).unwrap();
    let plain = bundle_braiding(n).unwrap();
    for i in 0..n {
        for k in 0..n {
            let support: Vec<_> = bar.image(i, k).into_keys().collect();
            let mirrored: Vec<_> = plain.image(k, i).into_keys().collect();
            match i.cmp(&k) {
                std::cmp::Ordering::Greater => assert_eq!(support, vec![(k, i)]),
                std::cmp::Ordering::Less => assert_eq!(support.len(), 2),
                std::cmp::Ordering::Equal => assert_eq!(support, vec![(i, i)]),
            }
            // the R convention has the same shapes with the roles of i, k exchanged
            assert_eq!(mirrored.len(), support.len());
        }
    }
}

#[test]
fn twisted_flip() {
    assert_eq!(cpn_yd_braiding(1).unwrap().matrix().get(0, 0), QRational::q());
    for n in 2..=4 {
        let y = cpn_yd_braiding(n).unwrap();
        let c = cpn_cotangent_braiding(n, None).unwrap();
        assert_eq!(proportionality_scalar(&y, &c), None);
        let sq = y.matrix() * y.matrix();
        for i in 0..n {
            for j in 0..n {
                let expected = QRational::q_pow(i64::from(i == 0) + i64::from(j == 0));
                assert_eq!(sq.column(tensor_index(n, &[j, i])), &BTreeMap::from([(tensor_index(n, &[j, i]), expected)]));
            }
        }
    }
}

#[test]
fn rescaled_twisted_flip_agrees_on_the_kernel() {
    for n in 2..=3 {
        let s = cpn_yd_scaled_braiding(n).unwrap();
        let c = cpn_cotangent_braiding(n, None).unwrap();
        for v in kernel_basis(&one_plus(&c)).vectors() {
            assert_eq!(s.matrix().apply_sparse(v), c.matrix().apply_sparse(v));
        }
        assert_eq!(graded_dims(&s, n + 1), graded_dims(&c, n + 1));
    }
}

#[test]
fn quantum_determinant() {
    let one = quantum_determinant_terms(1);
    assert_eq!(one, vec![(Permutation::identity(1), QRational::one())]);
    let two = quantum_determinant_terms(2);
    assert_eq!(two, vec![(Permutation::identity(2), QRational::one()), (Permutation::new(vec![2, 1]).unwrap(), r("-q"))]);
    let three: Vec<String> = quantum_determinant_terms(3).iter().map(|(_, c)| c.to_string()).collect();
    assert_eq!(three, vec!["1", "-q", "-q", "q^2", "q^2", "-q^3"]);
    for n in 1..=4 {
        let terms = quantum_determinant_terms(n);
        let mut counts = vec![0usize; binom(n, 2) + 1];
        for (p, c) in &terms {
            let k = p.inversions();
            assert_eq!(*c, (-QRational::q()).pow(k as i64).unwrap());
            counts[k] += 1;
        }
        assert_eq!(counts, mahonian(n));
        assert_eq!(terms.len(), (1..=n).product::<usize>());
    }
}

fn sign_line(degree: usize) -> YDGroupModule {
    YDGroupModule {
        group: GroupData::cyclic(2),
        degrees: vec![degree],
        action: vec![FieldMatrix::identity(1), FieldMatrix::scalar(1, &QRational::from_int(-1))],
    }
}

#[test]
fn yd_examples() {
    let sign = sign_line(1);
    assert_eq!(check_yd(&sign).unwrap(), YdVerdict::Valid);
    let b = yd_group_braiding(&sign).unwrap();
    assert_eq!(b.matrix().get(0, 0), QRational::from_int(-1));
    assert_eq!(graded_dims(&b, 2), vec![1, 1, 0]);

    assert!(check_yd(&sign_line(0)).unwrap().is_valid());
    assert_eq!(yd_group_braiding(&sign_line(0)).unwrap(), flip(1).unwrap());

    let fk = s3_transpositions();
    assert_eq!(fk, transposition_module(3));
    assert!(check_yd(&fk).unwrap().is_valid());
    // the twelve-dimensional Nichols algebra over S_3
    assert_eq!(graded_dims(&yd_group_braiding(&fk).unwrap(), 5), vec![1, 3, 4, 3, 1, 0]);

    let trivial = YDGroupModule { group: GroupData::trivial(), degrees: vec![0; 3], action: vec![FieldMatrix::identity(3)] };
    assert_eq!(yd_group_braiding(&trivial).unwrap(), flip(3).unwrap());
}

#[test]
fn yd_violation_has_a_correct_witness() {
    let m = s3_violation();
    let YdVerdict::Invalid(YdViolation::Compatibility { v, g, w }) = check_yd(&m).unwrap() else {
        panic!("expected a compatibility violation")
    };
    let grp = &m.group;
    assert!(m.action[g].get(w, v) != QRational::zero());
    assert_ne!(m.degrees[w], grp.conjugate(m.degrees[v], g));
    assert!(matches!(yd_group_braiding(&m), Err(Error::NotYetterDrinfeld(_))));
}

#[test]
fn cyclic_three_with_a_q_action_is_not_an_action() {
    let q = QRational::q();
    let m = YDGroupModule {
        group: GroupData::cyclic(3),
        degrees: vec![1],
        action: vec![FieldMatrix::identity(1), FieldMatrix::scalar(1, &q), FieldMatrix::scalar(1, &(&q * &q))],
    };
    assert!(matches!(check_yd(&m).unwrap(), YdVerdict::Invalid(YdViolation::Action { .. })));
    // the braiding it would induce is the diagonal line [q]
    assert_eq!(graded_dims(&diagonal(&[vec![q]]).unwrap(), 5), vec![1; 6]);
}

#[test]
fn malformed_yd_data() {
    let mut m = sign_line(1);
    m.action.pop();
    assert!(matches!(check_yd(&m), Err(Error::MalformedGroup(_))));
    let mut m = sign_line(5);
    m.degrees = vec![5];
    assert!(matches!(check_yd(&m), Err(Error::MalformedGroup(_))));
}
