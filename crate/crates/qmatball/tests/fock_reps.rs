use qmatball::algebras::{make_preset, AlgebraName};
use qmatball::fock_reps::*;
use qmatball::groundfield::{rational, Scalar};
use qmatball::ncpoly::{NCPoly, Sym};
use qmatball::sln_minors::{element_t_lower, element_x, lambda1, lambda2, qminor};

const SIZES: [(usize, usize); 4] = [(1, 1), (1, 2), (2, 1), (2, 2)];

fn one_minus_q_pow(k: i64) -> Scalar {
    Scalar::one() - Scalar::q_pow(k)
}

/// `∏_{j=1}^k (1 − q^{2j})`, the squared norm of `z^k f0` for `m = n = 1`.
fn gram_oracle_1x1(k: u32) -> Scalar {
    (1..=k as i64).fold(Scalar::one(), |acc, j| &acc * &one_minus_q_pow(2 * j))
}

#[test]
fn pi_plus_table() {
    let t11 = pi_plus_operator(1, 1, 3);
    let t22 = pi_plus_operator(2, 2, 3);
    let t21 = pi_plus_operator(2, 1, 3);
    let t12 = pi_plus_operator(1, 2, 3);
    assert_eq!(t11.entry(&vec![1], &vec![0]), Scalar::one());
    assert!(t22.column(&vec![0]).unwrap().is_empty());
    assert_eq!(t21.entry(&vec![1], &vec![1]), -Scalar::q_pow(-2));
    assert_eq!(t12.entry(&vec![3], &vec![3]), Scalar::q_pow(-3));
    assert_eq!(t22.entry(&vec![1], &vec![2]), one_minus_q_pow(-4));
    assert_eq!([t11.shift, t12.shift, t21.shift, t22.shift], [(1, 1), (0, 0), (0, 0), (-1, -1)]);
    assert!(t11.respects_shift() && t22.respects_shift());
}

#[test]
fn fock_norms() {
    assert_eq!(fock_norm2(0), Scalar::one());
    assert_eq!(fock_norm2(1), Scalar::q_pow(-2) - Scalar::one());
    assert_eq!(fock_norm2(2), &(Scalar::q_pow(-2) - Scalar::one()) * &(Scalar::q_pow(-4) - Scalar::one()));
    assert_eq!(norm2(&[1, 2]), &fock_norm2(1) * &fock_norm2(2));
}

#[test]
fn reduced_decompositions() {
    assert_eq!(reduced_decomposition_u(1, 1), vec![(1, 2)]);
    assert_eq!(reduced_decomposition_u(2, 3), vec![(2, 3), (3, 4), (4, 5), (1, 2), (2, 3), (3, 4)]);
    let u22 = reduced_decomposition_u(2, 2);
    assert_eq!(u22.len(), 4);
    assert_eq!(permutation_product(4, &u22), vec![3, 4, 1, 2]);
    for (m, n) in SIZES {
        let u: Vec<usize> = (m + 1..=m + n).chain(1..=m).collect();
        let mut inv = vec![0; m + n];
        for (i, &x) in u.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        let p = permutation_product(m + n, &reduced_decomposition_u(m, n));
        assert!(p == u || p == inv, "{m}x{n}: {p:?}");
    }
}

#[test]
fn pi_plus_is_of_type() {
    assert!(check_type(&TensorRep::pi_plus(), &[-1, 1], &[1, -1], 5).passed());
    assert!(!check_type(&TensorRep::pi_plus(), &[1, -1], &[1, -1], 2).passed());
}

#[test]
fn tensor_of_compatible_types() {
    let chain = lambda_chain(1, 2);
    let a = TensorRep::psi(3, 1);
    let b = TensorRep::psi(3, 2);
    assert!(check_type(&a, &chain[0], &chain[1], 3).passed());
    assert!(check_type(&b, &chain[1], &chain[2], 3).passed());
    assert!(check_type(&a.tensor(&b), &chain[0], &chain[2], 3).passed());
}

#[test]
fn tilde_pi_has_type_lambda1_lambda2() {
    for (m, n) in SIZES {
        let l1: Vec<i32> = (1..=m + n).map(|k| lambda1(k, m)).collect();
        let l2: Vec<i32> = (1..=m + n).map(|k| lambda2(k, n)).collect();
        let chain = lambda_chain(m, n);
        assert_eq!(chain[0], l1);
        assert_eq!(chain[m * n], l2);
        let k = if m * n == 4 { 2 } else { 3 };
        let report = check_type(&TensorRep::tilde_pi(m, n), &l1, &l2, k);
        assert!(report.passed(), "{m}x{n}: {:?}", report.failures.first());
    }
}

#[test]
fn corner_minor_and_x_are_diagonal() {
    for (m, n) in SIZES {
        let k = 3;
        let t = rep_t(m, n, k);
        assert!(t.is_diagonal_with(k, |e| Scalar::q_pow(-(degree(e) as i64))), "{m}x{n} t");
        let x = rep_tpoly(m, n, &element_x(m, n), k);
        assert!(x.is_diagonal_with(k, |e| Scalar::q_pow(-2 * degree(e) as i64)), "{m}x{n} x");
    }
    assert!(rep_tilde_pi(1, 1, 1, 2, 4).is_diagonal_with(4, |e| Scalar::q_pow(-(e[0] as i64))));
}

#[test]
fn determinant_is_identity() {
    let det = qminor(&[1, 2], &[1, 2]);
    let op = rep_tpoly(1, 1, &det, 5);
    assert!(op.is_diagonal_with(5, |_| Scalar::one()));
    let det3 = qminor(&[1, 2, 3], &[1, 2, 3]);
    assert!(rep_tpoly(1, 2, &det3, 2).is_diagonal_with(2, |_| Scalar::one()));
}

#[test]
fn lower_corner_eigenvalue_on_vacuum() {
    for (m, n) in SIZES {
        let mn = (m * n) as i64;
        let op = rep_minor(m, n, &element_t_lower(m, n), 0);
        let e0 = vec![0; m * n];
        let c = op.entry(&e0, &e0);
        assert_eq!(op.column(&e0).unwrap().len(), 1);
        let expect = if mn % 2 == 0 { Scalar::q_pow(-mn) } else { -Scalar::q_pow(-mn) };
        assert_eq!(c, expect, "{m}x{n}");
        let modulus2 = &c * &c.conj();
        for q0 in [rational(1, 4), rational(81, 100)] {
            let v = modulus2.eval_at_q(&q0).unwrap();
            let want = Scalar::q_pow(-2 * mn).eval_at_q(&q0).unwrap();
            assert_eq!(v, want);
        }
    }
}

#[test]
fn pi_z_for_one_by_one() {
    let rep = PiRep::new(1, 1);
    let op = rep_pi_z(&rep, 1, 1, 4);
    assert_eq!(op.shift, (1, 1));
    for k in 0..=4u32 {
        assert_eq!(op.column(&vec![k]).unwrap().len(), 1);
        assert_eq!(op.entry(&vec![k + 1], &vec![k]), Scalar::q_pow(k as i64 + 1));
    }
}

#[test]
fn commutation_as_operator_identity() {
    let rep = PiRep::new(1, 1);
    let k = 5;
    let z = rep_pi_z(&rep, 1, 1, k + 2);
    let zs = z.adjoint();
    let lhs = zs.compose(&z).sub(&z.compose(&zs).scale(&Scalar::q_pow(2)));
    let id = TruncatedOperator::identity(1, k).scale(&one_minus_q_pow(2));
    assert!(lhs.sub(&id).certified_slice(k).unwrap().is_zero_on(k));
    let via_poly = NCPoly::from_syms(Scalar::one(), &[Sym::zs(1, 1), Sym::z(1, 1)]);
    let op = rep_ncpoly(&rep, &via_poly, 3).unwrap();
    assert!(op.sub(&zs.compose(&z)).certified_slice(3).unwrap().is_zero_on(3));
}

#[test]
fn pol_rules_are_operator_identities() {
    for (m, n) in SIZES {
        let pol = make_preset(AlgebraName::Pol, m, n);
        let k = if m * n == 4 { 2 } else { 3 };
        assert!(rule_failures(&pol, &PiRep::new(m, n), k).unwrap().is_empty(), "{m}x{n}");
    }
}

#[test]
fn f0_projection() {
    let p = rep_f0(2, 3);
    assert_eq!(p.entry(&vec![0, 0], &vec![0, 0]), Scalar::one());
    assert!(p.columns().filter(|(k, _)| degree(k) > 0).all(|(_, c)| c.is_empty()));
    assert_eq!(p.compose(&p), p);
    assert_eq!(p.adjoint(), p);
    let rep = PiRep::new(1, 1);
    assert!(matches!(rep.apply_sym(Sym::dz(1, 1), &vec![0]), Err(FockError::NotRepresented(_))));
}

#[test]
fn theta_blocks_one_by_one() {
    let funu = make_preset(AlgebraName::FunU, 1, 1);
    let f0 = NCPoly::sym(Sym::f0());
    let z = NCPoly::sym(Sym::z(1, 1));
    let zs = NCPoly::sym(Sym::zs(1, 1));
    assert_eq!(theta_matrix(&funu, &f0, 0, 0).unwrap().data, vec![Scalar::one()]);
    assert!(theta_matrix(&funu, &f0, 2, 2).unwrap().is_zero());
    for k in 0..4 {
        assert_eq!(theta_matrix(&funu, &z, k, k + 1).unwrap().data, vec![Scalar::one()]);
    }
    for k in 1..4 {
        let b = theta_matrix(&funu, &zs, k, k - 1).unwrap();
        assert_eq!(b.data, vec![one_minus_q_pow(2 * k as i64)], "z* on z^{k} f0");
    }
}

#[test]
fn gram_matrices() {
    let funu = make_preset(AlgebraName::FunU, 1, 1);
    for k in 0..=4 {
        assert_eq!(gram_matrix(&funu, k).unwrap().data, vec![gram_oracle_1x1(k)], "k={k}");
    }
    let funu22 = make_preset(AlgebraName::FunU, 2, 2);
    let g1 = gram_matrix(&funu22, 1).unwrap();
    assert_eq!(g1.rows, 4);
    for i in 0..4 {
        for j in 0..4 {
            let want = if i == j { one_minus_q_pow(2) } else { Scalar::zero() };
            assert_eq!(*g1.get(i, j), want);
        }
    }
    let g2 = gram_matrix(&funu22, 2).unwrap();
    assert_eq!(g2.conj_transpose(), g2);
}

#[test]
fn gram_positivity_at_sample_points() {
    for (m, n) in [(1, 1), (1, 2), (2, 2)] {
        let funu = make_preset(AlgebraName::FunU, m, n);
        for k in 0..=3 {
            let minors = gram_matrix(&funu, k).unwrap().leading_principal_minors();
            for q0 in [rational(1, 4), rational(81, 100)] {
                for d in &minors {
                    let v = d.eval_at_q(&q0).unwrap();
                    assert!(v.is_real() && v.real_sign() == Some(1), "{m}x{n} k={k}");
                }
            }
        }
    }
}

#[test]
fn theta_and_pi_are_equivalent() {
    for (m, n, k) in [(1, 1, 4), (1, 2, 4), (2, 1, 3), (2, 2, 4)] {
        let funu = make_preset(AlgebraName::FunU, m, n);
        let report = check_equivalence(&funu, &PiRep::new(m, n), k).unwrap();
        assert!(report.passed(), "{m}x{n}: {report:?}");
    }
}

#[test]
fn certified_slices() {
    let rep = PiRep::new(1, 1);
    let z = rep_pi_z(&rep, 1, 1, 3);
    assert_eq!(z.certified, 3);
    let zs = z.adjoint();
    assert_eq!(zs.certified, 3);
    let zzs = z.compose(&zs);
    assert_eq!(zzs.certified, 3);
    let zsz = zs.compose(&z);
    assert_eq!(zsz.certified, 2);
    assert_eq!(zsz.certified_slice(3), Err(FockError::CutoffTooSmall { requested: 3, certified: 2 }));
    assert!(zsz.certified_slice(2).is_ok());
}

#[test]
fn exports() {
    let op = pi_plus_operator(1, 1, 1);
    let csv = op.to_csv();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("# legs=1 cutoff=1 certified=1 shift=1..1"));
    assert_eq!(lines.next(), Some("row,col,value"));
    assert_eq!(lines.count(), 2);
    let json = op.to_json();
    assert_eq!(json["certified"], 1);
    assert_eq!(json["entries"].as_array().unwrap().len(), 2);
}

#[test]
fn inner_product_is_weighted() {
    let v = add_vec(&unit(vec![1]), &scale_vec(&unit(vec![0]), &Scalar::i()));
    assert_eq!(inner(&v, &v), &fock_norm2(1) + &Scalar::one());
    assert_eq!(basis_of_degree(2, 3).len(), 4);
    assert_eq!(basis_upto(2, 2).len(), 6);
    assert_eq!(h_basis(&make_preset(AlgebraName::FunU, 2, 2), 2).len(), 10);
}
