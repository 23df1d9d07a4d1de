use qmatball::fock_reps::{basis_upto, unit, TensorRep};
use qmatball::groundfield::Scalar;
use qmatball::sln_minors::*;

/// The ★ involution extended antilinearly and anti-multiplicatively to words.
fn star_tpoly(f: &TPoly, big_n: usize) -> TPoly {
    let mut out = TPoly::zero();
    for (w, c) in f.terms() {
        let mut acc = TPoly::one().scale(&c.conj());
        for &(i, j) in w.iter().rev() {
            acc = acc.mul(&star_star(big_n, i, j));
        }
        out = out.add(&acc);
    }
    out
}

fn agree_under_tilde_pi(m: usize, n: usize, a: &TPoly, b: &TPoly, k: u32) -> bool {
    let rep = TensorRep::tilde_pi(m, n);
    basis_upto(rep.legs(), k).into_iter().all(|e| {
        let v = unit(e);
        rep.apply_tpoly(a, &v) == rep.apply_tpoly(b, &v)
    })
}

#[test]
fn inversion_examples() {
    assert_eq!(inversions(&[1, 2, 3]), 0);
    assert_eq!(inversions(&[2, 1]), 1);
    assert_eq!(inversions(&[3, 2, 1]), 3);
}

#[test]
fn minor_examples() {
    assert_eq!(qminor(&[2], &[1]), TPoly::gen(2, 1));
    let det = TPoly::monomial(Scalar::one(), vec![(1, 1), (2, 2)]).add(&TPoly::monomial(-Scalar::q(), vec![(1, 2), (2, 1)]));
    assert_eq!(qminor(&[1, 2], &[1, 2]), det);
    let m13 = TPoly::monomial(Scalar::one(), vec![(1, 1), (2, 3)]).add(&TPoly::monomial(-Scalar::q(), vec![(1, 3), (2, 1)]));
    assert_eq!(MinorLabel::new(vec![2, 1], vec![3, 1]).expand(), m13);
    assert_eq!(MinorLabel::new(vec![1, 2], vec![3, 4]).to_string(), "t^[1,2|3,4]");
}

#[test]
fn involution_tables() {
    assert_eq!(star_star(2, 1, 1), TPoly::gen(2, 2));
    assert_eq!(star_star(2, 1, 2), TPoly::gen(2, 1).scale(&-Scalar::q()));
    assert_eq!(star_star(3, 1, 1), qminor(&[2, 3], &[2, 3]));
    assert_eq!(star_x(1, 1, 1, 1), star_star(2, 1, 1).scale(&Scalar::from_int(-1)));
    assert_eq!(star_x(1, 1, 1, 2), star_star(2, 1, 2));
    for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        for i in 1..=(m + n) as u8 {
            for j in 1..=(m + n) as u8 {
                let s = lambda1(i as usize, m) * lambda2(j as usize, n);
                assert!(s == 1 || s == -1);
                assert_eq!(star_x(m, n, i, j), star_star(m + n, i, j).scale(&Scalar::from_int(s as i64)));
            }
        }
    }
}

#[test]
fn distinguished_elements() {
    assert_eq!(element_t(1, 1), MinorLabel::new(vec![1], vec![2]));
    assert_eq!(element_x(1, 1), TPoly::monomial(-Scalar::q(), vec![(1, 2), (2, 1)]));
    assert_eq!(element_t(2, 1), MinorLabel::new(vec![1, 2], vec![2, 3]));
    assert_eq!(embedding_numerator(1, 1, 1, 1).cols, vec![1]);
    assert_eq!(embedding_numerator(2, 2, 2, 1).cols, vec![2, 3]);
    for (m, n) in [(1, 2), (2, 2), (3, 2)] {
        let big_n = (m + n) as u8;
        let mut want = vec![n as u8];
        want.extend(n as u8 + 2..=big_n);
        assert_eq!(embedding_numerator(m, n, n as u8, m as u8).cols, want);
    }
}

#[test]
fn grading() {
    assert_eq!(t_degree(1, 1, 1, 1), 1);
    assert_eq!(t_degree(2, 2, 1, 1), -1);
    assert_eq!(t_degree(1, 2, 1, 1), 0);
    assert_eq!(element_t(2, 2).expand().degree(2, 2), Some(0));
    assert_eq!(embedding_numerator(2, 2, 1, 1).expand().degree(2, 2), Some(1));
}

#[test]
fn star_of_corner_minor() {
    for (m, n) in [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1)] {
        let big_n = m + n;
        for k in 1..big_n {
            let lhs = star_tpoly(
                &qminor(&(1..=k as u8).collect::<Vec<_>>(), &((big_n - k + 1) as u8..=big_n as u8).collect::<Vec<_>>()),
                big_n,
            );
            let rhs = qminor(&((k + 1) as u8..=big_n as u8).collect::<Vec<_>>(), &(1..=(big_n - k) as u8).collect::<Vec<_>>())
                .scale(&minus_q_pow((k * (big_n - k)) as i64));
            assert!(agree_under_tilde_pi(m, n, &lhs, &rhs, 2), "{m}x{n} k={k}");
        }
    }
}

#[test]
fn star_preserves_determinant_normalization() {
    for (m, n) in [(1, 1), (1, 2), (2, 1)] {
        let big_n = m + n;
        let all: Vec<u8> = (1..=big_n as u8).collect();
        let det = qminor(&all, &all);
        assert!(agree_under_tilde_pi(m, n, &det, &TPoly::one(), 2));
        assert!(agree_under_tilde_pi(m, n, &star_tpoly(&det, big_n), &TPoly::one(), 1));
    }
}
