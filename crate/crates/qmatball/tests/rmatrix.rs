use qmatball::groundfield::Scalar;
use qmatball::linalg::Mat;
use qmatball::rmatrix::*;

fn trace(m: &Mat<Scalar>, n: usize) -> Scalar {
    let mut t = Scalar::zero();
    for i in 0..n {
        t += m.get(i, i);
    }
    t
}

#[test]
fn hecke_and_braid_for_d_up_to_three() {
    for tag in [Tag::UU, Tag::VV] {
        for d in 1..=3 {
            let r = verify_rhat_properties(&rhat(tag, d));
            assert_eq!((r.hecke, r.braid), (Some(true), Some(true)), "{tag:?} d={d}");
            assert!(r.all_hold());
        }
    }
}

#[test]
fn eigenvalue_multiplicities_from_the_trace() {
    for tag in [Tag::UU, Tag::VV] {
        for d in 1..=4usize {
            let r = rhat(tag, d);
            let sym = (d * (d + 1) / 2) as i64;
            let alt = (d * (d - 1) / 2) as i64;
            let want = &(&Scalar::from_int(sym) * &Scalar::q_pow(-1)) - &(&Scalar::from_int(alt) * &Scalar::q());
            assert_eq!(trace(&r.mat, d * d), want, "{tag:?} d={d}");
        }
    }
}

#[test]
fn barred_matrices_are_invertible() {
    for tag in [Tag::BarUU, Tag::BarVV] {
        for d in 1..=4 {
            let r = rhat(tag, d);
            let rep = verify_rhat_properties(&r);
            assert_eq!(rep.invertible, Some(true));
            let inv = rep.inverse.unwrap();
            assert_eq!(r.mat.mul(&inv), Mat::identity(d * d));
        }
    }
}

#[test]
fn one_dimensional_case() {
    assert_eq!(rhat(Tag::UU, 1).mat, Mat::identity(1).scale(&Scalar::q_pow(-1)));
    assert_eq!(Tag::parse("barvv"), Some(Tag::BarVV));
    assert!(Tag::BarUU.is_bar() && !Tag::VV.is_bar());
}
