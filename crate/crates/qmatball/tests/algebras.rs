use qmatball::algebras::*;
use qmatball::groundfield::Scalar;
use qmatball::ncpoly::{Counts, Kind, NCPoly, Sym};

const SIZES: [(usize, usize); 4] = [(1, 1), (1, 2), (2, 1), (2, 2)];

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn holomorphic_dimensions() {
    for (m, n) in SIZES {
        let p = make_preset(AlgebraName::CMat, m, n);
        let mn = (m * n) as u64;
        for k in 0..=6u32 {
            assert_eq!(
                p.pres.enumerate_basis(Counts::degree(k)).len() as u64,
                binom(mn + k as u64 - 1, k as u64),
                "{m}x{n} k={k}"
            );
        }
    }
}

#[test]
fn bidegree_dimensions_factor() {
    for (m, n) in SIZES {
        let p = make_preset(AlgebraName::Pol, m, n);
        let mn = (m * n) as u64;
        for k in 0..=4u64 {
            for l in 0..=4u64 {
                let got = p.pres.enumerate_basis(Counts::bidegree(k as u32, l as u32)).len() as u64;
                assert_eq!(got, binom(mn + k - 1, k) * binom(mn + l - 1, l), "{m}x{n} ({k},{l})");
            }
        }
    }
}

#[test]
fn finite_function_dimensions() {
    for (m, n) in SIZES {
        let p = make_preset(AlgebraName::FunU, m, n);
        let mn = (m * n) as u64;
        for k in 0..=3u64 {
            for l in 0..=3u64 {
                let got = p.pres.enumerate_basis(Counts::bidegree(k as u32, l as u32).with_f0()).len() as u64;
                assert_eq!(got, binom(mn + k - 1, k) * binom(mn + l - 1, l));
            }
        }
    }
}

#[test]
fn square_of_differential_vanishes() {
    for (m, n) in SIZES {
        let lambda = make_preset(AlgebraName::Lambda, m, n);
        let omega = make_preset(AlgebraName::Omega, m, n);
        for k in 0..=4u32 {
            for j in 0..=1u32 {
                for w in lambda.pres.enumerate_basis(Counts::degree(k).with_dz(j)) {
                    let d = lambda.differential(&NCPoly::word(w.clone())).unwrap();
                    assert!(lambda.differential(&d).unwrap().is_zero(), "{m}x{n} {w:?}");
                }
            }
        }
        for k in 0..=2u32 {
            for w in omega.pres.enumerate_basis(Counts::bidegree(k, 2 - k)) {
                let d = omega.differential(&NCPoly::word(w)).unwrap();
                assert!(omega.differential(&d).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn one_forms_are_free_on_both_sides() {
    for (m, n) in SIZES {
        let mn = (m * n) as u64;
        let zfirst = make_preset(AlgebraName::Lambda, m, n);
        let dzfirst = make_lambda_dz_first(m, n);
        for k in 0..=4u32 {
            let want = mn * binom(mn + k as u64 - 1, k as u64);
            let c = Counts::degree(k).with_dz(1);
            assert_eq!(zfirst.pres.enumerate_basis(c).len() as u64, want, "{m}x{n} k={k}");
            assert_eq!(dzfirst.pres.enumerate_basis(c).len() as u64, want, "{m}x{n} k={k}");
        }
        for j in 0..=mn as u32 {
            let got = zfirst.pres.enumerate_basis(Counts::degree(1).with_dz(j)).len() as u64;
            assert_eq!(got, binom(mn, j as u64) * mn, "{m}x{n} j={j}");
        }
    }
}

#[test]
fn involution_properties() {
    let p = make_preset(AlgebraName::Pol, 2, 2);
    let words: Vec<_> = p.pres.enumerate_basis(Counts::bidegree(1, 1)).into_iter().map(NCPoly::word).collect();
    for a in &words {
        for b in words.iter().take(5) {
            let ab = p.mul(a, b);
            assert_eq!(p.star(&ab).unwrap(), p.mul(&p.star(b).unwrap(), &p.star(a).unwrap()));
        }
        let ia = a.scale(&Scalar::i());
        assert_eq!(p.star(&ia).unwrap(), p.star(a).unwrap().scale(&-Scalar::i()));
        assert_eq!(p.star(&p.star(a).unwrap()).unwrap(), p.nf(a));
    }
    let f = make_preset(AlgebraName::FunU, 1, 2);
    let f0 = NCPoly::sym(Sym::f0());
    assert_eq!(f.star(&f0).unwrap(), f0);
    assert_eq!(f.mul(&f0, &f0), f0);
    assert!(f.in_du(&f.mul(&NCPoly::sym(Sym::z(1, 1)), &f0)));
    assert!(!f.in_du(&NCPoly::sym(Sym::z(1, 1))));
}

#[test]
fn conjugate_basis_spans() {
    let p = make_preset(AlgebraName::Pol, 2, 1);
    let bar = cmat_bar_basis(&p, 2);
    assert_eq!(bar.len(), 3);
    assert!(bar.iter().all(|f| f.terms().all(|(w, _)| w.iter().all(|s| s.kind() == Kind::Zs))));
}

#[test]
fn presets_parse() {
    for s in ["cmat:2x2", "pol:1x1", "lambda:2x1", "omega:1x1", "funu:2x2", "du:1x1"] {
        let spec: PresetSpec = s.parse().unwrap();
        assert_eq!(spec.to_string(), s);
        assert_eq!(make_preset_from(spec).spec, spec);
    }
    assert_eq!(parse_size("3x2"), Ok((3, 2)));
    assert!(parse_size("3by2").is_err());
    assert!(make_preset(AlgebraName::Pol, 1, 1).differential(&NCPoly::one()).is_err());
}
