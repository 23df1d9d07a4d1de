use qmatball::algebras::{make_preset, AlgebraName};
use qmatball::groundfield::Scalar;
use qmatball::ncpoly::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PRESETS: [AlgebraName; 5] = [AlgebraName::CMat, AlgebraName::Pol, AlgebraName::Lambda, AlgebraName::Omega, AlgebraName::FunU];

fn random_word(alphabet: &[Sym], rng: &mut ChaCha8Rng, max_len: usize) -> Word {
    (0..rng.gen_range(0..=max_len)).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect()
}

#[test]
fn strategies_agree_on_random_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for name in PRESETS {
        for (m, n) in [(1, 1), (2, 2)] {
            let p = make_preset(name, m, n);
            let alpha = p.pres.alphabet().to_vec();
            for _ in 0..60 {
                let w = NCPoly::word(random_word(&alpha, &mut rng, 6));
                let left = p.pres.reduce_with(&w, Strategy::Leftmost);
                let right = p.pres.reduce_with(&w, Strategy::Rightmost);
                assert_eq!(left, right, "{name:?} {m}x{n} {w}");
                assert_eq!(p.nf(&w), left);
                assert!(left.terms().all(|(u, _)| p.pres.is_normal(u)));
            }
        }
    }
}

#[test]
fn no_failing_overlaps() {
    for name in PRESETS {
        for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            assert!(make_preset(name, m, n).pres.critical_pair_failures().is_empty(), "{name:?} {m}x{n}");
        }
    }
}

#[test]
fn normal_form_is_idempotent_and_linear() {
    let p = make_preset(AlgebraName::Pol, 2, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let alpha = p.pres.alphabet().to_vec();
    for _ in 0..30 {
        let a = NCPoly::word(random_word(&alpha, &mut rng, 4));
        let b = NCPoly::word(random_word(&alpha, &mut rng, 4));
        let c = Scalar::q_pow(rng.gen_range(-2..=2));
        let sum = a.add(&b.scale(&c));
        assert_eq!(p.nf(&sum), p.nf(&a).add(&p.nf(&b).scale(&c)));
        assert_eq!(p.nf(&p.nf(&a)), p.nf(&a));
        assert_eq!(p.mul(&p.nf(&a), &p.nf(&b)), p.nf(&a.mul(&b)));
    }
}

#[test]
fn basis_words_are_normal_and_sorted() {
    let p = make_preset(AlgebraName::FunU, 2, 1);
    let b = p.pres.enumerate_basis(Counts::bidegree(2, 1).with_f0());
    assert!(!b.is_empty());
    assert!(b.iter().all(|w| p.pres.is_normal(w)));
    assert!(b.windows(2).all(|x| p.pres.cmp_words(&x[0], &x[1]).is_lt()));
    assert!(b.iter().all(|w| {
        let i = w.iter().position(|&s| s == Sym::f0()).unwrap();
        w[..i].iter().all(|s| s.kind() == Kind::Z) && w[i + 1..].iter().all(|s| s.kind() == Kind::Zs)
    }));
}

#[test]
fn json_round_trip() {
    let p = make_preset(AlgebraName::Omega, 1, 1);
    let f = p.nf(&NCPoly::from_syms(Scalar::i(), &[Sym::dzs(1, 1), Sym::z(1, 1), Sym::dz(1, 1)]));
    let v = poly_to_json(&f);
    assert_eq!(poly_from_json(&v).unwrap(), f);
    assert_eq!(poly_from_json_str(&v.to_string()).unwrap(), f);
    for r in p.pres.rules() {
        let back = rule_from_json(&rule_to_json(r)).unwrap();
        assert_eq!((back.lhs, back.rhs.clone()), (r.lhs, r.rhs.clone()));
    }
    assert!(poly_from_json_str(r#"{"terms":[{"coeff":"1","word":["w[1,1]"]}]}"#).is_err());
}

#[test]
fn unknown_symbols_are_rejected() {
    let p = make_preset(AlgebraName::CMat, 1, 1);
    let bad = NCPoly::sym(Sym::zs(1, 1));
    assert!(p.pres.normal_form(&bad).is_err());
    let bad = NCPoly::sym(Sym::z(2, 1));
    assert!(p.pres.normal_form(&bad).is_err());
}

#[test]
fn tokens_round_trip() {
    for s in [Sym::z(1, 2), Sym::zs(2, 1), Sym::dz(3, 3), Sym::dzs(1, 1), Sym::f0()] {
        assert_eq!(Sym::parse_token(&s.token()), Some(s));
        assert_eq!(s.star().star(), s);
    }
    assert_eq!(word_string(&[Sym::z(1, 1), Sym::f0()]), "z[1,1] f0");
}
