use qmatball::groundfield::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let mut num = Scalar::zero();
    for e in 0..rng.gen_range(1..=3) {
        let c = Gq::new(rational(rng.gen_range(-4..=4), rng.gen_range(1..=3)), rational(rng.gen_range(-2..=2), 1));
        num += &(&Scalar::from_gq(c) * &Scalar::s_pow(e + rng.gen_range(-2..=2)));
    }
    let den = &Scalar::one() + &(&Scalar::from_int(rng.gen_range(1..=3)) * &Scalar::q_pow(rng.gen_range(1..=2)));
    num.checked_div(&den).unwrap()
}

fn gq(x: i64) -> Gq {
    Gq::from_int(x)
}

#[test]
fn evaluation_is_a_field_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let points = [rational(1, 2), rational(9, 10), rational(3, 7)];
    for _ in 0..60 {
        let (a, b) = (random_scalar(&mut rng), random_scalar(&mut rng));
        for s0 in &points {
            let ea = a.eval_at_s(s0).unwrap();
            let eb = b.eval_at_s(s0).unwrap();
            assert_eq!((&a + &b).eval_at_s(s0).unwrap(), ea.add_ref(&eb));
            assert_eq!((&a * &b).eval_at_s(s0).unwrap(), ea.mul_ref(&eb));
            assert_eq!(a.conj().eval_at_s(s0).unwrap(), ea.conj());
            if !b.is_zero() {
                assert_eq!(a.checked_div(&b).unwrap().eval_at_s(s0).unwrap(), ea.mul_ref(&eb.inv().unwrap()));
            }
        }
    }
}

#[test]
fn field_axioms_on_random_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..40 {
        let (a, b, c) = (random_scalar(&mut rng), random_scalar(&mut rng), random_scalar(&mut rng));
        assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a - &a, Scalar::zero());
        if !a.is_zero() {
            assert!((&a * &a.inv().unwrap()).is_one());
        }
        assert_eq!(a.conj().conj(), a);
        assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }
}

#[test]
fn canonical_strings_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let a = random_scalar(&mut rng);
        let s = a.to_canonical_string();
        assert_eq!(Scalar::parse(&s).unwrap(), a);
        assert_eq!(Scalar::parse(&s).unwrap().to_canonical_string(), s);
    }
    assert_eq!(Scalar::zero().to_canonical_string(), "(0:0)/(0:1)");
    assert_eq!((Scalar::one() - Scalar::q_pow(2)).to_canonical_string(), "(0:1 4:-1)/(0:1)");
    assert!(Scalar::parse("(0:1)/(0:0)").is_err());
}

#[test]
fn square_root_of_q() {
    let s = Scalar::s_pow(1);
    assert_eq!(&s * &s, Scalar::q());
    let q0 = rational(81, 100);
    assert_eq!(s.eval_at_q(&q0).unwrap(), Gq::real(rational(9, 10)));
    assert_eq!(rational_sqrt(&rational(1, 4)), Some(rational(1, 2)));
    assert_eq!(rational_sqrt(&rational(1, 2)), None);
    assert!(Scalar::q().eval_at_q(&rational(1, 2)).is_err());
}

#[test]
fn canceling_common_factors() {
    let a = &Scalar::one() - &Scalar::q_pow(4);
    let b = &Scalar::one() - &Scalar::q_pow(2);
    assert_eq!(a.checked_div(&b).unwrap(), &Scalar::one() + &Scalar::q_pow(2));
    assert!(a.checked_div(&Scalar::zero()).is_err());
    assert!(Scalar::laurent(&[(-2, 1), (2, -1)]).is_laurent());
}

#[test]
fn q_factorials_against_products() {
    let bracket = |j: i64| {
        (&Scalar::one() - &Scalar::q_pow(2 * j))
            .checked_div(&(&Scalar::one() - &Scalar::q_pow(2)))
            .unwrap()
    };
    let mut acc = Scalar::one();
    for k in 1..=7u32 {
        acc = &acc * &bracket(k as i64);
        assert_eq!(q_factorial(k), acc);
        let at_one = rational((1..=k as i64).product::<i64>(), 1);
        assert_eq!(q_factorial(k).eval_at_q(&rational(1, 1)).unwrap(), Gq::real(at_one));
    }
    let e = q_exp_truncated(5);
    for (k, c) in e.iter().enumerate() {
        assert_eq!(&(c * &q_factorial(k as u32)), &Scalar::one());
    }
}

#[test]
fn gaussian_rationals() {
    let i = Gq::i();
    assert_eq!(i.mul_ref(&i), gq(-1));
    assert_eq!(Gq::parse("3/2-1/3i").unwrap().conj(), Gq::new(rational(3, 2), rational(1, 3)));
    assert_eq!(gq(-5).real_sign(), Some(-1));
    assert_eq!(i.real_sign(), None);
}
