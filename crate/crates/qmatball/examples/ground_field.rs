//! Exact arithmetic in Q(i)(s) with s^2 = q: canonical forms, evaluation and q-factorials.

use qmatball::groundfield::{q_factorial, rational, Scalar};

fn main() {
    let q = Scalar::q();
    let x = &(Scalar::one() - Scalar::q_pow(2)) / &(Scalar::one() - &q);
    println!("(1 - q^2)/(1 - q) = {}", x.pretty());
    println!("canonical: {}", x.to_canonical_string());
    let s = Scalar::s_pow(1);
    println!("s * s = {}", (&s * &s).pretty());
    let z = &Scalar::i() * &Scalar::q_pow(-1);
    println!("conj(i q^-1) = {}", z.conj().pretty());
    println!("(3)_q^2! = {}", q_factorial(3).pretty());
    println!("(1 - q^2)/(1 - q) at q = 1/4: {}", x.eval_at_q(&rational(1, 4)).unwrap());
    let back = Scalar::parse(&x.to_canonical_string()).unwrap();
    assert_eq!(back, x);
}
