//! The enveloping algebra acting on the presets, and the module-algebra check.

use qmatball::algebras::{make_preset, AlgebraName};
use qmatball::hopf_action::{covariance_failures, weight, HopfAction, Letter, UqElement};
use qmatball::ncpoly::{NCPoly, Sym};

fn main() {
    let e = UqElement::letter(Letter::E(1));
    println!("coproduct of E1: {} terms", e.coproduct(2).len());
    println!("antipode of E1: {}", e.antipode());

    let funu = make_preset(AlgebraName::FunU, 1, 1);
    let h = HopfAction::new(&funu);
    let f0 = NCPoly::sym(Sym::f0());
    for l in Letter::all(1) {
        println!("{} f0 = {}", l.token(), h.act(&UqElement::letter(l), &f0));
    }

    let pol = make_preset(AlgebraName::Pol, 2, 2);
    let h = HopfAction::new(&pol);
    let z = NCPoly::sym(Sym::z(2, 2));
    for l in Letter::all(3) {
        println!("{} z[2,2] = {}", l.token(), h.act(&UqElement::letter(l), &z));
    }
    println!("weight of z[2,2]: {:?}", weight(&[Sym::z(2, 2)], 2, 2));
    println!("covariance failures in Pol(2x2): {}", covariance_failures(&h).len());
}
