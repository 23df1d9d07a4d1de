//! Rewriting to normal form, basis enumeration and confluence in the noncommutative presets.

use qmatball::algebras::{make_preset, AlgebraName};
use qmatball::groundfield::Scalar;
use qmatball::ncpoly::{poly_from_json_str, Counts, NCPoly, Strategy, Sym};

fn main() {
    let pol = make_preset(AlgebraName::Pol, 1, 1);
    let f = poly_from_json_str(r#"{"terms":[{"coeff":"1","word":["zs[1,1]","z[1,1]"]}]}"#).unwrap();
    println!("nf(z* z) = {}", pol.nf(&f));

    let cmat = make_preset(AlgebraName::CMat, 2, 2);
    for k in 0..=4 {
        println!("dim C[Mat_2x2]_q degree {k}: {}", cmat.pres.enumerate_basis(Counts::degree(k)).len());
    }
    println!("rules of cmat:2x2: {}", cmat.pres.rules().len());
    println!("critical pair failures: {}", cmat.pres.critical_pair_failures().len());

    let w = NCPoly::from_syms(Scalar::one(), &[Sym::z(2, 2), Sym::z(2, 1), Sym::z(1, 2), Sym::z(1, 1)]);
    let a = cmat.pres.reduce_with(&w, Strategy::Leftmost);
    let b = cmat.pres.reduce_with(&w, Strategy::Rightmost);
    println!("two strategies agree: {}", a == b);
    println!("nf = {a}");
}
