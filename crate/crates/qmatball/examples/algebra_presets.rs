//! The presets: dimensions, the involution and the differential.

use qmatball::algebras::{make_preset, AlgebraName};
use qmatball::groundfield::Scalar;
use qmatball::ncpoly::{Counts, NCPoly, Sym};

fn main() {
    let pol = make_preset(AlgebraName::Pol, 2, 2);
    for k in 0..=2 {
        let row: Vec<usize> = (0..=2).map(|l| pol.pres.enumerate_basis(Counts::bidegree(k, l)).len()).collect();
        println!("Pol(2x2) bidegree ({k}, 0..2): {row:?}");
    }
    let f = NCPoly::from_syms(Scalar::q(), &[Sym::z(1, 1), Sym::zs(2, 1)]);
    let fs = pol.star(&f).unwrap();
    println!("star({f}) = {fs}");
    println!("star is involutive: {}", pol.star(&fs).unwrap() == pol.nf(&f));

    let lambda = make_preset(AlgebraName::Lambda, 2, 1);
    let g = NCPoly::from_syms(Scalar::one(), &[Sym::z(1, 1), Sym::z(1, 2)]);
    let dg = lambda.differential(&g).unwrap();
    println!("d({g}) = {dg}");
    println!("d(d(g)) = {}", lambda.differential(&dg).unwrap());
    for k in 0..=3 {
        println!(
            "Lambda(2x1) forms with one dz and {k} z: {}",
            lambda.pres.enumerate_basis(Counts::degree(k).with_dz(1)).len()
        );
    }

    let funu = make_preset(AlgebraName::FunU, 1, 1);
    let h = NCPoly::from_syms(Scalar::one(), &[Sym::zs(1, 1), Sym::f0(), Sym::z(1, 1)]);
    println!("in FunU(1x1): z* f0 z = {}", funu.nf(&h));
}
