//! The invariant integral on finite functions and its certificates.

use qmatball::algebras::{make_preset, AlgebraName};
use qmatball::groundfield::rational;
use qmatball::ncpoly::{NCPoly, Sym};
use qmatball::qtrace_integral::{end_fin_rank, integral_nu, invariance_suite, rho_check, Integral};

fn main() {
    for n in 2..=4 {
        println!("rho check N={n}: {:?}", rho_check(n).d.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    }
    let p = make_preset(AlgebraName::FunU, 1, 1);
    let f0 = NCPoly::sym(Sym::f0());
    let z = NCPoly::sym(Sym::z(1, 1));
    let zs = NCPoly::sym(Sym::zs(1, 1));
    println!("nu(f0) = {}", integral_nu(&p, &f0).unwrap().pretty());
    println!("nu(z f0 z*) = {}", integral_nu(&p, &z.mul(&f0).mul(&zs)).unwrap().pretty());
    let ig = Integral::new(&p).unwrap();
    println!(
        "nu(f* f) for f = z f0 at q = 81/100: {}",
        ig.positivity_value(&z.mul(&f0), &rational(81, 100)).unwrap()
    );

    let p = make_preset(AlgebraName::FunU, 1, 2);
    let report = invariance_suite(&p, 2, 2).unwrap();
    println!("invariance (1x2, bidegree <= (2,2)): {} checks, passed {}", report.checked, report.passed());
    let (rank, src, dst) = end_fin_rank(&p, 2, 1).unwrap();
    println!("block map (2,1): rank {rank}, source {src}, target {dst}");
}
