//! Fock representations: the diagonal laws, the matrix of z, the Gram form and the equivalence.

use qmatball::algebras::{make_preset, AlgebraName};
use qmatball::fock_reps::{check_equivalence, check_type, degree, gram_matrix, lambda_chain, rep_pi_z, rep_t, PiRep, TensorRep};
use qmatball::groundfield::Scalar;

fn main() {
    let (m, n) = (1, 2);
    let t = rep_t(m, n, 3);
    println!("Pi~(t) diagonal with q^-|k|: {}", t.is_diagonal_with(3, |e| Scalar::q_pow(-(degree(e) as i64))));
    let chain = lambda_chain(m, n);
    let ty = check_type(&TensorRep::tilde_pi(m, n), &chain[0], &chain[m * n], 2);
    println!("type ({:?}, {:?}): {} ({} checks)", chain[0], chain[m * n], ty.passed(), ty.checked);

    let rep = PiRep::new(1, 1);
    let z = rep_pi_z(&rep, 1, 1, 2);
    print!("{}", z.to_csv());

    let funu = make_preset(AlgebraName::FunU, 1, 1);
    for k in 0..=3 {
        println!("Gram k={k}: {}", gram_matrix(&funu, k).unwrap().get(0, 0).pretty());
    }
    let funu = make_preset(AlgebraName::FunU, 2, 2);
    let report = check_equivalence(&funu, &PiRep::new(2, 2), 3).unwrap();
    println!("Theta and Pi equivalent through degree 3 (2x2): {}", report.passed());
}
