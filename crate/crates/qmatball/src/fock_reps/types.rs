use super::fock::{adjoint_apply, basis_upto, unit, TensorRep};
use crate::groundfield::Scalar;
use crate::sln_minors::star_star;

/// Outcome of the type-`(Λ′, Λ″)` check `π(t_ij)† = λ′(i) λ″(j) π(t_ij^★)`.
#[derive(Clone, Debug, Default)]
pub struct TypeReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl TypeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verify the type identity entrywise on all basis vectors of degree `≤ k`.
pub fn check_type(rep: &TensorRep, lam1: &[i32], lam2: &[i32], k: u32) -> TypeReport {
    let big_n = rep.big_n;
    assert_eq!(lam1.len(), big_n);
    assert_eq!(lam2.len(), big_n);
    let mut report = TypeReport::default();
    let basis = basis_upto(rep.legs(), k);
    for i in 1..=big_n as u8 {
        for j in 1..=big_n as u8 {
            let star = star_star(big_n, i, j).scale(&Scalar::from_int((lam1[i as usize - 1] * lam2[j as usize - 1]) as i64));
            let shift = rep.gen_shift(i, j);
            for e in &basis {
                let lhs = adjoint_apply(rep.legs(), shift, e, |l| rep.apply_gen(i, j, l));
                let rhs = rep.apply_tpoly(&star, &unit(e.clone()));
                report.checked += 1;
                if lhs != rhs {
                    report.failures.push(format!("t{i}{j} on {e:?}"));
                }
            }
        }
    }
    report
}
