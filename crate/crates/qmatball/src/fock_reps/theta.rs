use super::fock::{basis_of_degree, inner, unit, FockVec};
use super::pi::PiRep;
use super::FockError;
use crate::algebras::{star_free, AlgebraPreset};
use crate::groundfield::Scalar;
use crate::linalg::Mat;
use crate::ncpoly::{Counts, Kind, NCPoly, Sym, Word};

/// Monomial basis `ψ·f0` of `ℋ_k = ℂ[Mat]_{q,k}·f0` (full words ending in `f0`).
pub fn h_basis(p: &AlgebraPreset, k: u32) -> Vec<Word> {
    p.pres
        .enumerate_basis(Counts {
            z: k,
            f0: 1,
            ..Default::default()
        })
        .into_iter()
        .filter(|w| w.last() == Some(&Sym::f0()))
        .collect()
}

/// The `z`-part `ψ` of a basis word `ψ·f0`.
pub fn z_part(w: &Word) -> Word {
    w.iter().copied().filter(|s| s.kind() == Kind::Z).collect()
}

/// Block of left multiplication by `f` from `ℋ_{k_in}` to `ℋ_{k_out}`.
///
/// Fails if `f·ℋ_{k_in}` leaves `ℋ`.
pub fn theta_matrix(p: &AlgebraPreset, f: &NCPoly, k_in: u32, k_out: u32) -> Result<Mat<Scalar>, FockError> {
    let cols = h_basis(p, k_in);
    let rows = h_basis(p, k_out);
    let mut m = Mat::zeros(rows.len(), cols.len());
    for (j, w) in cols.iter().enumerate() {
        let img = p.mul(f, &NCPoly::word(w.clone()));
        for (u, c) in img.terms() {
            if u.last() != Some(&Sym::f0()) || u.iter().any(|s| s.kind() != Kind::Z && s.kind() != Kind::F0) {
                return Err(FockError::NotInH(crate::ncpoly::word_string(u)));
            }
            if let Some(i) = rows.iter().position(|r| r == u) {
                m.set(i, j, c.clone());
            }
        }
    }
    Ok(m)
}

/// `(ψ₁f0, ψ₂f0)` defined by `f0·ψ₂*·ψ₁·f0 = (ψ₁f0, ψ₂f0)·f0`.
pub fn inner_h(p: &AlgebraPreset, psi1: &NCPoly, psi2: &NCPoly) -> Result<Scalar, FockError> {
    let f0 = NCPoly::sym(Sym::f0());
    let prod = p.nf(&f0.mul(&star_free(psi2)).mul(psi1).mul(&f0));
    let c = prod.coeff(&[Sym::f0()]);
    if prod.len() > usize::from(!c.is_zero()) {
        return Err(FockError::NotInH(prod.to_string()));
    }
    Ok(c)
}

/// Gram matrix of the monomial basis of `ℂ[Mat]_{q,k}` for the `ℋ` inner product.
pub fn gram_matrix(p: &AlgebraPreset, k: u32) -> Result<Mat<Scalar>, FockError> {
    let basis: Vec<NCPoly> = h_basis(p, k).iter().map(|w| NCPoly::word(z_part(w))).collect();
    let d = basis.len();
    let mut g = Mat::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            g.set(i, j, inner_h(p, &basis[i], &basis[j])?);
        }
    }
    Ok(g)
}

/// Result of comparing `Θ` on `ℋ` with `Π` on the Fock space through
/// `J: ψ·f0 ↦ Π(ψ)e_0`.
#[derive(Clone, Debug, Default)]
pub struct EquivalenceReport {
    pub degree: u32,
    pub isometry_failures: Vec<String>,
    pub intertwining_failures: Vec<String>,
    pub rank_failures: Vec<String>,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.isometry_failures.is_empty() && self.intertwining_failures.is_empty() && self.rank_failures.is_empty()
    }
}

fn j_map(rep: &PiRep, f: &NCPoly) -> Result<FockVec, FockError> {
    let mut acc = FockVec::new();
    let e0 = unit(vec![0; rep.legs()]);
    for (w, c) in f.terms() {
        let psi = NCPoly::word(z_part(w));
        for (k, x) in rep.apply(&psi, &e0)? {
            super::fock::add_to(&mut acc, k, &x * c);
        }
    }
    Ok(acc)
}

/// Checks on degrees `≤ k`: `J` is isometric, `J` maps each `ℋ_d` onto Fock
/// degree `d`, and `J Θ(g) = Π(g) J` for `g = z_a^α` and `g = (z_a^α)*`.
pub fn check_equivalence(p: &AlgebraPreset, rep: &PiRep, k: u32) -> Result<EquivalenceReport, FockError> {
    let mut rep_out = EquivalenceReport {
        degree: k,
        ..Default::default()
    };
    let (m, n) = (p.m(), p.n());
    for d in 0..=k {
        let basis = h_basis(p, d);
        let images: Vec<FockVec> = basis.iter().map(|w| j_map(rep, &NCPoly::word(w.clone()))).collect::<Result<_, _>>()?;
        let g = gram_matrix(p, d)?;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if inner(&images[i], &images[j]) != *g.get(i, j) {
                    rep_out.isometry_failures.push(format!("degree {d} entry ({i},{j})"));
                }
            }
        }
        let fock = basis_of_degree(rep.legs(), d);
        let mat = Mat::from_fn(images.len(), fock.len(), |i, j| images[i].get(&fock[j]).cloned().unwrap_or_else(Scalar::zero));
        if images.iter().any(|v| v.keys().any(|o| super::fock::degree(o) != d)) || fock.len() != basis.len() || mat.rank() != fock.len() {
            rep_out.rank_failures.push(format!("degree {d}"));
        }
        for a in 1..=n as u8 {
            for al in 1..=m as u8 {
                for g in [Sym::z(a, al), Sym::zs(a, al)] {
                    if g.kind() == Kind::Z && d == k {
                        continue;
                    }
                    let gp = NCPoly::sym(g);
                    for (w, img) in basis.iter().zip(&images) {
                        let lhs = j_map(rep, &p.mul(&gp, &NCPoly::word(w.clone())))?;
                        let mut rhs = FockVec::new();
                        for (kk, x) in img {
                            for (o, y) in rep.apply_sym(g, kk)? {
                                super::fock::add_to(&mut rhs, o, x * &y);
                            }
                        }
                        if lhs != rhs {
                            rep_out
                                .intertwining_failures
                                .push(format!("{} on {}", g.token(), crate::ncpoly::word_string(w)));
                        }
                    }
                }
            }
        }
    }
    Ok(rep_out)
}

/// Rewrite rules of a preset over `z`, `z*` whose two sides act differently on degrees `≤ k`.
pub fn rule_failures(p: &AlgebraPreset, rep: &PiRep, k: u32) -> Result<Vec<[Sym; 2]>, FockError> {
    let mut bad = Vec::new();
    let basis: Vec<_> = (0..=k).flat_map(|d| basis_of_degree(rep.legs(), d)).collect();
    for rule in p.pres.rules() {
        let diff = NCPoly::from_syms(Scalar::one(), &rule.lhs).sub(&rule.rhs);
        for e in &basis {
            if !rep.apply(&diff, &unit(e.clone()))?.is_empty() {
                bad.push(rule.lhs);
                break;
            }
        }
    }
    Ok(bad)
}
