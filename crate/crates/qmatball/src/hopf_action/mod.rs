//! The quantum universal enveloping algebra of `sl_{m+n}` and its action on the presets.
//!
//! Elements are formal combinations of free words in `E_i, F_i, K_i, K_i^{-1}`;
//! every check here goes through the action, so the Hopf relations never need
//! to be imposed on the free words themselves.

mod action;
mod uq;

pub use action::{ActionError, HopfAction};
pub use uq::{Letter, TensorElement, UqElement, UqWord};

use crate::algebras::AlgebraPreset;
use crate::groundfield::Scalar;
use crate::ncpoly::{word_h0_degree, word_weight, Counts, NCPoly, Sym};

/// Weight of a word in `ℤ^{m+n−1}` (components `H_1..H_{m+n−1}`).
pub fn weight(w: &[Sym], m: usize, n: usize) -> Vec<i32> {
    word_weight(w, m, n)
}

/// `H_0`-degree of a word: `+1` per `z`, `dz`, `−1` per `z*`, `dz*`, `0` for `f0`.
pub fn h0_degree(w: &[Sym]) -> i32 {
    word_h0_degree(w)
}

/// Rules of the preset whose two sides are sent to different elements by some generator.
pub fn covariance_failures(h: &HopfAction) -> Vec<(Letter, [Sym; 2])> {
    let p = h.preset();
    let rank = p.m() + p.n() - 1;
    let mut bad = Vec::new();
    for rule in p.pres.rules() {
        let diff = NCPoly::from_syms(Scalar::one(), &rule.lhs).sub(&rule.rhs);
        for l in Letter::all(rank) {
            if !h.act_letter(l, &diff).is_zero() {
                bad.push((l, rule.lhs));
            }
        }
    }
    bad
}

/// Defining relations of the enveloping algebra that act nontrivially on `f`.
///
/// Checked: `K_i K_i^{-1} = 1`, `K_i E_j K_i^{-1} = q^{a_ij} E_j` (and the `F`
/// analogue), `[E_i, F_j] = δ_ij (K_i − K_i^{-1})/(q − q^{-1})`, and the
/// quantum Serre relations for adjacent indices.
pub fn uq_relation_failures(h: &HopfAction, f: &NCPoly) -> Vec<String> {
    let p = h.preset();
    let rank = p.m() + p.n() - 1;
    let mut bad = Vec::new();
    let w = |ls: &[Letter]| UqElement::word(ls);
    let q = Scalar::q();
    let qq = &q - &Scalar::q_pow(-1);
    let mut check = |name: String, x: UqElement| {
        if !h.act(&x, f).is_zero() {
            bad.push(name);
        }
    };
    for i in 1..=rank as u8 {
        use Letter::*;
        check(format!("K{i}K{i}inv"), w(&[K(i), Kinv(i)]).sub(&UqElement::one()));
        for j in 1..=rank as u8 {
            let a = cartan(i, j);
            check(format!("K{i}E{j}"), w(&[K(i), E(j), Kinv(i)]).sub(&w(&[E(j)]).scale(&Scalar::q_pow(a))));
            check(format!("K{i}F{j}"), w(&[K(i), F(j), Kinv(i)]).sub(&w(&[F(j)]).scale(&Scalar::q_pow(-a))));
            let comm = w(&[E(i), F(j)]).sub(&w(&[F(j), E(i)]));
            let rhs = if i == j {
                w(&[K(i)]).sub(&w(&[Kinv(i)])).scale(&qq.inv().expect("q - 1/q is nonzero"))
            } else {
                UqElement::zero()
            };
            check(format!("[E{i},F{j}]"), comm.sub(&rhs));
            if a == -1 {
                let qsum = &q + &Scalar::q_pow(-1);
                for (x, y, tag) in [(E(i), E(j), "E"), (F(i), F(j), "F")] {
                    let serre = w(&[x, x, y]).sub(&w(&[x, y, x]).scale(&qsum)).add(&w(&[y, x, x]));
                    check(format!("serre{tag}{i}{j}"), serre);
                }
            }
        }
    }
    bad
}

fn cartan(i: u8, j: u8) -> i64 {
    if i == j {
        2
    } else if i.abs_diff(j) == 1 {
        -1
    } else {
        0
    }
}

/// All normal words of a preset with the given counts, as polynomials.
pub fn basis_polys(p: &AlgebraPreset, counts: Counts) -> Vec<NCPoly> {
    p.pres.enumerate_basis(counts).into_iter().map(NCPoly::word).collect()
}
