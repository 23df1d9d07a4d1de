use super::fock::{add_to, adjoint_apply, degree, unit, FockIndex, FockVec, TensorRep};
use super::operator::TruncatedOperator;
use super::FockError;
use crate::groundfield::Scalar;
use crate::ncpoly::{Kind, NCPoly, Sym};
use crate::sln_minors::{element_t, embedding_numerator, MinorLabel, TPoly};
use std::collections::HashMap;
use std::sync::RwLock;

/// The representation `Π` of the matrix-ball algebra on `mn` Fock legs:
/// `Π(z_a^α) = Π̃(t)^{-1} Π̃(t^{∧m}_{{1..m} J_aα})`, `Π(z*) = Π(z)†`, and
/// `Π(f0)` the projection onto degree 0.
pub struct PiRep {
    pub m: usize,
    pub n: usize,
    pub tilde: TensorRep,
    numerators: HashMap<(u8, u8), (TPoly, (i32, i32))>,
    cache: RwLock<HashMap<(Sym, FockIndex), FockVec>>,
}

impl PiRep {
    pub fn new(m: usize, n: usize) -> PiRep {
        let tilde = TensorRep::tilde_pi(m, n);
        let mut numerators = HashMap::new();
        for a in 1..=n as u8 {
            for al in 1..=m as u8 {
                let f = embedding_numerator(m, n, a, al).expand();
                let sh = tilde.tpoly_shift(&f);
                numerators.insert((a, al), (f, sh));
            }
        }
        PiRep {
            m,
            n,
            tilde,
            numerators,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn legs(&self) -> usize {
        self.m * self.n
    }

    /// Degree-shift bounds of `Π(z_a^α)`.
    pub fn z_shift(&self, a: u8, al: u8) -> (i32, i32) {
        self.numerators[&(a, al)].1
    }

    /// `Π(z_a^α) e_k`, exact.
    pub fn apply_z(&self, a: u8, al: u8, k: &FockIndex) -> FockVec {
        let key = (Sym::z(a, al), k.clone());
        if let Some(v) = self.cache.read().unwrap().get(&key) {
            return v.clone();
        }
        let num = &self.numerators[&(a, al)].0;
        let raw = self.tilde.apply_tpoly(num, &unit(k.clone()));
        let mut out = FockVec::new();
        for (o, c) in raw {
            let d = degree(&o) as i64;
            add_to(&mut out, o, &c * &Scalar::q_pow(d));
        }
        self.cache.write().unwrap().insert(key, out.clone());
        out
    }

    /// `Π(z_a^α)† e_k`, exact, through the weighted adjoint.
    pub fn apply_zs(&self, a: u8, al: u8, k: &FockIndex) -> FockVec {
        let key = (Sym::zs(a, al), k.clone());
        if let Some(v) = self.cache.read().unwrap().get(&key) {
            return v.clone();
        }
        let out = adjoint_apply(self.legs(), self.z_shift(a, al), k, |l| self.apply_z(a, al, l));
        self.cache.write().unwrap().insert(key, out.clone());
        out
    }

    /// Image of one generator symbol on a basis vector.
    pub fn apply_sym(&self, s: Sym, k: &FockIndex) -> Result<FockVec, FockError> {
        match s.kind() {
            Kind::Z => Ok(self.apply_z(s.a(), s.alpha(), k)),
            Kind::Zs => Ok(self.apply_zs(s.a(), s.alpha(), k)),
            Kind::F0 => Ok(if degree(k) == 0 { unit(k.clone()) } else { FockVec::new() }),
            _ => Err(FockError::NotRepresented(s.token())),
        }
    }

    /// `Π(f) v`, applying each word from the right.
    pub fn apply(&self, f: &NCPoly, v: &FockVec) -> Result<FockVec, FockError> {
        let mut out = FockVec::new();
        for (w, c) in f.terms() {
            let mut cur = v.clone();
            for &s in w.iter().rev() {
                let mut next = FockVec::new();
                for (k, x) in &cur {
                    for (o, y) in self.apply_sym(s, k)? {
                        add_to(&mut next, o, x * &y);
                    }
                }
                cur = next;
                if cur.is_empty() {
                    break;
                }
            }
            for (k, x) in cur {
                add_to(&mut out, k, &x * c);
            }
        }
        Ok(out)
    }
}

/// `π₊(t_ab)` on a single leg.
pub fn pi_plus_operator(a: u8, b: u8, cutoff: u32) -> TruncatedOperator {
    let r = TensorRep::pi_plus();
    TruncatedOperator::from_action(1, cutoff, r.gen_shift(a, b), |k| r.apply_gen(a, b, k))
}

/// `Π̃(t_ij)` on `mn` legs.
pub fn rep_tilde_pi(m: usize, n: usize, i: u8, j: u8, cutoff: u32) -> TruncatedOperator {
    let r = TensorRep::tilde_pi(m, n);
    TruncatedOperator::from_action(r.legs(), cutoff, r.gen_shift(i, j), |k| r.apply_gen(i, j, k))
}

/// `Π̃(f)` for a `TPoly` on input degrees `≤ cutoff`.
pub fn rep_tpoly(m: usize, n: usize, f: &TPoly, cutoff: u32) -> TruncatedOperator {
    let r = TensorRep::tilde_pi(m, n);
    TruncatedOperator::from_action(r.legs(), cutoff, r.tpoly_shift(f), |k| r.apply_tpoly(f, &unit(k.clone())))
}

pub fn rep_minor(m: usize, n: usize, label: &MinorLabel, cutoff: u32) -> TruncatedOperator {
    rep_tpoly(m, n, &label.expand(), cutoff)
}

/// `Π(z_a^α)` on input degrees `≤ cutoff`.
pub fn rep_pi_z(rep: &PiRep, a: u8, al: u8, cutoff: u32) -> TruncatedOperator {
    TruncatedOperator::from_action(rep.legs(), cutoff, rep.z_shift(a, al), |k| rep.apply_z(a, al, k))
}

/// Projection onto degree 0.
pub fn rep_f0(legs: usize, cutoff: u32) -> TruncatedOperator {
    TruncatedOperator::from_action(legs, cutoff, (0, 0), |k| if degree(k) == 0 { unit(k.clone()) } else { FockVec::new() })
}

/// `Π(f)` for a polynomial in `z`, `z*`, `f0` on input degrees `≤ cutoff`.
pub fn rep_ncpoly(rep: &PiRep, f: &NCPoly, cutoff: u32) -> Result<TruncatedOperator, FockError> {
    let mut err = None;
    let len = f.max_len() as i32;
    let op = TruncatedOperator::from_action(rep.legs(), cutoff, (-len * rep.legs() as i32, len * rep.legs() as i32), |k| {
        rep.apply(f, &unit(k.clone())).unwrap_or_else(|e| {
            err = Some(e);
            FockVec::new()
        })
    });
    match err {
        Some(e) => Err(e),
        None => Ok(op),
    }
}

/// `Π̃(t)` for the embedding denominator `t`.
pub fn rep_t(m: usize, n: usize, cutoff: u32) -> TruncatedOperator {
    rep_minor(m, n, &element_t(m, n), cutoff)
}
