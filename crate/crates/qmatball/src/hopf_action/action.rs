use super::uq::{Letter, UqElement};
use crate::algebras::{differential_free, generators, star_free, AlgebraPreset};
use crate::groundfield::Scalar;
use crate::ncpoly::NcError;
use crate::ncpoly::{word_weight, Kind, NCPoly, Sym, Word};
use std::collections::HashMap;
use std::sync::RwLock;

#[derive(Debug, thiserror::Error)]
pub enum ActionError {
    #[error(transparent)]
    Symbol(#[from] NcError),
    #[error("generator {0} is out of range for rank {1}")]
    BadIndex(String, usize),
}

/// Action of the quantum universal enveloping algebra on a preset.
///
/// Generator tables are built once per preset: `z` from the module tables,
/// `dz` by the differential, `z*` and `dz*` through the involution, and `f0`
/// from its closed formulas. Words are acted on through the coproduct.
pub struct HopfAction<'a> {
    preset: &'a AlgebraPreset,
    table: HashMap<(Letter, Sym), NCPoly>,
    memo: RwLock<HashMap<(Letter, Word), NCPoly>>,
}

impl<'a> HopfAction<'a> {
    pub fn new(preset: &'a AlgebraPreset) -> HopfAction<'a> {
        let mut act = HopfAction {
            preset,
            table: HashMap::new(),
            memo: RwLock::new(HashMap::new()),
        };
        let (m, n) = (preset.m(), preset.n());
        let rank = m + n - 1;
        let has = |k: Kind| preset.pres.contains(generators(k, m, n)[0]);
        let letters: Vec<Letter> = (1..=rank as u8).flat_map(|i| [Letter::E(i), Letter::F(i)]).collect();
        for &l in &letters {
            for z in generators(Kind::Z, m, n) {
                act.table.insert((l, z), z_image(l, z, m, n));
            }
        }
        if has(Kind::Dz) {
            for &l in &letters {
                for z in generators(Kind::Z, m, n) {
                    let img = differential_free(&act.table[&(l, z)]);
                    act.table.insert((l, z.with_kind(Kind::Dz)), img);
                }
            }
        }
        for (src, dst) in [(Kind::Z, Kind::Zs), (Kind::Dz, Kind::Dzs)] {
            if !has(dst) || !has(src) {
                continue;
            }
            for &l in &letters {
                let eta = UqElement::letter(l).antipode().star_sunm(n);
                for x in generators(src, m, n) {
                    let img = act.act(&eta, &NCPoly::sym(x));
                    act.table.insert((l, x.with_kind(dst)), star_free(&img));
                }
            }
        }
        if preset.pres.contains(Sym::f0()) {
            for &l in &letters {
                act.table.insert((l, Sym::f0()), f0_image(l, m, n));
            }
        }
        act
    }

    pub fn preset(&self) -> &AlgebraPreset {
        self.preset
    }

    /// `ξ · f` with input validation: every symbol must be a generator of the
    /// preset and every letter index must lie in `1..m+n`.
    pub fn try_act(&self, xi: &UqElement, f: &NCPoly) -> Result<NCPoly, ActionError> {
        self.preset.pres.check_poly(f)?;
        let rank = self.preset.m() + self.preset.n() - 1;
        for (w, _) in xi.terms() {
            if let Some(&l) = w.iter().find(|l| l.index() as usize > rank) {
                return Err(ActionError::BadIndex(l.token(), rank));
            }
        }
        Ok(self.act(xi, f))
    }

    /// `ξ · f`, reduced to normal form.
    pub fn act(&self, xi: &UqElement, f: &NCPoly) -> NCPoly {
        let f = self.preset.nf(f);
        let mut out = NCPoly::zero();
        for (w, c) in xi.terms() {
            let mut cur = f.clone();
            for &l in w.iter().rev() {
                cur = self.act_letter(l, &cur);
                if cur.is_zero() {
                    break;
                }
            }
            out.add_scaled(&cur, c);
        }
        out
    }

    /// A single generator on a normal-form polynomial.
    pub fn act_letter(&self, l: Letter, f: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in f.terms() {
            out.add_scaled(&self.act_letter_word(l, w), c);
        }
        out
    }

    fn act_letter_word(&self, l: Letter, w: &Word) -> NCPoly {
        let (m, n) = (self.preset.m(), self.preset.n());
        let i = l.index() as usize - 1;
        if let Letter::K(_) | Letter::Kinv(_) = l {
            let mu = word_weight(w, m, n)[i] as i64;
            let e = if matches!(l, Letter::K(_)) { 2 * mu } else { -2 * mu };
            return self.preset.nf(&NCPoly::monomial(Scalar::s_pow(e), w.clone()));
        }
        let key = (l, w.clone());
        if let Some(r) = self.memo.read().unwrap().get(&key) {
            return r.clone();
        }
        let mus: Vec<i64> = w.iter().map(|s| s.weight(m, n)[i] as i64).collect();
        let mut out = NCPoly::zero();
        for r in 0..w.len() {
            let Some(img) = self.table.get(&(l, w[r])) else { continue };
            if img.is_zero() {
                continue;
            }
            let exp: i64 = match l {
                Letter::E(_) => mus[..r].iter().sum::<i64>() * 2,
                _ => -mus[r + 1..].iter().sum::<i64>() * 2,
            };
            let left = NCPoly::word(w[..r].iter().copied().collect());
            let right = NCPoly::word(w[r + 1..].iter().copied().collect());
            out.add_scaled(&left.mul(img).mul(&right), &Scalar::s_pow(exp));
        }
        let out = self.preset.nf(&out);
        self.memo.write().unwrap().insert(key, out.clone());
        out
    }
}

fn half(sign: i64) -> Scalar {
    Scalar::s_pow(sign)
}

/// Generator action on the holomorphic coordinate `z_a^α`.
fn z_image(l: Letter, z: Sym, m: usize, n: usize) -> NCPoly {
    let (a, al) = (z.a() as usize, z.alpha() as usize);
    let i = l.index() as usize;
    let zz = |a: usize, al: usize| Sym::z(a as u8, al as u8);
    if i < n {
        return match l {
            Letter::E(_) if a == i + 1 => NCPoly::from_syms(half(-1), &[zz(i, al)]),
            Letter::F(_) if a == i => NCPoly::from_syms(half(1), &[zz(i + 1, al)]),
            _ => NCPoly::zero(),
        };
    }
    if i > n {
        let j = i - n;
        return match l {
            Letter::E(_) if al == m - j + 1 => NCPoly::from_syms(half(-1), &[zz(a, m - j)]),
            Letter::F(_) if al == m - j => NCPoly::from_syms(half(1), &[zz(a, m - j + 1)]),
            _ => NCPoly::zero(),
        };
    }
    let corner = zz(n, m);
    match l {
        Letter::E(_) => {
            let mu = (a == n) as i64 + (al == m) as i64;
            let x_plus = if a != n && al != m {
                NCPoly::from_syms(-half(-1), &[zz(a, m), zz(n, al)])
            } else if a == n && al == m {
                NCPoly::from_syms(-half(-1), &[corner, corner])
            } else {
                NCPoly::from_syms(Scalar::from_int(-1), &[corner, z])
            };
            x_plus.scale(&Scalar::s_pow(mu))
        }
        Letter::F(_) if z == corner => NCPoly::constant(half(1)),
        _ => NCPoly::zero(),
    }
}

/// Generator action on `f0`.
fn f0_image(l: Letter, m: usize, n: usize) -> NCPoly {
    if l.index() as usize != n {
        return NCPoly::zero();
    }
    let corner = Sym::z(n as u8, m as u8);
    let q2 = Scalar::q_pow(2);
    match l {
        Letter::E(_) => {
            let c = -half(1) / (Scalar::one() - q2);
            NCPoly::from_syms(c, &[corner, Sym::f0()])
        }
        _ => {
            let c = -half(1) / (Scalar::q_pow(-2) - Scalar::one());
            NCPoly::from_syms(c, &[Sym::f0(), corner.star()])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{make_preset, AlgebraName};

    fn z(a: u8, al: u8) -> NCPoly {
        NCPoly::sym(Sym::z(a, al))
    }

    #[test]
    fn corner_coordinate() {
        let p = make_preset(AlgebraName::Pol, 2, 2);
        let h = HopfAction::new(&p);
        let f = h.act(&UqElement::letter(Letter::F(2)), &z(2, 2));
        assert_eq!(f, NCPoly::constant(Scalar::s_pow(1)));
        let k = h.act(&UqElement::letter(Letter::K(2)), &z(2, 2));
        assert_eq!(k, z(2, 2).scale(&Scalar::q_pow(2)));
        let e = h.act(&UqElement::letter(Letter::E(2)), &z(2, 2));
        assert_eq!(e, p.nf(&z(2, 2).mul(&z(2, 2)).scale(&-Scalar::s_pow(1))));
    }

    #[test]
    fn compact_directions_move_indices() {
        let p = make_preset(AlgebraName::CMat, 2, 2);
        let h = HopfAction::new(&p);
        assert_eq!(h.act(&UqElement::letter(Letter::E(1)), &z(2, 1)), z(1, 1).scale(&Scalar::s_pow(-1)));
        assert_eq!(h.act(&UqElement::letter(Letter::F(3)), &z(1, 1)), z(1, 2).scale(&Scalar::s_pow(1)));
        assert!(h.act(&UqElement::letter(Letter::E(3)), &z(1, 1)).is_zero());
    }

    #[test]
    fn f0_is_invariant_under_k() {
        let p = make_preset(AlgebraName::FunU, 1, 1);
        let h = HopfAction::new(&p);
        let f0 = NCPoly::sym(Sym::f0());
        assert_eq!(h.act(&UqElement::letter(Letter::K(1)), &f0), f0);
        let fz = h.act(&UqElement::letter(Letter::F(1)), &f0.mul(&z(1, 1)));
        assert!(fz.is_zero());
    }
}
