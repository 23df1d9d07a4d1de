//! The four braid-type matrices of the matrix space and the commutation
//! relations they generate between coordinates, differentials and conjugates.

use crate::groundfield::Scalar;
use crate::linalg::Mat;
use crate::ncpoly::{orient_relations, NCPoly, Rule, Sym, WordOrder};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    UU,
    VV,
    BarUU,
    BarVV,
}

impl Tag {
    pub fn parse(s: &str) -> Option<Tag> {
        match s.to_ascii_lowercase().as_str() {
            "uu" => Some(Tag::UU),
            "vv" => Some(Tag::VV),
            "baruu" => Some(Tag::BarUU),
            "barvv" => Some(Tag::BarVV),
            _ => None,
        }
    }

    pub fn is_bar(self) -> bool {
        matches!(self, Tag::BarUU | Tag::BarVV)
    }
}

/// Case table shared by `UU` and `VV`; `(x, y)` is the unprimed pair, `(xp, yp)` the primed one.
fn braid_table(x: usize, y: usize, xp: usize, yp: usize) -> Scalar {
    // pair (x, y) = (b, a); primed (xp, yp) = (b', a')
    let (b, a, bp, ap) = (x, y, xp, yp);
    if a == b && a == ap && a == bp {
        Scalar::q_pow(-1)
    } else if a != b && a == ap && b == bp {
        Scalar::one()
    } else if a < b && a == bp && b == ap {
        Scalar::q_pow(-1) - Scalar::q()
    } else {
        Scalar::zero()
    }
}

/// Case table shared by `BarUU` and `BarVV`.
fn bar_table(x: usize, y: usize, xp: usize, yp: usize) -> Scalar {
    let (b, a, bp, ap) = (x, y, xp, yp);
    if a != b && b == bp && a == ap {
        Scalar::q_pow(-1)
    } else if a == b && a == ap && a == bp {
        Scalar::one()
    } else if a == b && ap == bp && ap > a {
        Scalar::one() - Scalar::q_pow(-2)
    } else {
        Scalar::zero()
    }
}

/// A `d² × d²` operator on `W ⊗ W`. The tabulated coefficient with labels
/// `(b', a')` over `(b, a)` sends `e_b ⊗ e_a` to `e_{a'} ⊗ e_{b'}`: in every
/// commutation formula the primed symbols appear in swapped order. The
/// tensor `e_x ⊗ e_y` has index `(x−1)d + (y−1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RhatMatrix {
    pub tag: Tag,
    pub d: usize,
    pub mat: Mat<Scalar>,
}

impl RhatMatrix {
    /// Tabulated coefficient with primed labels `(b', a')` and unprimed labels `(b, a)`, indices from 1.
    pub fn entry(&self, primed: (usize, usize), unprimed: (usize, usize)) -> &Scalar {
        let d = self.d;
        self.mat.get((primed.1 - 1) * d + primed.0 - 1, (unprimed.0 - 1) * d + unprimed.1 - 1)
    }
}

/// Four-index coefficient `tag(x, y → x', y')` as tabulated.
pub fn table(tag: Tag, x: usize, y: usize, xp: usize, yp: usize) -> Scalar {
    if tag.is_bar() {
        bar_table(x, y, xp, yp)
    } else {
        braid_table(x, y, xp, yp)
    }
}

pub fn rhat(tag: Tag, d: usize) -> RhatMatrix {
    assert!(d >= 1);
    // row (a', b'), column (b, a)
    let mat = Mat::from_fn(d * d, d * d, |r, c| table(tag, c / d + 1, c % d + 1, r % d + 1, r / d + 1));
    RhatMatrix { tag, d, mat }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RhatReport {
    pub tag: Tag,
    pub d: usize,
    pub hecke: Option<bool>,
    pub braid: Option<bool>,
    pub invertible: Option<bool>,
    pub inverse: Option<Mat<Scalar>>,
}

impl RhatReport {
    pub fn all_hold(&self) -> bool {
        self.hecke.unwrap_or(true) && self.braid.unwrap_or(true) && self.invertible.unwrap_or(true)
    }
}

/// Hecke and braid identities for `UU`/`VV`; invertibility and inverse for the barred tags.
pub fn verify_rhat_properties(r: &RhatMatrix) -> RhatReport {
    let d = r.d;
    let n = d * d;
    let id = Mat::<Scalar>::identity(n);
    if r.tag.is_bar() {
        let inv = r.mat.inverse();
        return RhatReport {
            tag: r.tag,
            d,
            hecke: None,
            braid: None,
            invertible: Some(inv.is_some()),
            inverse: inv,
        };
    }
    let a = r.mat.sub(&id.scale(&Scalar::q_pow(-1)));
    let b = r.mat.add(&id.scale(&Scalar::q()));
    let hecke = a.mul(&b).is_zero();
    let idd = Mat::<Scalar>::identity(d);
    let r12 = r.mat.kron(&idd);
    let r23 = idd.kron(&r.mat);
    let braid = r12.mul(&r23).mul(&r12) == r23.mul(&r12).mul(&r23);
    RhatReport {
        tag: r.tag,
        d,
        hecke: Some(hecke),
        braid: Some(braid),
        invertible: None,
        inverse: None,
    }
}

/// Relation families generated by the braid matrices.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `z · dz` against `dz · z`.
    ZDz,
    /// `dz · dz` against itself, with a leading minus.
    DzDz,
    /// `z* · z` against `z · z*`, with the inhomogeneous term.
    ZsZ,
    /// `dz* · z` against `z · dz*`.
    DzsZ,
    /// `z* · dz` against `dz · z*`.
    ZsDz,
    /// `dz* · dz` against `dz · dz*`, with a leading minus.
    DzsDz,
}

/// Coefficient of the `V`-side factor in the `z`/`dz` families, with the
/// primed pair as output (the same placement as the `U` side).
fn vv_factor(beta: usize, alpha: usize, betap: usize, alphap: usize) -> Scalar {
    braid_table(beta, alpha, betap, alphap)
}

fn uu_factor(b: usize, a: usize, bp: usize, ap: usize) -> Scalar {
    braid_table(b, a, bp, ap)
}

/// The relations (as polynomials equal to zero) of one family, for the `(m, n)` matrix space.
pub fn relations(family: Family, m: usize, n: usize) -> Vec<NCPoly> {
    let mut out = Vec::new();
    let idx = |k: usize| k as u8;
    for b in 1..=n {
        for beta in 1..=m {
            for a in 1..=n {
                for alpha in 1..=m {
                    let (lk, rk, sign, bar) = match family {
                        Family::ZDz => ((Sym::z as fn(u8, u8) -> Sym), (Sym::dz as fn(u8, u8) -> Sym), 1i64, false),
                        Family::DzDz => (Sym::dz as fn(u8, u8) -> Sym, Sym::dz as fn(u8, u8) -> Sym, -1, false),
                        Family::ZsZ => (Sym::zs as fn(u8, u8) -> Sym, Sym::z as fn(u8, u8) -> Sym, 1, true),
                        Family::DzsZ => (Sym::dzs as fn(u8, u8) -> Sym, Sym::z as fn(u8, u8) -> Sym, 1, true),
                        Family::ZsDz => (Sym::zs as fn(u8, u8) -> Sym, Sym::dz as fn(u8, u8) -> Sym, 1, true),
                        Family::DzsDz => (Sym::dzs as fn(u8, u8) -> Sym, Sym::dz as fn(u8, u8) -> Sym, -1, true),
                    };
                    let left = lk(idx(b), idx(beta));
                    let right = rk(idx(a), idx(alpha));
                    let mut rel = NCPoly::from_syms(Scalar::one(), &[left, right]);
                    let pref = if bar { Scalar::q_pow(2) } else { Scalar::one() } * Scalar::from_int(sign);
                    for bp in 1..=n {
                        for ap in 1..=n {
                            let cu = if bar { bar_table(b, a, bp, ap) } else { uu_factor(b, a, bp, ap) };
                            if cu.is_zero() {
                                continue;
                            }
                            for betap in 1..=m {
                                for alphap in 1..=m {
                                    let cv = if bar {
                                        bar_table(beta, alpha, betap, alphap)
                                    } else {
                                        vv_factor(beta, alpha, betap, alphap)
                                    };
                                    if cv.is_zero() {
                                        continue;
                                    }
                                    // right-hand side: (right kind)_{a'}^{α'} (left kind)_{b'}^{β'}
                                    let w = [rk(idx(ap), idx(alphap)), lk(idx(bp), idx(betap))];
                                    rel.add_term(w.into_iter().collect(), -(&pref * &cu * &cv));
                                }
                            }
                        }
                    }
                    if family == Family::ZsZ && a == b && alpha == beta {
                        rel.add_term(Default::default(), Scalar::q_pow(2) - Scalar::one());
                    }
                    out.push(rel);
                }
            }
        }
    }
    out
}

/// Oriented rules of a family with respect to a word order; panics if some
/// relation cannot be oriented into a length-2 pattern.
pub fn emit_relations(family: Family, m: usize, n: usize, order: &WordOrder) -> Vec<Rule> {
    let (rules, residual) = orient_relations(order, &relations(family, m, n));
    assert!(residual.is_empty(), "relation family {family:?} leaves residual relations");
    rules
}
