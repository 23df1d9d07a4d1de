//! Presets of the q-deformed algebras on the matrix space, the involution and the differential.

use crate::groundfield::Scalar;
use crate::ncpoly::{orient_relations, Kind, NCPoly, NcError, Presentation, Rule, Sym, Word, WordOrder};
use crate::rmatrix::{emit_relations, Family};
use std::fmt;
use std::str::FromStr;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraName {
    /// Holomorphic polynomials.
    CMat,
    /// Holomorphic and antiholomorphic polynomials with the involution.
    Pol,
    /// Holomorphic differential forms.
    Lambda,
    /// Full differential forms with the involution.
    Omega,
    /// Polynomials extended by the idempotent `f0`.
    FunU,
    /// The span of `FunU` normal words containing `f0`.
    DU,
}

impl AlgebraName {
    pub fn label(self) -> &'static str {
        match self {
            AlgebraName::CMat => "cmat",
            AlgebraName::Pol => "pol",
            AlgebraName::Lambda => "lambda",
            AlgebraName::Omega => "omega",
            AlgebraName::FunU => "funu",
            AlgebraName::DU => "du",
        }
    }

    pub fn has_involution(self) -> bool {
        matches!(self, AlgebraName::Pol | AlgebraName::Omega | AlgebraName::FunU | AlgebraName::DU)
    }

    pub fn has_forms(self) -> bool {
        matches!(self, AlgebraName::Lambda | AlgebraName::Omega)
    }
}

/// A preset string such as `"pol:2x2"`: algebra, `m` and `n`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct PresetSpec {
    pub name: AlgebraName,
    pub m: usize,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("unknown algebra preset `{0}` (expected e.g. cmat:2x2, pol:1x1, lambda:2x1, omega:1x1, funu:2x2, du:1x1)")]
    BadPreset(String),
    #[error("bad size `{0}` (expected MxN with 1 <= M, N <= 9)")]
    BadSize(String),
    #[error("the {0} preset has no involution")]
    NoInvolution(&'static str),
    #[error("the {0} preset has no differential")]
    NoDifferential(&'static str),
    #[error(transparent)]
    Nc(#[from] NcError),
}

/// Parse `"MxN"`.
pub fn parse_size(s: &str) -> Result<(usize, usize), AlgebraError> {
    let err = || AlgebraError::BadSize(s.to_string());
    let (a, b) = s.trim().split_once(['x', 'X']).ok_or_else(err)?;
    let m: usize = a.parse().map_err(|_| err())?;
    let n: usize = b.parse().map_err(|_| err())?;
    if !(1..=9).contains(&m) || !(1..=9).contains(&n) {
        return Err(err());
    }
    Ok((m, n))
}

impl FromStr for PresetSpec {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<PresetSpec, AlgebraError> {
        let (name, size) = s.split_once(':').ok_or_else(|| AlgebraError::BadPreset(s.to_string()))?;
        let name = match name.to_ascii_lowercase().as_str() {
            "cmat" => AlgebraName::CMat,
            "pol" => AlgebraName::Pol,
            "lambda" => AlgebraName::Lambda,
            "omega" => AlgebraName::Omega,
            "funu" => AlgebraName::FunU,
            "du" => AlgebraName::DU,
            _ => return Err(AlgebraError::BadPreset(s.to_string())),
        };
        let (m, n) = parse_size(size)?;
        Ok(PresetSpec { name, m, n })
    }
}

impl fmt::Display for PresetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}x{}", self.name.label(), self.m, self.n)
    }
}

/// A fully built algebra preset.
#[derive(Debug)]
pub struct AlgebraPreset {
    pub spec: PresetSpec,
    pub pres: Presentation,
}

impl AlgebraPreset {
    pub fn m(&self) -> usize {
        self.spec.m
    }

    pub fn n(&self) -> usize {
        self.spec.n
    }

    pub fn has_involution(&self) -> bool {
        self.spec.name.has_involution()
    }

    pub fn nf(&self, p: &NCPoly) -> NCPoly {
        self.pres.nf(p)
    }

    /// Product followed by reduction.
    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        self.pres.nf(&a.mul(b))
    }

    /// The involution, reduced to normal form.
    pub fn star(&self, f: &NCPoly) -> Result<NCPoly, AlgebraError> {
        if !self.has_involution() {
            return Err(AlgebraError::NoInvolution(self.spec.name.label()));
        }
        Ok(self.pres.nf(&star_free(f)))
    }

    /// The differential (graded Leibniz rule), reduced to normal form.
    pub fn differential(&self, f: &NCPoly) -> Result<NCPoly, AlgebraError> {
        if !self.spec.name.has_forms() {
            return Err(AlgebraError::NoDifferential(self.spec.name.label()));
        }
        Ok(self.pres.nf(&differential_free(f)))
    }

    /// Membership in the `f0`-ideal slice: every normal word contains `f0`.
    pub fn in_du(&self, f: &NCPoly) -> bool {
        self.pres.nf(f).terms().all(|(w, _)| w.contains(&Sym::f0()))
    }
}

/// Involution on the free algebra: reverse words, conjugate symbols and coefficients.
pub fn star_free(f: &NCPoly) -> NCPoly {
    f.terms().map(|(w, c)| (w.iter().rev().map(|s| s.star()).collect::<Word>(), c.conj())).collect()
}

/// Graded Leibniz extension of `z ↦ dz`, `z* ↦ dz*` on the free algebra.
pub fn differential_free(f: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in f.terms() {
        let mut forms_before = 0usize;
        for (i, s) in w.iter().enumerate() {
            let target = match s.kind() {
                Kind::Z => Some(Kind::Dz),
                Kind::Zs => Some(Kind::Dzs),
                _ => None,
            };
            if let Some(k) = target {
                let mut nw = w.clone();
                nw[i] = s.with_kind(k);
                let sign = if forms_before.is_multiple_of(2) { c.clone() } else { -c };
                out.add_term(nw, sign);
            }
            if s.kind().is_form() {
                forms_before += 1;
            }
        }
    }
    out
}

pub fn generators(kind: Kind, m: usize, n: usize) -> Vec<Sym> {
    if kind == Kind::F0 {
        return vec![Sym::f0()];
    }
    let mut v = Vec::new();
    for a in 1..=n {
        for al in 1..=m {
            v.push(Sym::new(kind, a as u8, al as u8));
        }
    }
    v
}

/// The quadratic relations among the holomorphic coordinates.
pub fn cmat_relations(m: usize, n: usize) -> Vec<NCPoly> {
    let gens = generators(Kind::Z, m, n);
    let mut rels = Vec::new();
    for (i, &x) in gens.iter().enumerate() {
        for &y in &gens[i + 1..] {
            let (a1, al1, a2, al2) = (x.a(), x.alpha(), y.a(), y.alpha());
            let xy: Word = [x, y].into_iter().collect();
            let yx: Word = [y, x].into_iter().collect();
            let mut rel = NCPoly::word(xy);
            if (a1 == a2 && al1 < al2) || (a1 < a2 && al1 == al2) {
                rel.add_term(yx, -Scalar::q());
            } else if a1 < a2 && al1 > al2 {
                rel.add_term(yx, -Scalar::one());
            } else {
                // a1 < a2 and α1 < α2
                rel.add_term(yx, -Scalar::one());
                let extra: Word = [Sym::z(a1, al2), Sym::z(a2, al1)].into_iter().collect();
                rel.add_term(extra, -(Scalar::q() - Scalar::q_pow(-1)));
            }
            rels.push(rel);
        }
    }
    rels
}

fn orient(order: &WordOrder, rels: &[NCPoly]) -> Vec<Rule> {
    let (rules, residual) = orient_relations(order, rels);
    assert!(residual.is_empty(), "unexpected residual relations");
    rules
}

fn alphabet(kinds: &[Kind], m: usize, n: usize) -> Vec<Sym> {
    kinds.iter().flat_map(|&k| generators(k, m, n)).collect()
}

/// Build a preset.
pub fn make_preset(name: AlgebraName, m: usize, n: usize) -> AlgebraPreset {
    let spec = PresetSpec { name, m, n };
    let kinds: &[Kind] = match name {
        AlgebraName::CMat => &[Kind::Z],
        AlgebraName::Pol => &[Kind::Z, Kind::Zs],
        AlgebraName::Lambda => &[Kind::Z, Kind::Dz],
        AlgebraName::Omega => &[Kind::Z, Kind::Dz, Kind::Dzs, Kind::Zs],
        AlgebraName::FunU | AlgebraName::DU => &[Kind::Z, Kind::F0, Kind::Zs],
    };
    let alpha = alphabet(kinds, m, n);
    let order = WordOrder::new(&alpha);
    let cmat = cmat_relations(m, n);
    let mut rules = orient(&order, &cmat);
    let conj = |rels: &[NCPoly]| rels.iter().map(star_free).collect::<Vec<_>>();
    if kinds.contains(&Kind::Zs) {
        rules.extend(orient(&order, &conj(&cmat)));
        rules.extend(emit_relations(Family::ZsZ, m, n, &order));
    }
    if kinds.contains(&Kind::Dz) {
        rules.extend(emit_relations(Family::ZDz, m, n, &order));
        rules.extend(emit_relations(Family::DzDz, m, n, &order));
    }
    if kinds.contains(&Kind::Dzs) {
        rules.extend(orient(&order, &conj(&crate::rmatrix::relations(Family::ZDz, m, n))));
        rules.extend(orient(&order, &conj(&crate::rmatrix::relations(Family::DzDz, m, n))));
        rules.extend(emit_relations(Family::DzsZ, m, n, &order));
        rules.extend(emit_relations(Family::ZsDz, m, n, &order));
        rules.extend(emit_relations(Family::DzsDz, m, n, &order));
    }
    if kinds.contains(&Kind::F0) {
        let f0 = Sym::f0();
        rules.push(Rule {
            lhs: [f0, f0],
            rhs: NCPoly::sym(f0),
        });
        for zs in generators(Kind::Zs, m, n) {
            rules.push(Rule {
                lhs: [zs, f0],
                rhs: NCPoly::zero(),
            });
        }
        for z in generators(Kind::Z, m, n) {
            rules.push(Rule {
                lhs: [f0, z],
                rhs: NCPoly::zero(),
            });
        }
    }
    let pres = Presentation::new(&spec.to_string(), m, n, alpha, rules).expect("preset rules terminate");
    AlgebraPreset { spec, pres }
}

/// Holomorphic forms with the opposite normal order (differentials first).
pub fn make_lambda_dz_first(m: usize, n: usize) -> AlgebraPreset {
    let alpha = alphabet(&[Kind::Dz, Kind::Z], m, n);
    let order = WordOrder::new(&alpha);
    let mut rules = orient(&order, &cmat_relations(m, n));
    rules.extend(emit_relations(Family::ZDz, m, n, &order));
    rules.extend(emit_relations(Family::DzDz, m, n, &order));
    let spec = PresetSpec {
        name: AlgebraName::Lambda,
        m,
        n,
    };
    let pres = Presentation::new("lambda-dz-first", m, n, alpha, rules).expect("preset rules terminate");
    AlgebraPreset { spec, pres }
}

pub fn make_preset_from(spec: PresetSpec) -> AlgebraPreset {
    make_preset(spec.name, spec.m, spec.n)
}

/// Basis of the conjugate holomorphic subalgebra in degree `k`: stars of the holomorphic basis.
pub fn cmat_bar_basis(pol: &AlgebraPreset, k: u32) -> Vec<NCPoly> {
    pol.pres
        .enumerate_basis(crate::ncpoly::Counts::degree(k))
        .into_iter()
        .map(|w| pol.star(&NCPoly::word(w)).expect("pol has an involution"))
        .collect()
}
