//! The invariant integral `ν(f) = tr(Θ(f) Γ(e^{hρ̌}))` on the finite functions
//! of the matrix ball, with its invariance, realness, positivity and
//! `S²`-conjugation certificates.
//!
//! The density `Γ(e^{hρ̌})` acts on a weight vector of weight `μ` by
//! `q^{−2 Σ d_i μ_i}` where `ρ̌ = Σ d_i H_i`. Since `2d_i = i(N−i)` is an
//! integer, every eigenvalue is a power of `s = q^{1/2}`.

use crate::algebras::{star_free, AlgebraPreset};
use crate::fock_reps::{h_basis, inner_h, theta_matrix, FockError};
use crate::groundfield::{FieldError, Gq, Scalar};
use crate::hopf_action::{weight, HopfAction, Letter, UqElement};
use crate::linalg::Mat;
use crate::ncpoly::{Counts, Kind, NCPoly, Sym, Word};
use num_rational::BigRational;
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

#[derive(Debug, thiserror::Error)]
pub enum IntegralError {
    #[error("{0} is not a finite function (some normal word lacks f0)")]
    NotInDU(String),
    #[error("the integral needs a preset with f0, z and z*")]
    WrongAlgebra,
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Coefficients `d` of `ρ̌ = Σ d_i H_i` in the simple coroots.
#[derive(Clone, Debug, PartialEq)]
pub struct RhoCheck {
    pub d: Vec<BigRational>,
}

impl RhoCheck {
    /// `A·d = (1, …, 1)` for the Cartan matrix `A` of `sl_N`.
    pub fn verify(&self) -> bool {
        let r = self.d.len();
        let a = cartan_matrix(r);
        (0..r).all(|i| {
            let row: BigRational = (0..r).map(|j| &a[i][j] * &self.d[j]).sum();
            row == BigRational::from_integer(1.into())
        })
    }

    /// `2d_i`, which is always an integer.
    pub fn doubled(&self) -> Vec<i64> {
        self.d
            .iter()
            .map(|x| (x * BigRational::from_integer(2.into())).to_integer().try_into().expect("small"))
            .collect()
    }
}

fn cartan_matrix(r: usize) -> Vec<Vec<BigRational>> {
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let v = if i == j {
                        2
                    } else if i.abs_diff(j) == 1 {
                        -1
                    } else {
                        0
                    };
                    BigRational::from_integer(v.into())
                })
                .collect()
        })
        .collect()
}

/// Solve `A·d = 1` exactly for `sl_N`, `N ≥ 2`.
pub fn rho_check(big_n: usize) -> RhoCheck {
    assert!(big_n >= 2, "rho_check needs N >= 2");
    let r = big_n - 1;
    let a = Mat::from_fn(r, r, |i, j| Gq::real(cartan_matrix(r)[i][j].clone()));
    let inv = a.inverse().expect("the Cartan matrix is invertible");
    let d = (0..r).map(|i| (0..r).map(|j| inv.get(i, j).re.clone()).sum()).collect();
    RhoCheck { d }
}

/// `q^{−2 Σ d_i μ_i}` for a word of weight `μ`.
pub fn density_of_word(w: &[Sym], m: usize, n: usize) -> Scalar {
    let dd = rho_check(m + n).doubled();
    let e: i64 = weight(w, m, n).iter().zip(&dd).map(|(&mu, &d)| mu as i64 * d).sum();
    Scalar::s_pow(-2 * e)
}

/// The density on the monomial basis of `ℋ_{≤k}`, keyed by basis word.
pub fn density_diagonal(p: &AlgebraPreset, k: u32) -> BTreeMap<Word, Scalar> {
    (0..=k)
        .flat_map(|d| h_basis(p, d))
        .map(|w| {
            let e = density_of_word(&w, p.m(), p.n());
            (w, e)
        })
        .collect()
}

/// Split a normal word `A·f0·B*` into `(A, B)`.
fn split_at_f0(w: &Word) -> Option<(Word, Word)> {
    let pos = w.iter().position(|&s| s == Sym::f0())?;
    let a: Word = w[..pos].iter().copied().collect();
    let bs: Word = w[pos + 1..].iter().copied().collect();
    if a.iter().any(|s| s.kind() != Kind::Z) || bs.iter().any(|s| s.kind() != Kind::Zs) {
        return None;
    }
    let b = bs.iter().rev().map(|s| s.star()).collect();
    Some((a, b))
}

/// The integral on a `FunU` preset, with a cache of `ℋ` inner products.
pub struct Integral<'a> {
    preset: &'a AlgebraPreset,
    inner: RwLock<HashMap<(Word, Word), Scalar>>,
}

impl<'a> Integral<'a> {
    pub fn new(preset: &'a AlgebraPreset) -> Result<Integral<'a>, IntegralError> {
        let has = |s: Sym| preset.pres.contains(s);
        if !(has(Sym::f0()) && has(Sym::z(1, 1)) && has(Sym::zs(1, 1))) {
            return Err(IntegralError::WrongAlgebra);
        }
        Ok(Integral {
            preset,
            inner: RwLock::new(HashMap::new()),
        })
    }

    pub fn preset(&self) -> &AlgebraPreset {
        self.preset
    }

    fn reduce_in_du(&self, f: &NCPoly) -> Result<NCPoly, IntegralError> {
        self.preset.pres.check_poly(f).map_err(|_| IntegralError::WrongAlgebra)?;
        let g = self.preset.nf(f);
        if g.terms().any(|(w, _)| !w.contains(&Sym::f0())) {
            return Err(IntegralError::NotInDU(f.to_string()));
        }
        Ok(g)
    }

    fn density(&self, w: &[Sym]) -> Scalar {
        density_of_word(w, self.preset.m(), self.preset.n())
    }

    fn inner_words(&self, a: &Word, b: &Word) -> Result<Scalar, IntegralError> {
        let key = (a.clone(), b.clone());
        if let Some(v) = self.inner.read().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let v = inner_h(self.preset, &NCPoly::word(a.clone()), &NCPoly::word(b.clone()))?;
        self.inner.write().unwrap().insert(key, v.clone());
        Ok(v)
    }

    /// `ν(f)` as the literal trace `Σ_k Σ_{w ∈ ℋ_k} [Θ(f)]_{ww} · density(w)`
    /// over the degrees `k` up to the largest `z`-degree occurring in `f`.
    pub fn trace(&self, f: &NCPoly) -> Result<Scalar, IntegralError> {
        let g = self.reduce_in_du(f)?;
        let top = g.terms().map(|(w, _)| w.iter().filter(|s| s.kind() == Kind::Z).count()).max().unwrap_or(0) as u32;
        let mut acc = Scalar::zero();
        for k in 0..=top {
            let block = theta_matrix(self.preset, &g, k, k)?;
            for (i, w) in h_basis(self.preset, k).iter().enumerate() {
                let c = block.get(i, i);
                if !c.is_zero() {
                    acc += &(c * &self.density(w));
                }
            }
        }
        Ok(acc)
    }

    /// `ν(f)` through the rank-one model: `Θ(A f0 B*) = |A f0⟩⟨B f0|`, so
    /// `ν(A f0 B*) = density(A) · (A f0, B f0)`.
    pub fn rank_one(&self, f: &NCPoly) -> Result<Scalar, IntegralError> {
        let g = self.reduce_in_du(f)?;
        let mut acc = Scalar::zero();
        for (w, c) in g.terms() {
            let (a, b) = split_at_f0(w).ok_or_else(|| IntegralError::NotInDU(crate::ncpoly::word_string(w)))?;
            if a.len() != b.len() {
                continue;
            }
            let v = self.inner_words(&a, &b)?;
            acc += &(&(c * &self.density(&a)) * &v);
        }
        Ok(acc)
    }

    /// `ν(ξ·f) = ε(ξ) ν(f)`.
    pub fn check_invariance(&self, h: &HopfAction, xi: &UqElement, f: &NCPoly) -> Result<bool, IntegralError> {
        let lhs = self.trace(&h.act(xi, f))?;
        let rhs = &xi.counit() * &self.trace(f)?;
        Ok(lhs == rhs)
    }

    /// `ν(f*) = conj(ν(f))`.
    pub fn check_realness(&self, f: &NCPoly) -> Result<bool, IntegralError> {
        Ok(self.trace(&star_free(f))? == self.trace(f)?.conj())
    }

    /// `ν(f* f)` at the numeric point `q0`, which must be a rational square.
    pub fn positivity_value(&self, f: &NCPoly, q0: &BigRational) -> Result<Gq, IntegralError> {
        let g = self.reduce_in_du(f)?;
        let v = self.trace(&self.preset.mul(&star_free(&g), &g))?;
        Ok(v.eval_at_q(q0)?)
    }

    /// `ν(f* f) > 0` at `q0`.
    pub fn check_positivity(&self, f: &NCPoly, q0: &BigRational) -> Result<bool, IntegralError> {
        let v = self.positivity_value(f, q0)?;
        Ok(v.is_real() && v.real_sign() == Some(1))
    }

    /// The literal trace and the rank-one model agree on `f`.
    pub fn check_trace_form(&self, f: &NCPoly) -> Result<bool, IntegralError> {
        Ok(self.trace(f)? == self.rank_one(f)?)
    }
}

/// `ν(f)` on a `FunU` preset as the literal trace.
pub fn integral_nu(p: &AlgebraPreset, f: &NCPoly) -> Result<Scalar, IntegralError> {
    Integral::new(p)?.trace(f)
}

/// `S²(ξ)` acts on `ℋ_{≤k}` as `D ξ D^{-1}` with `D` the density.
pub fn check_s2_conjugation(h: &HopfAction, xi: &UqElement, k: u32) -> bool {
    let p = h.preset();
    let (m, n) = (p.m(), p.n());
    let s2 = xi.antipode().antipode();
    (0..=k).flat_map(|d| h_basis(p, d)).all(|w| {
        let f = NCPoly::word(w.clone());
        let lhs = h.act(&s2, &f);
        let inv = density_of_word(&w, m, n).inv().expect("density is nonzero");
        let mut rhs = NCPoly::zero();
        for (u, c) in h.act(xi, &f).terms() {
            rhs.add_term(u.clone(), &(c * &inv) * &density_of_word(u, m, n));
        }
        lhs == rhs
    })
}

/// Outcome of a certification suite.
#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Normal words `A·f0·B*` with `deg A = k`, `deg B = l`.
pub fn du_basis(p: &AlgebraPreset, k: u32, l: u32) -> Vec<Word> {
    p.pres
        .enumerate_basis(Counts {
            z: k,
            f0: 1,
            zs: l,
            ..Default::default()
        })
        .into_iter()
        .filter(|w| split_at_f0(w).is_some())
        .collect()
}

/// `ν(ξf) = ε(ξ)ν(f)` for every generator `ξ` and every basis `f` of bidegree `≤ (k, l)`.
pub fn invariance_suite(p: &AlgebraPreset, k: u32, l: u32) -> Result<SuiteReport, IntegralError> {
    let integral = Integral::new(p)?;
    let h = HopfAction::new(p);
    let letters = Letter::all(p.m() + p.n() - 1);
    let words: Vec<Word> = (0..=k)
        .flat_map(|a| (0..=l).map(move |b| (a, b)))
        .flat_map(|(a, b)| du_basis(p, a, b))
        .collect();
    let items: Vec<(Letter, &Word)> = letters.iter().flat_map(|&x| words.iter().map(move |w| (x, w))).collect();
    let results: Vec<Result<Option<String>, IntegralError>> = items
        .par_iter()
        .map(|&(x, w)| {
            let ok = integral.check_invariance(&h, &UqElement::letter(x), &NCPoly::word(w.clone()))?;
            Ok((!ok).then(|| format!("{} on {}", x.token(), crate::ncpoly::word_string(w))))
        })
        .collect();
    let mut report = SuiteReport {
        checked: items.len(),
        failures: Vec::new(),
    };
    for r in results {
        if let Some(msg) = r? {
            report.failures.push(msg);
        }
    }
    Ok(report)
}

/// Rank of the block map `f ↦ Θ(f)|_{ℋ_l → ℋ_k}` on the span of `A·f0·B*`
/// with `deg A = k`, `deg B = l`, computed exactly over `ℚ(i)(s)`, together
/// with the dimensions of the source span and of `Hom(ℋ_l, ℋ_k)`.
pub fn end_fin_rank(p: &AlgebraPreset, k: u32, l: u32) -> Result<(usize, usize, usize), IntegralError> {
    let basis = du_basis(p, k, l);
    let (dk, dl) = (h_basis(p, k).len(), h_basis(p, l).len());
    let blocks: Vec<Mat<Scalar>> = basis
        .par_iter()
        .map(|w| theta_matrix(p, &NCPoly::word(w.clone()), l, k))
        .collect::<Result<_, _>>()?;
    let m = Mat::from_fn(blocks.len(), dk * dl, |r, c| blocks[r].get(c / dl, c % dl).clone());
    Ok((m.rank(), basis.len(), dk * dl))
}
