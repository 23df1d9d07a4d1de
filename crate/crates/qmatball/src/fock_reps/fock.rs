use crate::groundfield::Scalar;
use crate::sln_minors::{lambda1, TGen, TPoly};
use std::collections::BTreeMap;

/// Multi-index `k ∈ ℤ_+^L` labelling `e_{k_1} ⊗ ⋯ ⊗ e_{k_L}`.
pub type FockIndex = Vec<u32>;

/// Finitely supported vector in the weighted basis.
pub type FockVec = BTreeMap<FockIndex, Scalar>;

pub fn degree(k: &[u32]) -> u32 {
    k.iter().sum()
}

/// `(e_j, e_j) = (q^{-2} − 1)(q^{-4} − 1)⋯(q^{-2j} − 1)`.
pub fn fock_norm2(j: u32) -> Scalar {
    let mut acc = Scalar::one();
    for i in 1..=j as i64 {
        acc = &acc * &(Scalar::q_pow(-2 * i) - Scalar::one());
    }
    acc
}

/// Squared norm of a tensor basis vector.
pub fn norm2(k: &[u32]) -> Scalar {
    let mut acc = Scalar::one();
    for &j in k {
        acc = &acc * &fock_norm2(j);
    }
    acc
}

/// All indices with `legs` coordinates and total degree exactly `d`, in lexicographic order.
pub fn basis_of_degree(legs: usize, d: u32) -> Vec<FockIndex> {
    fn rec(legs: usize, d: u32, cur: &mut FockIndex, out: &mut Vec<FockIndex>) {
        if cur.len() + 1 == legs {
            cur.push(d);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in (0..=d).rev() {
            cur.push(x);
            rec(legs, d - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if legs == 0 {
        if d == 0 {
            out.push(vec![]);
        }
        return out;
    }
    rec(legs, d, &mut Vec::new(), &mut out);
    out
}

/// All indices of degree `≤ k`, ordered by degree.
pub fn basis_upto(legs: usize, k: u32) -> Vec<FockIndex> {
    (0..=k).flat_map(|d| basis_of_degree(legs, d)).collect()
}

pub fn add_to(v: &mut FockVec, k: FockIndex, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let e = v.entry(k.clone()).or_insert_with(Scalar::zero);
    *e += &c;
    if e.is_zero() {
        v.remove(&k);
    }
}

pub fn unit(k: FockIndex) -> FockVec {
    let mut v = FockVec::new();
    v.insert(k, Scalar::one());
    v
}

pub fn scale_vec(v: &FockVec, c: &Scalar) -> FockVec {
    let mut out = FockVec::new();
    for (k, x) in v {
        add_to(&mut out, k.clone(), x * c);
    }
    out
}

pub fn add_vec(a: &FockVec, b: &FockVec) -> FockVec {
    let mut out = a.clone();
    for (k, x) in b {
        add_to(&mut out, k.clone(), x.clone());
    }
    out
}

/// Weighted inner product, linear in the first argument.
pub fn inner(a: &FockVec, b: &FockVec) -> Scalar {
    let mut acc = Scalar::zero();
    for (k, x) in a {
        if let Some(y) = b.get(k) {
            acc += &(&(x * &y.conj()) * &norm2(k));
        }
    }
    acc
}

/// `π₊(t_ab) e_j` for `a, b ∈ {1, 2}`: a single basis vector with its coefficient.
pub fn pi_plus(a: u8, b: u8, j: u32) -> Option<(u32, Scalar)> {
    let jj = j as i64;
    match (a, b) {
        (1, 2) => Some((j, Scalar::q_pow(-jj))),
        (2, 1) => Some((j, -Scalar::q_pow(-(jj + 1)))),
        (1, 1) => Some((j + 1, Scalar::one())),
        (2, 2) if j > 0 => Some((j - 1, Scalar::one() - Scalar::q_pow(-2 * jj))),
        _ => None,
    }
}

/// Degree shift of `π₊(t_ab)`.
pub fn pi_plus_shift(a: u8, b: u8) -> i32 {
    match (a, b) {
        (1, 1) => 1,
        (2, 2) => -1,
        _ => 0,
    }
}

/// `σ_k = (p, p+1)` with `p = m − ⌊(k−1)/n⌋ + ((k−1) mod n)`, `k = 1..mn`.
pub fn reduced_decomposition_u(m: usize, n: usize) -> Vec<(u8, u8)> {
    (1..=m * n)
        .map(|k| {
            let p = m - (k - 1) / n + (k - 1) % n;
            (p as u8, p as u8 + 1)
        })
        .collect()
}

/// Product of transpositions as a permutation of `1..=big_n` (image list, 1-based),
/// composed as maps with the rightmost factor applied first.
pub fn permutation_product(big_n: usize, ts: &[(u8, u8)]) -> Vec<usize> {
    (1..=big_n)
        .map(|mut x| {
            for &(a, b) in ts.iter().rev() {
                if x == a as usize {
                    x = b as usize;
                } else if x == b as usize {
                    x = a as usize;
                }
            }
            x
        })
        .collect()
}

/// The chain of sign sequences `Λ^{(0)} = Λ₁, …, Λ^{(mn)} = Λ₂`: `Λ^{(r)}` is
/// `Λ^{(r−1)}` with the entries at the positions of `σ_r` exchanged, so leg `r`
/// of `Π̃` has type `(Λ^{(r−1)}, Λ^{(r)})`.
pub fn lambda_chain(m: usize, n: usize) -> Vec<Vec<i32>> {
    let mut cur: Vec<i32> = (1..=m + n).map(|k| lambda1(k, m)).collect();
    let mut out = vec![cur.clone()];
    for (a, b) in reduced_decomposition_u(m, n) {
        cur.swap(a as usize - 1, b as usize - 1);
        out.push(cur.clone());
    }
    out
}

/// A tensor product of representations `π₊ ∘ ψ_{p_r}` of `ℂ[SL_N]_q`, one
/// Fock leg per block position `p_r` (the block of rows and columns `p_r, p_r + 1`).
#[derive(Clone, Debug)]
pub struct TensorRep {
    pub big_n: usize,
    pub blocks: Vec<u8>,
}

impl TensorRep {
    /// `π₊` itself on `ℂ[SL_2]_q`.
    pub fn pi_plus() -> TensorRep {
        TensorRep { big_n: 2, blocks: vec![1] }
    }

    /// `π₊ ∘ ψ_k` on `ℂ[SL_N]_q`.
    pub fn psi(big_n: usize, k: u8) -> TensorRep {
        TensorRep { big_n, blocks: vec![k] }
    }

    /// `Π̃ = π₊^{⊗mn} ∘ (ψ_{σ_1} ⊗ ⋯ ⊗ ψ_{σ_mn})`.
    pub fn tilde_pi(m: usize, n: usize) -> TensorRep {
        TensorRep {
            big_n: m + n,
            blocks: reduced_decomposition_u(m, n).into_iter().map(|(p, _)| p).collect(),
        }
    }

    pub fn tensor(&self, o: &TensorRep) -> TensorRep {
        assert_eq!(self.big_n, o.big_n);
        let mut blocks = self.blocks.clone();
        blocks.extend_from_slice(&o.blocks);
        TensorRep { big_n: self.big_n, blocks }
    }

    pub fn legs(&self) -> usize {
        self.blocks.len()
    }

    /// Entry `(a, b)` of the leg-`r` operator matrix: `Some(None)` for the
    /// identity, `Some(Some((a', b')))` for `π₊(t_{a'b'})`, `None` for zero.
    fn leg_entry(&self, r: usize, a: u8, b: u8) -> Option<Option<(u8, u8)>> {
        let p = self.blocks[r];
        let inside = |x: u8| x == p || x == p + 1;
        if inside(a) && inside(b) {
            Some(Some((a - p + 1, b - p + 1)))
        } else if a == b {
            Some(None)
        } else {
            None
        }
    }

    /// `π(t_ij) e_k`, exact: the sum over index paths `i = i_0, i_1, …, i_L = j`.
    pub fn apply_gen(&self, i: u8, j: u8, k: &FockIndex) -> FockVec {
        let mut out = FockVec::new();
        let mut states: Vec<(u8, FockIndex, Scalar)> = vec![(i, k.clone(), Scalar::one())];
        for r in 0..self.legs() {
            let mut next = Vec::new();
            for (a, idx, c) in states {
                for b in 1..=self.big_n as u8 {
                    if r + 1 == self.legs() && b != j {
                        continue;
                    }
                    match self.leg_entry(r, a, b) {
                        None => {}
                        Some(None) => next.push((b, idx.clone(), c.clone())),
                        Some(Some((x, y))) => {
                            if let Some((nj, f)) = pi_plus(x, y, idx[r]) {
                                let mut ni = idx.clone();
                                ni[r] = nj;
                                next.push((b, ni, &c * &f));
                            }
                        }
                    }
                }
            }
            states = next;
        }
        if self.legs() == 0 {
            if i == j {
                add_to(&mut out, k.clone(), Scalar::one());
            }
            return out;
        }
        for (_, idx, c) in states {
            add_to(&mut out, idx, c);
        }
        out
    }

    /// Bounds `(lo, hi)` on the degree change of `π(t_ij)`.
    pub fn gen_shift(&self, i: u8, j: u8) -> (i32, i32) {
        let mut states: Vec<(u8, i32)> = vec![(i, 0)];
        for r in 0..self.legs() {
            let mut next = Vec::new();
            for &(a, s) in &states {
                for b in 1..=self.big_n as u8 {
                    match self.leg_entry(r, a, b) {
                        None => {}
                        Some(None) => next.push((b, s)),
                        Some(Some((x, y))) => next.push((b, s + pi_plus_shift(x, y))),
                    }
                }
            }
            next.sort_unstable();
            next.dedup();
            states = next;
        }
        let shifts: Vec<i32> = states.iter().filter(|(b, _)| *b == j).map(|&(_, s)| s).collect();
        (shifts.iter().copied().min().unwrap_or(0), shifts.iter().copied().max().unwrap_or(0))
    }

    /// Degree-shift bounds of a `TPoly`.
    pub fn tpoly_shift(&self, f: &TPoly) -> (i32, i32) {
        let mut lo = 0;
        let mut hi = 0;
        let mut first = true;
        for (w, _) in f.terms() {
            let (mut a, mut b) = (0, 0);
            for &(i, j) in w {
                let (x, y) = self.gen_shift(i, j);
                a += x;
                b += y;
            }
            if first {
                lo = a;
                hi = b;
                first = false;
            } else {
                lo = lo.min(a);
                hi = hi.max(b);
            }
        }
        (lo, hi)
    }

    /// `π(word) v`, rightmost generator first.
    pub fn apply_word(&self, w: &[TGen], v: &FockVec) -> FockVec {
        let mut cur = v.clone();
        for &(i, j) in w.iter().rev() {
            let mut next = FockVec::new();
            for (k, c) in &cur {
                for (k2, c2) in self.apply_gen(i, j, k) {
                    add_to(&mut next, k2, c * &c2);
                }
            }
            cur = next;
            if cur.is_empty() {
                break;
            }
        }
        cur
    }

    pub fn apply_tpoly(&self, f: &TPoly, v: &FockVec) -> FockVec {
        let mut out = FockVec::new();
        for (w, c) in f.terms() {
            for (k, x) in self.apply_word(w, v) {
                add_to(&mut out, k, &x * c);
            }
        }
        out
    }
}

/// `A† e_k` for an operator given by its exact action on basis vectors and
/// degree-shift bounds, with respect to the weighted inner product:
/// `(A†)_{lk} = conj(A_{kl}) · N_k / N_l`.
pub fn adjoint_apply(legs: usize, shift: (i32, i32), k: &FockIndex, apply: impl Fn(&FockIndex) -> FockVec) -> FockVec {
    let d = degree(k) as i32;
    let nk = norm2(k);
    let mut out = FockVec::new();
    for s in shift.0..=shift.1 {
        let dl = d - s;
        if dl < 0 {
            continue;
        }
        for l in basis_of_degree(legs, dl as u32) {
            let col = apply(&l);
            if let Some(a) = col.get(k) {
                let v = &(&a.conj() * &nk) / &norm2(&l);
                add_to(&mut out, l, v);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norms() {
        assert!(fock_norm2(0).is_one());
        assert_eq!(fock_norm2(1), Scalar::q_pow(-2) - Scalar::one());
        assert_eq!(fock_norm2(2), &fock_norm2(1) * &(Scalar::q_pow(-4) - Scalar::one()));
    }

    #[test]
    fn pi_plus_table() {
        assert_eq!(pi_plus(1, 1, 0), Some((1, Scalar::one())));
        assert_eq!(pi_plus(2, 2, 0), None);
        assert_eq!(pi_plus(2, 1, 1), Some((1, -Scalar::q_pow(-2))));
    }

    #[test]
    fn decomposition() {
        assert_eq!(reduced_decomposition_u(1, 1), vec![(1, 2)]);
        assert_eq!(reduced_decomposition_u(2, 3), vec![(2, 3), (3, 4), (4, 5), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(permutation_product(5, &reduced_decomposition_u(2, 3)), vec![3, 4, 5, 1, 2]);
        assert_eq!(permutation_product(4, &reduced_decomposition_u(2, 2)), vec![3, 4, 1, 2]);
        let chain = lambda_chain(1, 1);
        assert_eq!(chain[0], vec![-1, 1]);
        assert_eq!(chain[1], vec![1, -1]);
        let chain = lambda_chain(2, 2);
        assert_eq!(chain[0], vec![-1, -1, 1, 1]);
        assert_eq!(chain[4], vec![1, 1, -1, -1]);
    }

    #[test]
    fn basis_counts() {
        assert_eq!(basis_of_degree(4, 3).len(), 20);
        assert_eq!(basis_upto(1, 4).len(), 5);
        assert_eq!(basis_of_degree(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn tilde_pi_single_leg() {
        let r = TensorRep::tilde_pi(1, 1);
        let v = r.apply_gen(1, 2, &vec![3]);
        assert_eq!(v, unit(vec![3]).into_keys().map(|k| (k, Scalar::q_pow(-3))).collect());
        assert_eq!(r.gen_shift(1, 1), (1, 1));
        assert_eq!(r.gen_shift(2, 2), (-1, -1));
    }
}
