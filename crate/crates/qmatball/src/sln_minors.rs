//! Quantum minors of `SL_N`, the involutions on the generators `t_ij`,
//! and the distinguished elements `t`, `x` and the embedding numerators.

use crate::groundfield::Scalar;
use std::collections::BTreeMap;
use std::fmt;

/// A generator `t_ij` (indices from 1).
pub type TGen = (u8, u8);

/// A linear combination of free words in the `t_ij`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TPoly {
    terms: BTreeMap<Vec<TGen>, Scalar>,
}

impl TPoly {
    pub fn zero() -> TPoly {
        TPoly::default()
    }

    pub fn one() -> TPoly {
        TPoly::monomial(Scalar::one(), vec![])
    }

    pub fn gen(i: u8, j: u8) -> TPoly {
        TPoly::monomial(Scalar::one(), vec![(i, j)])
    }

    pub fn monomial(c: Scalar, w: Vec<TGen>) -> TPoly {
        let mut p = TPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn add_term(&mut self, w: Vec<TGen>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert_with(Scalar::zero);
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<TGen>, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &TPoly) -> TPoly {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c.clone());
        }
        r
    }

    pub fn scale(&self, c: &Scalar) -> TPoly {
        let mut r = TPoly::zero();
        for (w, v) in &self.terms {
            r.add_term(w.clone(), v * c);
        }
        r
    }

    pub fn mul(&self, o: &TPoly) -> TPoly {
        let mut r = TPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                r.add_term(w, c1 * c2);
            }
        }
        r
    }

    /// Common degree of all terms, if homogeneous, for the `(m, n)` grading.
    pub fn degree(&self, m: usize, n: usize) -> Option<i32> {
        let mut it = self.terms.keys().map(|w| w.iter().map(|&(i, j)| t_degree(i, j, m, n)).sum::<i32>());
        let d = it.next().unwrap_or(0);
        it.all(|x| x == d).then_some(d)
    }
}

/// Grading of `t_ij` for the `(m, n)` block split: `+1` when `i ≤ m` and
/// `j ≤ n`, `−1` when `i > m` and `j > n`, and 0 otherwise.
pub fn t_degree(i: u8, j: u8, m: usize, n: usize) -> i32 {
    let (i, j) = (i as usize, j as usize);
    match (i <= m, j <= n) {
        (true, true) => 1,
        (false, false) => -1,
        _ => 0,
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let ws = if w.is_empty() {
                    "1".to_string()
                } else {
                    w.iter().map(|(i, j)| format!("t{i}{j}")).collect::<Vec<_>>().join("*")
                };
                if c.is_one() {
                    ws
                } else {
                    format!("({})*{}", c.pretty(), ws)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A q-minor label: ascending row and column sets of equal size.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinorLabel {
    pub rows: Vec<u8>,
    pub cols: Vec<u8>,
}

impl MinorLabel {
    pub fn new(mut rows: Vec<u8>, mut cols: Vec<u8>) -> MinorLabel {
        assert_eq!(rows.len(), cols.len(), "minor label needs |I| = |J|");
        rows.sort_unstable();
        cols.sort_unstable();
        MinorLabel { rows, cols }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn expand(&self) -> TPoly {
        qminor(&self.rows, &self.cols)
    }
}

impl fmt::Display for MinorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[u8]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "t^[{}|{}]", j(&self.rows), j(&self.cols))
    }
}

/// Number of inversions of a permutation given as the image list.
pub fn inversions(s: &[usize]) -> usize {
    let mut c = 0;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[i] > s[j] {
                c += 1;
            }
        }
    }
    c
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    heap(k, &mut cur, &mut out);
    out
}

fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(a.clone());
        return;
    }
    for i in 0..k - 1 {
        heap(k - 1, a, out);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
    heap(k - 1, a, out);
}

/// `Σ_s (−q)^{l(s)} t_{i_1 j_{s(1)}} ⋯ t_{i_k j_{s(k)}}`.
pub fn qminor(rows: &[u8], cols: &[u8]) -> TPoly {
    assert_eq!(rows.len(), cols.len());
    let k = rows.len();
    let mut p = TPoly::zero();
    for s in permutations(k) {
        let l = inversions(&s) as i64;
        let c = Scalar::q_pow(l).scale_sign(l);
        let w: Vec<TGen> = (0..k).map(|r| (rows[r], cols[s[r]])).collect();
        p.add_term(w, c);
    }
    p
}

trait SignExt {
    fn scale_sign(self, l: i64) -> Scalar;
}

impl SignExt for Scalar {
    fn scale_sign(self, l: i64) -> Scalar {
        if l % 2 == 0 {
            self
        } else {
            -self
        }
    }
}

/// `(−q)^k`.
pub fn minus_q_pow(k: i64) -> Scalar {
    Scalar::q_pow(k).scale_sign(k)
}

/// Label of the minor complementary to row `i` and column `j`.
pub fn complement_label(big_n: usize, i: u8, j: u8) -> MinorLabel {
    let all = 1..=big_n as u8;
    MinorLabel::new(all.clone().filter(|&x| x != i).collect(), all.filter(|&x| x != j).collect())
}

/// `t_ij^★ = (−q)^{j−i} det_q T_ij`.
pub fn star_star(big_n: usize, i: u8, j: u8) -> TPoly {
    complement_label(big_n, i, j).expand().scale(&minus_q_pow(j as i64 - i as i64))
}

pub fn lambda1(k: usize, m: usize) -> i32 {
    if k > m {
        1
    } else {
        -1
    }
}

pub fn lambda2(k: usize, n: usize) -> i32 {
    if k <= n {
        1
    } else {
        -1
    }
}

/// `t_ij^* = λ₁(i) λ₂(j) t_ij^★` for the `(m, n)` real form.
pub fn star_x(m: usize, n: usize, i: u8, j: u8) -> TPoly {
    let s = lambda1(i as usize, m) * lambda2(j as usize, n);
    star_star(m + n, i, j).scale(&Scalar::from_int(s as i64))
}

/// `t = t^{∧m}_{{1..m}{n+1..N}}`.
pub fn element_t(m: usize, n: usize) -> MinorLabel {
    MinorLabel::new((1..=m as u8).collect(), (n as u8 + 1..=(m + n) as u8).collect())
}

/// Label of the lower-left `n × n` corner minor `t^{∧n}_{{m+1..N}{1..n}}`.
pub fn element_t_lower(m: usize, n: usize) -> MinorLabel {
    MinorLabel::new((m as u8 + 1..=(m + n) as u8).collect(), (1..=n as u8).collect())
}

/// `x = (−q)^{mn} t^{∧m}_{{1..m}{n+1..N}} t^{∧n}_{{m+1..N}{1..n}}`.
pub fn element_x(m: usize, n: usize) -> TPoly {
    element_t(m, n)
        .expand()
        .mul(&element_t_lower(m, n).expand())
        .scale(&minus_q_pow((m * n) as i64))
}

/// Numerator `t^{∧m}_{{1..m} J_aα}` of the image of `z_a^α`, with
/// `J_aα = {n+1..N} ∖ {N+1−α} ∪ {a}`.
pub fn embedding_numerator(m: usize, n: usize, a: u8, alpha: u8) -> MinorLabel {
    let big_n = (m + n) as u8;
    let mut cols: Vec<u8> = (n as u8 + 1..=big_n).filter(|&c| c != big_n + 1 - alpha).collect();
    cols.push(a);
    MinorLabel::new((1..=m as u8).collect(), cols)
}
