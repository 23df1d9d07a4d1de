use super::poly::NCPoly;
use super::symbol::{Kind, Sym, Word};
use crate::groundfield::Scalar;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NcError {
    #[error("rule {0} does not decrease the word order")]
    NonTerminating(String),
    #[error("symbol {0} is not a generator of {1}")]
    UnknownSymbol(String, String),
    #[error("duplicate rule for pattern {0}")]
    DuplicateRule(String),
}

/// An oriented rewrite rule `lhs → rhs` with a length-2 left pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: [Sym; 2],
    pub rhs: NCPoly,
}

/// Rule-application strategy for the reference (uncached) reducer.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Numbers of symbols of each kind a basis word must contain.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Counts {
    pub z: u32,
    pub dz: u32,
    pub f0: u32,
    pub dzs: u32,
    pub zs: u32,
}

impl Counts {
    pub fn degree(k: u32) -> Counts {
        Counts { z: k, ..Default::default() }
    }

    pub fn bidegree(k: u32, l: u32) -> Counts {
        Counts {
            z: k,
            zs: l,
            ..Default::default()
        }
    }

    pub fn with_f0(mut self) -> Counts {
        self.f0 = 1;
        self
    }

    pub fn with_dz(mut self, d: u32) -> Counts {
        self.dz = d;
        self
    }

    fn get(&self, k: Kind) -> u32 {
        match k {
            Kind::Z => self.z,
            Kind::Dz => self.dz,
            Kind::F0 => self.f0,
            Kind::Dzs => self.dzs,
            Kind::Zs => self.zs,
        }
    }

    fn dec(&mut self, k: Kind) {
        match k {
            Kind::Z => self.z -= 1,
            Kind::Dz => self.dz -= 1,
            Kind::F0 => self.f0 -= 1,
            Kind::Dzs => self.dzs -= 1,
            Kind::Zs => self.zs -= 1,
        }
    }

    fn total(&self) -> u32 {
        self.z + self.dz + self.f0 + self.dzs + self.zs
    }
}

const CODE_SPACE: usize = 5 << 8;

/// Length-then-lexicographic word order induced by an ordered alphabet.
#[derive(Clone, Debug)]
pub struct WordOrder {
    rank: Vec<u32>,
}

impl WordOrder {
    pub fn new(alphabet: &[Sym]) -> WordOrder {
        let mut rank = vec![u32::MAX; CODE_SPACE];
        for (i, s) in alphabet.iter().enumerate() {
            rank[s.code() as usize] = i as u32;
        }
        WordOrder { rank }
    }

    pub fn contains(&self, s: Sym) -> bool {
        self.rank[s.code() as usize] != u32::MAX
    }

    pub fn cmp(&self, a: &[Sym], b: &[Sym]) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| {
            for (x, y) in a.iter().zip(b.iter()) {
                let c = self.rank[x.code() as usize].cmp(&self.rank[y.code() as usize]);
                if c != Ordering::Equal {
                    return c;
                }
            }
            Ordering::Equal
        })
    }
}

/// Ordered alphabet plus oriented length-2 rules, with a transparent normal-form cache.
pub struct Presentation {
    name: String,
    m: usize,
    n: usize,
    alphabet: Vec<Sym>,
    order: WordOrder,
    rules: Vec<Rule>,
    table: HashMap<(Sym, Sym), usize>,
    cache: RwLock<HashMap<Word, Arc<NCPoly>>>,
    caching: bool,
}

impl std::fmt::Debug for Presentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Presentation")
            .field("name", &self.name)
            .field("m", &self.m)
            .field("n", &self.n)
            .field("generators", &self.alphabet.len())
            .field("rules", &self.rules.len())
            .finish()
    }
}

impl Presentation {
    /// Build a presentation; every rule must strictly decrease the
    /// length-then-lexicographic order induced by the alphabet order.
    pub fn new(name: &str, m: usize, n: usize, alphabet: Vec<Sym>, rules: Vec<Rule>) -> Result<Presentation, NcError> {
        let order = WordOrder::new(&alphabet);
        let mut p = Presentation {
            name: name.to_string(),
            m,
            n,
            alphabet,
            order,
            rules: Vec::new(),
            table: HashMap::new(),
            cache: RwLock::new(HashMap::new()),
            caching: true,
        };
        for r in rules {
            p.check_symbols(&r.lhs)?;
            for (w, _) in r.rhs.terms() {
                p.check_symbols(w)?;
                if p.cmp_words(w, &r.lhs) != Ordering::Less {
                    return Err(NcError::NonTerminating(format!("{} {} -> {}", r.lhs[0], r.lhs[1], r.rhs)));
                }
            }
            if p.table.insert((r.lhs[0], r.lhs[1]), p.rules.len()).is_some() {
                return Err(NcError::DuplicateRule(format!("{} {}", r.lhs[0], r.lhs[1])));
            }
            p.rules.push(r);
        }
        p.interreduce();
        Ok(p)
    }

    fn interreduce(&mut self) {
        let reduced: Vec<NCPoly> = self.rules.iter().map(|r| self.nf(&r.rhs)).collect();
        for (r, rhs) in self.rules.iter_mut().zip(reduced) {
            r.rhs = rhs;
        }
        self.cache.write().unwrap().clear();
    }

    /// Disable memoization (results are identical; used to test transparency).
    pub fn set_caching(&mut self, on: bool) {
        self.caching = on;
        self.cache.write().unwrap().clear();
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> &[Sym] {
        &self.alphabet
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn contains(&self, s: Sym) -> bool {
        self.order.contains(s)
    }

    pub fn order(&self) -> &WordOrder {
        &self.order
    }

    pub fn rule_for(&self, x: Sym, y: Sym) -> Option<&Rule> {
        self.table.get(&(x, y)).map(|&i| &self.rules[i])
    }

    fn check_symbols(&self, w: &[Sym]) -> Result<(), NcError> {
        for s in w {
            if !self.contains(*s) {
                return Err(NcError::UnknownSymbol(s.token(), self.name.clone()));
            }
        }
        Ok(())
    }

    pub fn check_poly(&self, p: &NCPoly) -> Result<(), NcError> {
        for (w, _) in p.terms() {
            self.check_symbols(w)?;
        }
        Ok(())
    }

    /// Length first, then lexicographic in the alphabet order.
    pub fn cmp_words(&self, a: &[Sym], b: &[Sym]) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn is_normal(&self, w: &[Sym]) -> bool {
        w.windows(2).all(|p| !self.table.contains_key(&(p[0], p[1])))
    }

    /// Normal form, checking that every symbol belongs to the alphabet.
    pub fn normal_form(&self, p: &NCPoly) -> Result<NCPoly, NcError> {
        self.check_poly(p)?;
        Ok(self.nf(p))
    }

    /// Normal form of a polynomial whose symbols are known to be generators.
    pub fn nf(&self, p: &NCPoly) -> NCPoly {
        let mut acc: BTreeMap<Word, Scalar> = BTreeMap::new();
        for (w, c) in p.terms() {
            let r = self.nf_word(w);
            accumulate(&mut acc, &r, c);
        }
        finish(acc)
    }

    /// Normal form of a single word.
    pub fn nf_word(&self, w: &[Sym]) -> Arc<NCPoly> {
        if w.len() <= 1 || self.is_normal(w) {
            return Arc::new(NCPoly::word(w.iter().copied().collect()));
        }
        if let Some(r) = self.lookup(w) {
            return r;
        }
        let tail = self.nf_word(&w[1..]);
        let mut acc: BTreeMap<Word, Scalar> = BTreeMap::new();
        for (v, c) in tail.terms() {
            let r = self.nf_cons(w[0], v);
            accumulate(&mut acc, &r, c);
        }
        let res = Arc::new(finish(acc));
        self.store(w, &res);
        res
    }

    /// Normal form of `x · v` for a normal word `v`.
    fn nf_cons(&self, x: Sym, v: &[Sym]) -> Arc<NCPoly> {
        let rule = match v.first() {
            Some(&y) => self.table.get(&(x, y)).copied(),
            None => None,
        };
        let Some(ri) = rule else {
            let mut w = Word::with_capacity(v.len() + 1);
            w.push(x);
            w.extend(v.iter().copied());
            return Arc::new(NCPoly::word(w));
        };
        let mut key = Word::with_capacity(v.len() + 1);
        key.push(x);
        key.extend(v.iter().copied());
        if let Some(r) = self.lookup(&key) {
            return r;
        }
        let rest = &v[1..];
        let mut acc: BTreeMap<Word, Scalar> = BTreeMap::new();
        for (r, c) in self.rules[ri].rhs.terms() {
            match r.len() {
                0 => accumulate_word(&mut acc, rest, c),
                1 => {
                    let p = self.nf_cons(r[0], rest);
                    accumulate(&mut acc, &p, c);
                }
                _ => {
                    let mut inner = self.nf_cons(r[r.len() - 1], rest);
                    for k in (0..r.len() - 1).rev() {
                        let mut next: BTreeMap<Word, Scalar> = BTreeMap::new();
                        for (u, cu) in inner.terms() {
                            let p = self.nf_cons(r[k], u);
                            accumulate(&mut next, &p, cu);
                        }
                        inner = Arc::new(finish(next));
                    }
                    accumulate(&mut acc, &inner, c);
                }
            }
        }
        let res = Arc::new(finish(acc));
        self.store(&key, &res);
        res
    }

    fn lookup(&self, w: &[Sym]) -> Option<Arc<NCPoly>> {
        if !self.caching {
            return None;
        }
        self.cache.read().unwrap().get(w).cloned()
    }

    fn store(&self, w: &[Sym], r: &Arc<NCPoly>) {
        if self.caching {
            self.cache.write().unwrap().insert(w.iter().copied().collect(), r.clone());
        }
    }

    /// Uncached reference reduction that always rewrites the leftmost or
    /// the rightmost reducible window.
    pub fn reduce_with(&self, p: &NCPoly, strategy: Strategy) -> NCPoly {
        let mut pending: BTreeMap<Word, Scalar> = p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut done = NCPoly::zero();
        while let Some((w, c)) = pending.pop_last() {
            let pos = match strategy {
                Strategy::Leftmost => (0..w.len().saturating_sub(1)).find(|&i| self.table.contains_key(&(w[i], w[i + 1]))),
                Strategy::Rightmost => (0..w.len().saturating_sub(1)).rev().find(|&i| self.table.contains_key(&(w[i], w[i + 1]))),
            };
            match pos {
                None => done.add_term(w, c),
                Some(i) => {
                    let rule = &self.rules[self.table[&(w[i], w[i + 1])]];
                    for (r, rc) in rule.rhs.terms() {
                        let mut nw = Word::new();
                        nw.extend(w[..i].iter().copied());
                        nw.extend(r.iter().copied());
                        nw.extend(w[i + 2..].iter().copied());
                        let v = &c * rc;
                        let e = pending.entry(nw).or_insert_with(Scalar::zero);
                        *e += &v;
                    }
                    pending.retain(|_, v| !v.is_zero());
                }
            }
        }
        done
    }

    /// All normal words with exactly the requested symbol counts, in the
    /// presentation's word order.
    pub fn enumerate_basis(&self, counts: Counts) -> Vec<Word> {
        let mut out = Vec::new();
        let mut cur = Word::new();
        self.dfs(&mut cur, counts, &mut out);
        out.sort_by(|a, b| self.cmp_words(a, b));
        out
    }

    fn dfs(&self, cur: &mut Word, left: Counts, out: &mut Vec<Word>) {
        if left.total() == 0 {
            out.push(cur.clone());
            return;
        }
        for &s in &self.alphabet {
            if left.get(s.kind()) == 0 {
                continue;
            }
            if let Some(&prev) = cur.last() {
                if self.table.contains_key(&(prev, s)) {
                    continue;
                }
            }
            let mut l = left;
            l.dec(s.kind());
            cur.push(s);
            self.dfs(cur, l, out);
            cur.pop();
        }
    }

    /// Overlap ambiguities `xyz` whose two one-step resolutions have different normal forms.
    pub fn critical_pair_failures(&self) -> Vec<[Sym; 3]> {
        let mut bad = Vec::new();
        for r1 in &self.rules {
            for r2 in &self.rules {
                if r1.lhs[1] != r2.lhs[0] {
                    continue;
                }
                let (x, y, z) = (r1.lhs[0], r1.lhs[1], r2.lhs[1]);
                let left = r1.rhs.mul(&NCPoly::sym(z));
                let right = NCPoly::sym(x).mul(&r2.rhs);
                if self.reduce_with(&left, Strategy::Leftmost) != self.reduce_with(&right, Strategy::Leftmost) {
                    bad.push([x, y, z]);
                }
            }
        }
        bad
    }
}

fn accumulate(acc: &mut BTreeMap<Word, Scalar>, p: &NCPoly, c: &Scalar) {
    for (w, v) in p.terms() {
        let t = if c.is_one() { v.clone() } else { v * c };
        match acc.get_mut(w) {
            Some(e) => *e += &t,
            None => {
                acc.insert(w.clone(), t);
            }
        }
    }
}

fn accumulate_word(acc: &mut BTreeMap<Word, Scalar>, w: &[Sym], c: &Scalar) {
    match acc.get_mut(w) {
        Some(e) => *e += c,
        None => {
            acc.insert(w.iter().copied().collect(), c.clone());
        }
    }
}

fn finish(acc: BTreeMap<Word, Scalar>) -> NCPoly {
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}
