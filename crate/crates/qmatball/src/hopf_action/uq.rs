use crate::groundfield::Scalar;
use serde_json::{json, Value};
use smallvec::SmallVec;
use std::collections::BTreeMap;
use std::fmt;

/// A Hopf generator `E_i`, `F_i`, `K_i` or `K_i^{-1}` (indices from 1).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    E(u8),
    F(u8),
    K(u8),
    Kinv(u8),
}

impl Letter {
    pub fn index(self) -> u8 {
        match self {
            Letter::E(i) | Letter::F(i) | Letter::K(i) | Letter::Kinv(i) => i,
        }
    }

    pub fn token(self) -> String {
        match self {
            Letter::E(i) => format!("E{i}"),
            Letter::F(i) => format!("F{i}"),
            Letter::K(i) => format!("K{i}"),
            Letter::Kinv(i) => format!("K{i}inv"),
        }
    }

    pub fn parse(t: &str) -> Option<Letter> {
        let t = t.trim();
        let (head, rest) = t.split_at(1.min(t.len()));
        let (digits, inv) = match rest.strip_suffix("inv") {
            Some(d) => (d, true),
            None => (rest, false),
        };
        let i: u8 = digits.parse().ok()?;
        if i == 0 {
            return None;
        }
        match (head, inv) {
            ("E", false) => Some(Letter::E(i)),
            ("F", false) => Some(Letter::F(i)),
            ("K", false) => Some(Letter::K(i)),
            ("K", true) => Some(Letter::Kinv(i)),
            _ => None,
        }
    }

    /// All generators `E_i, F_i, K_i, K_i^{-1}` for `i = 1..rank`.
    pub fn all(rank: usize) -> Vec<Letter> {
        let mut v = Vec::new();
        for i in 1..=rank as u8 {
            v.extend([Letter::E(i), Letter::F(i), Letter::K(i), Letter::Kinv(i)]);
        }
        v
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

pub type UqWord = SmallVec<[Letter; 4]>;

/// A formal linear combination of free words in the Hopf generators.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UqElement {
    terms: BTreeMap<UqWord, Scalar>,
}

/// An element of the `L`-fold tensor power, each term a list of `L` words.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorElement {
    pub legs: usize,
    pub terms: BTreeMap<Vec<UqWord>, Scalar>,
}

impl UqElement {
    pub fn zero() -> UqElement {
        UqElement::default()
    }

    pub fn one() -> UqElement {
        UqElement::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> UqElement {
        let mut e = UqElement::zero();
        e.add_term(UqWord::new(), c);
        e
    }

    pub fn letter(l: Letter) -> UqElement {
        UqElement::word(&[l])
    }

    pub fn word(ls: &[Letter]) -> UqElement {
        let mut e = UqElement::zero();
        e.add_term(ls.iter().copied().collect(), Scalar::one());
        e
    }

    pub fn add_term(&mut self, w: UqWord, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert_with(Scalar::zero);
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&UqWord, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &UqElement) -> UqElement {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c.clone());
        }
        r
    }

    pub fn scale(&self, c: &Scalar) -> UqElement {
        let mut r = UqElement::zero();
        for (w, v) in &self.terms {
            r.add_term(w.clone(), v * c);
        }
        r
    }

    pub fn sub(&self, o: &UqElement) -> UqElement {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    pub fn mul(&self, o: &UqElement) -> UqElement {
        let mut r = UqElement::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend(w2.iter().copied());
                r.add_term(w, c1 * c2);
            }
        }
        r
    }

    /// Iterated coproduct into `legs ≥ 1` tensor factors.
    pub fn coproduct(&self, legs: usize) -> TensorElement {
        assert!(legs >= 1);
        let mut out = TensorElement { legs, terms: BTreeMap::new() };
        for (w, c) in &self.terms {
            let mut acc = TensorElement::unit(legs);
            for &l in w.iter() {
                acc = acc.mul(&letter_coproduct(l, legs));
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    pub fn counit(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for (w, c) in &self.terms {
            if w.iter().all(|l| matches!(l, Letter::K(_) | Letter::Kinv(_))) {
                acc += c;
            }
        }
        acc
    }

    /// Antipode: anti-multiplicative, `S(E) = −K⁻¹E`, `S(F) = −FK`, `S(K^{±1}) = K^{∓1}`.
    pub fn antipode(&self) -> UqElement {
        self.anti_map(
            |l| match l {
                Letter::E(i) => UqElement::word(&[Letter::Kinv(i), Letter::E(i)]).scale(&Scalar::from_int(-1)),
                Letter::F(i) => UqElement::word(&[Letter::F(i), Letter::K(i)]).scale(&Scalar::from_int(-1)),
                Letter::K(i) => UqElement::letter(Letter::Kinv(i)),
                Letter::Kinv(i) => UqElement::letter(Letter::K(i)),
            },
            false,
        )
    }

    /// The antilinear anti-multiplicative involution of the real form with
    /// signature `(n, m)`; the sign flips at index `n`.
    pub fn star_sunm(&self, n: usize) -> UqElement {
        let n = n as u8;
        self.anti_map(
            |l| match l {
                Letter::K(i) => UqElement::letter(Letter::K(i)),
                Letter::Kinv(i) => UqElement::letter(Letter::Kinv(i)),
                Letter::E(i) => {
                    let e = UqElement::word(&[Letter::K(i), Letter::F(i)]);
                    if i == n {
                        e.scale(&Scalar::from_int(-1))
                    } else {
                        e
                    }
                }
                Letter::F(i) => {
                    let e = UqElement::word(&[Letter::E(i), Letter::Kinv(i)]);
                    if i == n {
                        e.scale(&Scalar::from_int(-1))
                    } else {
                        e
                    }
                }
            },
            true,
        )
    }

    fn anti_map(&self, f: impl Fn(Letter) -> UqElement, conj: bool) -> UqElement {
        let mut out = UqElement::zero();
        for (w, c) in &self.terms {
            let mut acc = UqElement::scalar(if conj { c.conj() } else { c.clone() });
            for &l in w.iter().rev() {
                acc = acc.mul(&f(l));
            }
            out = out.add(&acc);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(w, c)| json!({"coeff": c.to_canonical_string(), "word": w.iter().map(|l| l.token()).collect::<Vec<_>>()}))
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(v: &Value) -> Option<UqElement> {
        let mut e = UqElement::zero();
        for t in v.get("terms")?.as_array()? {
            let c = Scalar::parse(t.get("coeff")?.as_str()?).ok()?;
            let w: Option<UqWord> = t.get("word")?.as_array()?.iter().map(|x| x.as_str().and_then(Letter::parse)).collect();
            e.add_term(w?, c);
        }
        Some(e)
    }

    /// Parse a whitespace-separated product of tokens, e.g. `"E1 F2 K3inv"`.
    pub fn parse_word(s: &str) -> Option<UqElement> {
        let ls: Option<Vec<Letter>> = s.split_whitespace().map(Letter::parse).collect();
        Some(UqElement::word(&ls?))
    }
}

impl fmt::Display for UqElement {
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
                    w.iter().map(|l| l.token()).collect::<Vec<_>>().join(" ")
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

fn letter_coproduct(l: Letter, legs: usize) -> TensorElement {
    let mut t = TensorElement { legs, terms: BTreeMap::new() };
    let one = || UqWord::new();
    let single = |x: Letter| -> UqWord { std::iter::once(x).collect() };
    match l {
        Letter::K(_) | Letter::Kinv(_) => {
            t.terms.insert(vec![single(l); legs], Scalar::one());
        }
        Letter::E(i) => {
            for r in 0..legs {
                let term: Vec<UqWord> = (0..legs)
                    .map(|k| {
                        if k < r {
                            single(Letter::K(i))
                        } else if k == r {
                            single(l)
                        } else {
                            one()
                        }
                    })
                    .collect();
                t.terms.insert(term, Scalar::one());
            }
        }
        Letter::F(i) => {
            for r in 0..legs {
                let term: Vec<UqWord> = (0..legs)
                    .map(|k| {
                        if k < r {
                            one()
                        } else if k == r {
                            single(l)
                        } else {
                            single(Letter::Kinv(i))
                        }
                    })
                    .collect();
                t.terms.insert(term, Scalar::one());
            }
        }
    }
    t
}

impl TensorElement {
    pub fn unit(legs: usize) -> TensorElement {
        let mut t = TensorElement { legs, terms: BTreeMap::new() };
        t.terms.insert(vec![UqWord::new(); legs], Scalar::one());
        t
    }

    fn add_scaled(&mut self, o: &TensorElement, c: &Scalar) {
        for (w, v) in &o.terms {
            let e = self.terms.entry(w.clone()).or_insert_with(Scalar::zero);
            *e += &(v * c);
            if e.is_zero() {
                self.terms.remove(w);
            }
        }
    }

    /// Leg-wise product.
    pub fn mul(&self, o: &TensorElement) -> TensorElement {
        assert_eq!(self.legs, o.legs);
        let mut r = TensorElement {
            legs: self.legs,
            terms: BTreeMap::new(),
        };
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let w: Vec<UqWord> = w1
                    .iter()
                    .zip(w2)
                    .map(|(a, b)| {
                        let mut x = a.clone();
                        x.extend(b.iter().copied());
                        x
                    })
                    .collect();
                let mut single = TensorElement {
                    legs: self.legs,
                    terms: BTreeMap::new(),
                };
                single.terms.insert(w, c1 * c2);
                r.add_scaled(&single, &Scalar::one());
            }
        }
        r
    }

    /// Apply the coproduct to one leg, producing `legs + 1` factors.
    pub fn expand_leg(&self, leg: usize) -> TensorElement {
        let mut r = TensorElement {
            legs: self.legs + 1,
            terms: BTreeMap::new(),
        };
        for (w, c) in &self.terms {
            let split = UqElement::word(&w[leg]).coproduct(2);
            for (pair, v) in &split.terms {
                let mut nw = w[..leg].to_vec();
                nw.extend(pair.iter().cloned());
                nw.extend(w[leg + 1..].iter().cloned());
                let mut single = TensorElement {
                    legs: self.legs + 1,
                    terms: BTreeMap::new(),
                };
                single.terms.insert(nw, v.clone());
                r.add_scaled(&single, c);
            }
        }
        r
    }

    /// Apply the counit to one leg, producing `legs − 1` factors.
    pub fn counit_leg(&self, leg: usize) -> TensorElement {
        let mut r = TensorElement {
            legs: self.legs - 1,
            terms: BTreeMap::new(),
        };
        for (w, c) in &self.terms {
            let e = UqElement::word(&w[leg]).counit();
            if e.is_zero() {
                continue;
            }
            let mut nw = w[..leg].to_vec();
            nw.extend(w[leg + 1..].iter().cloned());
            let mut single = TensorElement {
                legs: self.legs - 1,
                terms: BTreeMap::new(),
            };
            single.terms.insert(nw, e);
            r.add_scaled(&single, c);
        }
        r
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}
