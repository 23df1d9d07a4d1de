use super::symbol::{word_string, Sym, Word};
use crate::groundfield::Scalar;
use std::collections::BTreeMap;
use std::fmt;

/// A finite Scalar-linear combination of words; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> NCPoly {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> NCPoly {
        NCPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> NCPoly {
        NCPoly::monomial(c, Word::new())
    }

    pub fn monomial(c: Scalar, w: Word) -> NCPoly {
        let mut p = NCPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn word(w: Word) -> NCPoly {
        NCPoly::monomial(Scalar::one(), w)
    }

    pub fn sym(s: Sym) -> NCPoly {
        NCPoly::word(std::iter::once(s).collect())
    }

    pub fn from_syms(c: Scalar, syms: &[Sym]) -> NCPoly {
        NCPoly::monomial(c, syms.iter().copied().collect())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &[Sym]) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coefficient of the empty word.
    pub fn coeff_of_identity(&self) -> Scalar {
        self.coeff(&[])
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, o: &NCPoly, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (w, v) in &o.terms {
            self.add_term(w.clone(), if c.is_one() { v.clone() } else { v * c });
        }
    }

    pub fn add(&self, o: &NCPoly) -> NCPoly {
        let mut r = self.clone();
        r.add_scaled(o, &Scalar::one());
        r
    }

    pub fn sub(&self, o: &NCPoly) -> NCPoly {
        let mut r = self.clone();
        r.add_scaled(o, &Scalar::from_int(-1));
        r
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        let mut r = NCPoly::zero();
        r.add_scaled(self, c);
        r
    }

    /// Free-algebra product (concatenation of words).
    pub fn mul(&self, o: &NCPoly) -> NCPoly {
        let mut r = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend(w2.iter().copied());
                r.add_term(w, c1 * c2);
            }
        }
        r
    }

    /// Apply `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> NCPoly {
        let mut r = NCPoly::zero();
        for (w, c) in &self.terms {
            r.add_term(w.clone(), f(c));
        }
        r
    }

    /// Apply `f` to every word (keeping coefficients), summing collisions.
    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> NCPoly {
        let mut r = NCPoly::zero();
        for (w, c) in &self.terms {
            r.add_term(f(w), c.clone());
        }
        r
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }
}

impl FromIterator<(Word, Scalar)> for NCPoly {
    fn from_iter<I: IntoIterator<Item = (Word, Scalar)>>(iter: I) -> NCPoly {
        let mut r = NCPoly::zero();
        for (w, c) in iter {
            r.add_term(w, c);
        }
        r
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                if w.is_empty() {
                    format!("({})", c.pretty())
                } else if c.is_one() {
                    word_string(w)
                } else {
                    format!("({})*{}", c.pretty(), word_string(w))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_is_concatenation() {
        let a = NCPoly::sym(Sym::z(1, 1));
        let b = NCPoly::sym(Sym::z(2, 2));
        let ab = a.mul(&b);
        assert_eq!(ab.len(), 1);
        assert!(ab.coeff(&[Sym::z(1, 1), Sym::z(2, 2)]).is_one());
    }

    #[test]
    fn identity_and_bilinearity() {
        let p = NCPoly::from_syms(Scalar::q(), &[Sym::z(1, 1)]);
        assert_eq!(NCPoly::one().mul(&p), p);
        let x = NCPoly::from_syms(Scalar::from_int(3), &[Sym::zs(1, 1)]);
        let prod = p.mul(&x);
        assert_eq!(prod.coeff(&[Sym::z(1, 1), Sym::zs(1, 1)]), Scalar::q() * Scalar::from_int(3));
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = NCPoly::sym(Sym::f0());
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn identity_coefficient() {
        assert_eq!(NCPoly::constant(Scalar::from_int(5)).coeff_of_identity(), Scalar::from_int(5));
        assert!(NCPoly::sym(Sym::z(1, 1)).coeff_of_identity().is_zero());
    }
}
