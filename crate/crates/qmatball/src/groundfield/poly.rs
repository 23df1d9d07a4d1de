//! Dense univariate polynomials in `s` over the Gaussian rationals.

use super::gaussian::Gq;

/// Coefficients indexed by exponent; no trailing zeros (the zero polynomial is empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    pub c: Vec<Gq>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly { c: vec![Gq::one()] }
    }

    pub fn constant(g: Gq) -> Poly {
        let mut p = Poly { c: vec![g] };
        p.trim();
        p
    }

    pub fn from_coeffs(c: Vec<Gq>) -> Poly {
        let mut p = Poly { c };
        p.trim();
        p
    }

    pub fn trim(&mut self) {
        while matches!(self.c.last(), Some(x) if x.is_zero()) {
            self.c.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// Degree; -1 for zero.
    pub fn deg(&self) -> isize {
        self.c.len() as isize - 1
    }

    pub fn lead(&self) -> Option<&Gq> {
        self.c.last()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_order(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    pub fn shift_down(&self, k: usize) -> Poly {
        Poly { c: self.c[k..].to_vec() }
    }

    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut c = vec![Gq::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let (long, short) = if self.c.len() >= o.c.len() { (self, o) } else { (o, self) };
        let mut c = long.c.clone();
        for (k, x) in short.c.iter().enumerate() {
            c[k].add_assign_ref(x);
        }
        Poly::from_coeffs(c)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for k in 0..n {
            let mut v = self.c.get(k).cloned().unwrap_or_else(Gq::zero);
            if let Some(x) = o.c.get(k) {
                v.sub_assign_ref(x);
            }
            c.push(v);
        }
        Poly::from_coeffs(c)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            c: self.c.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if o.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return o.clone();
        }
        let mut c = vec![Gq::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                c[i + j].add_assign_ref(&a.mul_ref(b));
            }
        }
        Poly::from_coeffs(c)
    }

    pub fn scale(&self, g: &Gq) -> Poly {
        if g.is_zero() {
            return Poly::zero();
        }
        Poly {
            c: self.c.iter().map(|x| x.mul_ref(g)).collect(),
        }
    }

    /// Quotient and remainder; panics when dividing by zero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.deg() < d.deg() {
            return (Poly::zero(), self.clone());
        }
        let dl = d.c.len();
        let inv_lead = d.lead().unwrap().inv().unwrap();
        let mut r = self.c.clone();
        let mut q = vec![Gq::zero(); self.c.len() - dl + 1];
        for k in (0..q.len()).rev() {
            let top = &r[k + dl - 1];
            if top.is_zero() {
                continue;
            }
            let f = top.mul_ref(&inv_lead);
            for (j, dj) in d.c.iter().enumerate() {
                if !dj.is_zero() {
                    let t = f.mul_ref(dj);
                    r[k + j].sub_assign_ref(&t);
                }
            }
            q[k] = f;
        }
        r.truncate(dl - 1);
        (Poly::from_coeffs(q), Poly::from_coeffs(r))
    }

    pub fn div_exact(&self, d: &Poly) -> Poly {
        if d.is_one() {
            return self.clone();
        }
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => Poly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, o: &Poly) -> Poly {
        if self.is_one() || o.is_one() {
            return Poly::one();
        }
        let mut a = self.monic();
        let mut b = o.monic();
        while !b.is_zero() {
            if b.deg() == 0 {
                return Poly::one();
            }
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn conj(&self) -> Poly {
        Poly {
            c: self.c.iter().map(|x| x.conj()).collect(),
        }
    }

    pub fn eval(&self, x: &Gq) -> Gq {
        let mut acc = Gq::zero();
        for cf in self.c.iter().rev() {
            acc = acc.mul_ref(x).add_ref(cf);
        }
        acc
    }

    pub fn is_real(&self) -> bool {
        self.c.iter().all(|x| x.is_real())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Poly {
        Poly::from_coeffs(v.iter().map(|&x| Gq::from_int(x)).collect())
    }

    #[test]
    fn divrem_reconstructs() {
        let a = p(&[1, 0, -3, 2, 5]);
        let d = p(&[2, 1, 3]);
        let (q, r) = a.divrem(&d);
        assert_eq!(q.mul(&d).add(&r), a);
        assert!(r.deg() < d.deg());
    }

    #[test]
    fn gcd_of_products() {
        let f = p(&[1, 0, -1]); // 1 - s^2
        let g = p(&[1, 1]); // 1 + s
        let h = p(&[3, 0, 1]);
        let gg = f.mul(&h).gcd(&g.mul(&h));
        assert_eq!(gg, g.mul(&h).monic());
    }

    #[test]
    fn coprime_gcd_is_one() {
        assert!(p(&[1, 1]).gcd(&p(&[1, -1])).is_one());
    }
}
