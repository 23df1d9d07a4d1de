//! Elements of ℚ(i)(s), with the convention s² = q.
//!
//! A nonzero scalar is stored as `s^shift · num / den` where `num` and `den`
//! are coprime polynomials, neither divisible by `s`, and `den` is monic.
//! This representation is unique, so derived equality is field equality.

use super::gaussian::{parse_rat, Gq};
use super::poly::Poly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("evaluation hits a pole at s = {0}")]
    Pole(String),
    #[error("cannot parse scalar: {0}")]
    Parse(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    shift: i64,
    num: Poly,
    den: Poly,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar {
            shift: 0,
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Scalar {
        Scalar::from_int(1)
    }

    pub fn from_int(v: i64) -> Scalar {
        Scalar::from_gq(Gq::from_int(v))
    }

    pub fn from_rational(r: BigRational) -> Scalar {
        Scalar::from_gq(Gq::real(r))
    }

    pub fn from_gq(g: Gq) -> Scalar {
        if g.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            shift: 0,
            num: Poly::constant(g),
            den: Poly::one(),
        }
    }

    pub fn i() -> Scalar {
        Scalar::from_gq(Gq::i())
    }

    /// `s^k` (that is, `q^{k/2}`).
    pub fn s_pow(k: i64) -> Scalar {
        Scalar {
            shift: k,
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Scalar {
        Scalar::s_pow(2 * k)
    }

    pub fn q() -> Scalar {
        Scalar::q_pow(1)
    }

    /// Build from a Laurent polynomial given as `(exponent of s, coefficient)` pairs.
    pub fn laurent(terms: &[(i64, i64)]) -> Scalar {
        let mut acc = Scalar::zero();
        for &(e, c) in terms {
            acc += &(Scalar::s_pow(e) * Scalar::from_int(c));
        }
        acc
    }

    /// Assemble `s^shift · num / den` from arbitrary polynomials and normalize.
    pub fn from_parts(shift: i64, num: Poly, den: Poly) -> Result<Scalar, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Scalar::zero());
        }
        let mut shift = shift;
        let lo = num.low_order().unwrap();
        let mut num = if lo > 0 { num.shift_down(lo) } else { num };
        shift += lo as i64;
        let ld = den.low_order().unwrap();
        let mut den = if ld > 0 { den.shift_down(ld) } else { den };
        shift -= ld as i64;
        let g = num.gcd(&den);
        if !g.is_one() {
            num = num.div_exact(&g);
            den = den.div_exact(&g);
        }
        let lead = den.lead().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.inv().unwrap();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(Scalar { shift, num, den })
    }

    fn from_parts_unchecked(shift: i64, num: Poly, den: Poly) -> Scalar {
        Scalar::from_parts(shift, num, den).expect("nonzero denominator")
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is a power of `s` (a Laurent polynomial).
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn parts(&self) -> (i64, &Poly, &Poly) {
        (self.shift, &self.num, &self.den)
    }

    pub fn conj(&self) -> Scalar {
        if self.num.is_real() && self.den.is_real() {
            return self.clone();
        }
        Scalar::from_parts_unchecked(self.shift, self.num.conj(), self.den.conj())
    }

    pub fn is_real(&self) -> bool {
        self.num.is_real() && self.den.is_real()
    }

    pub fn inv(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let lead = self.num.lead().unwrap().inv().unwrap();
        Ok(Scalar {
            shift: -self.shift,
            num: self.den.scale(&lead),
            den: self.num.scale(&lead),
        })
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar, FieldError> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, k: i64) -> Scalar {
        if k < 0 {
            return self.inv().expect("negative power of zero").pow(-k);
        }
        let mut acc = Scalar::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn add_impl(&self, o: &Scalar, negate: bool) -> Scalar {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -o } else { o.clone() };
        }
        let e = self.shift.min(o.shift);
        let a = self.num.shift_up((self.shift - e) as usize);
        let c = o.num.shift_up((o.shift - e) as usize);
        let c = if negate { c.neg() } else { c };
        if self.den == o.den {
            let t = a.add(&c);
            if self.den.is_one() {
                return Scalar::from_parts_unchecked(e, t, Poly::one());
            }
            return Scalar::from_parts_unchecked(e, t, self.den.clone());
        }
        if self.den.is_one() {
            let t = a.mul(&o.den).add(&c);
            return Scalar::from_parts_unchecked(e, t, o.den.clone());
        }
        if o.den.is_one() {
            let t = a.add(&c.mul(&self.den));
            return Scalar::from_parts_unchecked(e, t, self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        let b_g = self.den.div_exact(&g);
        let d_g = o.den.div_exact(&g);
        let t = a.mul(&d_g).add(&c.mul(&b_g));
        Scalar::from_parts_unchecked(e, t, b_g.mul(&o.den))
    }

    fn mul_impl(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        let shift = self.shift + o.shift;
        if self.den.is_one() && o.den.is_one() {
            return Scalar {
                shift,
                num: self.num.mul(&o.num),
                den: Poly::one(),
            };
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1);
        let d2 = o.den.div_exact(&g1);
        let n2 = o.num.div_exact(&g2);
        let d1 = self.den.div_exact(&g2);
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let lead = den.lead().unwrap().clone();
        if lead.is_one() {
            Scalar { shift, num, den }
        } else {
            let inv = lead.inv().unwrap();
            Scalar {
                shift,
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    /// Exact substitution `s ← s0`.
    pub fn eval_at_s(&self, s0: &BigRational) -> Result<Gq, FieldError> {
        self.eval_at_gq(&Gq::real(s0.clone()))
    }

    pub fn eval_at_gq(&self, s0: &Gq) -> Result<Gq, FieldError> {
        if self.is_zero() {
            return Ok(Gq::zero());
        }
        let d = self.den.eval(s0);
        if d.is_zero() || (s0.is_zero() && self.shift < 0) {
            return Err(FieldError::Pole(s0.to_string()));
        }
        let mut v = self.num.eval(s0).mul_ref(&d.inv().unwrap());
        let sp = if self.shift >= 0 { s0.clone() } else { s0.inv().unwrap() };
        for _ in 0..self.shift.abs() {
            v = v.mul_ref(&sp);
        }
        Ok(v)
    }

    /// Evaluate at a rational `q0` that is the square of a rational `s0 > 0`.
    pub fn eval_at_q(&self, q0: &BigRational) -> Result<Gq, FieldError> {
        let s0 = rational_sqrt(q0).ok_or_else(|| FieldError::Parse(format!("{q0} is not a rational square")))?;
        self.eval_at_s(&s0)
    }

    /// Canonical serialization `(e:c e:c ...)/(e:c ...)`; the numerator carries the `s` shift.
    pub fn to_canonical_string(&self) -> String {
        let num = terms_string(&self.num, self.shift);
        let den = terms_string(&self.den, 0);
        format!("({num})/({den})")
    }

    pub fn parse(src: &str) -> Result<Scalar, FieldError> {
        let err = || FieldError::Parse(src.to_string());
        let t = src.trim();
        if let Some(rest) = t.strip_prefix('(') {
            let (n, d) = rest.split_once(")/(").ok_or_else(err)?;
            let d = d.strip_suffix(')').ok_or_else(err)?;
            let num = parse_terms(n).ok_or_else(err)?;
            let den = parse_terms(d).ok_or_else(err)?;
            return num.checked_div(&den);
        }
        // Plain Gaussian rational constant.
        Gq::parse(t).map(Scalar::from_gq).ok_or_else(err)
    }

    /// Human-readable rendering in powers of q (half-integer exponents allowed).
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let num = pretty_poly(&self.num, self.shift);
        if self.den.is_one() {
            num
        } else {
            format!("({num})/({})", pretty_poly(&self.den, 0))
        }
    }
}

fn terms_string(p: &Poly, shift: i64) -> String {
    let mut out = Vec::new();
    for (k, c) in p.c.iter().enumerate() {
        if !c.is_zero() {
            out.push(format!("{}:{}", k as i64 + shift, c));
        }
    }
    if out.is_empty() {
        "0:0".into()
    } else {
        out.join(" ")
    }
}

fn parse_terms(src: &str) -> Option<Scalar> {
    let mut acc = Scalar::zero();
    for tok in src.split_whitespace() {
        let (e, c) = tok.split_once(':')?;
        let e: i64 = e.parse().ok()?;
        let c = Gq::parse(c)?;
        acc += &(Scalar::s_pow(e) * Scalar::from_gq(c));
    }
    Some(acc)
}

fn q_power_label(e: i64) -> String {
    if e % 2 == 0 {
        let k = e / 2;
        if k == 1 {
            "q".into()
        } else {
            format!("q^{k}")
        }
    } else {
        format!("q^({e}/2)")
    }
}

fn pretty_poly(p: &Poly, shift: i64) -> String {
    let mut s = String::new();
    for (k, c) in p.c.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = k as i64 + shift;
        let (neg, mag) = if c.is_real() && c.re < BigRational::zero() {
            (true, -c)
        } else {
            (false, c.clone())
        };
        let coeff = if mag.is_real() { mag.to_string() } else { format!("({mag})") };
        let body = if e == 0 {
            coeff
        } else if mag.is_one() {
            q_power_label(e)
        } else {
            format!("{coeff}*{}", q_power_label(e))
        };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        s.push_str(&body);
    }
    s
}

/// Rational square root when it exists (positive root).
pub fn rational_sqrt(q0: &BigRational) -> Option<BigRational> {
    if q0 < &BigRational::zero() {
        return None;
    }
    let n = q0.numer().sqrt();
    let d = q0.denom().sqrt();
    if &n * &n == *q0.numer() && &d * &d == *q0.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// Parse a rational `p` or `p/r`.
pub fn parse_rational(src: &str) -> Option<BigRational> {
    parse_rat(src)
}

pub fn rational(p: i64, r: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(r))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                $body(self, o)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                $body(&self, &o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                $body(&self, o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                $body(self, &o)
            }
        }
    };
}

binop!(Add, add, |a: &Scalar, b: &Scalar| a.add_impl(b, false));
binop!(Sub, sub, |a: &Scalar, b: &Scalar| a.add_impl(b, true));
binop!(Mul, mul, |a: &Scalar, b: &Scalar| a.mul_impl(b));
binop!(Div, div, |a: &Scalar, b: &Scalar| a.checked_div(b).expect("division by zero scalar"));

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        *self = self.add_impl(o, false);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        *self = self.add_impl(o, true);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = self.mul_impl(o);
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            shift: self.shift,
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            shift: self.shift,
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Scalar {
        Scalar::from_int(v)
    }
}

impl Zero for Scalar {
    fn zero() -> Scalar {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Scalar {
        Scalar::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Scalar {
        Scalar::q()
    }

    #[test]
    fn inverse_of_q() {
        assert!((q() * q().inv().unwrap()).is_one());
    }

    #[test]
    fn additive_inverse() {
        let a = Scalar::one() - q() * q();
        let b = q() * q() - Scalar::one();
        assert!((a + b).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let qi = Scalar::q_pow(-1);
        let lhs = (&qi - &q()) * (&qi + &q());
        assert_eq!(lhs, Scalar::q_pow(-2) - Scalar::q_pow(2));
    }

    #[test]
    fn rational_functions_cancel() {
        let one_minus_q2 = Scalar::one() - Scalar::q_pow(2);
        let one_minus_q = Scalar::one() - q();
        let r = &one_minus_q2 / &one_minus_q;
        assert_eq!(r, Scalar::one() + q());
        assert!(r.is_laurent());
    }

    #[test]
    fn evaluation() {
        let half = rational(1, 2);
        assert_eq!(q().eval_at_s(&half).unwrap(), Gq::real(rational(1, 4)));
        let a = Scalar::one() - Scalar::q_pow(2);
        assert_eq!(a.eval_at_s(&half).unwrap(), Gq::real(rational(15, 16)));
        let pole = (Scalar::one() - q()).inv().unwrap();
        assert!(matches!(pole.eval_at_s(&rational(1, 1)), Err(FieldError::Pole(_))));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Scalar::one().checked_div(&Scalar::zero()), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn serialization_round_trip() {
        let a = (Scalar::s_pow(-3) + Scalar::i() * Scalar::q_pow(2)) / (Scalar::one() - Scalar::q_pow(3));
        let text = a.to_canonical_string();
        assert_eq!(Scalar::parse(&text).unwrap(), a);
        assert_eq!(Scalar::parse("1").unwrap(), Scalar::one());
        assert_eq!(Scalar::parse("(0:1)/(0:1)").unwrap(), Scalar::one());
    }

    #[test]
    fn conjugation_flips_i_only() {
        let a = Scalar::i() * q() + Scalar::from_int(3);
        assert_eq!(a.conj(), Scalar::from_int(3) - Scalar::i() * q());
        assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn pretty_output() {
        let a = Scalar::one() - Scalar::q_pow(2);
        assert_eq!(a.pretty(), "1 - q^2");
        assert_eq!(Scalar::s_pow(1).pretty(), "q^(1/2)");
    }

    #[test]
    fn rational_square_roots() {
        assert_eq!(rational_sqrt(&rational(81, 100)), Some(rational(9, 10)));
        assert_eq!(rational_sqrt(&rational(1, 2)), None);
    }
}
