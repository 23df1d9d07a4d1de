//! Gaussian rationals `re + im·i` over `BigRational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gq {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gq {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gq { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Gq { re, im: BigRational::zero() }
    }

    pub fn from_int(v: i64) -> Self {
        Gq::real(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn i() -> Self {
        Gq {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn zero() -> Self {
        Gq {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        Gq::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Gq {
        Gq {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Gq> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(Gq::real(self.re.recip()));
        }
        let n = self.norm_sqr();
        Some(Gq {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn mul_ref(&self, o: &Gq) -> Gq {
        if self.im.is_zero() && o.im.is_zero() {
            return Gq::real(&self.re * &o.re);
        }
        Gq {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn add_ref(&self, o: &Gq) -> Gq {
        Gq {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn sub_ref(&self, o: &Gq) -> Gq {
        Gq {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn add_assign_ref(&mut self, o: &Gq) {
        self.re += &o.re;
        if !o.im.is_zero() {
            self.im += &o.im;
        }
    }

    pub fn sub_assign_ref(&mut self, o: &Gq) {
        self.re -= &o.re;
        if !o.im.is_zero() {
            self.im -= &o.im;
        }
    }

    /// Parse `"a"`, `"a+bi"`, `"a-bi"`, `"bi"` with rational parts `p` or `p/r`.
    pub fn parse(src: &str) -> Option<Gq> {
        let t = src.trim();
        if let Some(body) = t.strip_suffix('i') {
            // split at the last sign that is not leading
            let bytes = body.as_bytes();
            let mut cut = None;
            for k in (1..bytes.len()).rev() {
                if bytes[k] == b'+' || bytes[k] == b'-' {
                    cut = Some(k);
                    break;
                }
            }
            match cut {
                Some(k) => {
                    let re = parse_rat(&body[..k])?;
                    let im_str = &body[k..];
                    let im = if im_str == "+" || im_str == "-" {
                        parse_rat(&format!("{im_str}1"))?
                    } else {
                        parse_rat(im_str)?
                    };
                    Some(Gq { re, im })
                }
                None => {
                    let im = if body.is_empty() || body == "+" || body == "-" {
                        parse_rat(&format!("{body}1"))?
                    } else {
                        parse_rat(body)?
                    };
                    Some(Gq { re: BigRational::zero(), im })
                }
            }
        } else {
            Some(Gq::real(parse_rat(t)?))
        }
    }

    /// Sign of a real value: -1, 0, 1. `None` when the imaginary part is nonzero.
    pub fn real_sign(&self) -> Option<i32> {
        if !self.im.is_zero() {
            return None;
        }
        Some(if self.re.is_positive() {
            1
        } else if self.re.is_negative() {
            -1
        } else {
            0
        })
    }
}

pub fn parse_rat(src: &str) -> Option<BigRational> {
    let t = src.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    if let Some((p, r)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let r: BigInt = r.trim().parse().ok()?;
        if r.is_zero() {
            return None;
        }
        Some(BigRational::new(p, r))
    } else {
        let p: BigInt = t.parse().ok()?;
        Some(BigRational::from_integer(p))
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Gq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", fmt_rat(&self.re))
        } else if self.re.is_zero() {
            write!(f, "{}i", fmt_rat(&self.im))
        } else if self.im.is_negative() {
            write!(f, "{}{}i", fmt_rat(&self.re), fmt_rat(&self.im))
        } else {
            write!(f, "{}+{}i", fmt_rat(&self.re), fmt_rat(&self.im))
        }
    }
}

impl Add for Gq {
    type Output = Gq;
    fn add(self, o: Gq) -> Gq {
        self.add_ref(&o)
    }
}

impl Sub for Gq {
    type Output = Gq;
    fn sub(self, o: Gq) -> Gq {
        self.sub_ref(&o)
    }
}

impl Mul for Gq {
    type Output = Gq;
    fn mul(self, o: Gq) -> Gq {
        self.mul_ref(&o)
    }
}

impl Neg for Gq {
    type Output = Gq;
    fn neg(self) -> Gq {
        Gq { re: -self.re, im: -self.im }
    }
}

impl Neg for &Gq {
    type Output = Gq;
    fn neg(self) -> Gq {
        Gq {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["0", "3", "-7/2", "1+2i", "1/2-3/4i", "5i", "-i"] {
            let g = Gq::parse(s).unwrap();
            let back = Gq::parse(&g.to_string()).unwrap();
            assert_eq!(g, back, "{s}");
        }
        assert_eq!(Gq::parse("-i").unwrap(), -Gq::i());
    }

    #[test]
    fn inverse_of_gaussian() {
        let g = Gq::parse("1+2i").unwrap();
        let prod = g.mul_ref(&g.inv().unwrap());
        assert!(prod.is_one());
        assert!(Gq::zero().inv().is_none());
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(Gq::i().mul_ref(&Gq::i()), Gq::from_int(-1));
    }
}
