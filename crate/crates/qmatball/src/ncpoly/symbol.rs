use smallvec::SmallVec;
use std::fmt;

/// Generator families. The declaration order is the global symbol order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Z = 0,
    Dz = 1,
    F0 = 2,
    Dzs = 3,
    Zs = 4,
}

impl Kind {
    pub const ALL: [Kind; 5] = [Kind::Z, Kind::Dz, Kind::F0, Kind::Dzs, Kind::Zs];

    fn from_code(c: u16) -> Kind {
        match c {
            0 => Kind::Z,
            1 => Kind::Dz,
            2 => Kind::F0,
            3 => Kind::Dzs,
            _ => Kind::Zs,
        }
    }

    pub fn prefix(self) -> &'static str {
        match self {
            Kind::Z => "z",
            Kind::Dz => "dz",
            Kind::F0 => "f0",
            Kind::Dzs => "dzs",
            Kind::Zs => "zs",
        }
    }

    /// Holomorphic kinds carry H₀-degree +1, their conjugates −1.
    pub fn h0_degree(self) -> i32 {
        match self {
            Kind::Z | Kind::Dz => 1,
            Kind::F0 => 0,
            Kind::Dzs | Kind::Zs => -1,
        }
    }

    pub fn star(self) -> Kind {
        match self {
            Kind::Z => Kind::Zs,
            Kind::Zs => Kind::Z,
            Kind::Dz => Kind::Dzs,
            Kind::Dzs => Kind::Dz,
            Kind::F0 => Kind::F0,
        }
    }

    pub fn is_form(self) -> bool {
        matches!(self, Kind::Dz | Kind::Dzs)
    }
}

/// A generator symbol: kind plus indices `a` (row, `1..=n`) and `α` (column, `1..=m`).
///
/// Packed into a `u16` so that the derived order is kind, then `a`, then `α`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sym(u16);

impl Sym {
    pub fn new(kind: Kind, a: u8, alpha: u8) -> Sym {
        debug_assert!(a < 16 && alpha < 16);
        Sym(((kind as u16) << 8) | ((a as u16) << 4) | alpha as u16)
    }

    pub fn z(a: u8, alpha: u8) -> Sym {
        Sym::new(Kind::Z, a, alpha)
    }

    pub fn zs(a: u8, alpha: u8) -> Sym {
        Sym::new(Kind::Zs, a, alpha)
    }

    pub fn dz(a: u8, alpha: u8) -> Sym {
        Sym::new(Kind::Dz, a, alpha)
    }

    pub fn dzs(a: u8, alpha: u8) -> Sym {
        Sym::new(Kind::Dzs, a, alpha)
    }

    pub fn f0() -> Sym {
        Sym::new(Kind::F0, 0, 0)
    }

    pub fn kind(self) -> Kind {
        Kind::from_code(self.0 >> 8)
    }

    pub fn a(self) -> u8 {
        ((self.0 >> 4) & 0xf) as u8
    }

    pub fn alpha(self) -> u8 {
        (self.0 & 0xf) as u8
    }

    pub fn code(self) -> u16 {
        self.0
    }

    pub fn with_kind(self, kind: Kind) -> Sym {
        Sym::new(kind, self.a(), self.alpha())
    }

    pub fn star(self) -> Sym {
        self.with_kind(self.kind().star())
    }

    pub fn h0_degree(self) -> i32 {
        self.kind().h0_degree()
    }

    /// Weight in ℤ^{N−1} (components `H_1..H_{N−1}`) for the `(m, n)` matrix space.
    ///
    /// `z_a^α = u_a ⊗ v^α`: the first `n−1` components come from `u_a`, the
    /// last `m−1` from `v^α`, and the middle one is 2, 1 or 0 according to how
    /// many of `a = n`, `α = m` hold.
    pub fn weight(self, m: usize, n: usize) -> Vec<i32> {
        let nn = m + n;
        let mut w = vec![0i32; nn - 1];
        let kind = self.kind();
        if kind == Kind::F0 {
            return w;
        }
        let a = self.a() as usize;
        let al = self.alpha() as usize;
        for j in 1..n {
            if a == j {
                w[j - 1] += 1;
            }
            if a == j + 1 {
                w[j - 1] -= 1;
            }
        }
        for i in 1..m {
            let j = n + i;
            if al == m - i {
                w[j - 1] += 1;
            }
            if al == m - i + 1 {
                w[j - 1] -= 1;
            }
        }
        w[n - 1] = (a == n) as i32 + (al == m) as i32;
        if kind.h0_degree() < 0 {
            for x in w.iter_mut() {
                *x = -*x;
            }
        }
        w
    }

    pub fn token(self) -> String {
        match self.kind() {
            Kind::F0 => "f0".into(),
            k => format!("{}[{},{}]", k.prefix(), self.a(), self.alpha()),
        }
    }

    pub fn parse_token(t: &str) -> Option<Sym> {
        let t = t.trim();
        if t == "f0" {
            return Some(Sym::f0());
        }
        let (pre, rest) = t.split_once('[')?;
        let rest = rest.strip_suffix(']')?;
        let (a, al) = rest.split_once(',')?;
        let a: u8 = a.trim().parse().ok()?;
        let al: u8 = al.trim().parse().ok()?;
        if a == 0 || al == 0 || a > 15 || al > 15 {
            return None;
        }
        let kind = match pre {
            "z" => Kind::Z,
            "zs" => Kind::Zs,
            "dz" => Kind::Dz,
            "dzs" => Kind::Dzs,
            _ => return None,
        };
        Some(Sym::new(kind, a, al))
    }
}

impl fmt::Debug for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

pub type Word = SmallVec<[Sym; 8]>;

pub fn word_h0_degree(w: &[Sym]) -> i32 {
    w.iter().map(|s| s.h0_degree()).sum()
}

pub fn word_weight(w: &[Sym], m: usize, n: usize) -> Vec<i32> {
    let mut acc = vec![0i32; m + n - 1];
    for s in w {
        for (x, y) in acc.iter_mut().zip(s.weight(m, n)) {
            *x += y;
        }
    }
    acc
}

pub fn word_string(w: &[Sym]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|s| s.token()).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn token_round_trip() {
        for s in [Sym::z(1, 2), Sym::zs(2, 1), Sym::dz(3, 3), Sym::dzs(1, 1), Sym::f0()] {
            assert_eq!(Sym::parse_token(&s.token()), Some(s));
        }
        assert_eq!(Sym::parse_token("q[1,1]"), None);
        assert_eq!(Sym::parse_token("z[0,1]"), None);
    }

    #[test]
    fn global_order_is_kind_then_indices() {
        assert!(Sym::z(2, 2) < Sym::dz(1, 1));
        assert!(Sym::z(1, 2) < Sym::z(2, 1));
        assert!(Sym::f0() < Sym::dzs(1, 1));
        assert!(Sym::dzs(2, 2) < Sym::zs(1, 1));
    }

    #[test]
    fn corner_generator_weight() {
        // m = 2, n = 3, N = 5: z_3^2 has H_3 = 2, H_2 = H_4 = -1.
        let w = Sym::z(3, 2).weight(2, 3);
        assert_eq!(w, vec![0, -1, 2, -1]);
        assert_eq!(Sym::f0().weight(2, 3), vec![0; 4]);
        assert_eq!(Sym::zs(3, 2).weight(2, 3), vec![0, 1, -2, 1]);
    }

    #[test]
    fn degrees() {
        let w: Word = [Sym::z(1, 1), Sym::z(1, 1), Sym::zs(1, 1)].into_iter().collect();
        assert_eq!(word_h0_degree(&w), 1);
    }
}
