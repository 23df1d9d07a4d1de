use super::fock::{add_to, basis_upto, degree, norm2, FockIndex, FockVec};
use super::FockError;
use crate::groundfield::Scalar;
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// An operator on the Fock space materialized on input degrees `≤ cutoff`.
///
/// Each stored column is the full image of a basis vector. Columns of input
/// degree `≤ certified` are exact; compositions and adjoints lower the
/// certified degree by the shift bounds of the factors they consume.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedOperator {
    pub legs: usize,
    pub cutoff: u32,
    /// Largest input degree whose columns are exact; `-1` when none are.
    pub certified: i32,
    pub shift: (i32, i32),
    cols: BTreeMap<FockIndex, FockVec>,
}

impl TruncatedOperator {
    /// Materialize an operator from its exact action on basis vectors.
    pub fn from_action(legs: usize, cutoff: u32, shift: (i32, i32), mut apply: impl FnMut(&FockIndex) -> FockVec) -> TruncatedOperator {
        let cols = basis_upto(legs, cutoff)
            .into_iter()
            .map(|k| {
                let c = apply(&k);
                (k, c)
            })
            .collect();
        TruncatedOperator {
            legs,
            cutoff,
            certified: cutoff as i32,
            shift,
            cols,
        }
    }

    pub fn identity(legs: usize, cutoff: u32) -> TruncatedOperator {
        TruncatedOperator::from_action(legs, cutoff, (0, 0), |k| super::fock::unit(k.clone()))
    }

    pub fn column(&self, k: &FockIndex) -> Option<&FockVec> {
        self.cols.get(k)
    }

    pub fn entry(&self, out: &FockIndex, inp: &FockIndex) -> Scalar {
        self.cols.get(inp).and_then(|c| c.get(out)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn columns(&self) -> impl Iterator<Item = (&FockIndex, &FockVec)> {
        self.cols.iter()
    }

    /// Every stored entry lies inside the declared shift band.
    pub fn respects_shift(&self) -> bool {
        self.cols.iter().all(|(k, c)| {
            c.keys().all(|o| {
                let s = degree(o) as i32 - degree(k) as i32;
                s >= self.shift.0 && s <= self.shift.1
            })
        })
    }

    /// `self ∘ other`; exact on input degrees `≤ min(cert(other), cert(self) − hi(other))`.
    pub fn compose(&self, other: &TruncatedOperator) -> TruncatedOperator {
        assert_eq!(self.legs, other.legs);
        let cutoff = self.cutoff.min(other.cutoff);
        let mut cols = BTreeMap::new();
        for (k, c) in &other.cols {
            if degree(k) > cutoff {
                continue;
            }
            let mut out = FockVec::new();
            for (mid, x) in c {
                if let Some(c2) = self.cols.get(mid) {
                    for (o, y) in c2 {
                        add_to(&mut out, o.clone(), x * y);
                    }
                }
            }
            cols.insert(k.clone(), out);
        }
        let certified = (self.certified - other.shift.1.max(0)).min(other.certified).max(-1);
        TruncatedOperator {
            legs: self.legs,
            cutoff,
            certified,
            shift: (self.shift.0 + other.shift.0, self.shift.1 + other.shift.1),
            cols,
        }
    }

    /// Adjoint for the weighted inner product: `(A†)_{lk} = conj(A_{kl}) N_k / N_l`.
    pub fn adjoint(&self) -> TruncatedOperator {
        let mut cols: BTreeMap<FockIndex, FockVec> = self.cols.keys().map(|k| (k.clone(), FockVec::new())).collect();
        for (l, c) in &self.cols {
            for (k, a) in c {
                if let Some(col) = cols.get_mut(k) {
                    let v = &(&a.conj() * &norm2(k)) / &norm2(l);
                    add_to(col, l.clone(), v);
                }
            }
        }
        let certified = (self.certified + self.shift.0.min(0)).max(-1);
        TruncatedOperator {
            legs: self.legs,
            cutoff: self.cutoff,
            certified,
            shift: (-self.shift.1, -self.shift.0),
            cols,
        }
    }

    pub fn add(&self, o: &TruncatedOperator) -> TruncatedOperator {
        self.combine(o, &Scalar::one())
    }

    pub fn sub(&self, o: &TruncatedOperator) -> TruncatedOperator {
        self.combine(o, &Scalar::from_int(-1))
    }

    fn combine(&self, o: &TruncatedOperator, c: &Scalar) -> TruncatedOperator {
        let mut cols = self.cols.clone();
        for (k, col) in &o.cols {
            let e = cols.entry(k.clone()).or_default();
            for (x, v) in col {
                add_to(e, x.clone(), v * c);
            }
        }
        TruncatedOperator {
            legs: self.legs,
            cutoff: self.cutoff.min(o.cutoff),
            certified: self.certified.min(o.certified),
            shift: (self.shift.0.min(o.shift.0), self.shift.1.max(o.shift.1)),
            cols,
        }
    }

    pub fn scale(&self, c: &Scalar) -> TruncatedOperator {
        let mut r = self.clone();
        for col in r.cols.values_mut() {
            *col = super::fock::scale_vec(col, c);
        }
        r
    }

    /// Restriction to the input columns of degree `≤ k`, which must be certified.
    pub fn certified_slice(&self, k: u32) -> Result<TruncatedOperator, FockError> {
        if k as i32 > self.certified {
            return Err(FockError::CutoffTooSmall {
                requested: k,
                certified: self.certified,
            });
        }
        let cols = self.cols.iter().filter(|(i, _)| degree(i) <= k).map(|(i, c)| (i.clone(), c.clone())).collect();
        Ok(TruncatedOperator {
            legs: self.legs,
            cutoff: k,
            certified: k as i32,
            shift: self.shift,
            cols,
        })
    }

    /// Zero on all input degrees `≤ k` (which must be certified).
    pub fn is_zero_on(&self, k: u32) -> bool {
        self.cols.iter().filter(|(i, _)| degree(i) <= k).all(|(_, c)| c.is_empty())
    }

    /// The operator is diagonal on degrees `≤ k` with eigenvalue `f(index)`.
    pub fn is_diagonal_with(&self, k: u32, f: impl Fn(&FockIndex) -> Scalar) -> bool {
        self.cols.iter().filter(|(i, _)| degree(i) <= k).all(|(i, c)| {
            let e = f(i);
            if e.is_zero() {
                c.is_empty()
            } else {
                c.len() == 1 && c.get(i) == Some(&e)
            }
        })
    }

    fn header(&self) -> String {
        format!(
            "legs={} cutoff={} certified={} shift={}..{}",
            self.legs, self.cutoff, self.certified, self.shift.0, self.shift.1
        )
    }

    fn index_string(k: &FockIndex) -> String {
        k.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";")
    }

    /// CSV with one row per nonzero entry: `row,col,value`, after a `#` header.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().from_writer(vec![]);
        w.write_record(["row", "col", "value"]).expect("in-memory write");
        for (k, c) in &self.cols {
            for (o, v) in c {
                w.write_record([Self::index_string(o), Self::index_string(k), v.to_canonical_string()])
                    .expect("in-memory write");
            }
        }
        let body = String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8");
        format!("# {}\n{}", self.header(), body)
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .cols
            .iter()
            .flat_map(|(k, c)| c.iter().map(move |(o, v)| json!({"row": o, "col": k, "value": v.to_canonical_string()})))
            .collect();
        json!({
            "legs": self.legs,
            "cutoff": self.cutoff,
            "certified": self.certified,
            "shift": [self.shift.0, self.shift.1],
            "entries": entries,
        })
    }
}
