//! Pairs of skew-symmetric lexicographic two-row arrays.
//!
//! `π1` has rows `b` (top) over `a`; `π2` has rows `c` over `d`. The dual of
//! `a_i` is `c_{t+1-i}` and the dual of `b_i` is `d_{t+1-i}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiset::PlaneMultiset;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TwoRowArray {
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
}

impl TwoRowArray {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::LengthMismatch);
        }
        if top.iter().chain(&bottom).any(|&x| x == 0) {
            return Err(Error::ZeroEntry);
        }
        Ok(TwoRowArray { top, bottom })
    }

    pub fn degree(&self) -> usize {
        self.top.len()
    }

    pub fn columns(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.top.iter().copied().zip(self.bottom.iter().copied())
    }
}

/// `{π1, π2}` with `π1 = (b over a)` and `π2 = (c over d)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPair", into = "RawPair")]
pub struct SkewPair {
    pi1: TwoRowArray,
    pi2: TwoRowArray,
}

#[derive(Serialize, Deserialize)]
struct RawPi1 {
    b: Vec<u32>,
    a: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RawPi2 {
    c: Vec<u32>,
    d: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RawPair {
    pi1: RawPi1,
    pi2: RawPi2,
}

impl TryFrom<RawPair> for SkewPair {
    type Error = Error;
    fn try_from(r: RawPair) -> Result<Self> {
        SkewPair::new(r.pi1.b, r.pi1.a, r.pi2.c, r.pi2.d)
    }
}

impl From<SkewPair> for RawPair {
    fn from(p: SkewPair) -> RawPair {
        RawPair {
            pi1: RawPi1 { b: p.pi1.top, a: p.pi1.bottom },
            pi2: RawPi2 { c: p.pi2.top, d: p.pi2.bottom },
        }
    }
}

/// One of the six defining conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::I => "(i)",
            Condition::II => "(ii)",
            Condition::III => "(iii)",
            Condition::IV => "(iv)",
            Condition::V => "(v)",
            Condition::VI => "(vi)",
        };
        f.write_str(s)
    }
}

/// A violated condition with its 1-based column index when one applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Violation {
    pub condition: Condition,
    pub index: Option<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "{} at i={}", self.condition, i),
            None => write!(f, "{}", self.condition),
        }
    }
}

impl SkewPair {
    pub fn new(b: Vec<u32>, a: Vec<u32>, c: Vec<u32>, d: Vec<u32>) -> Result<Self> {
        let pi1 = TwoRowArray::new(b, a)?;
        let pi2 = TwoRowArray::new(c, d)?;
        if pi1.degree() != pi2.degree() {
            return Err(Error::LengthMismatch);
        }
        Ok(SkewPair { pi1, pi2 })
    }

    pub fn empty() -> Self {
        SkewPair::default()
    }

    pub fn pi1(&self) -> &TwoRowArray {
        &self.pi1
    }

    pub fn pi2(&self) -> &TwoRowArray {
        &self.pi2
    }

    pub fn b(&self) -> &[u32] {
        &self.pi1.top
    }

    pub fn a(&self) -> &[u32] {
        &self.pi1.bottom
    }

    pub fn c(&self) -> &[u32] {
        &self.pi2.top
    }

    pub fn d(&self) -> &[u32] {
        &self.pi2.bottom
    }

    /// Number of columns `t`.
    pub fn t(&self) -> usize {
        self.pi1.degree()
    }

    /// `2t`.
    pub fn degree(&self) -> usize {
        2 * self.t()
    }

    pub fn is_negative(&self) -> bool {
        self.a().iter().zip(self.b()).all(|(a, b)| a < b)
    }

    pub fn is_positive(&self) -> bool {
        self.a().iter().zip(self.b()).all(|(a, b)| a > b)
    }

    pub fn is_nonvanishing(&self) -> bool {
        self.a().iter().zip(self.b()).all(|(a, b)| a != b)
    }

    /// Every violated condition, in condition order.
    pub fn violations(&self) -> Vec<Violation> {
        let t = self.t();
        let (a, b, c, d) = (self.a(), self.b(), self.c(), self.d());
        let mut out = Vec::new();
        let at = |condition, i| Violation { condition, index: Some(i) };
        for i in 1..t {
            if (b[i - 1], a[i - 1]) < (b[i], a[i]) {
                out.push(at(Condition::I, i));
            }
        }
        for i in 1..t {
            if (d[i - 1], c[i - 1]) < (d[i], c[i]) {
                out.push(at(Condition::II, i));
            }
        }
        for i in 0..t {
            if a[i] >= d[t - 1 - i] {
                out.push(at(Condition::III, i + 1));
            }
        }
        for i in 0..t {
            if b[i] >= c[t - 1 - i] {
                out.push(at(Condition::IV, i + 1));
            }
        }
        if !self.has_duality_property() {
            out.push(Violation { condition: Condition::V, index: None });
        }
        for k in 0..t {
            let (dk, ck) = (d[t - 1 - k], c[t - 1 - k]);
            if (a[k] < b[k] && dk >= ck) || (a[k] > b[k] && dk <= ck) {
                out.push(at(Condition::VI, k + 1));
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidPair(v))
        }
    }

    fn has_duality_property(&self) -> bool {
        let t = self.t();
        let (a, b, c, d) = (self.a(), self.b(), self.c(), self.d());
        let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(4 * t);
        for i in 0..t {
            pairs.push((a[i], c[t - 1 - i]));
            pairs.push((b[i], d[t - 1 - i]));
            pairs.push((c[i], a[t - 1 - i]));
            pairs.push((d[i], b[t - 1 - i]));
        }
        pairs.sort_unstable_by(|u, v| u.0.cmp(&v.0).then(v.1.cmp(&u.1)));
        pairs.windows(2).all(|w| if w[0].0 == w[1].0 { w[0].1 == w[1].1 } else { w[0].1 > w[1].1 })
    }

    /// `ψ`: columns `(b over a) ↦ (a,b)` and `(c over d) ↦ (d,c)`.
    pub fn psi(&self) -> (PlaneMultiset, PlaneMultiset) {
        let u1 = self.pi1.columns().map(|(b, a)| (a, b)).collect();
        let u2 = self.pi2.columns().map(|(c, d)| (d, c)).collect();
        (
            PlaneMultiset::new(u1).expect("positive"),
            PlaneMultiset::new(u2).expect("positive"),
        )
    }

    /// `ψ⁻¹` with canonical column order: `π1` by `(b, a)` descending and
    /// `π2` by `(d, c)` descending.
    pub fn psi_inv(u1: &PlaneMultiset, u2: &PlaneMultiset) -> Result<SkewPair> {
        if u1.len() != u2.len() {
            return Err(Error::LengthMismatch);
        }
        let mut c1: Vec<(u32, u32)> = u1.points().iter().map(|&(a, b)| (b, a)).collect();
        c1.sort_unstable_by(|x, y| y.cmp(x));
        let mut c2: Vec<(u32, u32)> = u2.points().to_vec();
        c2.sort_unstable_by(|x, y| y.cmp(x));
        SkewPair::new(
            c1.iter().map(|x| x.0).collect(),
            c1.iter().map(|x| x.1).collect(),
            c2.iter().map(|x| x.1).collect(),
            c2.iter().map(|x| x.0).collect(),
        )
    }

    /// `L = {l(π1), l^t(π2)}`: swap the rows of each array and re-sort.
    pub fn l_involution(&self) -> Result<SkewPair> {
        self.validate()?;
        Ok(self.l_unchecked())
    }

    pub(crate) fn l_unchecked(&self) -> SkewPair {
        let (u1, u2) = self.psi();
        SkewPair::psi_inv(&u1.swapped(), &u2.swapped()).expect("equal sizes")
    }

    /// Negative part (columns with `a < b`) and positive part, each with the
    /// matching `π2` columns `t+1-i`.
    pub fn split_parts(&self) -> Result<(SkewPair, SkewPair)> {
        let t = self.t();
        if let Some(k) = (0..t).find(|&k| self.a()[k] == self.b()[k]) {
            return Err(Error::VanishingColumn(k + 1));
        }
        let pick = |neg: bool| {
            let ks: Vec<usize> = (0..t).filter(|&k| (self.a()[k] < self.b()[k]) == neg).collect();
            let js: Vec<usize> = ks.iter().rev().map(|&k| t - 1 - k).collect();
            SkewPair::new(
                ks.iter().map(|&k| self.b()[k]).collect(),
                ks.iter().map(|&k| self.a()[k]).collect(),
                js.iter().map(|&j| self.c()[j]).collect(),
                js.iter().map(|&j| self.d()[j]).collect(),
            )
            .expect("equal lengths")
        };
        Ok((pick(true), pick(false)))
    }

    /// Union of two pairs, re-sorted canonically.
    pub fn merge(&self, other: &SkewPair) -> SkewPair {
        let (u1, u2) = self.psi();
        let (v1, v2) = other.psi();
        SkewPair::psi_inv(&u1.union(&v1), &u2.union(&v2)).expect("equal sizes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture;

    #[test]
    fn fixture_is_valid() {
        assert!(fixture::pair().is_valid());
        assert!(SkewPair::empty().is_valid());
        assert!(fixture::pair().is_negative());
    }

    #[test]
    fn corrupted_a1_violates_iii() {
        let p = fixture::pair();
        let mut a = p.a().to_vec();
        a[0] = 13;
        let q = SkewPair::new(p.b().to_vec(), a, p.c().to_vec(), p.d().to_vec()).unwrap();
        let v = q.violations();
        assert!(v.contains(&Violation { condition: Condition::III, index: Some(1) }));
        assert_eq!(Error::InvalidPair(v.clone()).to_string().contains("(iii) at i=1"), true);
    }

    #[test]
    fn length_mismatch() {
        assert_eq!(SkewPair::new(vec![1], vec![], vec![], vec![]), Err(Error::LengthMismatch));
        assert_eq!(SkewPair::new(vec![1], vec![1], vec![], vec![]), Err(Error::LengthMismatch));
    }

    #[test]
    fn psi_fixture() {
        let (u1, u2) = fixture::pair().psi();
        let mut e1 = vec![(4, 17), (3, 17), (3, 14), (7, 10), (4, 9)];
        e1.sort();
        let mut e2 = vec![(20, 25), (19, 22), (15, 26), (12, 26), (12, 25)];
        e2.sort();
        assert_eq!(u1.points(), &e1[..]);
        assert_eq!(u2.points(), &e2[..]);
        assert_eq!(SkewPair::psi_inv(&u1, &u2).unwrap(), fixture::pair());
        let (e1, e2) = SkewPair::empty().psi();
        assert_eq!(SkewPair::psi_inv(&e1, &e2).unwrap(), SkewPair::empty());
    }

    #[test]
    fn l_fixture() {
        let p = fixture::pair();
        let l = p.l_involution().unwrap();
        assert!(l.is_valid());
        assert!(l.is_positive());
        assert_eq!(l.l_involution().unwrap(), p);
        assert_eq!(SkewPair::empty().l_involution().unwrap(), SkewPair::empty());
    }

    #[test]
    fn split_fixture() {
        let p = fixture::pair();
        assert_eq!(p.split_parts().unwrap(), (p.clone(), SkewPair::empty()));
        let l = p.l_involution().unwrap();
        assert_eq!(l.split_parts().unwrap(), (SkewPair::empty(), l.clone()));
        assert_eq!(SkewPair::empty().split_parts().unwrap(), (SkewPair::empty(), SkewPair::empty()));
        let v = SkewPair::new(vec![2], vec![2], vec![3], vec![3]).unwrap();
        assert_eq!(v.split_parts(), Err(Error::VanishingColumn(1)));
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_string(&fixture::pair()).unwrap();
        assert_eq!(
            s,
            r#"{"pi1":{"b":[17,17,14,10,9],"a":[4,3,3,7,4]},"pi2":{"c":[25,22,26,26,25],"d":[20,19,15,12,12]}}"#
        );
        assert_eq!(serde_json::from_str::<SkewPair>(&s).unwrap(), fixture::pair());
    }
}
