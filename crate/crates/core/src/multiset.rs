//! Finite multisets on ℕ and ℕ², formal differences and the counting order.
//!
//! A formal difference `A − B` stands for the multiset `A ∪̇ (ℕ ∖ B)`. Two of
//! them are compared through the counting functional
//! `|D^{≤z}| = count_le(A, z) + z − count_le(B, z)`: `D1 ≤ D2` iff
//! `|D1^{≤z}| ≥ |D2^{≤z}|` for every `z ≥ 1`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Outcome of comparing two elements of a partial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Comparison {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl Comparison {
    /// `LESS` or `EQUAL`.
    pub fn is_le(self) -> bool {
        matches!(self, Comparison::Less | Comparison::Equal)
    }

    pub fn is_ge(self) -> bool {
        matches!(self, Comparison::Greater | Comparison::Equal)
    }

    pub fn reverse(self) -> Comparison {
        match self {
            Comparison::Less => Comparison::Greater,
            Comparison::Greater => Comparison::Less,
            c => c,
        }
    }
}

/// Sorted multiset of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct NatMultiset(Vec<u32>);

impl NatMultiset {
    pub fn new(mut entries: Vec<u32>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::ZeroEntry);
        }
        entries.sort_unstable();
        Ok(NatMultiset(entries))
    }

    pub fn empty() -> Self {
        NatMultiset(Vec::new())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// Number of entries `≤ z`, counted with multiplicity.
    pub fn count_le(&self, z: u32) -> usize {
        self.0.partition_point(|&x| x <= z)
    }

    pub fn multiplicity(&self, x: u32) -> usize {
        self.count_le(x) - self.0.partition_point(|&y| y < x)
    }

    /// True iff no entry repeats.
    pub fn is_set(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    pub fn union(&self, other: &NatMultiset) -> NatMultiset {
        NatMultiset(merge(&self.0, &other.0))
    }

    /// Multiset minus `self \_m other`.
    pub fn minus(&self, other: &NatMultiset) -> Result<NatMultiset> {
        sorted_minus(&self.0, &other.0).map(NatMultiset)
    }
}

impl TryFrom<Vec<u32>> for NatMultiset {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        NatMultiset::new(v)
    }
}

impl From<NatMultiset> for Vec<u32> {
    fn from(m: NatMultiset) -> Vec<u32> {
        m.0
    }
}

impl fmt::Display for NatMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// Lexicographically sorted multiset of points of ℕ².
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u32, u32)>", into = "Vec<(u32, u32)>")]
pub struct PlaneMultiset(Vec<(u32, u32)>);

impl PlaneMultiset {
    pub fn new(mut points: Vec<(u32, u32)>) -> Result<Self> {
        if points.iter().any(|&(x, y)| x == 0 || y == 0) {
            return Err(Error::ZeroEntry);
        }
        points.sort_unstable();
        Ok(PlaneMultiset(points))
    }

    pub fn empty() -> Self {
        PlaneMultiset(Vec::new())
    }

    pub fn points(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn proj1(&self) -> NatMultiset {
        NatMultiset::new(self.0.iter().map(|p| p.0).collect()).expect("positive")
    }

    pub fn proj2(&self) -> NatMultiset {
        NatMultiset::new(self.0.iter().map(|p| p.1).collect()).expect("positive")
    }

    /// Exchange the two coordinates of every point.
    pub fn swapped(&self) -> PlaneMultiset {
        PlaneMultiset::new(self.0.iter().map(|&(x, y)| (y, x)).collect()).expect("positive")
    }

    /// Distinct points, in order.
    pub fn support(&self) -> Vec<(u32, u32)> {
        let mut s = self.0.clone();
        s.dedup();
        s
    }

    pub fn union(&self, other: &PlaneMultiset) -> PlaneMultiset {
        PlaneMultiset(merge(&self.0, &other.0))
    }

    pub fn minus(&self, other: &PlaneMultiset) -> Result<PlaneMultiset> {
        sorted_minus(&self.0, &other.0).map(PlaneMultiset)
    }

    /// First coordinates strictly increase and second coordinates strictly decrease.
    pub fn is_chain(&self) -> bool {
        self.0.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 > w[1].1)
    }

    /// The formal difference `proj1 − proj2`.
    pub fn formal_diff(&self) -> Result<FormalDiff> {
        FormalDiff::new(self.proj1(), self.proj2())
    }
}

impl TryFrom<Vec<(u32, u32)>> for PlaneMultiset {
    type Error = Error;
    fn try_from(v: Vec<(u32, u32)>) -> Result<Self> {
        PlaneMultiset::new(v)
    }
}

impl From<PlaneMultiset> for Vec<(u32, u32)> {
    fn from(m: PlaneMultiset) -> Vec<(u32, u32)> {
        m.0
    }
}

/// `plus − minus`, i.e. `plus ∪̇ (ℕ ∖ minus)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDiff", into = "RawDiff")]
pub struct FormalDiff {
    plus: NatMultiset,
    minus: NatMultiset,
}

#[derive(Serialize, Deserialize)]
struct RawDiff {
    plus: NatMultiset,
    minus: NatMultiset,
}

impl TryFrom<RawDiff> for FormalDiff {
    type Error = Error;
    fn try_from(r: RawDiff) -> Result<Self> {
        FormalDiff::new(r.plus, r.minus)
    }
}

impl From<FormalDiff> for RawDiff {
    fn from(d: FormalDiff) -> RawDiff {
        RawDiff { plus: d.plus, minus: d.minus }
    }
}

impl FormalDiff {
    pub fn new(plus: NatMultiset, minus: NatMultiset) -> Result<Self> {
        if let Some(w) = minus.entries().windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MinusNotSet(w[0]));
        }
        Ok(FormalDiff { plus, minus })
    }

    /// `∅ − ∅`, which stands for ℕ itself.
    pub fn naturals() -> Self {
        FormalDiff { plus: NatMultiset::empty(), minus: NatMultiset::empty() }
    }

    pub fn plus(&self) -> &NatMultiset {
        &self.plus
    }

    pub fn minus(&self) -> &NatMultiset {
        &self.minus
    }

    /// `|D^{≤z}|`.
    pub fn count_le(&self, z: u32) -> i64 {
        self.plus.count_le(z) as i64 + z as i64 - self.minus.count_le(z) as i64
    }

    /// Value of `|D^{≤z}| − z` once `z` exceeds every entry.
    pub fn tail(&self) -> i64 {
        self.plus.len() as i64 - self.minus.len() as i64
    }

    fn max_entry(&self) -> u32 {
        self.plus.max_entry().unwrap_or(0).max(self.minus.max_entry().unwrap_or(0))
    }
}

/// Counting order on formal differences.
pub fn diff_compare(d1: &FormalDiff, d2: &FormalDiff) -> Comparison {
    let top = d1.max_entry().max(d2.max_entry());
    let mut le = true;
    let mut ge = true;
    let mut note = |c1: i64, c2: i64| match c1.cmp(&c2) {
        Ordering::Greater => ge = false,
        Ordering::Less => le = false,
        Ordering::Equal => {}
    };
    for z in 1..=top {
        note(d1.count_le(z), d2.count_le(z));
    }
    note(d1.tail(), d2.tail());
    match (le, ge) {
        (true, true) => Comparison::Equal,
        (true, false) => Comparison::Less,
        (false, true) => Comparison::Greater,
        (false, false) => Comparison::Incomparable,
    }
}

/// Order on multisets of ℕ² through `proj1 − proj2`.
pub fn plane_compare(s: &PlaneMultiset, t: &PlaneMultiset) -> Result<Comparison> {
    Ok(diff_compare(&s.formal_diff()?, &t.formal_diff()?))
}

fn merge<T: Ord + Copy>(a: &[T], b: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn sorted_minus<T: Ord + Copy + fmt::Debug>(a: &[T], b: &[T]) -> Result<Vec<T>> {
    let mut out = Vec::with_capacity(a.len());
    let mut j = 0;
    for &x in a {
        if j < b.len() && b[j] == x {
            j += 1;
        } else if j < b.len() && b[j] < x {
            return Err(Error::ContainmentViolation(format!("{:?}", b[j])));
        } else {
            out.push(x);
        }
    }
    if j < b.len() {
        return Err(Error::ContainmentViolation(format!("{:?}", b[j])));
    }
    Ok(out)
}
