//! Notched tableaux and bitableaux.
//!
//! Rows are left-justified with arbitrary lengths. A bitableau `(P,Q)` has
//! equal shapes; its i-th row formal difference is `P_i − Q_i`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiset::{diff_compare, plane_compare, Comparison, FormalDiff, NatMultiset, PlaneMultiset};
use crate::og::IdElement;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NotchedTableau {
    rows: Vec<Vec<u32>>,
}

impl NotchedTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Self {
        NotchedTableau { rows }
    }

    pub fn empty() -> Self {
        NotchedTableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<u32>> {
        &mut self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_row_strict(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn entries(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn min_entry(&self) -> Option<u32> {
        self.entries().min()
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.entries().max()
    }
}

/// Sign classification of a skew-symmetric bitableau.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Positive,
    Nonvanishing { neg: NotchedBitableau, pos: NotchedBitableau },
    Vanishing,
}

/// Equal-shape pair `(P,Q)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBitableau", into = "RawBitableau")]
pub struct NotchedBitableau {
    p: NotchedTableau,
    q: NotchedTableau,
}

#[derive(Serialize, Deserialize)]
struct RawBitableau {
    #[serde(rename = "P")]
    p: NotchedTableau,
    #[serde(rename = "Q")]
    q: NotchedTableau,
}

impl TryFrom<RawBitableau> for NotchedBitableau {
    type Error = Error;
    fn try_from(r: RawBitableau) -> Result<Self> {
        NotchedBitableau::new(r.p, r.q)
    }
}

impl From<NotchedBitableau> for RawBitableau {
    fn from(b: NotchedBitableau) -> RawBitableau {
        RawBitableau { p: b.p, q: b.q }
    }
}

impl NotchedBitableau {
    pub fn new(p: NotchedTableau, q: NotchedTableau) -> Result<Self> {
        if p.shape() != q.shape() {
            return Err(Error::ShapeMismatch);
        }
        if p.entries().chain(q.entries()).any(|x| x == 0) {
            return Err(Error::ZeroEntry);
        }
        Ok(NotchedBitableau { p, q })
    }

    pub fn from_rows(p: Vec<Vec<u32>>, q: Vec<Vec<u32>>) -> Result<Self> {
        Self::new(NotchedTableau::new(p), NotchedTableau::new(q))
    }

    pub fn empty() -> Self {
        NotchedBitableau::default()
    }

    /// Skips the shape check; callers keep shapes in sync.
    pub(crate) fn from_parts_unchecked(p: NotchedTableau, q: NotchedTableau) -> Self {
        debug_assert_eq!(p.shape(), q.shape());
        NotchedBitableau { p, q }
    }

    pub fn p(&self) -> &NotchedTableau {
        &self.p
    }

    pub fn q(&self) -> &NotchedTableau {
        &self.q
    }

    pub fn into_parts(self) -> (NotchedTableau, NotchedTableau) {
        (self.p, self.q)
    }

    pub fn num_rows(&self) -> usize {
        self.p.num_rows()
    }

    pub fn is_empty(&self) -> bool {
        self.p.size() == 0
    }

    /// Number of boxes of `P`.
    pub fn degree(&self) -> usize {
        self.p.size()
    }

    /// `P_i − Q_i` (0-based row index). Requires `Q_i` repetition-free.
    pub fn row_diff(&self, i: usize) -> Result<FormalDiff> {
        FormalDiff::new(
            NatMultiset::new(self.p.rows[i].clone())?,
            NatMultiset::new(self.q.rows[i].clone())?,
        )
    }

    pub fn is_row_strict(&self) -> bool {
        self.p.is_row_strict() && self.q.is_row_strict()
    }

    /// Row-strict with weakly increasing row differences; with a bound `b`,
    /// additionally every P entry is `< b` and every Q entry is `≥ b`.
    pub fn is_semistandard(&self, b_bound: Option<u32>) -> bool {
        if !self.is_row_strict() {
            return false;
        }
        let diffs: Vec<FormalDiff> = match (0..self.num_rows()).map(|i| self.row_diff(i)).collect() {
            Ok(d) => d,
            Err(_) => return false,
        };
        if !diffs.windows(2).all(|w| diff_compare(&w[0], &w[1]).is_le()) {
            return false;
        }
        match b_bound {
            None => true,
            Some(b) => self.p.entries().all(|x| x < b) && self.q.entries().all(|x| x >= b),
        }
    }

    /// Dual of the entry at row `i`, forward position `j` (0-based) of P, which
    /// is the backward `j`-th entry of the same row of Q; and vice versa.
    pub fn dual_of_p(&self, i: usize, j: usize) -> u32 {
        let row = &self.q.rows[i];
        row[row.len() - 1 - j]
    }

    pub fn dual_of_q(&self, i: usize, j: usize) -> u32 {
        let row = &self.p.rows[i];
        row[row.len() - 1 - j]
    }

    /// Even row lengths plus the duality property. Errors with
    /// `NotSemistandard` when the semistandard check fails first.
    pub fn is_skew_symmetric(&self) -> Result<bool> {
        if !self.is_semistandard(None) {
            return Err(Error::NotSemistandard);
        }
        if self.p.rows.iter().any(|r| r.len() % 2 == 1) {
            return Ok(false);
        }
        Ok(self.has_duality_property())
    }

    /// `x < y ⇒ D(x) > D(y)` and `x = y ⇒ D(x) = D(y)` over all boxes of P and Q.
    pub fn has_duality_property(&self) -> bool {
        let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(2 * self.degree());
        for (i, row) in self.p.rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                pairs.push((x, self.dual_of_p(i, j)));
            }
        }
        for (i, row) in self.q.rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                pairs.push((x, self.dual_of_q(i, j)));
            }
        }
        pairs.sort_unstable_by(|u, v| u.0.cmp(&v.0).then(v.1.cmp(&u.1)));
        pairs.windows(2).all(|w| {
            if w[0].0 == w[1].0 {
                w[0].1 == w[1].1
            } else {
                w[0].1 > w[1].1
            }
        })
    }

    fn require_skew_symmetric(&self) -> Result<()> {
        match self.is_skew_symmetric() {
            Ok(true) => Ok(()),
            _ => Err(Error::NotSkewSymmetric),
        }
    }

    /// Sign of row `i` against `∅ − ∅`: `Less` when every forward entry of
    /// `P_i` is below the forward entry of `Q_i` in the same box, `Greater`
    /// for the mirrored condition, `Incomparable` otherwise. Both imply the
    /// matching counting-order comparison.
    pub fn row_sign(&self, i: usize) -> Comparison {
        let (p, q) = (&self.p.rows[i], &self.q.rows[i]);
        if p.iter().zip(q).all(|(x, y)| x < y) {
            Comparison::Less
        } else if p.iter().zip(q).all(|(x, y)| x > y) {
            Comparison::Greater
        } else {
            Comparison::Incomparable
        }
    }

    /// Negative rows must form a top block and positive rows a bottom block
    /// for a nonvanishing result.
    pub fn classify_sign(&self) -> Result<Sign> {
        self.require_skew_symmetric()?;
        if self.is_empty() {
            return Ok(Sign::Nonvanishing { neg: Self::empty(), pos: Self::empty() });
        }
        let signs: Vec<Comparison> = (0..self.num_rows()).map(|i| self.row_sign(i)).collect();
        if signs.iter().all(|&s| s == Comparison::Less) {
            return Ok(Sign::Negative);
        }
        if signs.iter().all(|&s| s == Comparison::Greater) {
            return Ok(Sign::Positive);
        }
        let split = signs.iter().take_while(|&&s| s == Comparison::Less).count();
        if signs[split..].iter().all(|&s| s == Comparison::Greater) {
            let (neg, pos) = self.split_rows(split);
            return Ok(Sign::Nonvanishing { neg, pos });
        }
        Ok(Sign::Vanishing)
    }

    /// Negative and positive parts of a nonvanishing bitableau.
    pub fn parts(&self) -> Result<(NotchedBitableau, NotchedBitableau)> {
        match self.classify_sign()? {
            Sign::Negative => Ok((self.clone(), Self::empty())),
            Sign::Positive => Ok((Self::empty(), self.clone())),
            Sign::Nonvanishing { neg, pos } => Ok((neg, pos)),
            Sign::Vanishing => Err(Error::Vanishing),
        }
    }

    fn split_rows(&self, k: usize) -> (NotchedBitableau, NotchedBitableau) {
        let top = NotchedBitableau::from_parts_unchecked(
            NotchedTableau::new(self.p.rows[..k].to_vec()),
            NotchedTableau::new(self.q.rows[..k].to_vec()),
        );
        let bottom = NotchedBitableau::from_parts_unchecked(
            NotchedTableau::new(self.p.rows[k..].to_vec()),
            NotchedTableau::new(self.q.rows[k..].to_vec()),
        );
        (top, bottom)
    }

    /// Stack `self` above `below`.
    pub fn stack(&self, below: &NotchedBitableau) -> NotchedBitableau {
        let mut p = self.p.rows.clone();
        p.extend(below.p.rows.iter().cloned());
        let mut q = self.q.rows.clone();
        q.extend(below.q.rows.iter().cloned());
        NotchedBitableau::from_parts_unchecked(NotchedTableau::new(p), NotchedTableau::new(q))
    }

    /// Row reversal with P and Q exchanged, no validation.
    pub fn iota_unchecked(&self) -> NotchedBitableau {
        let p: Vec<Vec<u32>> = self.q.rows.iter().rev().cloned().collect();
        let q: Vec<Vec<u32>> = self.p.rows.iter().rev().cloned().collect();
        NotchedBitableau::from_parts_unchecked(NotchedTableau::new(p), NotchedTableau::new(q))
    }

    /// `ι`: the rows of `(Q,P)` in reversed order.
    pub fn iota(&self) -> Result<NotchedBitableau> {
        if let Sign::Vanishing = self.classify_sign()? {
            return Err(Error::Vanishing);
        }
        Ok(self.iota_unchecked())
    }

    /// Pairs of the j-th entries of the top rows, and of the bottom rows.
    pub fn up_down(&self) -> (PlaneMultiset, PlaneMultiset) {
        let pair_row = |i: usize| {
            let pts = self.p.rows[i].iter().copied().zip(self.q.rows[i].iter().copied()).collect();
            PlaneMultiset::new(pts).expect("positive entries")
        };
        if self.num_rows() == 0 {
            return (PlaneMultiset::empty(), PlaneMultiset::empty());
        }
        (pair_row(0), pair_row(self.num_rows() - 1))
    }

    /// `T ≤ up(negative part)` and `down(positive part) ≤ W`.
    pub fn bounded_by(&self, t: &PlaneMultiset, w: &PlaneMultiset) -> Result<bool> {
        check_bounds(t, w)?;
        let (neg, pos) = self.parts()?;
        let (up, _) = neg.up_down();
        let (_, down) = pos.up_down();
        Ok(plane_compare(t, &up)?.is_le() && plane_compare(&down, w)?.is_le())
    }

    /// P entries outside β, Q entries in β, and every box sums with its dual to `2d+1`.
    pub fn is_on_grid(&self, grid: &GridSpec) -> bool {
        let beta = grid.beta.entries();
        let n = 2 * grid.d + 1;
        if !self.p.entries().all(|x| !beta.contains(&x)) || !self.q.entries().all(|x| beta.contains(&x)) {
            return false;
        }
        self.p.rows.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, &x)| x + self.dual_of_p(i, j) == n)
        })
    }
}

/// `T` negative, `W` positive, all four projections repetition-free.
pub fn check_bounds(t: &PlaneMultiset, w: &PlaneMultiset) -> Result<()> {
    let t_ok = t.points().iter().all(|&(x, y)| x < y);
    let w_ok = w.points().iter().all(|&(x, y)| x > y);
    let sets = [t.proj1(), t.proj2(), w.proj1(), w.proj2()].iter().all(NatMultiset::is_set);
    if t_ok && w_ok && sets {
        Ok(())
    } else {
        Err(Error::BadBounds)
    }
}

/// The β-grid context for [`NotchedBitableau::is_on_grid`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub d: u32,
    pub beta: IdElement,
}

impl GridSpec {
    pub fn new(beta: IdElement) -> Self {
        GridSpec { d: beta.d(), beta }
    }
}
