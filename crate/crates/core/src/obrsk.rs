//! The orthogonal bounded RSK correspondence and its reverse.
//!
//! Step `i+1` of OBRSK consumes `(a_{i+1}, b_{i+1}, c_{t-i}, d_{t-i})`:
//!
//! 1. bounded insertion of `a` into `P`, only entries `< b` can be bumped;
//! 2. dual insertion of `c` into `Q` along the mirrored (backward) path;
//! 3. `d` is appended to the right end of the terminal row of `P` and `b`
//!    prepended to the left end of the same row of `Q`.

use crate::arrays::SkewPair;
use crate::error::{Error, Result};
use crate::tableau::{NotchedBitableau, NotchedTableau, Sign};

/// Forward positions `j_1, ..., j_K` (1-based) of a bounded insertion; row
/// `r` of the path is `r + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionPath {
    positions: Vec<usize>,
}

impl InsertionPath {
    pub fn new(positions: Vec<usize>) -> Self {
        InsertionPath { positions }
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    /// `(row, forward position)` pairs, both 1-based.
    pub fn steps(&self) -> Vec<(usize, usize)> {
        self.positions.iter().enumerate().map(|(i, &j)| (i + 1, j)).collect()
    }

    /// Terminal row `K`.
    pub fn terminal_row(&self) -> usize {
        self.positions.len()
    }
}

/// Insert `a` into `P`; only entries `< b` take part in bumping.
pub fn bounded_insert(p: &NotchedTableau, a: u32, b: u32) -> Result<(NotchedTableau, InsertionPath)> {
    if a >= b {
        return Err(Error::BoundViolation { a, b, c: 0, d: 0 });
    }
    debug_assert!(p.is_row_strict());
    let mut rows = p.rows().to_vec();
    let mut positions = Vec::new();
    let mut x = a;
    for r in 0.. {
        if r == rows.len() {
            rows.push(vec![x]);
            positions.push(1);
            break;
        }
        let row = &mut rows[r];
        let prefix = row.partition_point(|&y| y < b);
        let pos = row[..prefix].partition_point(|&y| y < x);
        if pos < prefix {
            x = std::mem::replace(&mut row[pos], x);
            positions.push(pos + 1);
        } else {
            row.insert(prefix, x);
            positions.push(prefix + 1);
            break;
        }
    }
    Ok((NotchedTableau::new(rows), InsertionPath::new(positions)))
}

/// Push `c` along the backward positions of `path`, opening a new box at
/// the backward `j_K` position of the terminal row.
pub fn dual_insert(q: &NotchedTableau, c: u32, path: &InsertionPath) -> Result<NotchedTableau> {
    let mut rows = q.rows().to_vec();
    let k = path.positions.len();
    if k == 0 || k > rows.len() + 1 {
        return Err(Error::PathShapeMismatch);
    }
    let mut x = c;
    for (r, &j) in path.positions.iter().enumerate() {
        if r + 1 < k {
            let row = &mut rows[r];
            if j == 0 || j > row.len() {
                return Err(Error::PathShapeMismatch);
            }
            let idx = row.len() - j;
            x = std::mem::replace(&mut row[idx], x);
        } else if r == rows.len() {
            if j != 1 {
                return Err(Error::PathShapeMismatch);
            }
            rows.push(vec![x]);
        } else {
            let row = &mut rows[r];
            if j == 0 || j > row.len() + 1 {
                return Err(Error::PathShapeMismatch);
            }
            let idx = row.len() + 1 - j;
            row.insert(idx, x);
        }
    }
    Ok(NotchedTableau::new(rows))
}

/// A completed forward step together with the state right after the two
/// insertions (before `d` and `b` are placed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepTrace {
    pub inserted: NotchedBitableau,
    pub state: NotchedBitableau,
}

fn step_traced(bt: &NotchedBitableau, a: u32, b: u32, c: u32, d: u32) -> Result<StepTrace> {
    if !(a < b && d < c && a < d && b < c) {
        return Err(Error::BoundViolation { a, b, c, d });
    }
    let (p, path) = bounded_insert(bt.p(), a, b)?;
    let q = dual_insert(bt.q(), c, &path)?;
    let inserted = NotchedBitableau::new(p, q)?;
    let (mut p, mut q) = inserted.clone().into_parts();
    let k = path.terminal_row() - 1;
    p.rows_mut()[k].push(d);
    q.rows_mut()[k].insert(0, b);
    Ok(StepTrace { inserted, state: NotchedBitableau::new(p, q)? })
}

/// `(P,Q) ←_{b,c} a,d`.
pub fn forward_step(bt: &NotchedBitableau, a: u32, b: u32, c: u32, d: u32) -> Result<NotchedBitableau> {
    step_traced(bt, a, b, c, d).map(|s| s.state)
}

fn require_negative(p: &SkewPair) -> Result<()> {
    p.validate()?;
    if !p.is_negative() {
        return Err(Error::NotNegative);
    }
    Ok(())
}

/// Every step of OBRSK on a valid negative pair; the last state is the output.
pub fn obrsk_negative_trace(p: &SkewPair) -> Result<Vec<StepTrace>> {
    require_negative(p)?;
    let t = p.t();
    let mut cur = NotchedBitableau::empty();
    let mut out = Vec::with_capacity(t);
    for i in 0..t {
        let s = step_traced(&cur, p.a()[i], p.b()[i], p.c()[t - 1 - i], p.d()[t - 1 - i])?;
        cur = s.state.clone();
        out.push(s);
    }
    Ok(out)
}

/// OBRSK on a valid negative pair.
pub fn obrsk_negative(p: &SkewPair) -> Result<NotchedBitableau> {
    require_negative(p)?;
    Ok(obrsk_negative_unchecked(p))
}

fn obrsk_negative_unchecked(p: &SkewPair) -> NotchedBitableau {
    let t = p.t();
    let mut cur = NotchedBitableau::empty();
    for i in 0..t {
        cur = forward_step(&cur, p.a()[i], p.b()[i], p.c()[t - 1 - i], p.d()[t - 1 - i])
            .expect("valid negative pairs satisfy the step bounds");
    }
    cur
}

/// The four integers recovered by a reverse step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Column4 {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

/// Undo one forward step of a nonempty bitableau.
pub fn reverse_step(bt: &NotchedBitableau) -> Result<(NotchedBitableau, Column4)> {
    let fail = |m: &str| Error::ReverseFailure(m.to_string());
    let b = bt.q().min_entry().ok_or(Error::EmptyBitableau)?;
    let mut p = bt.p().rows().to_vec();
    let mut q = bt.q().rows().to_vec();
    let s = q.iter().rposition(|row| row.contains(&b)).expect("minimum is present");
    if q[s][0] != b || p[s].len() < 2 {
        return Err(fail("terminal row too short"));
    }
    let d = p[s].pop().expect("nonempty");
    q[s].remove(0);

    let j = p[s].partition_point(|&y| y < b);
    if j == 0 {
        return Err(fail("no entry below b in the terminal row"));
    }
    let mut z = p[s].remove(j - 1);
    let mut w = {
        let row = &mut q[s];
        row.remove(row.len() - j)
    };
    for r in (0..s).rev() {
        let prow = &mut p[r];
        let prefix = prow.partition_point(|&y| y < b);
        let pos = prow[..prefix].partition_point(|&y| y <= z);
        if pos == 0 {
            return Err(fail("rising value has nothing to replace"));
        }
        z = std::mem::replace(&mut prow[pos - 1], z);
        let qrow = &mut q[r];
        if pos > qrow.len() {
            return Err(Error::PathShapeMismatch);
        }
        let idx = qrow.len() - pos;
        w = std::mem::replace(&mut qrow[idx], w);
    }
    while p.last().is_some_and(Vec::is_empty) {
        p.pop();
        q.pop();
    }
    if p.iter().any(Vec::is_empty) {
        return Err(fail("emptied a row above the bottom"));
    }
    let prev = NotchedBitableau::new(NotchedTableau::new(p), NotchedTableau::new(q))?;
    Ok((prev, Column4 { a: z, b, c: w, d }))
}

/// Reverse OBRSK on a negative skew-symmetric bitableau.
pub fn robrsk(bt: &NotchedBitableau) -> Result<SkewPair> {
    if bt.is_empty() {
        return Ok(SkewPair::empty());
    }
    match bt.classify_sign() {
        Ok(Sign::Negative) => {}
        _ => return Err(Error::NotNegativeSkewSymmetric),
    }
    let mut cols = Vec::new();
    let mut cur = bt.clone();
    while !cur.is_empty() {
        let (prev, col) = reverse_step(&cur)?;
        cols.push(col);
        cur = prev;
    }
    // Reverse steps yield columns a,b from last to first and c,d from first to last.
    let a: Vec<u32> = cols.iter().rev().map(|c| c.a).collect();
    let b: Vec<u32> = cols.iter().rev().map(|c| c.b).collect();
    let c: Vec<u32> = cols.iter().map(|c| c.c).collect();
    let d: Vec<u32> = cols.iter().map(|c| c.d).collect();
    let pair = SkewPair::new(b, a, c, d)?;
    require_negative(&pair)?;
    Ok(pair)
}

/// OBRSK on a valid nonvanishing pair: the negative part on top, and
/// `ι ∘ OBRSK ∘ L` of the positive part below it.
pub fn obrsk(p: &SkewPair) -> Result<NotchedBitableau> {
    p.validate()?;
    let (neg, pos) = p.split_parts()?;
    let top = obrsk_negative_unchecked(&neg);
    let bottom = obrsk_negative_unchecked(&pos.l_unchecked()).iota_unchecked();
    Ok(top.stack(&bottom))
}

/// Inverse of [`obrsk`] on nonvanishing skew-symmetric bitableaux.
pub fn robrsk_nonvanishing(bt: &NotchedBitableau) -> Result<SkewPair> {
    let (neg, pos) = bt.parts()?;
    let n = robrsk(&neg)?;
    let q = robrsk(&pos.iota_unchecked())?.l_unchecked();
    let out = n.merge(&q);
    out.validate()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture;

    fn tab(rows: &[&[u32]]) -> NotchedTableau {
        NotchedTableau::new(rows.iter().map(|r| r.to_vec()).collect())
    }

    #[test]
    fn bounded_insert_examples() {
        let (p, path) = bounded_insert(&tab(&[&[3, 7, 12, 19], &[3, 12], &[4, 15]]), 4, 9).unwrap();
        assert_eq!(p, tab(&[&[3, 4, 12, 19], &[3, 7, 12], &[4, 15]]));
        assert_eq!(path.steps(), vec![(1, 2), (2, 2)]);
        let (p, path) = bounded_insert(&tab(&[&[4, 12]]), 3, 17).unwrap();
        assert_eq!(p, tab(&[&[3, 12], &[4]]));
        assert_eq!(path.steps(), vec![(1, 1), (2, 1)]);
        let (p, path) = bounded_insert(&NotchedTableau::empty(), 4, 17).unwrap();
        assert_eq!(p, tab(&[&[4]]));
        assert_eq!(path.steps(), vec![(1, 1)]);
        assert!(matches!(bounded_insert(&NotchedTableau::empty(), 5, 5), Err(Error::BoundViolation { .. })));
    }

    #[test]
    fn dual_insert_examples() {
        let q = tab(&[&[10, 17, 22, 26], &[17, 26], &[14, 25]]);
        let got = dual_insert(&q, 25, &InsertionPath::new(vec![2, 2])).unwrap();
        assert_eq!(got, tab(&[&[10, 17, 25, 26], &[17, 22, 26], &[14, 25]]));
        let got = dual_insert(&tab(&[&[17, 25]]), 26, &InsertionPath::new(vec![1, 1])).unwrap();
        assert_eq!(got, tab(&[&[17, 26], &[25]]));
        let got = dual_insert(&NotchedTableau::empty(), 25, &InsertionPath::new(vec![1])).unwrap();
        assert_eq!(got, tab(&[&[25]]));
        assert_eq!(
            dual_insert(&NotchedTableau::empty(), 25, &InsertionPath::new(vec![1, 1])),
            Err(Error::PathShapeMismatch)
        );
        assert_eq!(
            dual_insert(&tab(&[&[17, 25]]), 26, &InsertionPath::new(vec![3, 1])),
            Err(Error::PathShapeMismatch)
        );
    }

    #[test]
    fn forward_step_examples() {
        let s = fixture::states();
        assert_eq!(forward_step(&s[4], 4, 9, 25, 20).unwrap(), s[5]);
        assert_eq!(forward_step(&s[0], 4, 17, 25, 12).unwrap(), s[1]);
        assert_eq!(forward_step(&s[2], 3, 14, 26, 15).unwrap(), s[3]);
    }

    #[test]
    fn reverse_step_examples() {
        let s = fixture::states();
        let col = |a, b, c, d| Column4 { a, b, c, d };
        assert_eq!(reverse_step(&s[5]).unwrap(), (s[4].clone(), col(4, 9, 25, 20)));
        assert_eq!(reverse_step(&s[1]).unwrap(), (s[0].clone(), col(4, 17, 25, 12)));
        assert_eq!(reverse_step(&s[3]).unwrap(), (s[2].clone(), col(3, 14, 26, 15)));
        assert_eq!(reverse_step(&NotchedBitableau::empty()), Err(Error::EmptyBitableau));
    }

    #[test]
    fn fixture_round_trip() {
        let p = fixture::pair();
        let b = obrsk_negative(&p).unwrap();
        assert_eq!(b, fixture::final_bitableau());
        assert_eq!(robrsk(&b).unwrap(), p);
        assert_eq!(obrsk(&p).unwrap(), b);
        let l = p.l_involution().unwrap();
        assert_eq!(obrsk(&l).unwrap(), b.iota().unwrap());
        assert_eq!(robrsk_nonvanishing(&b.iota().unwrap()).unwrap(), l);
    }

    #[test]
    fn empty_cases() {
        assert_eq!(obrsk_negative(&SkewPair::empty()).unwrap(), NotchedBitableau::empty());
        assert_eq!(robrsk(&NotchedBitableau::empty()).unwrap(), SkewPair::empty());
        assert_eq!(obrsk(&SkewPair::empty()).unwrap(), NotchedBitableau::empty());
    }

    #[test]
    fn small_grid_pair() {
        // ψ⁻¹({(1,3)}, {(2,4)}): a=1, b=3, c=4, d=2.
        let p = SkewPair::new(vec![3], vec![1], vec![4], vec![2]).unwrap();
        let b = obrsk_negative(&p).unwrap();
        assert_eq!(b, NotchedBitableau::from_rows(vec![vec![1, 2]], vec![vec![3, 4]]).unwrap());
    }

    #[test]
    fn trace_matches_states() {
        let tr = obrsk_negative_trace(&fixture::pair()).unwrap();
        let s = fixture::states();
        for (i, st) in tr.iter().enumerate() {
            assert_eq!(st.state, s[i + 1]);
            assert_eq!(st.inserted, fixture::inserted_states()[i]);
        }
    }

    #[test]
    fn positive_input_rejected() {
        let l = fixture::pair().l_involution().unwrap();
        assert_eq!(obrsk_negative(&l), Err(Error::NotNegative));
        assert_eq!(robrsk(&fixture::final_bitableau().iota().unwrap()), Err(Error::NotNegativeSkewSymmetric));
    }
}
