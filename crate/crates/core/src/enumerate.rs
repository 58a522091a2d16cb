//! Exhaustive enumerations of small pairs, bitableaux and bounds.

use crate::arrays::SkewPair;
use crate::multiset::PlaneMultiset;
use crate::tableau::NotchedBitableau;

/// Multisets of `t` items from `items`, as non-increasing index sequences.
fn multisets<T: Copy>(items: &[T], t: usize) -> Vec<Vec<T>> {
    fn go<T: Copy>(items: &[T], t: usize, hi: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for i in 0..hi {
            cur.push(items[i]);
            go(items, t, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, t, items.len(), &mut Vec::new(), &mut out);
    out
}

fn pairs_with(max_entry: u32, max_t: usize, keep: impl Fn(u32, u32) -> bool) -> Vec<SkewPair> {
    // Columns listed ascending so non-increasing index sequences are the
    // canonical (descending) arrangements.
    let mut cols: Vec<(u32, u32)> = Vec::new();
    for hi in 1..=max_entry {
        for lo in 1..=max_entry {
            if keep(lo, hi) {
                cols.push((hi, lo));
            }
        }
    }
    let mut cols2: Vec<(u32, u32)> = Vec::new();
    for d in 1..=max_entry {
        for c in 1..=max_entry {
            if keep(d, c) {
                cols2.push((d, c));
            }
        }
    }
    let mut out = Vec::new();
    for t in 0..=max_t {
        let left = multisets(&cols, t);
        let right = multisets(&cols2, t);
        for l in &left {
            for r in &right {
                let p = SkewPair::new(
                    l.iter().map(|x| x.0).collect(),
                    l.iter().map(|x| x.1).collect(),
                    r.iter().map(|x| x.1).collect(),
                    r.iter().map(|x| x.0).collect(),
                )
                .expect("equal lengths");
                if p.is_valid() {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// All valid pairs with entries in `1..=max_entry` and `t ≤ max_t`.
pub fn valid_pairs(max_entry: u32, max_t: usize) -> Vec<SkewPair> {
    pairs_with(max_entry, max_t, |_, _| true)
}

/// All valid negative pairs with entries in `1..=max_entry` and `t ≤ max_t`.
pub fn negative_pairs(max_entry: u32, max_t: usize) -> Vec<SkewPair> {
    pairs_with(max_entry, max_t, |lo, hi| lo < hi)
}

/// Compositions of `n` into positive even parts.
fn even_shapes(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (2..=n).step_by(2) {
        for mut rest in even_shapes(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn strict_rows(max_entry: u32, len: usize) -> Vec<Vec<u32>> {
    fn go(max_entry: u32, len: usize, lo: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in lo..=max_entry {
            cur.push(x);
            go(max_entry, len, x + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max_entry, len, 1, &mut Vec::new(), &mut out);
    out
}

/// All skew-symmetric bitableaux with entries in `1..=max_entry` and at most
/// `max_boxes` boxes in `P`, without empty rows.
pub fn skew_bitableaux(max_entry: u32, max_boxes: usize) -> Vec<NotchedBitableau> {
    let mut out = Vec::new();
    for n in (0..=max_boxes).step_by(2) {
        for shape in even_shapes(n) {
            let choices: Vec<Vec<Vec<u32>>> = shape.iter().map(|&k| strict_rows(max_entry, k)).collect();
            let mut idx = vec![0usize; 2 * shape.len()];
            loop {
                let p: Vec<Vec<u32>> = (0..shape.len()).map(|i| choices[i][idx[i]].clone()).collect();
                let q: Vec<Vec<u32>> =
                    (0..shape.len()).map(|i| choices[i][idx[shape.len() + i]].clone()).collect();
                let b = NotchedBitableau::from_rows(p, q).expect("same shape");
                if b.is_skew_symmetric() == Ok(true) {
                    out.push(b);
                }
                // Odometer over the row choices of P and Q.
                let mut k = 0;
                while k < idx.len() {
                    let row = k % shape.len();
                    idx[k] += 1;
                    if idx[k] < choices[row].len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == idx.len() {
                    break;
                }
            }
        }
    }
    out
}

/// Plane subsets with at most `max_points` points, entries in
/// `1..=max_entry`, repetition-free projections, every point negative
/// (`x < y`) when `negative` holds and positive otherwise.
pub fn bound_candidates(max_entry: u32, max_points: usize, negative: bool) -> Vec<PlaneMultiset> {
    let pts: Vec<(u32, u32)> = (1..=max_entry)
        .flat_map(|x| (1..=max_entry).map(move |y| (x, y)))
        .filter(|&(x, y)| if negative { x < y } else { x > y })
        .collect();
    let mut out = Vec::new();
    fn go(pts: &[(u32, u32)], from: usize, left: usize, cur: &mut Vec<(u32, u32)>, out: &mut Vec<PlaneMultiset>) {
        out.push(PlaneMultiset::new(cur.clone()).expect("positive"));
        if left == 0 {
            return;
        }
        for i in from..pts.len() {
            let p = pts[i];
            if cur.iter().any(|q| q.0 == p.0 || q.1 == p.1) {
                continue;
            }
            cur.push(p);
            go(pts, i + 1, left - 1, cur, out);
            cur.pop();
        }
    }
    go(&pts, 0, max_points, &mut Vec::new(), &mut out);
    out
}
