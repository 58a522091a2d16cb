//! Exact row echelon forms over the rationals.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Rows in echelon form keyed by pivot column; pivot entries are 1 and
/// every other row is zero in each pivot column.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    width: usize,
    rows: Vec<(usize, Vec<BigRational>)>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon { width, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot columns, ascending.
    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().map(|r| r.0).collect();
        p.sort_unstable();
        p
    }

    /// `v` minus its projection onto the current span along pivot columns.
    pub fn reduce(&self, mut v: Vec<BigRational>) -> Vec<BigRational> {
        debug_assert_eq!(v.len(), self.width);
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let k = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &k * y;
                }
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<BigRational>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = BigRational::one() / &v[p];
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let k = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x -= &k * y;
                }
            }
        }
        self.rows.push((p, v));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational;

    fn v(xs: &[i64]) -> Vec<BigRational> {
        xs.iter().map(|&x| rational(x)).collect()
    }

    #[test]
    fn pivots_are_leading_columns() {
        let mut e = Echelon::new(3);
        assert!(e.insert(v(&[0, 1, 1])));
        assert!(e.insert(v(&[0, 1, 2])));
        assert!(!e.insert(v(&[0, 3, 5])));
        assert_eq!(e.pivots(), vec![1, 2]);
        assert!(e.insert(v(&[2, 0, 0])));
        assert_eq!(e.rank(), 3);
        assert!(e.reduce(v(&[7, -1, 4])).iter().all(Zero::is_zero));
    }

    #[test]
    fn rational_pivots() {
        let mut e = Echelon::new(2);
        e.insert(v(&[3, 1]));
        assert!(!e.insert(v(&[6, 2])));
        let r = e.reduce(v(&[0, 1]));
        assert_eq!(r, v(&[0, 1]));
    }
}
