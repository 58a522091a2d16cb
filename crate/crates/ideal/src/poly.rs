//! Sparse polynomials with exact rational coefficients over exponent
//! vectors indexed by a [`TermOrder`]'s variable enumeration.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt::Write;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::order::{mono_cmp, TermOrder};

pub type Monomial = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn rational(k: i64) -> BigRational {
    BigRational::from_integer(k.into())
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, k: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], k);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    /// `coef · x_i`.
    pub fn var(nvars: usize, i: usize, coef: i64) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, rational(coef));
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &[u32]) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, k: BigRational) {
        debug_assert_eq!(m.len(), self.nvars);
        if k.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(k);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += k;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, k) in &other.terms {
            out.add_term(m.clone(), k.clone());
        }
        out
    }

    pub fn neg(&self) -> SparsePoly {
        SparsePoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, k)| (m.clone(), -k)).collect() }
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero(self.nvars);
        for (m1, k1) in &self.terms {
            for (m2, k2) in &other.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(m, k1 * k2);
            }
        }
        out
    }

    /// Product with a monomial.
    pub fn shift(&self, m: &[u32]) -> SparsePoly {
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.iter().zip(m).map(|(a, b)| a + b).collect(), k.clone())).collect(),
        }
    }

    /// Total degrees of the terms, `None` for the zero polynomial or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.iter().sum::<u32>());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Greatest term under the monomial order.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().max_by(|a, b| mono_cmp(a.0, b.0))
    }

    /// Terms from greatest to least.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| mono_cmp(b.0, a.0));
        v
    }

    /// `+X[1,3]*X[2,4] -X[1,4]*X[2,3]`; `0` for the zero polynomial.
    pub fn to_text(&self, order: &TermOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (m, k) in self.sorted_terms() {
            if !out.is_empty() {
                out.push(' ');
            }
            out.push(if k.is_negative() { '-' } else { '+' });
            let abs = k.abs();
            let factors = monomial_text(m, order);
            if factors.is_empty() {
                write!(out, "{abs}").unwrap();
            } else if abs.is_one() {
                out.push_str(&factors);
            } else {
                write!(out, "{abs}*{factors}").unwrap();
            }
        }
        out
    }
}

/// `X[2,1]*X[2,1]*X[5,3]`, variables in descending order; empty for 1.
pub fn monomial_text(m: &[u32], order: &TermOrder) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.iter().enumerate() {
        let v = order.vars()[i];
        for _ in 0..e {
            parts.push(format!("X[{},{}]", v.r, v.c));
        }
    }
    parts.join("*")
}

/// All exponent vectors of total degree `m` in `nvars` variables, greatest first.
pub fn monomials_of_degree(nvars: usize, m: u32) -> Vec<Monomial> {
    fn go(i: usize, left: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            go(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if nvars == 0 {
        return if m == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    go(0, m, &mut vec![0; nvars], &mut out);
    out
}
