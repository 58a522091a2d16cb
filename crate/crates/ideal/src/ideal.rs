//! The tangent-cone ideal at `e_β` in `X_α^γ`, its degree slices, initial
//! monomials, the chain-divisible monomials and the standard monomials.

use std::collections::{BTreeSet, HashMap};

use num_rational::BigRational;
use num_traits::Zero;
use obrsk_core::og::{enumerate_id, id_leq, ChainsOracle};
use obrsk_core::IdElement;

use crate::error::Result;
use crate::linalg::Echelon;
use crate::order::TermOrder;
use crate::pfaffian::pfaffian_generator;
use crate::poly::{monomials_of_degree, Monomial, SparsePoly};

fn check_triple(alpha: &IdElement, beta: &IdElement, gamma: &IdElement) -> Result<()> {
    if !(id_leq(alpha, beta)? && id_leq(beta, gamma)?) {
        return Err(obrsk_core::Error::BoundsNotComparable.into());
    }
    Ok(())
}

/// `f_{τ,β}` for every `τ ∈ I(d)` with `α ≰ τ` or `τ ≰ γ`, paired with `τ`.
pub fn generators(
    alpha: &IdElement,
    beta: &IdElement,
    gamma: &IdElement,
    order: &TermOrder,
) -> Result<Vec<(IdElement, SparsePoly)>> {
    check_triple(alpha, beta, gamma)?;
    let mut out = Vec::new();
    for tau in enumerate_id(beta.d()) {
        if !id_leq(alpha, &tau)? || !id_leq(&tau, gamma)? {
            let f = pfaffian_generator(&tau, beta, order)?;
            out.push((tau, f));
        }
    }
    Ok(out)
}

/// Dense coefficient row of `p` over `cols`.
fn dense(p: &SparsePoly, col_of: &HashMap<&Monomial, usize>, width: usize) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); width];
    for (m, k) in p.terms() {
        v[col_of[m]] = k.clone();
    }
    v
}

/// The degree-`m` slice `I_m`: its monomial columns (greatest first) and an
/// echelon basis of the span of `g · monomial`.
#[derive(Debug, Clone)]
pub struct DegreeSlice {
    pub columns: Vec<Monomial>,
    pub basis: Echelon,
}

impl DegreeSlice {
    pub fn new(gens: &[SparsePoly], m: u32, nvars: usize) -> Self {
        let columns = monomials_of_degree(nvars, m);
        let col_of: HashMap<&Monomial, usize> = columns.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let mut basis = Echelon::new(columns.len());
        for g in gens {
            let Some(k) = g.homogeneous_degree() else { continue };
            if k > m {
                continue;
            }
            for shift in monomials_of_degree(nvars, m - k) {
                basis.insert(dense(&g.shift(&shift), &col_of, columns.len()));
            }
        }
        DegreeSlice { columns, basis }
    }

    /// Leading monomials of `I_m`, i.e. the degree-`m` part of `in(I)`.
    pub fn initial_monomials(&self) -> BTreeSet<Monomial> {
        self.basis.pivots().into_iter().map(|p| self.columns[p].clone()).collect()
    }

    /// Rank of `polys` modulo `I_m`.
    pub fn rank_modulo(&self, polys: &[SparsePoly]) -> usize {
        let col_of: HashMap<&Monomial, usize> = self.columns.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let mut e = self.basis.clone();
        let before = e.rank();
        for p in polys {
            e.insert(dense(p, &col_of, self.columns.len()));
        }
        e.rank() - before
    }
}

/// Zero polynomials and non-homogeneous inputs contribute nothing.
pub fn initial_monomials_degree(gens: &[SparsePoly], m: u32, order: &TermOrder) -> BTreeSet<Monomial> {
    DegreeSlice::new(gens, m, order.num_vars()).initial_monomials()
}

/// Degree-`m` monomials containing a chain of `Chains_α^γ(β)`.
pub fn chains_monomials_degree(oracle: &ChainsOracle, m: u32, order: &TermOrder) -> Result<BTreeSet<Monomial>> {
    let perm: Vec<usize> = oracle.roots().iter().map(|&r| order.index_of(r)).collect::<Result<_>>()?;
    let mut out = BTreeSet::new();
    for mono in monomials_of_degree(order.num_vars(), m) {
        let exps: Vec<u32> = perm.iter().map(|&i| mono[i]).collect();
        if !oracle.is_quotient(&exps) {
            out.insert(mono);
        }
    }
    Ok(out)
}

/// Multichains `θ_1 ≤ ⋯ ≤ θ_r` in `{θ : α ≤ θ ≤ γ, θ < β or θ > β}` with
/// β-degrees summing to `m`.
pub fn standard_monomials(alpha: &IdElement, beta: &IdElement, gamma: &IdElement, m: usize) -> Result<Vec<Vec<IdElement>>> {
    check_triple(alpha, beta, gamma)?;
    let mut pool = Vec::new();
    for theta in enumerate_id(beta.d()) {
        if theta == *beta || !id_leq(alpha, &theta)? || !id_leq(&theta, gamma)? {
            continue;
        }
        if id_leq(&theta, beta)? || id_leq(beta, &theta)? {
            let deg = beta.beta_degree(&theta);
            pool.push((theta, deg));
        }
    }
    let n = pool.len();
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            leq[i][j] = id_leq(&pool[i].0, &pool[j].0)?;
        }
    }
    fn go(
        pool: &[(IdElement, usize)],
        leq: &[Vec<bool>],
        last: Option<usize>,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<IdElement>>,
    ) {
        if left == 0 {
            out.push(cur.iter().map(|&i| pool[i].0.clone()).collect());
            return;
        }
        for i in 0..pool.len() {
            if pool[i].1 > left || last.is_some_and(|l| !leq[l][i]) {
                continue;
            }
            cur.push(i);
            go(pool, leq, Some(i), left - pool[i].1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(&pool, &leq, None, m, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `Π f_{θ_i,β}`.
pub fn standard_product(chain: &[IdElement], beta: &IdElement, order: &TermOrder) -> Result<SparsePoly> {
    let mut p = SparsePoly::one(order.num_vars());
    for theta in chain {
        p = p.mul(&pfaffian_generator(theta, beta, order)?);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use obrsk_core::Root;

    fn id(d: u32, e: &[u32]) -> IdElement {
        IdElement::new(d, e.to_vec()).unwrap()
    }

    #[test]
    fn point_case_d2() {
        let b = id(2, &[3, 4]);
        let o = TermOrder::new(&b).unwrap();
        let gens = generators(&b, &b, &b, &o).unwrap();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].0, id(2, &[1, 2]));
        let x13 = o.monomial(&[Root::new(1, 3)]).unwrap();
        let polys: Vec<SparsePoly> = gens.into_iter().map(|g| g.1).collect();
        assert_eq!(initial_monomials_degree(&polys, 1, &o), BTreeSet::from([x13.clone()]));
        let oracle = ChainsOracle::new(&b, &b, &b).unwrap();
        assert_eq!(chains_monomials_degree(&oracle, 1, &o).unwrap(), BTreeSet::from([x13.clone()]));
        assert_eq!(chains_monomials_degree(&oracle, 2, &o).unwrap(), BTreeSet::from([vec![2]]));
        assert!(chains_monomials_degree(&oracle, 0, &o).unwrap().is_empty());
        assert!(standard_monomials(&b, &b, &b, 1).unwrap().is_empty());
    }

    #[test]
    fn full_case_d2() {
        let (a, b) = (id(2, &[1, 2]), id(2, &[3, 4]));
        let o = TermOrder::new(&b).unwrap();
        assert!(generators(&a, &b, &b, &o).unwrap().is_empty());
        assert_eq!(standard_monomials(&a, &b, &b, 2).unwrap(), vec![vec![a.clone(), a.clone()]]);
        assert_eq!(standard_monomials(&a, &b, &b, 0).unwrap(), vec![Vec::<IdElement>::new()]);
    }

    #[test]
    fn full_richardson_has_no_generators() {
        let all = enumerate_id(3);
        let (lo, hi) = (all.first().unwrap(), all.last().unwrap());
        for b in &all {
            let o = TermOrder::new(b).unwrap();
            assert!(generators(lo, b, hi, &o).unwrap().is_empty());
        }
    }

    #[test]
    fn incomparable_bounds() {
        let (a, b) = (id(2, &[1, 2]), id(2, &[3, 4]));
        let o = TermOrder::new(&a).unwrap();
        assert!(generators(&b, &a, &a, &o).is_err());
    }
}
