//! Degree-by-degree check of the initial-ideal description and the
//! standard monomial basis for one triple `α ≤ β ≤ γ`.

use obrsk_core::og::{enumerate_id, id_leq, ChainsOracle};
use obrsk_core::IdElement;
use serde::Serialize;

use crate::error::Result;
use crate::ideal::{chains_monomials_degree, generators, standard_monomials, standard_product, DegreeSlice};
use crate::order::TermOrder;
use crate::poly::{monomial_text, SparsePoly};

/// Counterexamples listed per degree before truncation.
const MAX_LISTED: usize = 10;

#[derive(Debug, Clone, Serialize)]
pub struct DegreeReport {
    pub degree: u32,
    pub monomials: usize,
    pub initial: usize,
    pub chains: usize,
    pub standard: usize,
    pub standard_rank: usize,
    pub set_equal: bool,
    pub count_equal: bool,
    pub independent: bool,
    pub pass: bool,
    pub only_initial: Vec<String>,
    pub only_chains: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TripleReport {
    pub alpha: IdElement,
    pub beta: IdElement,
    pub gamma: IdElement,
    pub generators: usize,
    pub chains: usize,
    pub degrees: Vec<DegreeReport>,
    pub pass: bool,
}

pub fn verify_main_theorem(
    alpha: &IdElement,
    beta: &IdElement,
    gamma: &IdElement,
    max_degree: u32,
) -> Result<TripleReport> {
    let order = TermOrder::new(beta)?;
    let gens: Vec<SparsePoly> = generators(alpha, beta, gamma, &order)?.into_iter().map(|g| g.1).collect();
    let oracle = ChainsOracle::new(alpha, beta, gamma)?;
    let mut degrees = Vec::new();
    for m in 0..=max_degree {
        let slice = DegreeSlice::new(&gens, m, order.num_vars());
        let initial = slice.initial_monomials();
        let chains = chains_monomials_degree(&oracle, m, &order)?;
        let std_chains = standard_monomials(alpha, beta, gamma, m as usize)?;
        let products: Vec<SparsePoly> =
            std_chains.iter().map(|c| standard_product(c, beta, &order)).collect::<Result<_>>()?;
        let standard_rank = slice.rank_modulo(&products);
        let listed = |it: &mut dyn Iterator<Item = &Vec<u32>>| -> Vec<String> {
            it.take(MAX_LISTED).map(|m| monomial_text(m, &order)).collect()
        };
        let only_initial = listed(&mut initial.difference(&chains));
        let only_chains = listed(&mut chains.difference(&initial));
        let monomials = slice.columns.len();
        let set_equal = initial == chains;
        let count_equal = std_chains.len() + initial.len() == monomials;
        let independent = standard_rank == std_chains.len();
        degrees.push(DegreeReport {
            degree: m,
            monomials,
            initial: initial.len(),
            chains: chains.len(),
            standard: std_chains.len(),
            standard_rank,
            set_equal,
            count_equal,
            independent,
            pass: set_equal && count_equal && independent,
            only_initial,
            only_chains,
        });
    }
    let pass = degrees.iter().all(|d| d.pass);
    Ok(TripleReport {
        alpha: alpha.clone(),
        beta: beta.clone(),
        gamma: gamma.clone(),
        generators: gens.len(),
        chains: oracle.num_chains(),
        degrees,
        pass,
    })
}

/// All `α ≤ β ≤ γ` in `I(d)`, lexicographically.
pub fn comparable_triples(d: u32) -> Vec<(IdElement, IdElement, IdElement)> {
    let all = enumerate_id(d);
    let le = |x: &IdElement, y: &IdElement| id_leq(x, y).expect("same d");
    let mut out = Vec::new();
    for a in &all {
        for b in all.iter().filter(|b| le(a, b)) {
            for g in all.iter().filter(|g| le(b, g)) {
                out.push((a.clone(), b.clone(), g.clone()));
            }
        }
    }
    out
}
