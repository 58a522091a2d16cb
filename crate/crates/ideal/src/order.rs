//! The variable order `>` on `roots(β)` and the homogeneous lexicographic
//! monomial order it induces.

use std::cmp::Ordering;
use std::collections::HashMap;

use obrsk_core::{IdElement, Root};

use crate::error::{IdealError, Result};

/// `μ > ν` per the six conditions and the cross-case completion.
/// `μ` and `ν` must be distinct roots of `β`.
pub fn var_greater(mu: Root, nu: Root) -> bool {
    let pos = |x: Root| x.r > x.c;
    match (pos(mu), pos(nu)) {
        (true, true) => mu.r < nu.r || (mu.r == nu.r && mu.c > nu.c),
        (false, false) => mu.c < nu.c || (mu.c == nu.c && mu.r > nu.r),
        (true, false) => !neg_over_pos(nu, mu),
        (false, true) => neg_over_pos(mu, nu),
    }
}

/// Whether the negative root `mu` is above the positive root `nu`.
fn neg_over_pos(mu: Root, nu: Root) -> bool {
    if mu.r == nu.r {
        return false;
    }
    if mu.c == nu.c {
        return true;
    }
    if nu.r < mu.r {
        return false;
    }
    if mu.c < nu.c {
        return true;
    }
    // r(μ) < r(ν) and c(ν) < c(μ): μ wins iff (r(ν), c(μ)) is positive.
    nu.r > mu.c
}

/// Exhaustive check that `var_greater` is a strict total order on `vars`.
pub fn verify_strict_total(vars: &[Root]) -> Result<()> {
    for &x in vars {
        for &y in vars {
            if x == y {
                continue;
            }
            if var_greater(x, y) == var_greater(y, x) {
                return Err(IdealError::OrderViolation(format!("{x} and {y} are not strictly comparable")));
            }
        }
    }
    for &x in vars {
        for &y in vars {
            if x == y || !var_greater(x, y) {
                continue;
            }
            for &z in vars {
                if z != x && z != y && var_greater(y, z) && !var_greater(x, z) {
                    return Err(IdealError::OrderViolation(format!("{x} > {y} > {z} but not {x} > {z}")));
                }
            }
        }
    }
    Ok(())
}

/// Variables of the patch at `β`, enumerated from greatest to least.
#[derive(Debug, Clone)]
pub struct TermOrder {
    beta: IdElement,
    vars: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl TermOrder {
    /// Builds the order, verifying it exhaustively when `d ≤ 5`.
    pub fn new(beta: &IdElement) -> Result<Self> {
        let mut vars = beta.roots();
        if beta.d() <= 5 {
            verify_strict_total(&vars)?;
        }
        vars.sort_by(|&x, &y| {
            if x == y {
                Ordering::Equal
            } else if var_greater(x, y) {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        });
        let index = vars.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        Ok(TermOrder { beta: beta.clone(), vars, index })
    }

    pub fn beta(&self) -> &IdElement {
        &self.beta
    }

    pub fn d(&self) -> u32 {
        self.beta.d()
    }

    /// Variables from greatest to least; position is the exponent index.
    pub fn vars(&self) -> &[Root] {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn index_of(&self, v: Root) -> Result<usize> {
        self.index.get(&v).copied().ok_or(IdealError::ContextMismatch(v))
    }

    pub fn var_compare(&self, mu: Root, nu: Root) -> Result<Ordering> {
        let (i, j) = (self.index_of(mu)?, self.index_of(nu)?);
        Ok(j.cmp(&i))
    }

    pub fn mono_compare(&self, m1: &[u32], m2: &[u32]) -> Ordering {
        mono_cmp(m1, m2)
    }

    /// Exponent vector of a product of variables.
    pub fn monomial(&self, factors: &[Root]) -> Result<Vec<u32>> {
        let mut e = vec![0; self.vars.len()];
        for &f in factors {
            e[self.index_of(f)?] += 1;
        }
        Ok(e)
    }
}

/// Degree first, then lexicographic over the descending enumeration.
pub fn mono_cmp(m1: &[u32], m2: &[u32]) -> Ordering {
    let deg = |m: &[u32]| m.iter().map(|&x| x as u64).sum::<u64>();
    deg(m1).cmp(&deg(m2)).then_with(|| m1.cmp(m2))
}
