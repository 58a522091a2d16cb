//! Pfaffians of the anti-diagonally skew-symmetric patch submatrices.

use obrsk_core::IdElement;

use crate::error::{IdealError, Result};
use crate::order::TermOrder;
use crate::patch::{entry_poly, patch_entry};
use crate::poly::SparsePoly;

/// `A[i][j] = M[i][n-1-j]` where `M` has rows `θ∖β` and columns `β∖θ`,
/// both ascending.
pub fn generator_matrix(theta: &IdElement, beta: &IdElement, order: &TermOrder) -> Result<Vec<Vec<SparsePoly>>> {
    if theta.d() != beta.d() {
        return Err(obrsk_core::Error::DimensionMismatch.into());
    }
    let rows = theta.minus(beta);
    let cols = beta.minus(theta);
    let n = cols.len();
    if n % 2 == 1 {
        return Err(IdealError::OddSize(n));
    }
    let mut a = Vec::with_capacity(n);
    for &r in &rows {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(entry_poly(patch_entry(beta, r, cols[n - 1 - j])?, order)?);
        }
        a.push(row);
    }
    Ok(a)
}

/// Pfaffian by expansion along the first row:
/// `Pf(A) = Σ_{j>0} (-1)^{j+1} a_{0j} Pf(A without rows/columns 0, j)`.
pub fn pfaffian(a: &[Vec<SparsePoly>], nvars: usize) -> Result<SparsePoly> {
    let n = a.len();
    if n % 2 == 1 {
        return Err(IdealError::OddSize(n));
    }
    let idx: Vec<usize> = (0..n).collect();
    Ok(pf_rec(a, &idx, nvars))
}

fn pf_rec(a: &[Vec<SparsePoly>], idx: &[usize], nvars: usize) -> SparsePoly {
    if idx.is_empty() {
        return SparsePoly::one(nvars);
    }
    let mut out = SparsePoly::zero(nvars);
    let i = idx[0];
    for k in 1..idx.len() {
        let entry = &a[i][idx[k]];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != idx[k]).collect();
        let term = entry.mul(&pf_rec(a, &rest, nvars));
        out = if k % 2 == 1 { out.add(&term) } else { out.sub(&term) };
    }
    out
}

/// `f_{θ,β}`.
pub fn pfaffian_generator(theta: &IdElement, beta: &IdElement, order: &TermOrder) -> Result<SparsePoly> {
    let a = generator_matrix(theta, beta, order)?;
    pfaffian(&a, order.num_vars())
}
