//! Entries of the patch matrix at `e_β`: rows `1..2d`, columns `β`.

use obrsk_core::og::star;
use obrsk_core::{IdElement, Root};

use crate::error::{IdealError, Result};
use crate::order::TermOrder;
use crate::poly::SparsePoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatchEntry {
    Var(Root),
    Zero,
    /// `−X_{(c*, r*)}`.
    NegVar(Root),
    Unit,
    OffUnit,
}

pub fn patch_entry(beta: &IdElement, r: u32, c: u32) -> Result<PatchEntry> {
    if !beta.contains(c) {
        return Err(IdealError::ColumnNotInBeta(c));
    }
    let d = beta.d();
    if beta.contains(r) {
        return Ok(if r == c { PatchEntry::Unit } else { PatchEntry::OffUnit });
    }
    let cs = star(c, d);
    Ok(match r.cmp(&cs) {
        std::cmp::Ordering::Less => PatchEntry::Var(Root::new(r, c)),
        std::cmp::Ordering::Equal => PatchEntry::Zero,
        std::cmp::Ordering::Greater => PatchEntry::NegVar(Root::new(cs, star(r, d))),
    })
}

pub fn entry_poly(e: PatchEntry, order: &TermOrder) -> Result<SparsePoly> {
    let n = order.num_vars();
    Ok(match e {
        PatchEntry::Var(v) => SparsePoly::var(n, order.index_of(v)?, 1),
        PatchEntry::NegVar(v) => SparsePoly::var(n, order.index_of(v)?, -1),
        PatchEntry::Unit => SparsePoly::one(n),
        PatchEntry::Zero | PatchEntry::OffUnit => SparsePoly::zero(n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn beta5() -> IdElement {
        IdElement::new(5, vec![1, 3, 4, 6, 9]).unwrap()
    }

    #[test]
    fn matrix_entries() {
        let b = beta5();
        assert_eq!(patch_entry(&b, 7, 6), Ok(PatchEntry::NegVar(Root::new(5, 4))));
        assert_eq!(patch_entry(&b, 10, 1), Ok(PatchEntry::Zero));
        assert_eq!(patch_entry(&b, 2, 3), Ok(PatchEntry::Var(Root::new(2, 3))));
        assert_eq!(patch_entry(&b, 3, 3), Ok(PatchEntry::Unit));
        assert_eq!(patch_entry(&b, 3, 4), Ok(PatchEntry::OffUnit));
        assert_eq!(patch_entry(&b, 2, 5), Err(IdealError::ColumnNotInBeta(5)));
    }

    #[test]
    fn full_matrix_rows() {
        // Rows 2, 5, 7, 8, 10 of the d = 5 patch, as (sign, r, c) or 0.
        let b = beta5();
        let show = |r: u32| -> Vec<String> {
            b.entries()
                .iter()
                .map(|&c| match patch_entry(&b, r, c).unwrap() {
                    PatchEntry::Var(v) => format!("X{}{}", v.r, v.c),
                    PatchEntry::NegVar(v) => format!("-X{}{}", v.r, v.c),
                    PatchEntry::Unit => "1".into(),
                    _ => "0".into(),
                })
                .collect()
        };
        assert_eq!(show(2), ["X21", "X23", "X24", "X26", "0"]);
        assert_eq!(show(5), ["X51", "X53", "X54", "0", "-X26"]);
        assert_eq!(show(7), ["X71", "X73", "0", "-X54", "-X24"]);
        assert_eq!(show(8), ["X81", "0", "-X73", "-X53", "-X23"]);
        assert_eq!(show(10), ["0", "-X81", "-X71", "-X51", "-X21"]);
        assert_eq!(show(9), ["0", "0", "0", "0", "1"]);
    }
}
