//! Dual pairs of chains in a pair of multisets on ℕ², and boundedness of
//! pairs by `(T, W)`.

use crate::arrays::SkewPair;
use crate::error::Result;
use crate::multiset::{plane_compare, PlaneMultiset};
use crate::obrsk::obrsk;
use crate::tableau::check_bounds;

/// Every dual pair of chains `{C1, C2}` in `{U1, U2} = ψ(p)`, returned as
/// the skew pair `ψ⁻¹(C1, C2)`. The empty pair is included.
pub fn dual_chain_pairs(p: &SkewPair) -> Vec<SkewPair> {
    let (u1, u2) = p.psi();
    let s1 = u1.support();
    let s2 = u2.support();
    let t = p.t();
    let mut out = Vec::new();
    for c1 in subsets(&s1) {
        let c1 = PlaneMultiset::new(c1).expect("positive");
        if !c1.is_chain() {
            continue;
        }
        for c2 in subsets(&s2).into_iter().filter(|c| c.len() == c1.len()) {
            let c2 = PlaneMultiset::new(c2).expect("positive");
            let sigma = SkewPair::psi_inv(&c1, &c2).expect("equal sizes");
            if !sigma.is_valid() {
                continue;
            }
            let m = sigma.t();
            let ok = (0..m).all(|i| {
                let col = (sigma.b()[i], sigma.a()[i]);
                let i_min = (0..t).find(|&k| (p.b()[k], p.a()[k]) == col).expect("C1 inside U1");
                let in_u = (p.c()[t - 1 - i_min], p.d()[t - 1 - i_min]);
                let in_c = (sigma.c()[m - 1 - i], sigma.d()[m - 1 - i]);
                in_u == in_c
            });
            if ok {
                out.push(sigma);
            }
        }
    }
    out
}

/// The two bound witnesses of a dual pair of chains: `up` of the OBRSK image
/// of its negative part and `down` of the image of its positive part.
pub fn chain_witnesses(sigma: &SkewPair) -> Result<(PlaneMultiset, PlaneMultiset)> {
    let (neg, pos) = sigma.split_parts()?;
    let (up, _) = obrsk(&neg)?.up_down();
    let (_, down) = obrsk(&pos)?.up_down();
    Ok((up, down))
}

/// `T ≤ up` and `down ≤ W` for every dual pair of chains in `ψ(p)`.
pub fn pair_bounded_by(p: &SkewPair, t: &PlaneMultiset, w: &PlaneMultiset) -> Result<bool> {
    check_bounds(t, w)?;
    for sigma in dual_chain_pairs(p) {
        let (up, down) = chain_witnesses(&sigma)?;
        if !plane_compare(t, &up)?.is_le() || !plane_compare(&down, w)?.is_le() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn subsets<T: Copy>(items: &[T]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for &x in items {
        let n = out.len();
        for i in 0..n {
            let mut s = out[i].clone();
            s.push(x);
            out.push(s);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_column_pair() {
        // ψ⁻¹({(1,3)}, {(2,4)}) has exactly two dual pairs of chains: ∅ and itself.
        let p = SkewPair::new(vec![3], vec![1], vec![4], vec![2]).unwrap();
        let pairs = dual_chain_pairs(&p);
        assert_eq!(pairs, vec![SkewPair::empty(), p.clone()]);
        let (up, down) = chain_witnesses(&p).unwrap();
        assert_eq!(up.points(), &[(1, 3), (2, 4)]);
        assert!(down.is_empty());
        let t = PlaneMultiset::new(vec![(1, 3), (2, 4)]).unwrap();
        assert_eq!(pair_bounded_by(&p, &t, &PlaneMultiset::empty()), Ok(true));
        let t = PlaneMultiset::new(vec![(3, 4)]).unwrap();
        assert_eq!(pair_bounded_by(&p, &t, &PlaneMultiset::empty()), Ok(false));
    }

    #[test]
    fn fixture_has_chain_pairs() {
        let p = crate::fixture::pair();
        let pairs = dual_chain_pairs(&p);
        assert!(pairs.contains(&SkewPair::empty()));
        assert!(pairs.iter().all(|s| s.is_valid() && s.psi().0.is_chain()));
    }
}
