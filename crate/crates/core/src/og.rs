//! Indexing combinatorics of the orthogonal Grassmannian.
//!
//! `I(d)` holds the d-subsets of `{1..2d}` containing exactly one of each
//! pair `{k, k*}`, `k* = 2d+1-k`, with an even number of entries above `d`.
//! For `β ∈ I(d)` the grid points are `(r, c)` with `r ∉ β`, `c ∈ β`; the
//! roots are those with `r < c*`, split into negative (`r < c`) and
//! positive (`r > c`) roots.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::arrays::SkewPair;
use crate::bounded::pair_bounded_by;
use crate::error::{Error, Result};
use crate::multiset::{plane_compare, PlaneMultiset};
use crate::obrsk::obrsk;

pub fn star(k: u32, d: u32) -> u32 {
    2 * d + 1 - k
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdElement {
    d: u32,
    entries: Vec<u32>,
}

impl IdElement {
    pub fn new(d: u32, mut entries: Vec<u32>) -> Result<Self> {
        entries.sort_unstable();
        let bad = || Error::NotInId(entries.clone(), d);
        if d == 0 || entries.len() != d as usize || entries.windows(2).any(|w| w[0] == w[1]) {
            return Err(bad());
        }
        if entries.iter().any(|&x| x == 0 || x > 2 * d) {
            return Err(bad());
        }
        if entries.iter().any(|&x| entries.binary_search(&star(x, d)).is_ok()) {
            return Err(bad());
        }
        if entries.iter().filter(|&&x| x > d).count() % 2 == 1 {
            return Err(bad());
        }
        Ok(IdElement { d, entries })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn contains(&self, x: u32) -> bool {
        self.entries.binary_search(&x).is_ok()
    }

    /// `{1..2d} ∖ self`.
    pub fn complement(&self) -> Vec<u32> {
        (1..=2 * self.d).filter(|&x| !self.contains(x)).collect()
    }

    /// `self ∖ other`, ascending.
    pub fn minus(&self, other: &IdElement) -> Vec<u32> {
        self.entries.iter().copied().filter(|&x| !other.contains(x)).collect()
    }

    /// Half of `|self ∖ θ|`.
    pub fn beta_degree(&self, theta: &IdElement) -> usize {
        self.minus(theta).len() / 2
    }

    pub fn region_of(&self, r: u32, c: u32) -> Region {
        if !(1..=2 * self.d).contains(&r) || self.contains(r) || !self.contains(c) {
            return Region::NotGrid;
        }
        let cs = star(c, self.d);
        match r.cmp(&cs) {
            std::cmp::Ordering::Equal => Region::Diag,
            std::cmp::Ordering::Greater => Region::Below,
            std::cmp::Ordering::Less if r < c => Region::RootNeg,
            std::cmp::Ordering::Less => Region::Pos,
        }
    }

    /// All roots, sorted by `(r, c)`.
    pub fn roots(&self) -> Vec<Root> {
        let mut out = Vec::new();
        for r in self.complement() {
            for &c in &self.entries {
                if self.region_of(r, c).is_root() {
                    out.push(Root::new(r, c));
                }
            }
        }
        out
    }

    pub fn check_root(&self, root: Root) -> Result<()> {
        if self.region_of(root.r, root.c).is_root() {
            Ok(())
        } else {
            Err(Error::NotARoot(root.r, root.c))
        }
    }

    /// Parse `"1,3,4"`.
    pub fn parse(d: u32, s: &str) -> Result<Self> {
        let entries: std::result::Result<Vec<u32>, _> = s.split(',').map(|x| x.trim().parse::<u32>()).collect();
        match entries {
            Ok(e) => IdElement::new(d, e),
            Err(_) => Err(Error::NotInId(Vec::new(), d)),
        }
    }
}

impl fmt::Display for IdElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

impl Serialize for IdElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

/// All of `I(d)` in lexicographic order.
pub fn enumerate_id(d: u32) -> Vec<IdElement> {
    let mut out = Vec::with_capacity(1 << d.saturating_sub(1));
    for mask in 0u64..(1u64 << d) {
        let entries: Vec<u32> = (1..=d).map(|k| if mask >> (k - 1) & 1 == 1 { star(k, d) } else { k }).collect();
        if let Ok(e) = IdElement::new(d, entries) {
            out.push(e);
        }
    }
    out.sort();
    out
}

/// Entrywise `v ≤ w`.
pub fn id_leq(v: &IdElement, w: &IdElement) -> Result<bool> {
    if v.d != w.d {
        return Err(Error::DimensionMismatch);
    }
    Ok(v.entries.iter().zip(&w.entries).all(|(x, y)| x <= y))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    NotGrid,
    RootNeg,
    Pos,
    Diag,
    Below,
}

impl Region {
    pub fn is_root(self) -> bool {
        matches!(self, Region::RootNeg | Region::Pos)
    }
}

/// Grid point `(r, c)`: row `r`, column `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub r: u32,
    pub c: u32,
}

impl Root {
    pub fn new(r: u32, c: u32) -> Self {
        Root { r, c }
    }

    pub fn is_negative(self) -> bool {
        self.r < self.c
    }

    /// `λ > μ` iff `R > r` and `C < c`.
    pub fn above(self, other: Root) -> bool {
        self.r > other.r && self.c < other.c
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.c)
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.r, self.c].serialize(s)
    }
}

/// `(r, c)^# = (c*, r*)`.
pub fn hash_reflect(root: Root, d: u32) -> Root {
    Root::new(star(root.c, d), star(root.r, d))
}

pub fn monomial_hash(u: &[Root], d: u32) -> Vec<Root> {
    let mut out: Vec<Root> = u.iter().map(|&x| hash_reflect(x, d)).collect();
    out.sort_unstable();
    out
}

fn to_plane(u: &[Root]) -> PlaneMultiset {
    PlaneMultiset::new(u.iter().map(|x| (x.r, x.c)).collect()).expect("grid points are positive")
}

/// A chain `λ_1 < ... < λ_k` stored with rows increasing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ExtendedChain {
    elements: Vec<Root>,
}

impl ExtendedChain {
    pub fn new(mut elements: Vec<Root>) -> Option<Self> {
        elements.sort_unstable();
        if elements.windows(2).all(|w| w[1].above(w[0])) {
            Some(ExtendedChain { elements })
        } else {
            None
        }
    }

    pub fn elements(&self) -> &[Root] {
        &self.elements
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// `(C^-, C^+)`.
    pub fn split(&self) -> (ExtendedChain, ExtendedChain) {
        let (neg, pos): (Vec<Root>, Vec<Root>) = self.elements.iter().partition(|x| x.is_negative());
        (ExtendedChain { elements: neg }, ExtendedChain { elements: pos })
    }
}

/// Every chain inside `support`, the empty chain first.
pub fn enumerate_extended_chains(support: &[Root]) -> Vec<ExtendedChain> {
    let mut pts = support.to_vec();
    pts.sort_unstable();
    pts.dedup();
    let mut out = vec![ExtendedChain::default()];
    let mut stack: Vec<(Vec<Root>, usize)> = vec![(Vec::new(), 0)];
    while let Some((chain, from)) = stack.pop() {
        for i in from..pts.len() {
            if chain.last().is_none_or(|&last| pts[i].above(last)) {
                let mut next = chain.clone();
                next.push(pts[i]);
                out.push(ExtendedChain { elements: next.clone() });
                stack.push((next, i + 1));
            }
        }
    }
    out
}

pub fn split_chain(c: &ExtendedChain) -> (ExtendedChain, ExtendedChain) {
    c.split()
}

/// `{C, C^#}` for a sign-pure chain part.
pub fn chain_pair(part: &ExtendedChain, d: u32) -> Result<(PlaneMultiset, PlaneMultiset)> {
    let neg = part.elements.iter().filter(|x| x.is_negative()).count();
    if neg != 0 && neg != part.len() {
        return Err(Error::MixedSigns);
    }
    Ok((to_plane(&part.elements), to_plane(&monomial_hash(&part.elements, d))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainSign {
    Minus,
    Plus,
}

/// OBRSK image of `ψ⁻¹(C, C^#)`, with the validity of the pair asserted.
fn chain_image(part: &ExtendedChain, d: u32) -> Result<crate::tableau::NotchedBitableau> {
    let (u1, u2) = chain_pair(part, d)?;
    let pair = SkewPair::psi_inv(&u1, &u2)?;
    if !pair.is_valid() {
        return Err(Error::Assertion(format!("chain pair of {:?} is not skew-symmetric lexicographic", part)));
    }
    obrsk(&pair)
}

/// `w_C^-` from the top rows (MINUS) or `w_C^+` from the bottom rows (PLUS)
/// of the OBRSK image of `{C, C^#}`: drop the Q entries from `β` and add
/// the P entries.
pub fn w_of_chain(part: &ExtendedChain, beta: &IdElement, sign: ChainSign) -> Result<IdElement> {
    if part.is_empty() {
        return Err(Error::EmptyChain);
    }
    for &x in part.elements() {
        beta.check_root(x)?;
        if x.is_negative() != (sign == ChainSign::Minus) {
            return Err(Error::MixedSigns);
        }
    }
    let bt = chain_image(part, beta.d())?;
    let (up, down) = bt.up_down();
    let rows = if sign == ChainSign::Minus { up } else { down };
    let removed = rows.proj2();
    let added = rows.proj1();
    if !removed.entries().iter().all(|&x| beta.contains(x)) || added.entries().iter().any(|&x| beta.contains(x)) {
        return Err(Error::Assertion(format!("image of {:?} is off the grid of {beta}", part)));
    }
    let mut entries: Vec<u32> = beta.entries().iter().copied().filter(|&x| !removed.entries().contains(&x)).collect();
    entries.extend_from_slice(added.entries());
    let w = IdElement::new(beta.d(), entries)?;
    let ordered = match sign {
        ChainSign::Minus => id_leq(&w, beta)?,
        ChainSign::Plus => id_leq(beta, &w)?,
    };
    if !ordered {
        return Err(Error::Assertion(format!("w of {:?} is on the wrong side of {beta}", part)));
    }
    Ok(w)
}

/// `T_α` pairs sorted `α∖β` with sorted `β∖α`; `W_γ` pairs `γ∖β` with `β∖γ`.
pub fn t_w_bounds(alpha: &IdElement, gamma: &IdElement, beta: &IdElement) -> Result<(PlaneMultiset, PlaneMultiset)> {
    if !(id_leq(alpha, beta)? && id_leq(beta, gamma)?) {
        return Err(Error::BoundsNotComparable);
    }
    let zip = |x: Vec<u32>, y: Vec<u32>| -> Vec<(u32, u32)> { x.into_iter().zip(y).collect() };
    let t = zip(alpha.minus(beta), beta.minus(alpha));
    let w = zip(gamma.minus(beta), beta.minus(gamma));
    if !t.iter().all(|&(x, y)| x < y) || !w.iter().all(|&(x, y)| x > y) {
        return Err(Error::Assertion("T must be negative and W positive".into()));
    }
    Ok((PlaneMultiset::new(t)?, PlaneMultiset::new(w)?))
}

/// Membership in `Chains_α^γ(β)`.
pub fn chain_in_chains_set(c: &ExtendedChain, alpha: &IdElement, beta: &IdElement, gamma: &IdElement) -> Result<bool> {
    if c.is_empty() {
        return Err(Error::EmptyChain);
    }
    let (neg, pos) = c.split();
    if !neg.is_empty() && !id_leq(alpha, &w_of_chain(&neg, beta, ChainSign::Minus)?)? {
        return Ok(true);
    }
    if !pos.is_empty() && !id_leq(&w_of_chain(&pos, beta, ChainSign::Plus)?, gamma)? {
        return Ok(true);
    }
    Ok(false)
}

fn check_support(u: &[Root], beta: &IdElement) -> Result<()> {
    u.iter().try_for_each(|&x| beta.check_root(x))
}

/// Quotient test through chains: no chain of `supp(U)` lies in `Chains`.
pub fn quotient_by_chains(u: &[Root], alpha: &IdElement, beta: &IdElement, gamma: &IdElement) -> Result<bool> {
    check_support(u, beta)?;
    t_w_bounds(alpha, gamma, beta)?;
    for c in enumerate_extended_chains(u) {
        if !c.is_empty() && chain_in_chains_set(&c, alpha, beta, gamma)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Quotient test through boundedness: `{U, U^#}` is bounded by `T_α, W_γ`.
pub fn quotient_by_bounds(u: &[Root], alpha: &IdElement, beta: &IdElement, gamma: &IdElement) -> Result<bool> {
    check_support(u, beta)?;
    let (t, w) = t_w_bounds(alpha, gamma, beta)?;
    if u.is_empty() {
        return Ok(true);
    }
    let pair = SkewPair::psi_inv(&to_plane(u), &to_plane(&monomial_hash(u, beta.d())))?;
    pair.validate()?;
    pair_bounded_by(&pair, &t, &w)
}

/// Both quotient tests; a disagreement is an error.
pub fn is_quotient_monomial(u: &[Root], alpha: &IdElement, beta: &IdElement, gamma: &IdElement) -> Result<bool> {
    let a = quotient_by_chains(u, alpha, beta, gamma)?;
    let b = quotient_by_bounds(u, alpha, beta, gamma)?;
    if a != b {
        return Err(Error::Assertion(format!("quotient routes disagree on {u:?}: chains {a}, bounds {b}")));
    }
    Ok(a)
}

/// Precomputed `Chains_α^γ(β)` over all roots of `β`, for repeated
/// quotient tests. Each chain is checked by both routes on construction.
#[derive(Debug, Clone)]
pub struct ChainsOracle {
    roots: Vec<Root>,
    bad: Vec<u64>,
}

impl ChainsOracle {
    pub fn new(alpha: &IdElement, beta: &IdElement, gamma: &IdElement) -> Result<Self> {
        let (t, w) = t_w_bounds(alpha, gamma, beta)?;
        let roots = beta.roots();
        if roots.len() > 64 {
            return Err(Error::Assertion("too many roots for a bitmask".into()));
        }
        let mut bad = Vec::new();
        for c in enumerate_extended_chains(&roots) {
            if c.is_empty() {
                continue;
            }
            let by_chains = chain_in_chains_set(&c, alpha, beta, gamma)?;
            let (neg, pos) = c.split();
            let up = if neg.is_empty() { PlaneMultiset::empty() } else { chain_image(&neg, beta.d())?.up_down().0 };
            let down = if pos.is_empty() { PlaneMultiset::empty() } else { chain_image(&pos, beta.d())?.up_down().1 };
            let by_bounds = !(plane_compare(&t, &up)?.is_le() && plane_compare(&down, &w)?.is_le());
            if by_chains != by_bounds {
                return Err(Error::Assertion(format!("chain {:?}: chains {by_chains}, bounds {by_bounds}", c)));
            }
            if by_chains {
                let mask = c.elements().iter().map(|x| 1u64 << roots.binary_search(x).expect("root")).sum();
                bad.push(mask);
            }
        }
        Ok(ChainsOracle { roots, bad })
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// Number of chains in `Chains_α^γ(β)`.
    pub fn num_chains(&self) -> usize {
        self.bad.len()
    }

    /// Quotient test for a monomial given by exponents over `roots()`.
    pub fn is_quotient(&self, exponents: &[u32]) -> bool {
        let support: u64 = exponents.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| 1u64 << i).sum();
        !self.bad.iter().any(|&m| m & support == m)
    }
}
