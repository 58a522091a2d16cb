//! Orthogonal bounded RSK (OBRSK) and the chain combinatorics of the
//! orthogonal Grassmannian.
//!
//! * [`multiset`]: multisets on ℕ and ℕ², formal differences, counting order.
//! * [`tableau`]: notched tableaux and bitableaux with their predicates.
//! * [`arrays`]: pairs of skew-symmetric lexicographic arrays, `ψ`, `L`.
//! * [`obrsk`]: the correspondence and its reverse.
//! * [`bounded`]: dual pairs of chains and boundedness of pairs.
//! * [`og`]: `I(d)`, grid regions, extended chains, `w_C^±`, quotient tests.
//! * [`enumerate`]: exhaustive small-scale enumerations.
//! * [`fixture`]: the worked five-column example.

pub mod arrays;
pub mod bounded;
pub mod enumerate;
pub mod error;
pub mod fixture;
pub mod multiset;
pub mod obrsk;
pub mod og;
pub mod tableau;

pub use arrays::{SkewPair, TwoRowArray};
pub use error::{Error, Result};
pub use multiset::{Comparison, FormalDiff, NatMultiset, PlaneMultiset};
pub use og::{IdElement, Root};
pub use tableau::{NotchedBitableau, NotchedTableau, Sign};
