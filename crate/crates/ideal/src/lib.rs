//! Pfaffian generators of the tangent-cone ideal of a Richardson variety in
//! the orthogonal Grassmannian at a torus-fixed point, the term order on
//! its patch coordinates, and an exact per-degree verifier comparing the
//! initial ideal with the chain-divisible monomials.

pub mod error;
pub mod ideal;
pub mod linalg;
pub mod order;
pub mod patch;
pub mod pfaffian;
pub mod poly;
pub mod verify;

pub use error::{IdealError, Result};
pub use order::TermOrder;
pub use poly::SparsePoly;
pub use verify::{comparable_triples, verify_main_theorem, DegreeReport, TripleReport};
