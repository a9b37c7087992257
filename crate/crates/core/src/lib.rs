//! Exact invariants of Stanley-Reisner rings of clique complexes and of
//! edge ideals of complementary graphs.
//!
//! For a finite simple graph `G` the toolkit computes graded Betti tables of
//! `K[Δ(G)] = S/I(G^c)` through Hochster's formula, depth and projective
//! dimension, vertex connectivity (max-flow and brute force), the depth of
//! the second ordinary and symbolic powers of `I(G^c)` (through polarization),
//! and checks the known depth/connectivity inequalities on arbitrary graphs.
//!
//! Linear algebra is generic over the coefficient field (see [`field::Field`]);
//! the aliases [`Gf2`], [`Gf3`] and [`Rational`] name the concrete scalars
//! the rest of the crate uses.

pub mod complex;
pub mod error;
pub mod field;
pub mod graph;
pub mod hochster;
pub mod homology;
pub mod linalg;
pub mod monomial;
pub mod suite;

pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use field::{FieldSpec, Fp};
pub use graph::{ConnectivityResult, Graph, VertexSet};
pub use hochster::{BettiTable, DepthResult};
pub use homology::BettiVector;
pub use monomial::{Monomial, MonomialIdeal, Polarization};

/// The two-element field, the default coefficient field.
pub type Gf2 = field::Fp<2>;
/// The three-element field.
pub type Gf3 = field::Fp<3>;
/// Exact rationals, used as the characteristic-zero oracle.
pub type Rational = num_rational::BigRational;
