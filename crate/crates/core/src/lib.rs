//! O-Fibonacci and I-Fibonacci `(p,r)`-cubes, and Cartesian-product prime
//! factorization of small connected graphs through the `(Θ ∪ τ)*` edge relation.
//!
//! The crate is organized bottom-up:
//!
//! * [`words`]: the two word families, their enumerators and counters.
//! * [`graph`]: cubes as induced subgraphs of `Q_n`, products, distances,
//!   isomorphism, recognizers and coordinate layers.
//! * [`relations`]: the Θ and τ edge relations, their closure and primality.
//! * [`factorization`]: prime factor extraction and the cube theorem grid.
//! * [`suites`]: grid drivers that check the structural claims cell by cell.
//!
//! Data-parallel loops go through [`Exec`]; with the default `parallel`
//! feature they run on rayon, otherwise they fall back to plain iterators.

pub mod error;
pub mod exec;
pub mod factorization;
pub mod graph;
pub mod relations;
pub mod suites;
mod union_find;
pub mod words;

pub use error::{Error, Result};
pub use exec::Exec;
pub use factorization::{factorize, verify_factorization, Factorization};
pub use graph::{build_cube, Edge, Graph};
pub use relations::{is_prime, sigma_classes, EdgePartition};
pub use words::{count_words, enumerate_words, CubeParams, Family, Word};
