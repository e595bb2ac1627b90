//! Exact combinatorial invariants of generalized transversal slices and
//! convolution diagrams in affine Grassmannians.
//!
//! Everything is integer or exact-rational arithmetic. The crate is split
//! along the natural layers of the computation:
//!
//! * [`root_datum`]: lattices, pairings, Weyl group action, dominance order.
//! * [`rep`]: weight multiplicities of irreducible representations of the
//!   Langlands dual group (Freudenthal), minuscule detection, dimensions.
//! * [`characters`]: the ring of `T x C*` characters and q-polynomials.
//! * [`slices`]: invariants of a single slice.
//! * [`convolution`]: fixed points, tangent characters and Poincare
//!   polynomials of convolution diagrams.
//! * [`checks`]: exhaustive sweeps over bounded boxes of coweights.
//! * [`cli`]: the `slicekit` command-line frontend.

pub mod characters;
pub mod checks;
pub mod cli;
pub mod convolution;
mod error;
mod linalg;
pub mod rep;
pub mod root_datum;
pub mod slices;

pub use characters::{EquivariantCharacter, QPolynomial};
pub use error::{Error, Result};
pub use root_datum::{Coweight, GroupSpec, RootChar, RootDatum, SimpleType};
