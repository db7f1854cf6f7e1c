//! Exact integral invariants of finitely presented groups and small
//! single-vertex simplicial sets.
//!
//! Everything in this crate is computed over the integers with
//! arbitrary-precision arithmetic; there are no floats and no modular
//! shortcuts. The main pipeline:
//!
//! * [`zlinalg`] — Smith/Hermite normal forms, lattices, and presentations
//!   of finitely generated abelian groups. The backbone of every other
//!   module.
//! * [`tensorspace`] — tensor, exterior and symmetric powers of a based
//!   free module, together with the structural maps (antisymmetrization,
//!   its section, wedge multiplication, the Jacobi embedding) used by the
//!   degree-3 decomposition.
//! * [`simplicial`] — finite single-vertex simplicial sets up to dimension
//!   3, normalized chains, the Alexander–Whitney diagonal and its degree-+1
//!   homotopy, cup products, cohomology, presentation complexes and
//!   pseudo-homeomorphism checking.
//! * [`cobar`] — the truncated cobar construction and the invariant
//!   algebra `A^(k)(X)` given by its degree-zero homology.
//! * [`grouprings`] — truncated Magnus expansion, the augmentation
//!   quotients `D^(k)(G)`, lower-central-series membership, and the graded
//!   data (`P2`, `P3`, the commutator class map) attached to a
//!   presentation.
//! * [`massey`] — triple Massey products, the invariant class carried by
//!   the degree-3 kernel lattice, and the decision procedure for extending
//!   an `H_1`-isomorphism to the nilpotent quotients of class 2 and 3.
//!
//! All values are immutable after construction and all operations are pure
//! functions, so concurrent use is safe; the few internal caches sit
//! behind [`std::sync::OnceLock`].

pub mod cobar;
pub mod error;
pub mod grouprings;
pub mod massey;
pub mod oracle;
pub mod simplicial;
pub mod tensorspace;
pub mod zlinalg;

pub use error::{Error, Result};
