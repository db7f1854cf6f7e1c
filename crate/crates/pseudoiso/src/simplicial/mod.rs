//! Finite single-vertex simplicial sets through dimension 3.
//!
//! Sets are stored by their nondegenerate simplices only; normalized
//! chains therefore have one basis element per stored simplex and the
//! single vertex in degree 0. Everything downstream (diagonal, cup
//! products, cohomology, the cobar construction) works over these
//! normalized chains.

mod chains;
mod cohomology;
mod cup;
mod maps;
mod presentation;
mod set;

pub use chains::{ChainComplex, Diagonal};
pub use cohomology::Cohomology;
pub use cup::{zeta, Cochain, CupStructure};
pub use maps::{PseudoHomeoVerdict, SimplicialMap, TetImage};
pub use presentation::{presentation_complex, PresentationComplex};
pub use set::{EdgeRef, Face2Ref, SimplicialSet, Triangle, Tetrahedron};
