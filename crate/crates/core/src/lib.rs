//! Computational quandle theory.
//!
//! Finite quandles are stored as dense operation tables ([`FiniteQuandle`]).
//! Everything else in the crate either builds such tables (Dehn and Coxeter
//! quandles of finite groups, projective primitive homological quandles,
//! coset enumeration of quandle presentations) or inspects them (axioms,
//! orbits, congruences, isomorphisms).
//!
//! Conventions used throughout:
//! - `table[x][y]` is `x * y`, and the right translation `S_y` is column `y`.
//! - In a group, the quandle operation is conjugation `x * y = y x y^-1`.
//! - Permutation products compose left to right: `(p * q)(i) = q(p(i))`.

pub mod enumeration;
pub mod error;
pub mod groups;
pub mod presentation;
pub mod quandle;
pub mod symplectic;

pub use enumeration::{enumerate_group, enumerate_quandle, Caps, EnumOutcome, GroupResult};
pub use error::{Axiom, Error, Result};
pub use groups::{FiniteGroup, PermGroup, Permutation};
pub use presentation::{GroupPresentation, GroupWord, QWord, QuandlePresentation, Sign};
pub use quandle::{Congruence, FiniteQuandle};
pub use symplectic::{PrimClass, SympMatrix};
