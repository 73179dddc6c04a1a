//! Blow-spherical invariants of complex algebraic plane curves.

pub mod algnum;
pub mod arith;
pub mod bstree;
pub mod error;
pub mod invariants;
pub mod normalform;
pub mod poly;
pub mod puiseux;
pub mod upoly;
pub mod zfactor;

pub use arith::{Int, Rat};
pub use error::{Error, Result};
pub use poly::{Factorization, Part, Poly};
pub use upoly::UPoly;
pub use algnum::AlgebraicNumber;
pub use bstree::{BsTree, Flavor, Kind, TreeNode};
pub use invariants::{Direction, Location, Topology};
pub use normalform::NormalFormData;
