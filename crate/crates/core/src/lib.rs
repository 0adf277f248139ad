//! Exceptional sequences over affine type A quivers.
//!
//! Indecomposable string modules over an acyclic orientation of the cyclic
//! quiver, their Hom and Ext spaces computed from graph maps, the arc model
//! in the annulus, and the twist action that groups complete exceptional
//! collections into finitely many families.

pub mod arcs;
pub mod exec;
pub mod families;
pub mod homext;
pub mod io;
pub mod oracle;
pub mod quiver;
pub mod render;
pub mod string;

pub use arcs::{arc_of, module_of, pair_relation, relation_algebraic, strand_of, Arc, ArcDiagram, ArcKind, PairRelation, Strand};
pub use exec::Execution;
pub use families::{canonical_small, count_families, dehn_twist, elementary_twist, same_family, Family, TwistDirection};
pub use homext::{dim_ext, dim_hom, euler_form, is_exceptional_pair};
pub use quiver::{Boundary, Quiver, Sign};
pub use string::{StringClass, StringModule};
