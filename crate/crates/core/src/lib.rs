//! Finite étale groupoids, their open-set quantales, and the two-way
//! correspondence between groupoid actions and quantale modules.
//!
//! Everything here is finite and spatial: locales are open-set lattices of
//! finite topological spaces, sup-lattice maps are tables, and every lemma
//! of the theory is checked by exhaustive evaluation. The crate is organized
//! bottom-up:
//!
//! - [`space`]: finite spaces, continuous maps, pullbacks;
//! - [`frame`]: finite frames, sup-lattice maps, adjoints, spatial duality;
//! - [`tensor`]: a brute-force sup-lattice tensor product of base-module
//!   frames, used as an independent oracle;
//! - [`groupoid`]: finite topological groupoids and their axioms;
//! - [`glocale`]: groupoid actions on spaces over the object space;
//! - [`quantale`]: the quantale of opens of an étale groupoid, partial
//!   units, support;
//! - [`qmodule`]: quantale modules, the action adjoint, and the conversion
//!   between actions and modules;
//! - [`sheaf`]: open modules, local sections, étale modules, and sheaf
//!   homomorphisms;
//! - [`corpus`]: exhaustive small-instance generators used by the
//!   verification sweeps.

pub mod corpus;
pub mod frame;
pub mod glocale;
pub mod groupoid;
pub mod qmodule;
pub mod quantale;
pub mod sheaf;
pub mod space;
pub mod tensor;
pub mod verdict;

pub use frame::{Frame, FrameMap, SupMap};
pub use glocale::GLocale;
pub use groupoid::FiniteGroupoid;



pub use space::{ContinuousMap, FiniteSpace, PointSet};
pub use verdict::{Verdict, Violation};
