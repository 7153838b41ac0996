//! Exact arithmetic in the super Yangian `Y_{m|n}` and the current
//! superalgebra `gl_{m|n}[x]` over a prime field, with the machinery to
//! construct central elements and check presentations at finite order.

pub mod context;
pub mod element;
pub mod error;
pub mod field;
pub mod pbw;
pub mod yangian;

pub use context::AlgebraContext;
pub use element::{Canonical, CurrentElement, Element};
pub use error::{Error, Result};
pub use pbw::{Gen, Monomial};
pub use yangian::{loop_degree, Yangian};
pub mod current;
pub mod invariants;
pub mod linalg;
pub mod expr;
pub mod series;
pub mod gauss;
pub mod central;
pub mod maps;
pub mod verify;
