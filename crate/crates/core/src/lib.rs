pub mod check;
pub mod cli;
pub mod delta;
pub mod error;
pub mod euler;
pub mod evaluations;
pub mod gf2;
pub mod graph;
pub mod interlace;
pub mod io;
pub mod isotropic;
pub mod matroid;
pub mod plane;
pub mod poly;
pub mod random;
pub mod tutte;

pub use error::{Error, Result};
pub use gf2::Gf2Matrix;
pub use graph::Graph;
pub use poly::{IntPoly1, IntPoly2};
