//! Exact-arithmetic toolkit for dendriform coalgebras.

pub mod coalg;
pub mod cohomology;
pub mod corpus;
pub mod deform;
pub mod dendalg;
pub mod dendcoalg;
pub mod error;
pub mod homotopy;
pub mod io;
pub mod linalg;
pub mod operad;
pub mod report;
pub mod rota;

pub use error::{Error, Result};
pub use linalg::{LinearMap, Rational, SparseMatrix};
pub use report::{CheckReport, Verdict};
