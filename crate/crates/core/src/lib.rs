//! Exact computations around projective ranks and minimal embeddings of
//! compact Hermitian symmetric spaces: root systems and parabolic splits,
//! Weyl dimensions, Schubert degrees, Cartan decompositions and Lie triple
//! systems, Plücker degrees of explicit curves, and a classification
//! catalog tying them together.

pub mod cli;
pub mod error;
pub mod hss_catalog;
pub mod linalg;
pub mod matrix_lie;
pub mod pluecker;
pub mod poly;
pub mod rep_theory;
pub mod root_system;
pub mod scalar;
pub mod schubert;
pub mod verify;

pub use error::{Error, Result};
