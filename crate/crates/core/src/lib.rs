//! Chessboard complexes, Bier spheres, discrete Morse matchings, exact
//! simplicial homology, and Edmonds-Fulkerson bottleneck extrema.
//!
//! The crate builds generalized chessboard complexes and Bier spheres at
//! desk scale, constructs and certifies the standard discrete Morse
//! matchings on them, verifies sphere and connectivity claims by exact
//! integer homology, and solves bottleneck minmax problems on clutters
//! both by brute force and through the critical cell of a Morse matching
//! on a Bier sphere.

pub mod bier;
pub mod bottleneck;
pub mod chessboard;
pub mod complex;
pub mod enumeration;
pub mod error;
pub mod face;
pub mod homology;
pub mod io;
pub mod iso;
pub mod morse;
pub mod report;
pub mod verification;

pub use complex::{deleted_join_jwise, join, SimplicialComplex, DEFAULT_FACE_CAP};
pub use error::{Error, Result};
pub use face::Face;
