//! Exact arithmetic over `ℚ` and prime fields: polynomials, square
//! matrices, ranks and Jordan decompositions.

pub mod centralizer;
pub mod field;
pub mod io;
pub mod jordan;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod sample;

pub use centralizer::{matrix_centralizer_dim, Ambient};
pub use field::{Field, FieldElem};
pub use jordan::{jordan_data, jordan_decomposition, JordanData};
pub use matrix::ExactMatrix;
pub use poly::{resultant, Poly};
