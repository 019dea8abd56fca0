//! Exact computations for the rook monoid algebra, the partition algebra and
//! the totally propagating partition algebras: diagram calculus, seminormal
//! representations, characters, Bratteli graphs, RSK, tensor actions and
//! Jucys–Murphy elements.

pub mod bratteli;
pub mod characters;
pub mod combinat;
pub mod diagram;
pub mod error;
pub mod formal;
pub mod jm;
pub mod level;
pub mod matrix;
pub mod rook;
pub mod rsk;
pub mod scalar;
pub mod seminormal;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
pub use level::Level;
pub use scalar::{Poly, Rational};
