//! Exact computation in the type-A double affine Hecke algebra realized on
//! torus braid skeins.
//!
//! The crate works entirely over the field `Q(s,c)`:
//!
//! * [`scalar`] — exact rational-function arithmetic with the conjugation
//!   `s -> s^-1, c -> c^-1`;
//! * [`laurent`] — Laurent polynomials in `x1 .. x<kappa>`, the polynomial
//!   representation's underlying space;
//! * [`polyrep`] — the operators `T_i`, `X_i`, `Y_i`, `g` acting on that
//!   space, operator words, and the one-dimensional character of the finite
//!   part;
//! * [`qreduce`] — reduction of any degree-zero class to a multiple of the
//!   constant braid class, with an independent linear-algebra oracle;
//! * [`pairing`] — the skein bilinear form obtained by reversing one braid,
//!   concatenating and reducing, together with its adjoint-property checks;
//! * [`macdonald`] — nonsymmetric Macdonald polynomials as joint
//!   `Y`-eigenvectors, orthogonal under the pairing;
//! * [`braidcompile`] — parsing of braid words on the torus and their
//!   evaluation to normal form;
//! * [`cli`] — the command-line front end and JSON emission.

pub mod braidcompile;
pub mod cli;
pub mod error;
pub mod laurent;
mod linalg;
pub mod macdonald;
pub mod pairing;
pub mod parse;
pub mod polyrep;
pub mod qreduce;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
