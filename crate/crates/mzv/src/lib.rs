//! Exact computer algebra for multiple zeta values.
//!
//! Multiple zeta values ζ(i₁,…,i_k) are coded by words over a two-letter
//! alphabet {x, y}: the composition (i₁,…,i_k) corresponds to the word
//! x^{i₁-1}y x^{i₂-1}y ⋯ x^{i_k-1}y.  On the rational span of these words
//! this crate implements, exactly:
//!
//! * the shuffle product and the harmonic (quasi-shuffle) product,
//! * the isomorphism with quasi-symmetric functions, their monomial /
//!   fundamental / essential bases and Hopf structure (coproduct, antipode),
//! * the QSym action on words, the derivation families it induces, and
//!   cyclic derivations,
//! * finite multiple harmonic sums, their sequence operators, and their
//!   congruences modulo primes,
//!
//! together with a floating-point evaluator for the ζ map itself and a
//! verification harness that checks the classical identities (duality, sum,
//! derivation, Ohno, cyclic, Le–Murakami, …) numerically at small weight.

pub mod action;
pub mod finite;
pub mod linalg;
pub mod numeric;
pub mod poly;
pub mod qsym;
pub mod series;
pub mod shuffle;
pub mod text;
pub mod varpoly;
pub mod verify;
pub mod word;

mod error;

pub use error::Error;
pub use poly::{NCPoly, Rat, TensorPoly};
pub use word::{Composition, Letter, Word};

pub type Result<T> = std::result::Result<T, Error>;
