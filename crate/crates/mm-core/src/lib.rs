//! Construction and verification of the Mayr-Meyer ideal families J(n,d)
//! and K(n,d) over a prime field, together with the commutative-algebra
//! toolbox the verification needs: sparse multivariate polynomials,
//! monomial orders, Buchberger's algorithm, elimination, intersections,
//! colons, saturation, Krull dimension, and degree-bounded membership
//! certificates.
//!
//! The crate is `no_std`-compatible (it needs `alloc` only); the default
//! `std` feature adds thread-safe Groebner-basis caching.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod catalog;
pub mod dimension;
pub mod error;
pub mod field;
pub mod groebner;
pub mod ideal;
pub mod monomial;
pub mod ops;
pub mod order;
pub mod parse;
pub mod poly;
pub mod rep;
pub mod ring;
pub mod verify;

pub use error::{CoreError, ParseError};
pub use field::Field;
pub use ideal::Ideal;
pub use monomial::Monomial;
pub use order::{MonomialOrder, VarSet};
pub use poly::Poly;
pub use ring::{Ring, VarTable};
