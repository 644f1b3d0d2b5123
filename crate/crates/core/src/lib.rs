//! Exact computer algebra for unirational fields of transcendence degree one.
//!
//! The crate computes Lueroth generators of subfields of Q(x1..xn) given by
//! finitely many rational functions, polynomial generators when they exist,
//! and uni-multivariate decompositions f = g(h) with g univariate and h
//! multivariate, via two independent algorithms (a near-separated-polynomial
//! route and a normalized factor-pair route). All arithmetic is exact over
//! the rationals.

pub mod decompose;
pub mod display;
pub mod error;
pub mod factor;
pub mod linsolve;
pub mod monomial;
pub mod multipoly;
pub mod rat;
pub mod ratfunc;
pub mod unifactor;
pub mod unipoly;

pub mod lueroth;
pub mod mgcd;
pub mod modp;
pub use error::{Error, Result};
pub use monomial::{ExpVec, MOrder, OrderKind};
pub use multipoly::MultiPoly;
pub use rat::{Int, Rat};
pub use ratfunc::{compose, RatFunc};
pub use unipoly::{UniPoly, UniRatFunc};
