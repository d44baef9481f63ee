//! Exact Gotzmann/Macaulay calculus.
//!
//! Binomial representations of Hilbert polynomials, Hilbert functions of
//! monomial quotient modules, an experimental check of Gotzmann regularity
//! for globally generated sheaves, Quot-scheme dimension counts on P¹, and
//! Chern-class bounds for rank-2 globally generated sheaves on P³.

pub mod chern;
pub mod cli;
pub mod gotzmann;
pub mod macaulay;
pub mod monomial;
pub mod polyint;
pub mod quotdim;
