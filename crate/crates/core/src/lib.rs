//! Exact-arithmetic hom-Lie algebras, their cohomology, 2-term
//! HL∞-algebras and hom-Lie 2-algebras.
//!
//! Everything is given by structure constants over `BigRational`; every
//! axiom check returns a [`Report`] naming the first failing basis tuple.

#![no_std]

extern crate alloc;

pub mod cohomology;
pub mod constructions;
pub mod error;
pub mod hl2;
pub mod homlie;
pub mod linalg;
pub mod report;
pub mod twovect;

pub use error::{Error, Result};
pub use linalg::{Matrix, Rational, Tensor, Vector};
pub use report::{Check, Report};
