//! Exact-arithmetic workbench for introductory abstract algebra.
//!
//! Rationals, quaternions and quadratic extensions are exact; complex numbers
//! and the polynomial solvers use `f64`.

pub mod classical;
pub mod complex;
pub mod error;
pub mod finite;
pub mod perm;
pub mod quadext;
pub mod quaternion;
pub mod rational;
pub mod solvers;
pub mod vector;

pub use complex::ComplexApprox;
pub use error::{AlgebraError, Result};
pub use finite::{CayleyTable, FiniteMap, RingReport, StructureReport};
pub use perm::Permutation;
pub use quadext::{ExtensionField, QuadExtElem};
pub use quaternion::Quaternion;
pub use rational::Rational;
pub use solvers::Poly;
pub use vector::Vec3Q;
