//! Computational Galois theory with Lagrange resolvents.
//!
//! The crate enumerates subgroup classes of small permutation groups, builds
//! the partition and group matrices of their coset actions, computes
//! resolvents of integer polynomials with certified coefficient recovery, and
//! identifies Galois groups by matching resolvent factorizations against the
//! matrices.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod expr;
pub mod galois;
pub mod invariants;
pub mod matrices;
pub mod perm;
pub mod polyint;
pub mod resolvent;
pub mod subgrp;

pub use error::{Error, Result};
pub use perm::{Permutation, PermutationGroup};
