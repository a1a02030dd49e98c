//! Exact calculus for Delta-filtered modules over two quasi-hereditary
//! algebras: the Auslander algebra of k[T]/T^n and of its C2 skew extension.
//!
//! The crate has two layers that must always agree:
//!
//! * combinatorial closed forms ([`signed`], [`formulas`], [`richardson`])
//!   computing Hom/Ext dimensions, costandard complements, decomposition
//!   classes of canonical extensions, and Richardson-module plans for
//!   symmetric dimension vectors;
//! * a linear-algebra oracle ([`quiver`], [`rep`], [`build`], [`functors`])
//!   that realizes the same modules as explicit bound-quiver representations
//!   over the rationals or an odd prime field and recomputes everything from
//!   matrices.
//!
//! The `delta-orbit` binary exposes both layers; `examples/` holds one
//! runnable walkthrough per capability.

pub mod build;
pub mod cli;
pub mod field;
pub mod formulas;
pub mod functors;
pub mod linalg;
pub mod quiver;
pub mod rep;
pub mod richardson;
pub mod show;
pub mod signed;
pub mod sweeps;
