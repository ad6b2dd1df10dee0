//! Finite strict 2-groups and crossed modules.
//!
//! Groups are stored as multiplication tables over element indices
//! `0..order`, with the identity pinned at index `0`. Every structure in the
//! crate is immutable once built and every constructor verifies its axioms
//! exhaustively, reporting the lexicographically first witness on failure.
//!
//! The layers, bottom-up:
//!
//! - [`group`]: tables, homomorphisms, actions, kernels, products,
//!   semidirect products, pullbacks and automorphism groups.
//! - [`two_group`]: strict 2-groups as internal categories in groups, with
//!   internal functors and internal natural transformations.
//! - [`crossed_module`]: crossed modules, their morphisms and 2-morphisms.
//! - [`equivalence`]: the 2-functors between the two 2-categories and the
//!   natural isomorphisms witnessing that they are inverse up to isomorphism.
//! - [`constructions`]: named example families, central extensions, normal
//!   subgroups and the built-in catalog of small groups.
//! - [`io`]: the line-oriented text formats.

pub mod bound;
pub mod collection;
pub mod constructions;
pub mod crossed_module;
pub mod equivalence;
pub mod group;
pub mod io;
pub mod report;
pub mod two_group;

pub use crossed_module::{CrossedModule, XMod2Morphism, XModError, XModMorphism};
pub use group::{Elem, FiniteGroup, GroupAction, GroupError, GroupHom, GroupIso};
pub use report::{CheckLine, Outcome, Report, Violation};
pub use two_group::{StrictTwoGroup, TwoGroupError, TwoGroupMorphism, TwoGroupTwoMorphism};
