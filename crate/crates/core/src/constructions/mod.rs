//! Named example families, crossed modules from central extensions and
//! normal subgroups, the catalog of small groups, and fixture collections.

pub mod catalog;
mod extension;
mod families;
pub mod fixtures;

use thiserror::Error;

use crate::crossed_module::XModError;
use crate::group::{Elem, GroupError};
use crate::report::Violation;
use crate::two_group::TwoGroupError;

pub use extension::{default_section, is_central_extension, xmod_from_central_extension, xmod_from_normal_subgroup};
pub use families::{
    automorphism_crossed_module, automorphism_two_group, automorphism_two_group_bounded, conjugation_crossed_module,
    delooping_crossed_module, delooping_two_group, discrete_two_group, trivial_crossed_module,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("group is not abelian: {0}·{1} differs from {1}·{0}")]
    NotAbelian(Elem, Elem),
    #[error("map is not surjective: {0} is not hit")]
    NotSurjective(Elem),
    #[error("kernel element {k} does not commute with {h}")]
    KernelNotCentral { k: Elem, h: Elem },
    #[error("section does not split the map at {0}")]
    NotASection(Elem),
    #[error("map is not injective: {0} and {1} have the same image")]
    NotInjective(Elem, Elem),
    #[error("conjugating subgroup element {n} by {g} leaves the subgroup")]
    NotNormal { g: Elem, n: Elem },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    TwoGroup(#[from] TwoGroupError),
    #[error(transparent)]
    XMod(#[from] XModError),
}

impl Violation for ConstructionError {
    fn check_id(&self) -> &'static str {
        match self {
            ConstructionError::NotAbelian(..) => "not-abelian",
            ConstructionError::NotSurjective(_) => "not-surjective",
            ConstructionError::KernelNotCentral { .. } => "kernel-not-central",
            ConstructionError::NotASection(_) => "not-a-section",
            ConstructionError::NotInjective(..) => "not-injective",
            ConstructionError::NotNormal { .. } => "not-normal",
            ConstructionError::Group(e) => e.check_id(),
            ConstructionError::TwoGroup(e) => e.check_id(),
            ConstructionError::XMod(e) => e.check_id(),
        }
    }

    fn witness(&self) -> String {
        match self {
            ConstructionError::NotAbelian(a, b) => format!("a={a} b={b}"),
            ConstructionError::NotSurjective(g) | ConstructionError::NotASection(g) => format!("g={g}"),
            ConstructionError::KernelNotCentral { k, h } => format!("k={k} h={h}"),
            ConstructionError::NotInjective(a, b) => format!("a={a} b={b}"),
            ConstructionError::NotNormal { g, n } => format!("g={g} n={n}"),
            ConstructionError::Group(e) => e.witness(),
            ConstructionError::TwoGroup(e) => e.witness(),
            ConstructionError::XMod(e) => e.witness(),
        }
    }
}
