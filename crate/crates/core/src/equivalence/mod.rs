//! The 2-functors `T` (2-groups to crossed modules) and `S` (crossed
//! modules to 2-groups), the natural isomorphisms `ξ: ST ⇒ id` and
//! `ζ: TS ⇒ id`, and the round-trip verifier that checks all of it on a
//! finite collection.
//!
//! `ST(tg)` and `tg` live on different carriers (`ker s ⋊ g0` against
//! `g1`), so they are never compared for equality; only the closed-form
//! witnesses are checked.

mod functors;
mod roundtrip;
mod witness;

use thiserror::Error;

use crate::crossed_module::XModError;
use crate::group::{Elem, GroupError};
use crate::report::Violation;
use crate::two_group::TwoGroupError;

pub use functors::{s0, s1, s2, t0, t1, t2, SFunctor, TFunctor, TImage};
pub use roundtrip::{verify_round_trip_two_groups, verify_round_trip_xmods, RoundTripOptions};
pub use witness::{xi, xi_with, zeta, zeta_with, Xi, Zeta};

/// A functor image or witness failed validation. For valid inputs this
/// does not happen; it is reported rather than assumed.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EquivalenceError {
    #[error("f1 maps element {0} of ker s outside ker s'")]
    KernelNotPreserved(Elem),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    TwoGroup(#[from] TwoGroupError),
    #[error(transparent)]
    XMod(#[from] XModError),
}

impl Violation for EquivalenceError {
    fn check_id(&self) -> &'static str {
        match self {
            EquivalenceError::KernelNotPreserved(_) => "kernel-preserved",
            EquivalenceError::Group(e) => e.check_id(),
            EquivalenceError::TwoGroup(e) => e.check_id(),
            EquivalenceError::XMod(e) => e.check_id(),
        }
    }

    fn witness(&self) -> String {
        match self {
            EquivalenceError::KernelNotPreserved(k) => format!("k={k}"),
            EquivalenceError::Group(e) => e.witness(),
            EquivalenceError::TwoGroup(e) => e.witness(),
            EquivalenceError::XMod(e) => e.witness(),
        }
    }
}
