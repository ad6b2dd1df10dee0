//! Crossed modules `(G, H, τ, α)`: a homomorphism `τ: H → G` and an action
//! `α` of `G` on `H` such that `τ` is equivariant and the Peiffer identity
//! `α(τ h, h') = h·h'·h⁻¹` holds.

mod laws;
mod morphism;

use std::sync::Arc;

use thiserror::Error;

use crate::group::{same_carrier, Elem, FiniteGroup, GroupAction, GroupError, GroupHom};
use crate::report::{CheckLine, Report, Violation};

pub use laws::check_2category_laws;
pub use morphism::{XMod2Morphism, XModMorphism};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum XModError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("{0}")]
    Typing(String),
    #[error("τ(α({g}, {h})) differs from g·τ(h)·g⁻¹")]
    Equivariance { g: Elem, h: Elem },
    #[error("α(τ({h}), {h2}) differs from h·h'·h⁻¹")]
    Peiffer { h: Elem, h2: Elem },
    #[error("τ'(δ({0})) differs from γ(τ({0}))")]
    MorphismTau(Elem),
    #[error("δ(α({g}, {h})) differs from α'(γ g, δ h)")]
    MorphismAction { g: Elem, h: Elem },
    #[error("eta has {len} entries or an entry out of range (expected {expected} entries below {bound})")]
    EtaShape { len: usize, expected: usize, bound: usize },
    #[error("crossed law fails at ({g}, {g2})")]
    CrossedLaw { g: Elem, g2: Elem },
    #[error("τ'(η({0})) differs from Γ(g)·γ(g)⁻¹")]
    ChainHomotopy1(Elem),
    #[error("η(τ({0})) differs from Δ(h)·δ(h)⁻¹")]
    ChainHomotopy2(Elem),
    #[error("g ↦ (η g, γ g) is not multiplicative at ({0}, {1})")]
    InducedHom(Elem, Elem),
    #[error("{0}")]
    NotParallel(String),
    #[error("{0}")]
    NotComposable(String),
}

impl Violation for XModError {
    fn check_id(&self) -> &'static str {
        match self {
            XModError::Group(e) => e.check_id(),
            XModError::Typing(_) => "typing",
            XModError::Equivariance { .. } => "equivariance",
            XModError::Peiffer { .. } => "peiffer",
            XModError::MorphismTau(_) => "morphism-tau",
            XModError::MorphismAction { .. } => "morphism-action",
            XModError::EtaShape { .. } => "eta-shape",
            XModError::CrossedLaw { .. } => "crossed-law",
            XModError::ChainHomotopy1(_) => "chain-homotopy-1",
            XModError::ChainHomotopy2(_) => "chain-homotopy-2",
            XModError::InducedHom(..) => "induced-hom",
            XModError::NotParallel(_) => "parallel",
            XModError::NotComposable(_) => "composable",
        }
    }

    fn witness(&self) -> String {
        match self {
            XModError::Group(e) => e.witness(),
            XModError::Typing(m) | XModError::NotParallel(m) | XModError::NotComposable(m) => m.replace(' ', "_"),
            XModError::Equivariance { g, h } | XModError::MorphismAction { g, h } => format!("g={g} h={h}"),
            XModError::Peiffer { h, h2 } => format!("h={h} h'={h2}"),
            XModError::MorphismTau(h) | XModError::ChainHomotopy2(h) => format!("h={h}"),
            XModError::EtaShape { len, expected, bound } => format!("len={len} expected={expected} bound={bound}"),
            XModError::CrossedLaw { g, g2 } => format!("g={g} g'={g2}"),
            XModError::ChainHomotopy1(g) => format!("g={g}"),
            XModError::InducedHom(g, g2) => format!("g={g} g'={g2}"),
        }
    }
}

/// A verified crossed module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    g: Arc<FiniteGroup>,
    h: Arc<FiniteGroup>,
    tau: GroupHom,
    alpha: GroupAction,
}

impl CrossedModule {
    pub fn new(g: Arc<FiniteGroup>, h: Arc<FiniteGroup>, tau: GroupHom, alpha: GroupAction) -> Result<Self, XModError> {
        let xm = Self::typed(g, h, tau, alpha)?;
        xm.check_equivariance()?;
        xm.check_peiffer()?;
        Ok(xm)
    }

    /// Both axioms, each reported with its first witness.
    pub fn diagnose(g: Arc<FiniteGroup>, h: Arc<FiniteGroup>, tau: GroupHom, alpha: GroupAction) -> Report {
        let mut report = Report::new();
        match Self::typed(g, h, tau, alpha) {
            Err(e) => report.push(CheckLine::fail(e.check_id(), e.witness())),
            Ok(xm) => {
                report.push(CheckLine::pass("typing"));
                report.push(CheckLine::from_violation(xm.check_equivariance(), "equivariance"));
                report.push(CheckLine::from_violation(xm.check_peiffer(), "peiffer"));
            }
        }
        report
    }

    fn typed(g: Arc<FiniteGroup>, h: Arc<FiniteGroup>, tau: GroupHom, alpha: GroupAction) -> Result<Self, XModError> {
        if !same_carrier(tau.src(), &h) || !same_carrier(tau.dst(), &g) {
            return Err(XModError::Typing("tau must map H to G".into()));
        }
        if !same_carrier(alpha.actor(), &g) || !same_carrier(alpha.space(), &h) {
            return Err(XModError::Typing("alpha must be an action of G on H".into()));
        }
        Ok(CrossedModule { g, h, tau, alpha })
    }

    fn check_equivariance(&self) -> Result<(), XModError> {
        for g in self.g.elements() {
            for h in self.h.elements() {
                if self.tau.apply(self.alpha.act(g, h)) != self.g.conj(g, self.tau.apply(h)) {
                    return Err(XModError::Equivariance { g, h });
                }
            }
        }
        Ok(())
    }

    fn check_peiffer(&self) -> Result<(), XModError> {
        for h in self.h.elements() {
            let th = self.tau.apply(h);
            for h2 in self.h.elements() {
                if self.alpha.act(th, h2) != self.h.conj(h, h2) {
                    return Err(XModError::Peiffer { h, h2 });
                }
            }
        }
        Ok(())
    }

    pub fn g(&self) -> &Arc<FiniteGroup> {
        &self.g
    }

    pub fn h(&self) -> &Arc<FiniteGroup> {
        &self.h
    }

    pub fn tau(&self) -> &GroupHom {
        &self.tau
    }

    pub fn alpha(&self) -> &GroupAction {
        &self.alpha
    }
}

/// Strict identity of crossed modules: the same allocation, or table-equal
/// carriers with equal `τ` and `α`.
pub fn same_xmod(a: &Arc<CrossedModule>, b: &Arc<CrossedModule>) -> bool {
    Arc::ptr_eq(a, b)
        || (same_carrier(&a.g, &b.g)
            && same_carrier(&a.h, &b.h)
            && a.tau.images() == b.tau.images()
            && a.alpha.entries() == b.alpha.entries())
}
