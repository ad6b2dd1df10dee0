use std::sync::Arc;

use super::{same_xmod, CrossedModule, XModError};
use crate::group::{same_carrier, semidirect_product, Elem, GroupHom};
use crate::report::{CheckLine, Report, Violation};

/// A morphism `(γ, δ)` of crossed modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XModMorphism {
    src: Arc<CrossedModule>,
    dst: Arc<CrossedModule>,
    gamma: GroupHom,
    delta: GroupHom,
}

impl XModMorphism {
    pub fn new(
        src: Arc<CrossedModule>,
        dst: Arc<CrossedModule>,
        gamma: GroupHom,
        delta: GroupHom,
    ) -> Result<Self, XModError> {
        let m = Self::typed(src, dst, gamma, delta)?;
        m.check_tau()?;
        m.check_action()?;
        Ok(m)
    }

    pub fn diagnose(src: Arc<CrossedModule>, dst: Arc<CrossedModule>, gamma: GroupHom, delta: GroupHom) -> Report {
        let mut report = Report::new();
        match Self::typed(src, dst, gamma, delta) {
            Err(e) => report.push(CheckLine::fail(e.check_id(), e.witness())),
            Ok(m) => {
                report.push(CheckLine::pass("typing"));
                report.push(CheckLine::from_violation(m.check_tau(), "morphism-tau"));
                report.push(CheckLine::from_violation(m.check_action(), "morphism-action"));
            }
        }
        report
    }

    fn typed(
        src: Arc<CrossedModule>,
        dst: Arc<CrossedModule>,
        gamma: GroupHom,
        delta: GroupHom,
    ) -> Result<Self, XModError> {
        if !same_carrier(gamma.src(), src.g()) || !same_carrier(gamma.dst(), dst.g()) {
            return Err(XModError::Typing("gamma must map G to G'".into()));
        }
        if !same_carrier(delta.src(), src.h()) || !same_carrier(delta.dst(), dst.h()) {
            return Err(XModError::Typing("delta must map H to H'".into()));
        }
        Ok(XModMorphism { src, dst, gamma, delta })
    }

    fn check_tau(&self) -> Result<(), XModError> {
        match self
            .src
            .h()
            .elements()
            .find(|&h| self.dst.tau().apply(self.delta.apply(h)) != self.gamma.apply(self.src.tau().apply(h)))
        {
            Some(h) => Err(XModError::MorphismTau(h)),
            None => Ok(()),
        }
    }

    fn check_action(&self) -> Result<(), XModError> {
        for g in self.src.g().elements() {
            let gg = self.gamma.apply(g);
            for h in self.src.h().elements() {
                if self.delta.apply(self.src.alpha().act(g, h)) != self.dst.alpha().act(gg, self.delta.apply(h)) {
                    return Err(XModError::MorphismAction { g, h });
                }
            }
        }
        Ok(())
    }

    pub fn identity(xm: Arc<CrossedModule>) -> Self {
        let gamma = GroupHom::identity(xm.g().clone());
        let delta = GroupHom::identity(xm.h().clone());
        XModMorphism { src: xm.clone(), dst: xm, gamma, delta }
    }

    /// `self ∘ first`, componentwise.
    pub fn after(&self, first: &XModMorphism) -> Result<Self, XModError> {
        if !same_xmod(&first.dst, &self.src) {
            return Err(XModError::NotComposable("morphisms do not meet at a common crossed module".into()));
        }
        let gamma = self.gamma.after(&first.gamma)?;
        let delta = self.delta.after(&first.delta)?;
        Self::new(first.src.clone(), self.dst.clone(), gamma, delta)
    }

    pub fn src(&self) -> &Arc<CrossedModule> {
        &self.src
    }

    pub fn dst(&self) -> &Arc<CrossedModule> {
        &self.dst
    }

    pub fn gamma(&self) -> &GroupHom {
        &self.gamma
    }

    pub fn delta(&self) -> &GroupHom {
        &self.delta
    }

    pub fn same_as(&self, other: &XModMorphism) -> bool {
        self.is_parallel_to(other)
            && self.gamma.images() == other.gamma.images()
            && self.delta.images() == other.delta.images()
    }

    pub fn is_parallel_to(&self, other: &XModMorphism) -> bool {
        same_xmod(&self.src, &other.src) && same_xmod(&self.dst, &other.dst)
    }
}

/// A 2-morphism `η: (γ, δ) ⇒ (Γ, Δ)`, given by a map `η: G → H'` that is
/// in general not a homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XMod2Morphism {
    source: XModMorphism,
    target: XModMorphism,
    eta: Vec<Elem>,
}

type EtaCheck = fn(&XMod2Morphism) -> Result<(), XModError>;

const ETA_LAWS: [(&str, EtaCheck); 3] = [
    ("crossed-law", XMod2Morphism::check_crossed_law),
    ("chain-homotopy-1", XMod2Morphism::check_chain_homotopy_1),
    ("chain-homotopy-2", XMod2Morphism::check_chain_homotopy_2),
];

impl XMod2Morphism {
    pub fn new(source: XModMorphism, target: XModMorphism, eta: Vec<Elem>) -> Result<Self, XModError> {
        let th = Self::typed(source, target, eta)?;
        for (_, law) in ETA_LAWS {
            law(&th)?;
        }
        th.check_induced_hom()?;
        Ok(th)
    }

    /// The three defining laws, then the induced-homomorphism check, which
    /// is implied by the crossed law and is skipped when that fails.
    pub fn diagnose(source: XModMorphism, target: XModMorphism, eta: Vec<Elem>) -> Report {
        let mut report = Report::new();
        match Self::typed(source, target, eta) {
            Err(e) => report.push(CheckLine::fail(e.check_id(), e.witness())),
            Ok(th) => {
                report.push(CheckLine::pass("parallel"));
                let mut crossed_ok = true;
                for (id, law) in ETA_LAWS {
                    let result = law(&th);
                    crossed_ok &= id != "crossed-law" || result.is_ok();
                    report.push(CheckLine::from_violation(result, id));
                }
                if crossed_ok {
                    report.push(CheckLine::from_violation(th.check_induced_hom(), "induced-hom"));
                } else {
                    report.push(CheckLine::skip("induced-hom", "crossed-law-failed"));
                }
            }
        }
        report
    }

    fn typed(source: XModMorphism, target: XModMorphism, eta: Vec<Elem>) -> Result<Self, XModError> {
        if !source.is_parallel_to(&target) {
            return Err(XModError::NotParallel("source and target morphisms are not parallel".into()));
        }
        let (expected, bound) = (source.src.g().order(), source.dst.h().order());
        if eta.len() != expected || eta.iter().any(|&x| x >= bound) {
            return Err(XModError::EtaShape { len: eta.len(), expected, bound });
        }
        Ok(XMod2Morphism { source, target, eta })
    }

    /// `η(g·g̃) = η(g)·α'(γ g, η g̃)`.
    fn check_crossed_law(&self) -> Result<(), XModError> {
        let (g, h2) = (self.source.src.g(), self.source.dst.h());
        let alpha2 = self.source.dst.alpha();
        for a in g.elements() {
            let ga = self.source.gamma.apply(a);
            for b in g.elements() {
                if self.eta[g.mul(a, b)] != h2.mul(self.eta[a], alpha2.act(ga, self.eta[b])) {
                    return Err(XModError::CrossedLaw { g: a, g2: b });
                }
            }
        }
        Ok(())
    }

    /// `τ'(η g) = Γ(g)·γ(g)⁻¹`.
    fn check_chain_homotopy_1(&self) -> Result<(), XModError> {
        let g2 = self.source.dst.g();
        let tau2 = self.source.dst.tau();
        match self.source.src.g().elements().find(|&g| {
            tau2.apply(self.eta[g]) != g2.mul(self.target.gamma.apply(g), g2.inv(self.source.gamma.apply(g)))
        }) {
            Some(g) => Err(XModError::ChainHomotopy1(g)),
            None => Ok(()),
        }
    }

    /// `η(τ h) = Δ(h)·δ(h)⁻¹`.
    fn check_chain_homotopy_2(&self) -> Result<(), XModError> {
        let h2 = self.source.dst.h();
        let tau = self.source.src.tau();
        match self
            .source
            .src
            .h()
            .elements()
            .find(|&h| self.eta[tau.apply(h)] != h2.mul(self.target.delta.apply(h), h2.inv(self.source.delta.apply(h))))
        {
            Some(h) => Err(XModError::ChainHomotopy2(h)),
            None => Ok(()),
        }
    }

    /// `g ↦ (η g, γ g)` is a homomorphism into `H' ⋊ G'`, checked against
    /// the materialized semidirect product table.
    fn check_induced_hom(&self) -> Result<(), XModError> {
        let dst = &self.source.dst;
        let sd = semidirect_product(dst.h(), dst.g(), dst.alpha())?;
        let g = self.source.src.g();
        let images: Vec<Elem> = g.elements().map(|x| sd.pair(self.eta[x], self.source.gamma.apply(x))).collect();
        match GroupHom::new(g.clone(), sd.group.clone(), images) {
            Ok(_) => Ok(()),
            Err(crate::group::GroupError::NotMultiplicative(a, b)) => Err(XModError::InducedHom(a, b)),
            Err(e) => Err(e.into()),
        }
    }

    /// The constant-`e` unit 2-morphism on `f`.
    pub fn unit(f: &XModMorphism) -> Self {
        let eta = vec![0; f.src.g().order()];
        XMod2Morphism { source: f.clone(), target: f.clone(), eta }
    }

    /// `upper • lower`: `g ↦ η̄(g)·η(g)`.
    pub fn vcompose(upper: &Self, lower: &Self) -> Result<Self, XModError> {
        if !lower.target.same_as(&upper.source) {
            return Err(XModError::NotComposable("lower target differs from upper source".into()));
        }
        let h2 = lower.source.dst.h();
        let eta = lower.eta.iter().zip(&upper.eta).map(|(&lo, &up)| h2.mul(up, lo)).collect();
        Self::new(lower.source.clone(), upper.target.clone(), eta)
    }

    /// `outer ∘ inner` for `inner: (γ,δ) ⇒ (Γ,Δ)` from `χ` to `χ'` and
    /// `outer: (γ',δ') ⇒ (Γ',Δ')` from `χ'` to `χ''`:
    /// `g ↦ Δ'(η g)·η'(γ g)`.
    pub fn hcompose(outer: &Self, inner: &Self) -> Result<Self, XModError> {
        let eta = Self::horizontal_images(outer, inner, false)?;
        let source = outer.source.after(&inner.source)?;
        let target = outer.target.after(&inner.target)?;
        Self::new(source, target, eta)
    }

    /// The other horizontal formula, `g ↦ η'(Γ g)·δ'(η g)`, as a raw table.
    pub fn hcompose_alternative(outer: &Self, inner: &Self) -> Result<Vec<Elem>, XModError> {
        Self::horizontal_images(outer, inner, true)
    }

    fn horizontal_images(outer: &Self, inner: &Self, alternative: bool) -> Result<Vec<Elem>, XModError> {
        if !same_xmod(&inner.source.dst, &outer.source.src) {
            return Err(XModError::NotComposable("inner codomain differs from outer domain".into()));
        }
        let h3 = outer.source.dst.h();
        Ok(inner
            .source
            .src
            .g()
            .elements()
            .map(|g| {
                let e = inner.eta[g];
                if alternative {
                    h3.mul(outer.eta[inner.target.gamma.apply(g)], outer.source.delta.apply(e))
                } else {
                    h3.mul(outer.target.delta.apply(e), outer.eta[inner.source.gamma.apply(g)])
                }
            })
            .collect())
    }

    pub fn source(&self) -> &XModMorphism {
        &self.source
    }

    pub fn target(&self) -> &XModMorphism {
        &self.target
    }

    pub fn eta(&self) -> &[Elem] {
        &self.eta
    }

    pub fn same_as(&self, other: &Self) -> bool {
        self.source.same_as(&other.source) && self.target.same_as(&other.target) && self.eta == other.eta
    }
}
