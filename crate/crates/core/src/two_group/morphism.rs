use std::sync::Arc;

use super::{same_two_group, StrictTwoGroup, TwoGroupError};
use crate::group::{same_carrier, Elem, GroupHom};
use crate::report::{CheckLine, Report, Violation};

/// An internal functor `(f0, f1)` between strict 2-groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoGroupMorphism {
    src: Arc<StrictTwoGroup>,
    dst: Arc<StrictTwoGroup>,
    f0: GroupHom,
    f1: GroupHom,
}

type MorphismCheck = fn(&TwoGroupMorphism) -> Result<(), TwoGroupError>;

const FUNCTOR_LAWS: [(&str, MorphismCheck); 4] = [
    ("functor-source", TwoGroupMorphism::check_source),
    ("functor-target", TwoGroupMorphism::check_target),
    ("functor-identity", TwoGroupMorphism::check_identity),
    ("functor-composition", TwoGroupMorphism::check_composition),
];

impl TwoGroupMorphism {
    pub fn new(
        src: Arc<StrictTwoGroup>,
        dst: Arc<StrictTwoGroup>,
        f0: GroupHom,
        f1: GroupHom,
    ) -> Result<Self, TwoGroupError> {
        let m = Self::typed(src, dst, f0, f1)?;
        for (_, law) in FUNCTOR_LAWS {
            law(&m)?;
        }
        Ok(m)
    }

    /// One line per functor law, after the typing check.
    pub fn diagnose(src: Arc<StrictTwoGroup>, dst: Arc<StrictTwoGroup>, f0: GroupHom, f1: GroupHom) -> Report {
        let mut report = Report::new();
        match Self::typed(src, dst, f0, f1) {
            Err(e) => report.push(CheckLine::fail(e.check_id(), e.witness())),
            Ok(m) => {
                report.push(CheckLine::pass("typing"));
                for (id, law) in FUNCTOR_LAWS {
                    report.push(CheckLine::from_violation(law(&m), id));
                }
            }
        }
        report
    }

    fn typed(
        src: Arc<StrictTwoGroup>,
        dst: Arc<StrictTwoGroup>,
        f0: GroupHom,
        f1: GroupHom,
    ) -> Result<Self, TwoGroupError> {
        if !same_carrier(f0.src(), src.g0()) || !same_carrier(f0.dst(), dst.g0()) {
            return Err(TwoGroupError::Typing("f0 must map g0 to g0'".into()));
        }
        if !same_carrier(f1.src(), src.g1()) || !same_carrier(f1.dst(), dst.g1()) {
            return Err(TwoGroupError::Typing("f1 must map g1 to g1'".into()));
        }
        Ok(TwoGroupMorphism { src, dst, f0, f1 })
    }

    fn check_source(&self) -> Result<(), TwoGroupError> {
        match self
            .src
            .g1()
            .elements()
            .find(|&b| self.dst.s().apply(self.f1.apply(b)) != self.f0.apply(self.src.s().apply(b)))
        {
            Some(b) => Err(TwoGroupError::FunctorSource(b)),
            None => Ok(()),
        }
    }

    fn check_target(&self) -> Result<(), TwoGroupError> {
        match self
            .src
            .g1()
            .elements()
            .find(|&b| self.dst.t().apply(self.f1.apply(b)) != self.f0.apply(self.src.t().apply(b)))
        {
            Some(b) => Err(TwoGroupError::FunctorTarget(b)),
            None => Ok(()),
        }
    }

    fn check_identity(&self) -> Result<(), TwoGroupError> {
        match self
            .src
            .g0()
            .elements()
            .find(|&g| self.f1.apply(self.src.i().apply(g)) != self.dst.i().apply(self.f0.apply(g)))
        {
            Some(g) => Err(TwoGroupError::FunctorIdentity(g)),
            None => Ok(()),
        }
    }

    fn check_composition(&self) -> Result<(), TwoGroupError> {
        for (a, b, c) in self.src.composition_triples() {
            if self.dst.try_comp(self.f1.apply(a), self.f1.apply(b)) != Some(self.f1.apply(c)) {
                return Err(TwoGroupError::FunctorComposition(a, b));
            }
        }
        Ok(())
    }

    pub fn identity(tg: Arc<StrictTwoGroup>) -> Self {
        let f0 = GroupHom::identity(tg.g0().clone());
        let f1 = GroupHom::identity(tg.g1().clone());
        TwoGroupMorphism { src: tg.clone(), dst: tg, f0, f1 }
    }

    /// `self ∘ first`, componentwise.
    pub fn after(&self, first: &TwoGroupMorphism) -> Result<Self, TwoGroupError> {
        if !same_two_group(&first.dst, &self.src) {
            return Err(TwoGroupError::NotComposable("morphisms do not meet at a common 2-group".into()));
        }
        let f0 = self.f0.after(&first.f0)?;
        let f1 = self.f1.after(&first.f1)?;
        Self::new(first.src.clone(), self.dst.clone(), f0, f1)
    }

    pub fn src(&self) -> &Arc<StrictTwoGroup> {
        &self.src
    }

    pub fn dst(&self) -> &Arc<StrictTwoGroup> {
        &self.dst
    }

    pub fn f0(&self) -> &GroupHom {
        &self.f0
    }

    pub fn f1(&self) -> &GroupHom {
        &self.f1
    }

    /// Same endpoints and equal component tables.
    pub fn same_as(&self, other: &TwoGroupMorphism) -> bool {
        same_two_group(&self.src, &other.src)
            && same_two_group(&self.dst, &other.dst)
            && self.f0.images() == other.f0.images()
            && self.f1.images() == other.f1.images()
    }

    pub fn is_parallel_to(&self, other: &TwoGroupMorphism) -> bool {
        same_two_group(&self.src, &other.src) && same_two_group(&self.dst, &other.dst)
    }
}

/// An internal natural transformation `θ: F ⇒ E` between parallel
/// morphisms, given by `θ: g0 → g1'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoGroupTwoMorphism {
    source: TwoGroupMorphism,
    target: TwoGroupMorphism,
    theta: GroupHom,
}

type TwoMorphismCheck = fn(&TwoGroupTwoMorphism) -> Result<(), TwoGroupError>;

const NATURALITY_LAWS: [(&str, TwoMorphismCheck); 2] =
    [("boundary", TwoGroupTwoMorphism::check_boundary), ("naturality", TwoGroupTwoMorphism::check_naturality)];

impl TwoGroupTwoMorphism {
    pub fn new(source: TwoGroupMorphism, target: TwoGroupMorphism, theta: GroupHom) -> Result<Self, TwoGroupError> {
        let th = Self::typed(source, target, theta)?;
        th.check_boundary()?;
        th.check_naturality()?;
        Ok(th)
    }

    pub fn diagnose(source: TwoGroupMorphism, target: TwoGroupMorphism, theta: GroupHom) -> Report {
        let mut report = Report::new();
        match Self::typed(source, target, theta) {
            Err(e) => report.push(CheckLine::fail(e.check_id(), e.witness())),
            Ok(th) => {
                report.push(CheckLine::pass("parallel"));
                let boundary = th.check_boundary();
                let boundary_ok = boundary.is_ok();
                report.push(CheckLine::from_violation(boundary, NATURALITY_LAWS[0].0));
                // The naturality square only typechecks once the boundary holds.
                if boundary_ok {
                    report.push(CheckLine::from_violation(th.check_naturality(), NATURALITY_LAWS[1].0));
                } else {
                    report.push(CheckLine::skip(NATURALITY_LAWS[1].0, "boundary-failed"));
                }
            }
        }
        report
    }

    fn typed(source: TwoGroupMorphism, target: TwoGroupMorphism, theta: GroupHom) -> Result<Self, TwoGroupError> {
        if !source.is_parallel_to(&target) {
            return Err(TwoGroupError::NotParallel("source and target morphisms are not parallel".into()));
        }
        if !same_carrier(theta.src(), source.src.g0()) || !same_carrier(theta.dst(), source.dst.g1()) {
            return Err(TwoGroupError::Typing("theta must map g0 to g1'".into()));
        }
        Ok(TwoGroupTwoMorphism { source, target, theta })
    }

    fn check_boundary(&self) -> Result<(), TwoGroupError> {
        let dst = &self.source.dst;
        for g in self.source.src.g0().elements() {
            let th = self.theta.apply(g);
            if dst.s().apply(th) != self.source.f0.apply(g) {
                return Err(TwoGroupError::Boundary { map: "s", g });
            }
            if dst.t().apply(th) != self.target.f0.apply(g) {
                return Err(TwoGroupError::Boundary { map: "t", g });
            }
        }
        Ok(())
    }

    /// `comp'(θ(t b), f1 b) = comp'(e1 b, θ(s b))` for every arrow `b`.
    fn check_naturality(&self) -> Result<(), TwoGroupError> {
        let (src, dst) = (&self.source.src, &self.source.dst);
        for b in src.g1().elements() {
            let left = dst.try_comp(self.theta.apply(src.t().apply(b)), self.source.f1.apply(b));
            let right = dst.try_comp(self.target.f1.apply(b), self.theta.apply(src.s().apply(b)));
            if left.is_none() || left != right {
                return Err(TwoGroupError::Naturality(b));
            }
        }
        Ok(())
    }

    /// `θ = i'∘f0`, the identity 2-morphism on `F`.
    pub fn identity(f: &TwoGroupMorphism) -> Self {
        let theta = f.dst.i().after(&f.f0).expect("f0 lands in g0'");
        TwoGroupTwoMorphism { source: f.clone(), target: f.clone(), theta }
    }

    /// `upper • lower`: `g ↦ comp'(θ̄ g, θ g)`.
    pub fn vcompose(upper: &Self, lower: &Self) -> Result<Self, TwoGroupError> {
        if !lower.target.same_as(&upper.source) {
            return Err(TwoGroupError::NotComposable("lower target differs from upper source".into()));
        }
        let dst = &lower.source.dst;
        let images =
            lower.source.src.g0().elements().map(|g| dst.comp(upper.theta.apply(g), lower.theta.apply(g))).collect();
        let theta = GroupHom::new(lower.theta.src().clone(), lower.theta.dst().clone(), images)?;
        Self::new(lower.source.clone(), upper.target.clone(), theta)
    }

    /// `outer ∘ inner` for `inner: F ⇒ E` and `outer: F' ⇒ E'` with the
    /// codomain of `F` the domain of `F'`:
    /// `g ↦ comp''(θ'(e0 g), f1'(θ g))`.
    pub fn hcompose(outer: &Self, inner: &Self) -> Result<Self, TwoGroupError> {
        let images = Self::horizontal_images(outer, inner, false)?;
        Self::assemble_horizontal(outer, inner, images)
    }

    /// The other horizontal formula, `g ↦ comp''(e1'(θ g), θ'(f0 g))`, as a
    /// raw table for comparison with [`Self::hcompose`].
    pub fn hcompose_alternative(outer: &Self, inner: &Self) -> Result<Vec<Elem>, TwoGroupError> {
        Self::horizontal_images(outer, inner, true)
    }

    fn horizontal_images(outer: &Self, inner: &Self, alternative: bool) -> Result<Vec<Elem>, TwoGroupError> {
        if !same_two_group(&inner.source.dst, &outer.source.src) {
            return Err(TwoGroupError::NotComposable("inner codomain differs from outer domain".into()));
        }
        let far = &outer.source.dst;
        let (f, e) = (&inner.source, &inner.target);
        let (f2, e2) = (&outer.source, &outer.target);
        inner
            .source
            .src
            .g0()
            .elements()
            .map(|g| {
                let th = inner.theta.apply(g);
                let (a, b) = if alternative {
                    (e2.f1.apply(th), outer.theta.apply(f.f0.apply(g)))
                } else {
                    (outer.theta.apply(e.f0.apply(g)), f2.f1.apply(th))
                };
                far.try_comp(a, b)
                    .ok_or(TwoGroupError::NotComposable(format!("horizontal composite undefined at g={g}")))
            })
            .collect()
    }

    fn assemble_horizontal(outer: &Self, inner: &Self, images: Vec<Elem>) -> Result<Self, TwoGroupError> {
        let source = outer.source.after(&inner.source)?;
        let target = outer.target.after(&inner.target)?;
        let theta = GroupHom::new(inner.theta.src().clone(), outer.theta.dst().clone(), images)?;
        Self::new(source, target, theta)
    }

    pub fn source(&self) -> &TwoGroupMorphism {
        &self.source
    }

    pub fn target(&self) -> &TwoGroupMorphism {
        &self.target
    }

    pub fn theta(&self) -> &GroupHom {
        &self.theta
    }

    /// Equal boundary morphisms and equal `θ` tables.
    pub fn same_as(&self, other: &Self) -> bool {
        self.source.same_as(&other.source)
            && self.target.same_as(&other.target)
            && self.theta.images() == other.theta.images()
    }
}
