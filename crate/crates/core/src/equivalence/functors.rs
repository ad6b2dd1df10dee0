use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::EquivalenceError;
use crate::bound::max_order;
use crate::crossed_module::{CrossedModule, XMod2Morphism, XModMorphism};
use crate::group::{semidirect_product, Elem, GroupError, GroupHom};
use crate::two_group::{source_kernel, Skeleton, SourceKernel, StrictTwoGroup, TwoGroupMorphism, TwoGroupTwoMorphism};

/// Memoizes object images by allocation so that the images of morphisms
/// sharing an endpoint share that endpoint's image. Each entry keeps its
/// key alive, so addresses are never reused while cached.
type Entries<K, V> = HashMap<usize, (Arc<K>, Arc<V>)>;

struct Cache<K, V>(Mutex<Entries<K, V>>);

impl<K, V> Default for Cache<K, V> {
    fn default() -> Self {
        Cache(Mutex::new(HashMap::new()))
    }
}

impl<K, V> Cache<K, V> {
    fn get_or_try(
        &self,
        key: &Arc<K>,
        build: impl FnOnce() -> Result<V, EquivalenceError>,
    ) -> Result<Arc<V>, EquivalenceError> {
        let addr = Arc::as_ptr(key) as usize;
        if let Some((_, v)) = self.0.lock().expect("cache lock").get(&addr) {
            return Ok(v.clone());
        }
        let v = Arc::new(build()?);
        self.0.lock().expect("cache lock").insert(addr, (key.clone(), v.clone()));
        Ok(v)
    }
}

/// The image of a 2-group under `T`, with the kernel data needed to map
/// morphisms.
#[derive(Debug)]
pub struct TImage {
    pub xmod: Arc<CrossedModule>,
    pub kernel: SourceKernel,
}

/// The 2-functor from strict 2-groups to crossed modules.
#[derive(Default)]
pub struct TFunctor {
    objects: Cache<StrictTwoGroup, TImage>,
}

impl TFunctor {
    pub fn new() -> Self {
        Self::default()
    }

    /// `(g0, ker s, t|ker s, g ↦ Ad_{i(g)})`.
    pub fn object(&self, tg: &Arc<StrictTwoGroup>) -> Result<Arc<TImage>, EquivalenceError> {
        self.objects.get_or_try(tg, || {
            let kernel = source_kernel(tg);
            let tau = tg.t().after(&kernel.inclusion)?;
            let xmod = CrossedModule::new(tg.g0().clone(), kernel.group.clone(), tau, kernel.action.clone())?;
            Ok(TImage { xmod: Arc::new(xmod), kernel })
        })
    }

    /// `(f0, f1|ker s)`.
    pub fn morphism(&self, m: &TwoGroupMorphism) -> Result<XModMorphism, EquivalenceError> {
        let (src, dst) = (self.object(m.src())?, self.object(m.dst())?);
        let images = src
            .kernel
            .inclusion
            .images()
            .iter()
            .enumerate()
            .map(|(k, &a)| dst.kernel.position(m.f1().apply(a)).ok_or(EquivalenceError::KernelNotPreserved(k)))
            .collect::<Result<Vec<Elem>, _>>()?;
        let delta = GroupHom::new(src.xmod.h().clone(), dst.xmod.h().clone(), images)?;
        Ok(XModMorphism::new(src.xmod.clone(), dst.xmod.clone(), m.f0().clone(), delta)?)
    }

    /// `η(g) = θ(g)·i'(s' θ(g))⁻¹`, read in `ker s'`.
    pub fn two_morphism(&self, th: &TwoGroupTwoMorphism) -> Result<XMod2Morphism, EquivalenceError> {
        let source = self.morphism(th.source())?;
        let target = self.morphism(th.target())?;
        let dst = th.source().dst();
        let kernel = &self.object(dst)?.kernel;
        let g1 = dst.g1();
        let eta = th
            .theta()
            .images()
            .iter()
            .enumerate()
            .map(|(g, &a)| {
                let k = g1.mul(a, g1.inv(dst.i().apply(dst.s().apply(a))));
                kernel.position(k).ok_or(EquivalenceError::KernelNotPreserved(g))
            })
            .collect::<Result<Vec<Elem>, _>>()?;
        Ok(XMod2Morphism::new(source, target, eta)?)
    }
}

/// The 2-functor from crossed modules to strict 2-groups.
#[derive(Default)]
pub struct SFunctor {
    objects: Cache<CrossedModule, StrictTwoGroup>,
}

/// Index of `(h, g)` in `H ⋊ G`.
fn pair(xm: &CrossedModule, h: Elem, g: Elem) -> Elem {
    h * xm.g().order() + g
}

impl SFunctor {
    pub fn new() -> Self {
        Self::default()
    }

    /// `g0 = G`, `g1 = H ⋊ G`, `s(h, g) = g`, `t(h, g) = τ(h)·g`,
    /// `i(g) = (e, g)`, `comp((j, τ(h)·g), (h, g)) = (j·h, g)`.
    pub fn object(&self, xm: &Arc<CrossedModule>) -> Result<Arc<StrictTwoGroup>, EquivalenceError> {
        self.objects.get_or_try(xm, || {
            let (g, h) = (xm.g(), xm.h());
            let order = g.order() * h.order();
            if order > max_order() {
                return Err(GroupError::OrderBoundExceeded { order, bound: max_order() }.into());
            }
            let sd = semidirect_product(h, g, xm.alpha())?;
            let g1 = &sd.group;
            let t_images = g1
                .elements()
                .map(|x| {
                    let (hh, gg) = sd.split(x);
                    g.mul(xm.tau().apply(hh), gg)
                })
                .collect();
            let t = GroupHom::new(g1.clone(), g.clone(), t_images)?;
            let skeleton = Skeleton::new(g.clone(), g1.clone(), sd.proj_quotient.clone(), t, sd.inj_quotient.clone());
            let tg = StrictTwoGroup::from_composition(skeleton, |a, b| {
                let ((j, _), (hh, gg)) = (sd.split(a), sd.split(b));
                sd.pair(h.mul(j, hh), gg)
            })?;
            Ok(tg)
        })
    }

    /// `f0 = γ`, `f1(h, g) = (δ h, γ g)`.
    pub fn morphism(&self, m: &XModMorphism) -> Result<TwoGroupMorphism, EquivalenceError> {
        let (src, dst) = (self.object(m.src())?, self.object(m.dst())?);
        let (xs, xd) = (m.src(), m.dst());
        let images = xs
            .h()
            .elements()
            .flat_map(|h| xs.g().elements().map(move |g| (h, g)))
            .map(|(h, g)| pair(xd, m.delta().apply(h), m.gamma().apply(g)))
            .collect();
        let f1 = GroupHom::new(src.g1().clone(), dst.g1().clone(), images)?;
        Ok(TwoGroupMorphism::new(src, dst, m.gamma().clone(), f1)?)
    }

    /// `θ(g) = (η g, γ g)`.
    pub fn two_morphism(&self, eta: &XMod2Morphism) -> Result<TwoGroupTwoMorphism, EquivalenceError> {
        let source = self.morphism(eta.source())?;
        let target = self.morphism(eta.target())?;
        let xd = eta.source().dst();
        let gamma = eta.source().gamma();
        let images = eta.eta().iter().enumerate().map(|(g, &e)| pair(xd, e, gamma.apply(g))).collect();
        let theta = GroupHom::new(source.src().g0().clone(), source.dst().g1().clone(), images)?;
        Ok(TwoGroupTwoMorphism::new(source, target, theta)?)
    }
}

pub fn t0(tg: &Arc<StrictTwoGroup>) -> Result<CrossedModule, EquivalenceError> {
    Ok(TFunctor::new().object(tg)?.xmod.as_ref().clone())
}

pub fn t1(m: &TwoGroupMorphism) -> Result<XModMorphism, EquivalenceError> {
    TFunctor::new().morphism(m)
}

pub fn t2(th: &TwoGroupTwoMorphism) -> Result<XMod2Morphism, EquivalenceError> {
    TFunctor::new().two_morphism(th)
}

pub fn s0(xm: &Arc<CrossedModule>) -> Result<StrictTwoGroup, EquivalenceError> {
    Ok(SFunctor::new().object(xm)?.as_ref().clone())
}

pub fn s1(m: &XModMorphism) -> Result<TwoGroupMorphism, EquivalenceError> {
    SFunctor::new().morphism(m)
}

pub fn s2(eta: &XMod2Morphism) -> Result<TwoGroupTwoMorphism, EquivalenceError> {
    SFunctor::new().two_morphism(eta)
}
