use std::sync::Arc;

use super::{EquivalenceError, SFunctor, TFunctor};
use crate::crossed_module::{CrossedModule, XModMorphism};
use crate::group::{Elem, GroupHom, GroupIso};
use crate::two_group::{phi_iso, StrictTwoGroup, TwoGroupMorphism};

/// `ξ: ST(tg) → tg` with both components as explicit isomorphisms.
#[derive(Clone, Debug)]
pub struct Xi {
    pub morphism: TwoGroupMorphism,
    /// Identity on objects.
    pub iso0: GroupIso,
    /// `φ⁻¹: ker s ⋊ g0 → g1` forward, `φ` backward.
    pub iso1: GroupIso,
}

/// `ζ: TS(xm) → xm` with both components as explicit isomorphisms.
#[derive(Clone, Debug)]
pub struct Zeta {
    pub morphism: XModMorphism,
    /// Identity on `G`.
    pub iso0: GroupIso,
    /// `π₁` restricted to `ker π₂ = {(h, e)}` forward.
    pub iso1: GroupIso,
}

pub fn xi(tg: &Arc<StrictTwoGroup>) -> Result<Xi, EquivalenceError> {
    xi_with(&TFunctor::new(), &SFunctor::new(), tg)
}

pub fn xi_with(t: &TFunctor, s: &SFunctor, tg: &Arc<StrictTwoGroup>) -> Result<Xi, EquivalenceError> {
    let st = s.object(&t.object(tg)?.xmod)?;
    let phi = phi_iso(tg);
    let inverse = GroupHom::new(st.g1().clone(), tg.g1().clone(), phi.iso.backward().images().to_vec())?;
    let forward = GroupHom::new(tg.g1().clone(), st.g1().clone(), phi.iso.forward().images().to_vec())?;
    let iso1 = GroupIso::new(inverse.clone(), forward)?;
    let f0 = GroupHom::new(st.g0().clone(), tg.g0().clone(), tg.g0().elements().collect())?;
    let iso0 = GroupIso::new(f0.clone(), GroupHom::identity(tg.g0().clone()))?;
    let morphism = TwoGroupMorphism::new(st, tg.clone(), f0, inverse)?;
    Ok(Xi { morphism, iso0, iso1 })
}

pub fn zeta(xm: &Arc<CrossedModule>) -> Result<Zeta, EquivalenceError> {
    zeta_with(&TFunctor::new(), &SFunctor::new(), xm)
}

pub fn zeta_with(t: &TFunctor, s: &SFunctor, xm: &Arc<CrossedModule>) -> Result<Zeta, EquivalenceError> {
    let ts = t.object(&s.object(xm)?)?;
    let n_g = xm.g().order();
    // Kernel element k is the arrow (h, e) at index h·|G|.
    let images: Vec<Elem> = ts.kernel.inclusion.images().iter().map(|&x| x / n_g).collect();
    let back: Vec<Elem> =
        xm.h().elements().map(|h| ts.kernel.position(h * n_g).expect("(h, e) has trivial source")).collect();
    let delta = GroupHom::new(ts.xmod.h().clone(), xm.h().clone(), images)?;
    let iso1 = GroupIso::new(delta.clone(), GroupHom::new(xm.h().clone(), ts.xmod.h().clone(), back)?)?;
    let gamma = GroupHom::new(ts.xmod.g().clone(), xm.g().clone(), xm.g().elements().collect())?;
    let iso0 = GroupIso::new(gamma.clone(), GroupHom::identity(xm.g().clone()))?;
    let morphism = XModMorphism::new(ts.xmod.clone(), xm.clone(), gamma, delta)?;
    Ok(Zeta { morphism, iso0, iso1 })
}
