use std::sync::Arc;

use super::ConstructionError;
use crate::bound::max_order;
use crate::crossed_module::CrossedModule;
use crate::group::{automorphism_group_bounded, semidirect_product, FiniteGroup, GroupAction, GroupError, GroupHom};
use crate::two_group::{Skeleton, StrictTwoGroup};

/// `(G, G, id, id, id)`; the only composable pairs are `(a, a)`.
pub fn discrete_two_group(g: &Arc<FiniteGroup>) -> StrictTwoGroup {
    let id = GroupHom::identity(g.clone());
    let skeleton = Skeleton::new(g.clone(), g.clone(), id.clone(), id.clone(), id);
    StrictTwoGroup::from_composition(skeleton, |a, _| a).expect("the discrete 2-group is valid")
}

/// One object, arrows `G`, composition the group law. Needs `G` abelian.
pub fn delooping_two_group(g: &Arc<FiniteGroup>) -> Result<StrictTwoGroup, ConstructionError> {
    if let Some((a, b)) = g.noncommuting_pair() {
        return Err(ConstructionError::NotAbelian(a, b));
    }
    let one = Arc::new(FiniteGroup::trivial());
    let skeleton = Skeleton::new(
        one.clone(),
        g.clone(),
        GroupHom::trivial(g.clone(), one.clone()),
        GroupHom::trivial(g.clone(), one.clone()),
        GroupHom::trivial(one, g.clone()),
    );
    Ok(StrictTwoGroup::from_composition(skeleton, |a, b| g.mul(a, b))?)
}

/// `G₀ = Aut G`, `G₁ = G ⋊ Aut G`, `s(g, F) = F`, `t(g, F) = Ad_g∘F`,
/// `i(F) = (e, F)`, with the derived composition.
pub fn automorphism_two_group(g: &Arc<FiniteGroup>) -> Result<StrictTwoGroup, ConstructionError> {
    automorphism_two_group_bounded(g, max_order())
}

/// As [`automorphism_two_group`] with an explicit bound on `|Aut G|` and
/// on `|G|·|Aut G|`.
pub fn automorphism_two_group_bounded(g: &Arc<FiniteGroup>, bound: usize) -> Result<StrictTwoGroup, ConstructionError> {
    let aut = automorphism_group_bounded(g, bound)?;
    let a = aut.group();
    let order = g.order() * a.order();
    if order > bound {
        return Err(GroupError::OrderBoundExceeded { order, bound }.into());
    }
    let sd = semidirect_product(g, a, aut.action())?;
    let g1 = &sd.group;
    let inner = aut.inner_hom();
    let s = sd.proj_quotient.clone();
    let t_images = g1
        .elements()
        .map(|x| {
            let (h, f) = sd.split(x);
            a.mul(inner.apply(h), f)
        })
        .collect();
    let t = GroupHom::new(g1.clone(), a.clone(), t_images)?;
    let skeleton = Skeleton::new(a.clone(), g1.clone(), s, t, sd.inj_quotient.clone());
    Ok(StrictTwoGroup::derive(skeleton)?)
}

/// `(G, {e}, inclusion, trivial)`.
pub fn trivial_crossed_module(g: &Arc<FiniteGroup>) -> CrossedModule {
    let one = Arc::new(FiniteGroup::trivial());
    let tau = GroupHom::trivial(one.clone(), g.clone());
    CrossedModule::new(g.clone(), one.clone(), tau, GroupAction::trivial(g.clone(), one))
        .expect("the trivial crossed module is valid")
}

/// `(G, G, id, Ad)`.
pub fn conjugation_crossed_module(g: &Arc<FiniteGroup>) -> CrossedModule {
    CrossedModule::new(g.clone(), g.clone(), GroupHom::identity(g.clone()), GroupAction::conjugation(g.clone()))
        .expect("the conjugation crossed module is valid")
}

/// `({e}, G, trivial, trivial)`. Needs `G` abelian.
pub fn delooping_crossed_module(g: &Arc<FiniteGroup>) -> Result<CrossedModule, ConstructionError> {
    let one = Arc::new(FiniteGroup::trivial());
    let tau = GroupHom::trivial(g.clone(), one.clone());
    Ok(CrossedModule::new(one.clone(), g.clone(), tau, GroupAction::trivial(one, g.clone()))?)
}

/// `(Aut G, G, g ↦ Ad_g, application)`.
pub fn automorphism_crossed_module(g: &Arc<FiniteGroup>) -> Result<CrossedModule, ConstructionError> {
    let aut = automorphism_group_bounded(g, max_order())?;
    Ok(CrossedModule::new(aut.group().clone(), g.clone(), aut.inner_hom(), aut.action().clone())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::catalog;

    #[test]
    fn discrete_on_trivial_group() {
        let tg = discrete_two_group(&Arc::new(FiniteGroup::trivial()));
        assert_eq!(tg.g1().order(), 1);
        assert_eq!(tg.pairs().len(), 1);
    }

    #[test]
    fn delooping_rejects_nonabelian() {
        let s3 = catalog::get("S3").unwrap();
        assert_eq!(delooping_two_group(&s3).unwrap_err(), ConstructionError::NotAbelian(1, 2));
        let z4 = catalog::get("Z4").unwrap();
        let tg = delooping_two_group(&z4).unwrap();
        assert_eq!(tg.comp(1, 2), 3);
    }

    #[test]
    fn automorphism_two_group_of_z2() {
        let tg = automorphism_two_group(&catalog::get("Z2").unwrap()).unwrap();
        assert_eq!(tg.g0().order(), 1);
        assert_eq!(tg.g1().order(), 2);
    }

    #[test]
    fn automorphism_two_group_respects_the_bound() {
        let s3 = catalog::get("S3").unwrap();
        let err = automorphism_two_group_bounded(&s3, 30).unwrap_err();
        assert_eq!(err, ConstructionError::Group(GroupError::OrderBoundExceeded { order: 36, bound: 30 }));
    }
}
