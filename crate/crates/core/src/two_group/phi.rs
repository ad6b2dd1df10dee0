use std::sync::Arc;

use super::StrictTwoGroup;
use crate::group::{kernel, semidirect_product, Elem, FiniteGroup, GroupAction, GroupHom, GroupIso, SemidirectProduct};

/// `ker s` with its inclusion into `g1` and the action of `g0` on it by
/// `g ↦ Ad_{i(g)}`.
#[derive(Clone, Debug)]
pub struct SourceKernel {
    pub group: Arc<FiniteGroup>,
    pub inclusion: GroupHom,
    pub action: GroupAction,
    /// Position in `ker s` of each element of `g1`, if it lies there.
    lookup: Vec<Option<Elem>>,
}

impl SourceKernel {
    /// Position in `ker s` of an arrow with trivial source.
    pub fn position(&self, a: Elem) -> Option<Elem> {
        self.lookup[a]
    }
}

pub fn source_kernel(tg: &StrictTwoGroup) -> SourceKernel {
    let (group, inclusion) = kernel(tg.s());
    let mut lookup = vec![None; tg.g1().order()];
    for (k, &a) in inclusion.images().iter().enumerate() {
        lookup[a] = Some(k);
    }
    let g1 = tg.g1();
    let action = GroupAction::from_fn_unchecked(tg.g0().clone(), group.clone(), |g, k| {
        let conj = g1.conj(tg.i().apply(g), inclusion.apply(k));
        lookup[conj].expect("ker s is normal in g1")
    });
    SourceKernel { group, inclusion, action, lookup }
}

/// The isomorphism `g1 ≅ ker s ⋊ g0`, `a ↦ (a·i(s a)⁻¹, s a)`, with inverse
/// `(h, g) ↦ h·i(g)`.
#[derive(Clone, Debug)]
pub struct Phi {
    pub kernel: SourceKernel,
    pub semidirect: SemidirectProduct,
    pub iso: GroupIso,
}

pub fn phi_iso(tg: &StrictTwoGroup) -> Phi {
    let kernel = source_kernel(tg);
    let semidirect = semidirect_product(&kernel.group, tg.g0(), &kernel.action)
        .expect("the kernel action is typed over g0 and ker s");
    let g1 = tg.g1();
    let forward: Vec<Elem> = g1
        .elements()
        .map(|a| {
            let g = tg.s().apply(a);
            let h = g1.mul(a, g1.inv(tg.i().apply(g)));
            semidirect.pair(kernel.position(h).expect("a·i(s a)⁻¹ has trivial source"), g)
        })
        .collect();
    let backward: Vec<Elem> = semidirect
        .group
        .elements()
        .map(|x| {
            let (h, g) = semidirect.split(x);
            g1.mul(kernel.inclusion.apply(h), tg.i().apply(g))
        })
        .collect();
    let forward = GroupHom::new(g1.clone(), semidirect.group.clone(), forward).expect("phi is a homomorphism");
    let backward =
        GroupHom::new(semidirect.group.clone(), g1.clone(), backward).expect("phi inverse is a homomorphism");
    let iso = GroupIso::new(forward, backward).expect("phi and its inverse are mutually inverse");
    Phi { kernel, semidirect, iso }
}
