//! Fixture collections: exhaustively enumerated morphisms and 2-morphisms
//! between small crossed modules, their images on the 2-group side, and
//! the catalog-wide collections used for round-trip verification.

use std::collections::VecDeque;
use std::sync::Arc;

use super::{
    automorphism_crossed_module, automorphism_two_group, catalog, conjugation_crossed_module, delooping_crossed_module,
    delooping_two_group, discrete_two_group, trivial_crossed_module, xmod_from_central_extension,
    xmod_from_normal_subgroup,
};
use crate::collection::{Named, TwoGroupCollection, XModCollection};
use crate::crossed_module::{same_xmod, CrossedModule, XMod2Morphism, XModMorphism};
use crate::equivalence::SFunctor;
use crate::group::{automorphism_group, generating_set, homomorphisms, subgroup, Elem};
use crate::two_group::{StrictTwoGroup, TwoGroupMorphism, TwoGroupTwoMorphism};

/// Every crossed-module morphism `src → dst`, ordered by `(γ, δ)` images.
pub fn all_xmod_morphisms(src: &Arc<CrossedModule>, dst: &Arc<CrossedModule>) -> Vec<XModMorphism> {
    let gammas = homomorphisms(src.g(), dst.g());
    let deltas = homomorphisms(src.h(), dst.h());
    let mut out = Vec::new();
    for gamma in &gammas {
        for delta in &deltas {
            if let Ok(m) = XModMorphism::new(src.clone(), dst.clone(), gamma.clone(), delta.clone()) {
                out.push(m);
            }
        }
    }
    out
}

/// Every 2-morphism `source ⇒ target`. A crossed map is fixed by its
/// values on a generating set, so candidates are enumerated there,
/// extended through the crossed law, and kept when the full constructor
/// accepts them.
pub fn all_xmod_2morphisms(source: &XModMorphism, target: &XModMorphism) -> Vec<XMod2Morphism> {
    if !source.is_parallel_to(target) {
        return Vec::new();
    }
    let g = source.src().g();
    let dst = source.dst();
    let (h2, alpha2) = (dst.h(), dst.alpha());
    let gamma = source.gamma();
    let gens = generating_set(g);
    let mut out = Vec::new();
    let mut choice = vec![0; gens.len()];
    loop {
        // η(x·s) = η(x)·α'(γx, η s), starting from η(e) = e.
        let mut eta = vec![None; g.order()];
        eta[0] = Some(h2.identity());
        let mut queue = VecDeque::from([0]);
        let mut consistent = true;
        while let Some(x) = queue.pop_front() {
            let ex = eta[x].expect("queued elements have values");
            for (k, &s) in gens.iter().enumerate() {
                let y = g.mul(x, s);
                let value = h2.mul(ex, alpha2.act(gamma.apply(x), choice[k]));
                match eta[y] {
                    None => {
                        eta[y] = Some(value);
                        queue.push_back(y);
                    }
                    Some(v) if v != value => consistent = false,
                    Some(_) => {}
                }
            }
        }
        if consistent {
            let eta: Vec<Elem> = eta.into_iter().map(|v| v.expect("generators reach every element")).collect();
            if let Ok(e) = XMod2Morphism::new(source.clone(), target.clone(), eta) {
                out.push(e);
            }
        }
        // Next choice of generator values, in lexicographic order.
        let mut k = gens.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < h2.order() {
                break;
            }
            choice[k] = 0;
        }
    }
}

/// Small crossed modules on five distinct carriers, covering abelian and
/// nonabelian groups, trivial and nontrivial boundaries and actions.
pub fn small_xmods() -> Vec<Named<Arc<CrossedModule>>> {
    let z2 = catalog::get("Z2").expect("catalog has Z2");
    let s3 = catalog::get("S3").expect("catalog has S3");
    let (_, a3) = subgroup(&s3, &[0, 3, 4]).expect("A3 is a subgroup");
    vec![
        Named::new("conj-Z2", Arc::new(conjugation_crossed_module(&z2))),
        Named::new("ext-Z4-Z2", Arc::new(xmod_from_central_extension(&catalog::mod_two(), None).expect("central"))),
        Named::new("deloop-Z2", Arc::new(delooping_crossed_module(&z2).expect("Z2 is abelian"))),
        Named::new("trivial-Z2", Arc::new(trivial_crossed_module(&z2))),
        Named::new("normal-A3-S3", Arc::new(xmod_from_normal_subgroup(&s3, &a3).expect("A3 is normal"))),
    ]
}

/// At most this many morphisms per ordered pair of small crossed modules,
/// and 2-morphisms per ordered pair of parallel morphisms. Keeps the cubic
/// law checks fast while every pair still contributes.
const PER_PAIR: usize = 2;

/// The law fixture set: the small crossed modules, up to [`PER_PAIR`]
/// morphisms between each ordered pair (identities first on the diagonal),
/// and up to [`PER_PAIR`] 2-morphisms between each parallel pair.
pub fn xmod_law_fixtures() -> XModCollection {
    let subjects = small_xmods();
    let mut morphisms = Vec::new();
    for a in &subjects {
        for b in &subjects {
            let mut ms = all_xmod_morphisms(&a.value, &b.value);
            if same_xmod(&a.value, &b.value) {
                let id = XModMorphism::identity(a.value.clone());
                ms.retain(|m| !m.same_as(&id));
                ms.insert(0, id);
            }
            for (k, m) in ms.into_iter().take(PER_PAIR).enumerate() {
                morphisms.push(Named::new(format!("{}.{}.{k}", a.name, b.name), m));
            }
        }
    }
    let mut two_morphisms = Vec::new();
    for f in &morphisms {
        for e in morphisms.iter().filter(|e| f.value.is_parallel_to(&e.value)) {
            for (k, eta) in all_xmod_2morphisms(&f.value, &e.value).into_iter().take(PER_PAIR).enumerate() {
                two_morphisms.push(Named::new(format!("{}={}.{k}", f.name, e.name), eta));
            }
        }
    }
    XModCollection { subjects, morphisms, two_morphisms }
}

/// The image of an crossed-module collection under `S`, names kept.
pub fn two_group_image(c: &XModCollection) -> TwoGroupCollection {
    let s = SFunctor::new();
    let subjects = c
        .subjects
        .iter()
        .map(|n| Named::new(n.name.clone(), s.object(&n.value).expect("S of a valid crossed module is valid")))
        .collect();
    let morphisms = c
        .morphisms
        .iter()
        .map(|n| Named::new(n.name.clone(), s.morphism(&n.value).expect("S of a valid morphism is valid")))
        .collect();
    let two_morphisms = c
        .two_morphisms
        .iter()
        .map(|n| Named::new(n.name.clone(), s.two_morphism(&n.value).expect("S of a valid 2-morphism is valid")))
        .collect();
    TwoGroupCollection { subjects, morphisms, two_morphisms }
}

/// The law fixture set transported to the 2-group side.
pub fn two_group_law_fixtures() -> TwoGroupCollection {
    two_group_image(&xmod_law_fixtures())
}

/// Automorphism crossed modules are built only when `|Aut G|` is at most
/// this, keeping every carrier within 24 elements.
const MAX_AUT: usize = 24;

/// Crossed modules over every catalog group of order at most
/// `max_group_order`: trivial, conjugation, automorphism, delooping
/// (abelian groups), plus the central extensions Z4 → Z2 and Q8 → Z2×Z2 and
/// the normal subgroups A3 ⊂ S3 and V4 ⊂ A4 when their groups qualify.
pub fn catalog_xmods(max_group_order: usize) -> Vec<Named<Arc<CrossedModule>>> {
    let mut out = Vec::new();
    let small = |name: &str| catalog::get(name).filter(|g| g.order() <= max_group_order);
    for (name, g) in catalog::catalog().into_iter().filter(|(_, g)| g.order() <= max_group_order) {
        out.push(Named::new(format!("trivial-{name}"), Arc::new(trivial_crossed_module(&g))));
        out.push(Named::new(format!("conj-{name}"), Arc::new(conjugation_crossed_module(&g))));
        if automorphism_group(&g).is_ok_and(|a| a.group().order() <= MAX_AUT) {
            out.push(Named::new(format!("aut-{name}"), Arc::new(automorphism_crossed_module(&g).expect("bounded"))));
        }
        if let Ok(xm) = delooping_crossed_module(&g) {
            out.push(Named::new(format!("deloop-{name}"), Arc::new(xm)));
        }
    }
    if small("Z4").is_some() {
        out.push(Named::new(
            "ext-Z4-Z2",
            Arc::new(xmod_from_central_extension(&catalog::mod_two(), None).expect("central")),
        ));
    }
    if small("Q8").is_some() {
        let tau = catalog::quaternion_quotient();
        out.push(Named::new("ext-Q8-Z2xZ2", Arc::new(xmod_from_central_extension(&tau, None).expect("central"))));
    }
    if let Some(s3) = small("S3") {
        let (_, a3) = subgroup(&s3, &[0, 3, 4]).expect("A3 is a subgroup");
        out.push(Named::new("normal-A3-S3", Arc::new(xmod_from_normal_subgroup(&s3, &a3).expect("normal"))));
    }
    if let Some(a4) = small("A4") {
        let v4 = klein_four_in_a4(&a4);
        let (_, incl) = subgroup(&a4, &v4).expect("V4 is a subgroup");
        out.push(Named::new("normal-V4-A4", Arc::new(xmod_from_normal_subgroup(&a4, &incl).expect("normal"))));
    }
    out
}

/// The identity and the three double transpositions of A4.
fn klein_four_in_a4(a4: &crate::group::FiniteGroup) -> Vec<Elem> {
    a4.elements().filter(|&x| x == 0 || a4.element_order(x) == 2).collect()
}

/// 2-groups built from every catalog group of order at most
/// `max_group_order`: discrete, delooping (abelian groups) and automorphism
/// 2-groups (groups of order at most 8).
pub fn catalog_two_groups(max_group_order: usize) -> Vec<Named<Arc<StrictTwoGroup>>> {
    let mut out = Vec::new();
    for (name, g) in catalog::catalog().into_iter().filter(|(_, g)| g.order() <= max_group_order) {
        out.push(Named::new(format!("discrete-{name}"), Arc::new(discrete_two_group(&g))));
        if let Ok(tg) = delooping_two_group(&g) {
            out.push(Named::new(format!("deloop-{name}"), Arc::new(tg)));
        }
        if g.order() <= 8 {
            out.push(Named::new(format!("aut2-{name}"), Arc::new(automorphism_two_group(&g).expect("bounded"))));
        }
    }
    out
}

fn with_identities_xmod(subjects: Vec<Named<Arc<CrossedModule>>>, extra: XModCollection) -> XModCollection {
    let mut morphisms: Vec<Named<XModMorphism>> = subjects
        .iter()
        .map(|n| Named::new(format!("id-{}", n.name), XModMorphism::identity(n.value.clone())))
        .collect();
    let mut two_morphisms: Vec<Named<XMod2Morphism>> =
        morphisms.iter().map(|m| Named::new(format!("unit-{}", &m.name[3..]), XMod2Morphism::unit(&m.value))).collect();
    let mut subjects = subjects;
    subjects.extend(extra.subjects.into_iter().map(|n| Named::new(format!("small-{}", n.name), n.value)));
    morphisms.extend(extra.morphisms);
    two_morphisms.extend(extra.two_morphisms);
    XModCollection { subjects, morphisms, two_morphisms }
}

/// The crossed-module round-trip collection: [`catalog_xmods`] with their
/// identities and units, plus the law fixture set.
pub fn catalog_xmod_collection(max_group_order: usize) -> XModCollection {
    with_identities_xmod(catalog_xmods(max_group_order), xmod_law_fixtures())
}

/// The 2-group round-trip collection: [`catalog_two_groups`], the images
/// under `S` of [`catalog_xmods`], identities and identity 2-morphisms of
/// all of them, plus the law fixture set on the 2-group side.
pub fn catalog_two_group_collection(max_group_order: usize) -> TwoGroupCollection {
    let s = SFunctor::new();
    let mut subjects = catalog_two_groups(max_group_order);
    for n in catalog_xmods(max_group_order) {
        subjects.push(Named::new(
            format!("s0-{}", n.name),
            s.object(&n.value).expect("S of a valid crossed module is valid"),
        ));
    }
    let mut morphisms: Vec<Named<TwoGroupMorphism>> = subjects
        .iter()
        .map(|n| Named::new(format!("id-{}", n.name), TwoGroupMorphism::identity(n.value.clone())))
        .collect();
    let mut two_morphisms: Vec<Named<TwoGroupTwoMorphism>> = morphisms
        .iter()
        .map(|m| Named::new(format!("unit-{}", &m.name[3..]), TwoGroupTwoMorphism::identity(&m.value)))
        .collect();
    let extra = two_group_law_fixtures();
    subjects.extend(extra.subjects.into_iter().map(|n| Named::new(format!("small-{}", n.name), n.value)));
    morphisms.extend(extra.morphisms);
    two_morphisms.extend(extra.two_morphisms);
    TwoGroupCollection { subjects, morphisms, two_morphisms }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::same_carrier;

    #[test]
    fn law_fixtures_meet_the_size_requirements() {
        let c = xmod_law_fixtures();
        assert!(c.morphisms.len() >= 10, "{} morphisms", c.morphisms.len());
        assert!(c.two_morphisms.len() >= 10, "{} 2-morphisms", c.two_morphisms.len());
        let mut carriers: Vec<&Arc<crate::group::FiniteGroup>> = Vec::new();
        for n in &c.subjects {
            for g in [n.value.g(), n.value.h()] {
                if !carriers.iter().any(|c| same_carrier(c, g)) {
                    carriers.push(g);
                }
            }
        }
        assert!(carriers.len() >= 4);
    }

    #[test]
    fn units_are_among_the_enumerated_2_morphisms() {
        for n in small_xmods() {
            let id = XModMorphism::identity(n.value.clone());
            let all = all_xmod_2morphisms(&id, &id);
            assert!(all.iter().any(|e| e.same_as(&XMod2Morphism::unit(&id))), "{}", n.name);
        }
    }
}
