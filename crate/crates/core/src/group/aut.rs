//! Homomorphism and automorphism enumeration by backtracking over the
//! images of a generating set.

use std::collections::HashMap;
use std::sync::Arc;

use super::{Elem, FiniteGroup, GroupAction, GroupError, GroupHom};
use crate::bound::max_order;

/// Greedy generating set: repeatedly adds the smallest element not yet in
/// the generated subgroup.
pub fn generating_set(g: &FiniteGroup) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut inside = vec![false; g.order()];
    inside[0] = true;
    while let Some(x) = inside.iter().position(|&b| !b) {
        gens.push(x);
        inside = closure(g, &gens);
    }
    gens
}

fn closure(g: &FiniteGroup, gens: &[Elem]) -> Vec<bool> {
    let mut inside = vec![false; g.order()];
    inside[0] = true;
    let mut queue = vec![0];
    while let Some(x) = queue.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if !inside[y] {
                inside[y] = true;
                queue.push(y);
            }
        }
    }
    inside
}

/// Extends generator images to a map on the subgroup they generate.
/// Returns `None` if the assignment is inconsistent with the relations.
fn extend(src: &FiniteGroup, dst: &FiniteGroup, gens: &[Elem], imgs: &[Elem]) -> Option<Vec<Option<Elem>>> {
    let mut map = vec![None; src.order()];
    map[0] = Some(0);
    let mut queue = vec![0];
    while let Some(x) = queue.pop() {
        let fx = map[x].expect("queued elements are mapped");
        for (&s, &t) in gens.iter().zip(imgs) {
            let y = src.mul(x, s);
            let fy = dst.mul(fx, t);
            match map[y] {
                None => {
                    map[y] = Some(fy);
                    queue.push(y);
                }
                Some(v) if v != fy => return None,
                Some(_) => {}
            }
        }
    }
    Some(map)
}

fn search(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    gens: &[Elem],
    candidates: &[Vec<Elem>],
    imgs: &mut Vec<Elem>,
    out: &mut Vec<Vec<Elem>>,
    bijective: bool,
) {
    let depth = imgs.len();
    if depth == gens.len() {
        let map = extend(src, dst, gens, imgs).expect("leaf assignments were checked on the way down");
        let images: Vec<Elem> = map.into_iter().map(|x| x.expect("generators span the group")).collect();
        if bijective {
            let mut seen = vec![false; dst.order()];
            if images.iter().any(|&x| std::mem::replace(&mut seen[x], true)) {
                return;
            }
        }
        out.push(images);
        return;
    }
    for &c in &candidates[depth] {
        imgs.push(c);
        if extend(src, dst, &gens[..=depth], imgs).is_some() {
            search(src, dst, gens, candidates, imgs, out, bijective);
        }
        imgs.pop();
    }
}

fn enumerate(src: &FiniteGroup, dst: &FiniteGroup, bijective: bool) -> Vec<Vec<Elem>> {
    let gens = generating_set(src);
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&s| {
            let k = src.element_order(s);
            dst.elements()
                .filter(|&y| {
                    let m = dst.element_order(y);
                    if bijective {
                        m == k
                    } else {
                        k % m == 0
                    }
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    search(src, dst, &gens, &candidates, &mut Vec::new(), &mut out, bijective);
    out.sort();
    out
}

/// Every homomorphism `src → dst`, sorted by image array.
pub fn homomorphisms(src: &Arc<FiniteGroup>, dst: &Arc<FiniteGroup>) -> Vec<GroupHom> {
    enumerate(src, dst, false)
        .into_iter()
        .map(|images| GroupHom::new_unchecked(src.clone(), dst.clone(), images))
        .collect()
}

/// `Aut(G)` together with its tautological action on `G`.
///
/// Automorphisms are sorted by image array, so the identity is element `0`.
/// Multiplication is composition: `(F·F')(x) = F(F'(x))`.
#[derive(Clone, Debug)]
pub struct Automorphisms {
    group: Arc<FiniteGroup>,
    action: GroupAction,
    index: HashMap<Vec<Elem>, Elem>,
}

impl Automorphisms {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// The tautological action `(F, h) ↦ F(h)`.
    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    pub fn base(&self) -> &Arc<FiniteGroup> {
        self.action.space()
    }

    pub fn index_of(&self, images: &[Elem]) -> Option<Elem> {
        self.index.get(images).copied()
    }

    /// Index of `Ad_g`.
    pub fn inner(&self, g: Elem) -> Elem {
        let base = self.base();
        let images: Vec<Elem> = base.elements().map(|h| base.conj(g, h)).collect();
        self.index[&images]
    }

    /// `g ↦ Ad_g` as a homomorphism `G → Aut(G)`.
    pub fn inner_hom(&self) -> GroupHom {
        let base = self.base();
        let images = base.elements().map(|g| self.inner(g)).collect();
        GroupHom::new_unchecked(base.clone(), self.group.clone(), images)
    }
}

pub fn automorphism_group(g: &Arc<FiniteGroup>) -> Result<Automorphisms, GroupError> {
    automorphism_group_bounded(g, max_order())
}

pub fn automorphism_group_bounded(g: &Arc<FiniteGroup>, bound: usize) -> Result<Automorphisms, GroupError> {
    if g.order() > bound {
        return Err(GroupError::OrderBoundExceeded { order: g.order(), bound });
    }
    let maps = enumerate(g, g, true);
    if maps.len() > bound {
        return Err(GroupError::OrderBoundExceeded { order: maps.len(), bound });
    }
    let index: HashMap<Vec<Elem>, Elem> = maps.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
    let n = maps.len();
    let mut table = Vec::with_capacity(n * n);
    for f in &maps {
        for f2 in &maps {
            let composite: Vec<Elem> = f2.iter().map(|&x| f[x]).collect();
            table.push(index[&composite]);
        }
    }
    let labels = (0..n).map(|k| format!("F{k}")).collect();
    let group = Arc::new(FiniteGroup::from_valid_table(n, table, Some(labels)));
    let action = GroupAction::from_fn_unchecked(group.clone(), g.clone(), |f, h| maps[f][h]);
    Ok(Automorphisms { group, action, index })
}

/// `h ↦ g·h·g⁻¹`.
pub fn inner_automorphism(g: &Arc<FiniteGroup>, x: Elem) -> GroupHom {
    let images = g.elements().map(|h| g.conj(x, h)).collect();
    GroupHom::new_unchecked(g.clone(), g.clone(), images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::catalog;

    #[test]
    fn generating_sets() {
        assert_eq!(generating_set(&FiniteGroup::cyclic(8)), vec![1]);
        assert_eq!(generating_set(&FiniteGroup::trivial()), Vec::<Elem>::new());
        let s3 = catalog::get("S3").unwrap();
        assert_eq!(generating_set(&s3), vec![1, 2]);
    }

    #[test]
    fn aut_z2_is_trivial() {
        let aut = automorphism_group(&Arc::new(FiniteGroup::cyclic(2))).unwrap();
        assert_eq!(aut.group().order(), 1);
    }

    #[test]
    fn aut_z8_is_klein() {
        let aut = automorphism_group(&Arc::new(FiniteGroup::cyclic(8))).unwrap();
        let a = aut.group();
        assert_eq!(a.order(), 4);
        assert!(a.elements().all(|x| a.mul(x, x) == 0));
    }

    #[test]
    fn aut_s3_is_inner() {
        let s3 = catalog::get("S3").unwrap();
        let aut = automorphism_group(&s3).unwrap();
        assert_eq!(aut.group().order(), 6);
        let ad = aut.inner_hom();
        assert!(ad.is_injective() && ad.is_surjective());
        aut.group().verify().unwrap();
    }

    #[test]
    fn bound_is_enforced() {
        let z8 = Arc::new(FiniteGroup::cyclic(8));
        assert_eq!(
            automorphism_group_bounded(&z8, 4).unwrap_err(),
            GroupError::OrderBoundExceeded { order: 8, bound: 4 }
        );
    }

    #[test]
    fn inner_automorphisms() {
        let s3 = catalog::get("S3").unwrap();
        assert!(inner_automorphism(&s3, 0).is_identity());
        let z6 = Arc::new(FiniteGroup::cyclic(6));
        assert!((0..6).all(|g| inner_automorphism(&z6, g).is_identity()));
        // Conjugating the 3-cycle [1,2,0] by the transposition [0,2,1]
        // gives the other 3-cycle [2,0,1].
        assert_eq!(inner_automorphism(&s3, 1).apply(3), 4);
    }

    #[test]
    fn hom_counts() {
        let z4 = Arc::new(FiniteGroup::cyclic(4));
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        assert_eq!(homomorphisms(&z4, &z2).len(), 2);
        assert_eq!(homomorphisms(&z4, &z4).len(), 4);
        let s3 = catalog::get("S3").unwrap();
        // Trivial, three onto order-2 subgroups, six automorphisms.
        assert_eq!(homomorphisms(&s3, &s3).len(), 10);
        assert_eq!(homomorphisms(&s3, &z2).len(), 2);
    }
}
