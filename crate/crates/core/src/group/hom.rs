use std::sync::Arc;

use super::{Elem, FiniteGroup, GroupError};

/// Carrier identity used for composability: the same allocation, or equal
/// multiplication tables. Labels are display data and are ignored.
pub fn same_carrier(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || (a.order == b.order && a.table == b.table)
}

/// A verified group homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    src: Arc<FiniteGroup>,
    dst: Arc<FiniteGroup>,
    images: Vec<Elem>,
}

impl GroupHom {
    pub fn new(src: Arc<FiniteGroup>, dst: Arc<FiniteGroup>, images: Vec<Elem>) -> Result<Self, GroupError> {
        check_images(&src, &dst, &images)?;
        for a in src.elements() {
            for b in src.elements() {
                if images[src.mul(a, b)] != dst.mul(images[a], images[b]) {
                    return Err(GroupError::NotMultiplicative(a, b));
                }
            }
        }
        Ok(GroupHom { src, dst, images })
    }

    /// Skips the multiplicativity scan; for maps that are homomorphisms by
    /// construction.
    pub(crate) fn new_unchecked(src: Arc<FiniteGroup>, dst: Arc<FiniteGroup>, images: Vec<Elem>) -> Self {
        debug_assert_eq!(images.len(), src.order());
        GroupHom { src, dst, images }
    }

    pub fn identity(g: Arc<FiniteGroup>) -> Self {
        let images = g.elements().collect();
        GroupHom { src: g.clone(), dst: g, images }
    }

    pub fn trivial(src: Arc<FiniteGroup>, dst: Arc<FiniteGroup>) -> Self {
        let images = vec![0; src.order()];
        GroupHom { src, dst, images }
    }

    pub fn src(&self) -> &Arc<FiniteGroup> {
        &self.src
    }

    pub fn dst(&self) -> &Arc<FiniteGroup> {
        &self.dst
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.images[x]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &GroupHom) -> Result<GroupHom, GroupError> {
        if !same_carrier(first.dst(), self.src()) {
            return Err(GroupError::Typing("homomorphisms are not composable".into()));
        }
        let images = first.images.iter().map(|&x| self.images[x]).collect();
        Ok(GroupHom { src: first.src.clone(), dst: self.dst.clone(), images })
    }

    pub fn is_identity(&self) -> bool {
        same_carrier(&self.src, &self.dst) && self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn is_injective(&self) -> bool {
        self.injectivity_witness().is_none()
    }

    /// First pair `a < b` with equal images.
    pub fn injectivity_witness(&self) -> Option<(Elem, Elem)> {
        let mut seen = vec![None; self.dst.order()];
        for (a, &x) in self.images.iter().enumerate() {
            if let Some(first) = seen[x] {
                return Some((first, a));
            }
            seen[x] = Some(a);
        }
        None
    }

    pub fn is_surjective(&self) -> bool {
        self.surjectivity_witness().is_none()
    }

    /// First element of the codomain that is not hit.
    pub fn surjectivity_witness(&self) -> Option<Elem> {
        let mut hit = vec![false; self.dst.order()];
        for &x in &self.images {
            hit[x] = true;
        }
        hit.iter().position(|&h| !h)
    }

    /// Restriction to a subgroup given by its inclusion hom.
    pub fn restrict(&self, inclusion: &GroupHom) -> Result<GroupHom, GroupError> {
        self.after(inclusion)
    }

    /// Corestriction through a subgroup inclusion of the codomain. Fails if
    /// some image lies outside the subgroup.
    pub fn corestrict(&self, inclusion: &GroupHom) -> Result<GroupHom, GroupError> {
        if !same_carrier(inclusion.dst(), self.dst()) {
            return Err(GroupError::Typing("inclusion does not land in the codomain".into()));
        }
        let lookup = inclusion_lookup(inclusion);
        let images = self
            .images
            .iter()
            .enumerate()
            .map(|(a, &x)| {
                lookup[x].ok_or(GroupError::OutOfRange { index: a, value: x, order: inclusion.src().order() })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GroupHom { src: self.src.clone(), dst: inclusion.src().clone(), images })
    }
}

pub(crate) fn check_images(src: &FiniteGroup, dst: &FiniteGroup, images: &[Elem]) -> Result<(), GroupError> {
    if images.len() != src.order() {
        return Err(GroupError::LengthMismatch { expected: src.order(), len: images.len() });
    }
    if let Some((index, &value)) = images.iter().enumerate().find(|(_, &x)| x >= dst.order()) {
        return Err(GroupError::OutOfRange { index, value, order: dst.order() });
    }
    Ok(())
}

/// For an injective hom, maps each codomain element to its preimage.
pub(crate) fn inclusion_lookup(inclusion: &GroupHom) -> Vec<Option<Elem>> {
    let mut lookup = vec![None; inclusion.dst().order()];
    for (k, &x) in inclusion.images().iter().enumerate() {
        lookup[x] = Some(k);
    }
    lookup
}

/// An explicit isomorphism with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupIso {
    forward: GroupHom,
    backward: GroupHom,
}

impl GroupIso {
    pub fn new(forward: GroupHom, backward: GroupHom) -> Result<Self, GroupError> {
        if !same_carrier(forward.src(), backward.dst()) || !same_carrier(forward.dst(), backward.src()) {
            return Err(GroupError::Typing("isomorphism halves have mismatched carriers".into()));
        }
        if let Some(x) = forward.src().elements().find(|&x| backward.apply(forward.apply(x)) != x) {
            return Err(GroupError::NotInverse(x));
        }
        if let Some(y) = forward.dst().elements().find(|&y| forward.apply(backward.apply(y)) != y) {
            return Err(GroupError::NotInverse(y));
        }
        Ok(GroupIso { forward, backward })
    }

    pub fn identity(g: Arc<FiniteGroup>) -> Self {
        let id = GroupHom::identity(g);
        GroupIso { forward: id.clone(), backward: id }
    }

    pub fn forward(&self) -> &GroupHom {
        &self.forward
    }

    pub fn backward(&self) -> &GroupHom {
        &self.backward
    }

    pub fn inverse(&self) -> GroupIso {
        GroupIso { forward: self.backward.clone(), backward: self.forward.clone() }
    }
}

/// The subgroup on a sorted list of elements closed under the operation,
/// re-indexed in the given order, with its inclusion.
pub fn subgroup(parent: &Arc<FiniteGroup>, elements: &[Elem]) -> Result<(Arc<FiniteGroup>, GroupHom), GroupError> {
    if elements.first() != Some(&0) {
        return Err(GroupError::Typing("subgroup must list the identity first".into()));
    }
    let mut lookup = vec![None; parent.order()];
    for (k, &x) in elements.iter().enumerate() {
        if x >= parent.order() || lookup[x].is_some() {
            return Err(GroupError::OutOfRange { index: k, value: x, order: parent.order() });
        }
        lookup[x] = Some(k);
    }
    let n = elements.len();
    let mut table = Vec::with_capacity(n * n);
    for &a in elements {
        for &b in elements {
            let ab = parent.mul(a, b);
            table.push(lookup[ab].ok_or(GroupError::NotClosed { a, b, value: ab })?);
        }
    }
    let labels = parent.labels().map(|l| elements.iter().map(|&x| l[x].clone()).collect());
    let sub = Arc::new(FiniteGroup::from_valid_table(n, table, labels));
    let incl = GroupHom::new_unchecked(sub.clone(), parent.clone(), elements.to_vec());
    Ok((sub, incl))
}

/// The kernel of `f`, indexed in the order of `f.src()`, with its inclusion.
pub fn kernel(f: &GroupHom) -> (Arc<FiniteGroup>, GroupHom) {
    let elements: Vec<Elem> = f.src().elements().filter(|&x| f.apply(x) == 0).collect();
    subgroup(f.src(), &elements).expect("kernel is a subgroup")
}

/// The image of `f`, indexed in the order of `f.dst()`, with its inclusion.
pub fn image(f: &GroupHom) -> (Arc<FiniteGroup>, GroupHom) {
    let mut hit = vec![false; f.dst().order()];
    for &x in f.images() {
        hit[x] = true;
    }
    let elements: Vec<Elem> = (0..hit.len()).filter(|&x| hit[x]).collect();
    subgroup(f.dst(), &elements).expect("image is a subgroup")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::catalog;

    fn z(n: usize) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::cyclic(n))
    }

    #[test]
    fn identity_images_give_identity_hom() {
        let g = z(4);
        let f = GroupHom::new(g.clone(), g.clone(), vec![0, 1, 2, 3]).unwrap();
        assert!(f.is_identity());
        assert_eq!(f, GroupHom::identity(g));
    }

    #[test]
    fn reduction_mod_two() {
        let f = GroupHom::new(z(4), z(2), vec![0, 1, 0, 1]).unwrap();
        assert!(f.is_surjective());
        assert!(!f.is_injective());
    }

    #[test]
    fn translation_is_not_a_hom() {
        let err = GroupHom::new(z(4), z(4), vec![1, 2, 3, 0]).unwrap_err();
        assert_eq!(err, GroupError::NotMultiplicative(0, 0));
    }

    #[test]
    fn wrong_length_and_range() {
        assert_eq!(
            GroupHom::new(z(4), z(2), vec![0, 1]).unwrap_err(),
            GroupError::LengthMismatch { expected: 4, len: 2 }
        );
        assert_eq!(
            GroupHom::new(z(2), z(2), vec![0, 2]).unwrap_err(),
            GroupError::OutOfRange { index: 1, value: 2, order: 2 }
        );
    }

    #[test]
    fn kernel_of_mod_two_is_even_residues() {
        let f = GroupHom::new(z(4), z(2), vec![0, 1, 0, 1]).unwrap();
        let (k, incl) = kernel(&f);
        assert_eq!(k.order(), 2);
        assert_eq!(incl.images(), &[0, 2]);
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        let (k, _) = kernel(&GroupHom::identity(z(5)));
        assert_eq!(k.order(), 1);
    }

    #[test]
    fn kernel_of_sign_is_alternating_group() {
        let s3 = catalog::get("S3").unwrap();
        let sign = catalog::sign_hom(&s3);
        let (k, incl) = kernel(&sign);
        assert_eq!(k.order(), 3);
        // Even permutations in the catalog ordering: identity and the two 3-cycles.
        assert_eq!(incl.images(), &[0, 3, 4]);
    }

    #[test]
    fn images() {
        let g = z(6);
        let (im, _) = image(&GroupHom::identity(g.clone()));
        assert_eq!(im.order(), 6);
        let (im, _) = image(&GroupHom::trivial(g.clone(), g.clone()));
        assert_eq!(im.order(), 1);
        let doubling = GroupHom::new(g.clone(), g, (0..6).map(|k| 2 * k % 6).collect()).unwrap();
        let (im, incl) = image(&doubling);
        assert_eq!(im.order(), 3);
        assert_eq!(incl.images(), &[0, 2, 4]);
    }

    #[test]
    fn iso_requires_mutual_inverses() {
        let g = z(3);
        let neg = GroupHom::new(g.clone(), g.clone(), vec![0, 2, 1]).unwrap();
        assert!(GroupIso::new(neg.clone(), neg.clone()).is_ok());
        assert_eq!(GroupIso::new(neg, GroupHom::identity(g)).unwrap_err(), GroupError::NotInverse(1));
    }
}
