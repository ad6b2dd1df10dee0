use std::sync::Arc;

use super::hom::same_carrier;
use super::{Elem, FiniteGroup, GroupError, GroupHom};

/// A verified left action of `actor` on `space` by automorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    actor: Arc<FiniteGroup>,
    space: Arc<FiniteGroup>,
    /// Row-major `actor.order() × space.order()`.
    map: Vec<Elem>,
}

impl GroupAction {
    /// Checks, in order: every row is an automorphism, the identity row is
    /// the identity map, and `map[g·g'] = map[g] ∘ map[g']`.
    pub fn new(actor: Arc<FiniteGroup>, space: Arc<FiniteGroup>, rows: Vec<Vec<Elem>>) -> Result<Self, GroupError> {
        if rows.len() != actor.order() {
            return Err(GroupError::LengthMismatch { expected: actor.order(), len: rows.len() });
        }
        let n = space.order();
        for r in &rows {
            if r.len() != n {
                return Err(GroupError::LengthMismatch { expected: n, len: r.len() });
            }
        }
        let map: Vec<Elem> = rows.into_iter().flatten().collect();
        if let Some((index, &value)) = map.iter().enumerate().find(|(_, &x)| x >= n) {
            return Err(GroupError::OutOfRange { index, value, order: n });
        }
        let action = GroupAction { actor, space, map };
        action.validate()?;
        Ok(action)
    }

    fn validate(&self) -> Result<(), GroupError> {
        let (actor, space) = (&self.actor, &self.space);
        for g in actor.elements() {
            let row = self.row(g);
            let mut seen = vec![false; space.order()];
            let bijective = row.iter().all(|&x| !std::mem::replace(&mut seen[x], true));
            let multiplicative =
                space.elements().all(|a| space.elements().all(|b| row[space.mul(a, b)] == space.mul(row[a], row[b])));
            if !bijective || !multiplicative {
                return Err(GroupError::NotAutomorphism(g));
            }
        }
        if let Some(h) = space.elements().find(|&h| self.act(0, h) != h) {
            return Err(GroupError::NotUnital(h));
        }
        for g in actor.elements() {
            for g2 in actor.elements() {
                let gg = actor.mul(g, g2);
                if space.elements().any(|h| self.act(gg, h) != self.act(g, self.act(g2, h))) {
                    return Err(GroupError::NotMultiplicativeInActor(g, g2));
                }
            }
        }
        Ok(())
    }

    pub(crate) fn from_fn_unchecked(
        actor: Arc<FiniteGroup>,
        space: Arc<FiniteGroup>,
        f: impl Fn(Elem, Elem) -> Elem,
    ) -> Self {
        let map = actor.elements().flat_map(|g| space.elements().map(move |h| (g, h))).map(|(g, h)| f(g, h)).collect();
        GroupAction { actor, space, map }
    }

    pub fn trivial(actor: Arc<FiniteGroup>, space: Arc<FiniteGroup>) -> Self {
        Self::from_fn_unchecked(actor, space, |_, h| h)
    }

    /// `g` acts on its own group by `h ↦ g·h·g⁻¹`.
    pub fn conjugation(g: Arc<FiniteGroup>) -> Self {
        let gg = g.clone();
        Self::from_fn_unchecked(g.clone(), g, move |a, h| gg.conj(a, h))
    }

    /// Pulls an action back along a homomorphism into its actor:
    /// `g` acts as `f(g)` does.
    pub fn from_hom(f: &GroupHom, action: &GroupAction) -> Result<Self, GroupError> {
        if !same_carrier(f.dst(), &action.actor) {
            return Err(GroupError::Typing("homomorphism does not land in the actor".into()));
        }
        Ok(Self::from_fn_unchecked(f.src().clone(), action.space.clone(), |g, h| action.act(f.apply(g), h)))
    }

    pub fn actor(&self) -> &Arc<FiniteGroup> {
        &self.actor
    }

    pub fn space(&self) -> &Arc<FiniteGroup> {
        &self.space
    }

    #[inline]
    pub fn act(&self, g: Elem, h: Elem) -> Elem {
        self.map[g * self.space.order() + h]
    }

    pub fn row(&self, g: Elem) -> &[Elem] {
        let n = self.space.order();
        &self.map[g * n..(g + 1) * n]
    }

    /// The whole table, row-major.
    pub fn entries(&self) -> &[Elem] {
        &self.map
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.actor.elements().map(|g| self.row(g).to_vec()).collect()
    }

    /// The automorphism by which `g` acts.
    pub fn automorphism(&self, g: Elem) -> GroupHom {
        GroupHom::new_unchecked(self.space.clone(), self.space.clone(), self.row(g).to_vec())
    }

    pub fn is_trivial(&self) -> bool {
        self.actor.elements().all(|g| self.row(g).iter().enumerate().all(|(h, &x)| h == x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::catalog;

    #[test]
    fn trivial_map_is_an_action() {
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let z3 = Arc::new(FiniteGroup::cyclic(3));
        let rows = vec![vec![0, 1, 2], vec![0, 1, 2]];
        let a = GroupAction::new(z2.clone(), z3.clone(), rows).unwrap();
        assert_eq!(a, GroupAction::trivial(z2, z3));
    }

    #[test]
    fn conjugation_is_an_action() {
        let s3 = catalog::get("S3").unwrap();
        let conj = GroupAction::conjugation(s3.clone());
        assert_eq!(GroupAction::new(s3.clone(), s3, conj.rows()).unwrap(), conj);
    }

    #[test]
    fn inversion_and_translation() {
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let z3 = Arc::new(FiniteGroup::cyclic(3));
        assert!(GroupAction::new(z2.clone(), z3.clone(), vec![vec![0, 1, 2], vec![0, 2, 1]]).is_ok());
        let err = GroupAction::new(z2, z3, vec![vec![0, 1, 2], vec![1, 2, 0]]).unwrap_err();
        assert_eq!(err, GroupError::NotAutomorphism(1));
    }

    #[test]
    fn non_unital_and_non_multiplicative() {
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let z3 = Arc::new(FiniteGroup::cyclic(3));
        // Identity of Z2 acting by inversion.
        let err = GroupAction::new(z2.clone(), z3.clone(), vec![vec![0, 2, 1], vec![0, 2, 1]]).unwrap_err();
        assert_eq!(err, GroupError::NotUnital(1));
        // Z3 acting on Z3 by inversion from every non-identity element: 1·1 = 2
        // acts by inversion but inversion∘inversion is the identity.
        let err = GroupAction::new(z3.clone(), z3, vec![vec![0, 1, 2], vec![0, 2, 1], vec![0, 2, 1]]).unwrap_err();
        assert_eq!(err, GroupError::NotMultiplicativeInActor(1, 1));
    }
}
