use std::sync::Arc;

use super::hom::same_carrier;
use super::{Elem, FiniteGroup, GroupAction, GroupError, GroupHom};

fn pair_labels(a: &FiniteGroup, b: &FiniteGroup, pairs: impl Iterator<Item = (Elem, Elem)>) -> Option<Vec<String>> {
    if a.labels().is_none() && b.labels().is_none() {
        return None;
    }
    Some(pairs.map(|(x, y)| format!("({},{})", a.label(x), b.label(y))).collect())
}

/// `A × B` with pair `(a, b)` at index `a·|B| + b`.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub group: Arc<FiniteGroup>,
    pub proj_left: GroupHom,
    pub proj_right: GroupHom,
    pub inj_left: GroupHom,
    pub inj_right: GroupHom,
}

pub fn direct_product(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> DirectProduct {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            table.push(a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb));
        }
    }
    let labels = pair_labels(a, b, (0..n).map(|x| (x / nb, x % nb)));
    let group = Arc::new(FiniteGroup::from_valid_table(n, table, labels));
    DirectProduct {
        proj_left: GroupHom::new_unchecked(group.clone(), a.clone(), (0..n).map(|x| x / nb).collect()),
        proj_right: GroupHom::new_unchecked(group.clone(), b.clone(), (0..n).map(|x| x % nb).collect()),
        inj_left: GroupHom::new_unchecked(a.clone(), group.clone(), (0..na).map(|x| x * nb).collect()),
        inj_right: GroupHom::new_unchecked(b.clone(), group.clone(), (0..nb).collect()),
        group,
    }
}

/// `N ⋊ Q` on pairs `(n, q)` at index `n·|Q| + q`, with
/// `(n, q)·(n', q') = (n·α(q, n'), q·q')`.
#[derive(Clone, Debug)]
pub struct SemidirectProduct {
    pub group: Arc<FiniteGroup>,
    pub inj_normal: GroupHom,
    pub inj_quotient: GroupHom,
    pub proj_quotient: GroupHom,
}

impl SemidirectProduct {
    pub fn pair(&self, n: Elem, q: Elem) -> Elem {
        n * self.inj_quotient.src().order() + q
    }

    pub fn split(&self, x: Elem) -> (Elem, Elem) {
        let nq = self.inj_quotient.src().order();
        (x / nq, x % nq)
    }
}

pub fn semidirect_product(
    normal: &Arc<FiniteGroup>,
    quotient: &Arc<FiniteGroup>,
    action: &GroupAction,
) -> Result<SemidirectProduct, GroupError> {
    if !same_carrier(action.actor(), quotient) || !same_carrier(action.space(), normal) {
        return Err(GroupError::Typing("action does not match the semidirect factors".into()));
    }
    let (nn, nq) = (normal.order(), quotient.order());
    let n = nn * nq;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let (h, g) = (x / nq, x % nq);
        for y in 0..n {
            let (h2, g2) = (y / nq, y % nq);
            table.push(normal.mul(h, action.act(g, h2)) * nq + quotient.mul(g, g2));
        }
    }
    let labels = pair_labels(normal, quotient, (0..n).map(|x| (x / nq, x % nq)));
    let group = Arc::new(FiniteGroup::from_valid_table(n, table, labels));
    Ok(SemidirectProduct {
        inj_normal: GroupHom::new_unchecked(normal.clone(), group.clone(), (0..nn).map(|h| h * nq).collect()),
        inj_quotient: GroupHom::new_unchecked(quotient.clone(), group.clone(), (0..nq).collect()),
        proj_quotient: GroupHom::new_unchecked(group.clone(), quotient.clone(), (0..n).map(|x| x % nq).collect()),
        group,
    })
}

/// Pairs `(a, b)` with `f(a) = g(b)`, in lexicographic order.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub group: Arc<FiniteGroup>,
    pub proj_left: GroupHom,
    pub proj_right: GroupHom,
    pub pairs: Vec<(Elem, Elem)>,
}

pub fn pullback(f: &GroupHom, g: &GroupHom) -> Result<Pullback, GroupError> {
    if !same_carrier(f.dst(), g.dst()) {
        return Err(GroupError::Typing("pullback needs a common codomain".into()));
    }
    let (a, b) = (f.src(), g.src());
    let mut fiber: Vec<Vec<Elem>> = vec![Vec::new(); f.dst().order()];
    for y in b.elements() {
        fiber[g.apply(y)].push(y);
    }
    let pairs: Vec<(Elem, Elem)> = a.elements().flat_map(|x| fiber[f.apply(x)].iter().map(move |&y| (x, y))).collect();
    let mut index = std::collections::HashMap::with_capacity(pairs.len());
    for (k, &p) in pairs.iter().enumerate() {
        index.insert(p, k);
    }
    let n = pairs.len();
    let mut table = Vec::with_capacity(n * n);
    for &(x, y) in &pairs {
        for &(x2, y2) in &pairs {
            table.push(index[&(a.mul(x, x2), b.mul(y, y2))]);
        }
    }
    let labels = pair_labels(a, b, pairs.iter().copied());
    let group = Arc::new(FiniteGroup::from_valid_table(n, table, labels));
    Ok(Pullback {
        proj_left: GroupHom::new_unchecked(group.clone(), a.clone(), pairs.iter().map(|p| p.0).collect()),
        proj_right: GroupHom::new_unchecked(group.clone(), b.clone(), pairs.iter().map(|p| p.1).collect()),
        group,
        pairs,
    })
}
