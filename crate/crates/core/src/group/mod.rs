//! Finite groups as multiplication tables.
//!
//! Elements are indices `0..order`; index `0` is always the identity. All
//! validators scan in lexicographic index order and stop at the first
//! witness, so the reported witness is deterministic.

mod action;
mod aut;
mod hom;
mod product;

use std::fmt;

use thiserror::Error;

use crate::report::{CheckLine, Report, Violation};

pub use action::GroupAction;
pub use aut::{
    automorphism_group, automorphism_group_bounded, generating_set, homomorphisms, inner_automorphism, Automorphisms,
};
pub use hom::{image, kernel, same_carrier, subgroup, GroupHom, GroupIso};
pub use product::{direct_product, pullback, semidirect_product, DirectProduct, Pullback, SemidirectProduct};

/// Index of a group element.
pub type Elem = usize;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("multiplication table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("table is not closed: {a}·{b} = {value} is out of range")]
    NotClosed { a: Elem, b: Elem, value: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(Elem),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(Elem, Elem, Elem),
    #[error("expected {expected} entries, found {len}")]
    LengthMismatch { expected: usize, len: usize },
    #[error("entry {value} at position {index} is out of range for a group of order {order}")]
    OutOfRange { index: usize, value: usize, order: usize },
    #[error("map is not multiplicative at ({0}, {1})")]
    NotMultiplicative(Elem, Elem),
    #[error("the map of actor element {0} is not an automorphism")]
    NotAutomorphism(Elem),
    #[error("the identity of the actor moves element {0}")]
    NotUnital(Elem),
    #[error("action is not multiplicative in the actor at ({0}, {1})")]
    NotMultiplicativeInActor(Elem, Elem),
    #[error("carrier order {order} exceeds the configured bound {bound}")]
    OrderBoundExceeded { order: usize, bound: usize },
    #[error("maps are not mutually inverse at element {0}")]
    NotInverse(Elem),
    #[error("invalid labels: {0}")]
    Labels(String),
    #[error("{0}")]
    Typing(String),
}

impl Violation for GroupError {
    fn check_id(&self) -> &'static str {
        match self {
            GroupError::Empty | GroupError::NotSquare { .. } => "table-shape",
            GroupError::NotClosed { .. } => "closure",
            GroupError::NoIdentity => "identity",
            GroupError::NoInverse(_) => "inverse",
            GroupError::NotAssociative(..) => "associativity",
            GroupError::LengthMismatch { .. } => "length",
            GroupError::OutOfRange { .. } => "range",
            GroupError::NotMultiplicative(..) => "hom",
            GroupError::NotAutomorphism(_) => "action-automorphism",
            GroupError::NotUnital(_) => "action-unital",
            GroupError::NotMultiplicativeInActor(..) => "action-multiplicative",
            GroupError::OrderBoundExceeded { .. } => "order-bound",
            GroupError::NotInverse(_) => "iso",
            GroupError::Labels(_) => "labels",
            GroupError::Typing(_) => "typing",
        }
    }

    fn witness(&self) -> String {
        match self {
            GroupError::Empty | GroupError::NoIdentity => String::new(),
            GroupError::NotSquare { row, len, .. } => format!("row={row} len={len}"),
            GroupError::NotClosed { a, b, value } => format!("a={a} b={b} value={value}"),
            GroupError::NoInverse(x) => format!("x={x}"),
            GroupError::NotAssociative(a, b, c) => format!("a={a} b={b} c={c}"),
            GroupError::LengthMismatch { expected, len } => format!("expected={expected} len={len}"),
            GroupError::OutOfRange { index, value, .. } => format!("index={index} value={value}"),
            GroupError::NotMultiplicative(a, b) => format!("a={a} b={b}"),
            GroupError::NotAutomorphism(g) => format!("g={g}"),
            GroupError::NotUnital(h) => format!("h={h}"),
            GroupError::NotMultiplicativeInActor(g, g2) => format!("g={g} g'={g2}"),
            GroupError::OrderBoundExceeded { order, bound } => format!("order={order} bound={bound}"),
            GroupError::NotInverse(x) => format!("x={x}"),
            GroupError::Labels(msg) | GroupError::Typing(msg) => msg.replace(' ', "_"),
        }
    }
}

/// A finite group given by its full multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Elem>,
    inverse: Vec<Elem>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup").field("order", &self.order).finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Validates a square table and builds the group.
    ///
    /// If the identity is found at an index other than `0`, that index is
    /// swapped with `0` before the inverse and associativity scans, so
    /// those witnesses refer to the relabelled elements.
    pub fn from_table(rows: Vec<Vec<Elem>>) -> Result<Self, GroupError> {
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::Empty);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != order {
                return Err(GroupError::NotSquare { row, len: r.len(), order });
            }
        }
        for (a, r) in rows.iter().enumerate() {
            for (b, &value) in r.iter().enumerate() {
                if value >= order {
                    return Err(GroupError::NotClosed { a, b, value });
                }
            }
        }
        let mut table: Vec<Elem> = rows.into_iter().flatten().collect();
        let at = |t: &[Elem], a: Elem, b: Elem| t[a * order + b];

        let e = (0..order)
            .find(|&e| (0..order).all(|x| at(&table, e, x) == x && at(&table, x, e) == x))
            .ok_or(GroupError::NoIdentity)?;
        if e != 0 {
            let sigma = |x: Elem| {
                if x == 0 {
                    e
                } else if x == e {
                    0
                } else {
                    x
                }
            };
            let mut relabelled = vec![0; order * order];
            for a in 0..order {
                for b in 0..order {
                    relabelled[sigma(a) * order + sigma(b)] = sigma(at(&table, a, b));
                }
            }
            table = relabelled;
        }

        let inverse = (0..order)
            .map(|x| {
                (0..order).find(|&y| at(&table, x, y) == 0 && at(&table, y, x) == 0).ok_or(GroupError::NoInverse(x))
            })
            .collect::<Result<Vec<_>, _>>()?;

        for a in 0..order {
            for b in 0..order {
                let ab = at(&table, a, b);
                for c in 0..order {
                    if at(&table, ab, c) != at(&table, a, at(&table, b, c)) {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }

        Ok(FiniteGroup { order, table, inverse, labels: None })
    }

    /// Builds a group from a table known to satisfy the axioms, with the
    /// identity at `0`. Used by constructions whose output is a group by
    /// theorem (products, subgroups, automorphism groups).
    pub(crate) fn from_valid_table(order: usize, table: Vec<Elem>, labels: Option<Vec<String>>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let mut inverse = vec![usize::MAX; order];
        for x in 0..order {
            if inverse[x] != usize::MAX {
                continue;
            }
            let y = (0..order).find(|&y| table[x * order + y] == 0).expect("group table has inverses");
            inverse[x] = y;
            inverse[y] = x;
        }
        FiniteGroup { order, table, inverse, labels }
    }

    pub fn trivial() -> Self {
        Self::from_valid_table(1, vec![0], Some(vec!["e".into()]))
    }

    /// The cyclic group of order `n`; element `k` is the residue `k`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group needs n >= 1");
        let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Self::from_valid_table(n, table, Some((0..n).map(|k| k.to_string()).collect()))
    }

    /// Attaches display labels, one per element. Labels must be non-empty
    /// and free of whitespace and `#` so they survive the text format.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GroupError> {
        if labels.len() != self.order {
            return Err(GroupError::Labels(format!("expected {} labels, found {}", self.order, labels.len())));
        }
        if let Some(bad) = labels.iter().find(|l| !valid_label(l)) {
            return Err(GroupError::Labels(format!("label {bad:?} is empty or contains whitespace or '#'")));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        0
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a]
    }

    /// `g·h·g⁻¹`.
    #[inline]
    pub fn conj(&self, g: Elem, h: Elem) -> Elem {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn row(&self, a: Elem) -> &[Elem] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.elements().map(|a| self.row(a).to_vec()).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element: its label, or its index.
    pub fn label(&self, x: Elem) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// First non-commuting pair in lexicographic order, if any.
    pub fn noncommuting_pair(&self) -> Option<(Elem, Elem)> {
        self.elements()
            .flat_map(|a| self.elements().map(move |b| (a, b)))
            .find(|&(a, b)| self.mul(a, b) != self.mul(b, a))
    }

    pub fn is_abelian(&self) -> bool {
        self.noncommuting_pair().is_none()
    }

    pub fn element_order(&self, x: Elem) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Re-checks all group axioms; constructions that skip validation are
    /// tested against this.
    pub fn verify(&self) -> Result<(), GroupError> {
        let rebuilt = FiniteGroup::from_table(self.rows())?;
        if rebuilt.table != self.table || rebuilt.inverse != self.inverse {
            return Err(GroupError::Typing("identity is not at index 0".into()));
        }
        Ok(())
    }

    /// One line per axiom family in the order they are checked. Checks
    /// after the first failure are skipped.
    pub fn diagnose(rows: Vec<Vec<Elem>>, labels: Option<Vec<String>>) -> Report {
        const CHECKS: [&str; 6] = ["table-shape", "closure", "identity", "inverse", "associativity", "labels"];
        let result = FiniteGroup::from_table(rows).and_then(|g| match labels {
            Some(l) => g.with_labels(l).map(|_| ()),
            None => Ok(()),
        });
        let failed = result.as_ref().err().map(|e| e.check_id());
        let mut report = Report::new();
        let mut seen_failure = false;
        for id in CHECKS {
            let line = match (&result, seen_failure) {
                (_, true) => CheckLine::skip(id, "prerequisite-failed"),
                (Err(e), false) if failed == Some(id) => {
                    seen_failure = true;
                    CheckLine::fail(id, e.witness())
                }
                _ => CheckLine::pass(id),
            };
            report.push(line);
        }
        report
    }
}

pub(crate) fn valid_label(l: &str) -> bool {
    !l.is_empty() && !l.contains(|c: char| c.is_whitespace() || c == '#')
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4_rows() -> Vec<Vec<Elem>> {
        (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect()
    }

    #[test]
    fn trivial_group_from_single_entry() {
        let g = FiniteGroup::from_table(vec![vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.inv(0), 0);
    }

    #[test]
    fn z4_addition_table() {
        let g = FiniteGroup::from_table(z4_rows()).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.inv(1), 3);
        assert_eq!(g.mul(3, 3), 2);
        assert!(g.is_abelian());
        assert_eq!(g, FiniteGroup::cyclic(4).without_labels());
    }

    #[test]
    fn idempotent_non_identity_is_rejected() {
        // Brute-force scan: identity is 0, and row 1 is [1, 1] so no y has
        // 1·y = 0; the first failing element is 1.
        let err = FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, GroupError::NoInverse(1));
    }

    #[test]
    fn identity_elsewhere_is_moved_to_zero() {
        // Z2 with the identity at index 1.
        let g = FiniteGroup::from_table(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.rows(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn shape_and_closure_errors() {
        assert_eq!(FiniteGroup::from_table(vec![]).unwrap_err(), GroupError::Empty);
        assert_eq!(
            FiniteGroup::from_table(vec![vec![0, 1], vec![1]]).unwrap_err(),
            GroupError::NotSquare { row: 1, len: 1, order: 2 }
        );
        assert_eq!(
            FiniteGroup::from_table(vec![vec![0, 2], vec![1, 0]]).unwrap_err(),
            GroupError::NotClosed { a: 0, b: 1, value: 2 }
        );
        assert_eq!(FiniteGroup::from_table(vec![vec![1, 1], vec![1, 1]]).unwrap_err(), GroupError::NoIdentity);
    }

    #[test]
    fn latin_square_that_is_not_associative() {
        // A loop of order 5 that is not a group.
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table(rows).unwrap_err(), GroupError::NotAssociative(..)));
    }

    #[test]
    fn labels_are_validated() {
        let g = FiniteGroup::cyclic(2);
        assert!(g.clone().with_labels(vec!["e".into()]).is_err());
        assert!(g.clone().with_labels(vec!["e".into(), "a b".into()]).is_err());
        let g = g.with_labels(vec!["e".into(), "a".into()]).unwrap();
        assert_eq!(g.label(1), "a");
    }

    #[test]
    fn element_orders_in_z4() {
        let g = FiniteGroup::cyclic(4);
        let orders: Vec<_> = g.elements().map(|x| g.element_order(x)).collect();
        assert_eq!(orders, vec![1, 4, 2, 4]);
    }
}
