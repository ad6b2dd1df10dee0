use crate::group::{Elem, GroupHom};

/// The composable pairs `(a, b)` with `s(a) = t(b)`, listed in
/// lexicographic order, with constant-time lookup of a pair's position.
///
/// This is the carrier of the pullback of `s` and `t` without its group
/// table, which would be quadratic in the (already quadratic) pair count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComposablePairs {
    s: Vec<Elem>,
    t: Vec<Elem>,
    /// `t_fiber[x]` lists the `b` with `t(b) = x`, ascending.
    t_fiber: Vec<Vec<Elem>>,
    /// Position of `b` inside `t_fiber[t(b)]`.
    rank: Vec<usize>,
    /// Index of the first pair with left entry `a`; one extra entry at the end.
    row_start: Vec<usize>,
}

impl ComposablePairs {
    /// `s` and `t` must share their source and their target.
    pub fn new(s: &GroupHom, t: &GroupHom) -> Self {
        let mut t_fiber = vec![Vec::new(); t.dst().order()];
        let mut rank = vec![0; t.src().order()];
        for (b, &x) in t.images().iter().enumerate() {
            rank[b] = t_fiber[x].len();
            t_fiber[x].push(b);
        }
        let mut row_start = Vec::with_capacity(s.src().order() + 1);
        let mut acc = 0;
        for &x in s.images() {
            row_start.push(acc);
            acc += t_fiber[x].len();
        }
        row_start.push(acc);
        ComposablePairs { s: s.images().to_vec(), t: t.images().to_vec(), t_fiber, rank, row_start }
    }

    pub fn len(&self) -> usize {
        *self.row_start.last().expect("row_start has a sentinel")
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn is_composable(&self, a: Elem, b: Elem) -> bool {
        a < self.s.len() && b < self.t.len() && self.s[a] == self.t[b]
    }

    #[inline]
    pub fn index(&self, a: Elem, b: Elem) -> Option<usize> {
        self.is_composable(a, b).then(|| self.row_start[a] + self.rank[b])
    }

    /// Position of a pair already known to be composable.
    #[inline]
    pub(crate) fn index_unchecked(&self, a: Elem, b: Elem) -> usize {
        debug_assert!(self.is_composable(a, b));
        self.row_start[a] + self.rank[b]
    }

    pub fn pair(&self, k: usize) -> (Elem, Elem) {
        let a = self.row_start.partition_point(|&start| start <= k) - 1;
        (a, self.t_fiber[self.s[a]][k - self.row_start[a]])
    }

    /// The `b` composable on the right of `a`.
    pub fn right_partners(&self, a: Elem) -> &[Elem] {
        &self.t_fiber[self.s[a]]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        (0..self.s.len()).flat_map(move |a| self.right_partners(a).iter().map(move |&b| (a, b)))
    }
}
