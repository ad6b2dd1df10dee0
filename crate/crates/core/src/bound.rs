//! Process-wide limit on carrier orders.
//!
//! The bound guards the operations whose cost or output size grows with the
//! carrier: automorphism enumeration, automorphism 2-groups, and the parser
//! (which refuses to allocate tables above the bound).

use std::sync::atomic::{AtomicUsize, Ordering};

pub const DEFAULT_MAX_ORDER: usize = 512;

static MAX_ORDER: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_ORDER);

pub fn max_order() -> usize {
    MAX_ORDER.load(Ordering::Relaxed)
}

pub fn set_max_order(bound: usize) {
    MAX_ORDER.store(bound.max(1), Ordering::Relaxed);
}
