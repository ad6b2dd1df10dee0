//! Named collections of objects, morphisms and 2-morphisms on either side
//! of the equivalence, as consumed by the law checkers and the round-trip
//! verifier.

use std::sync::Arc;

use crate::crossed_module::{CrossedModule, XMod2Morphism, XModMorphism};
use crate::two_group::{StrictTwoGroup, TwoGroupMorphism, TwoGroupTwoMorphism};

#[derive(Clone, Debug)]
pub struct Named<T> {
    pub name: String,
    pub value: T,
}

impl<T> Named<T> {
    pub fn new(name: impl Into<String>, value: T) -> Self {
        Named { name: name.into(), value }
    }
}

#[derive(Clone, Debug, Default)]
pub struct TwoGroupCollection {
    pub subjects: Vec<Named<Arc<StrictTwoGroup>>>,
    pub morphisms: Vec<Named<TwoGroupMorphism>>,
    pub two_morphisms: Vec<Named<TwoGroupTwoMorphism>>,
}

#[derive(Clone, Debug, Default)]
pub struct XModCollection {
    pub subjects: Vec<Named<Arc<CrossedModule>>>,
    pub morphisms: Vec<Named<XModMorphism>>,
    pub two_morphisms: Vec<Named<XMod2Morphism>>,
}
