use std::sync::Arc;

use super::ConstructionError;
use crate::crossed_module::CrossedModule;
use crate::group::{kernel, Elem, FiniteGroup, GroupAction, GroupError, GroupHom};

/// `Ok` iff `tau` is onto and its kernel is central; otherwise the first
/// unhit element, or the first kernel element `k` (in source order) and
/// `h` with `k·h ≠ h·k`.
pub fn is_central_extension(tau: &GroupHom) -> Result<(), ConstructionError> {
    if let Some(g) = tau.surjectivity_witness() {
        return Err(ConstructionError::NotSurjective(g));
    }
    let h = tau.src();
    let (_, incl) = kernel(tau);
    for &k in incl.images() {
        if let Some(x) = h.elements().find(|&x| h.mul(k, x) != h.mul(x, k)) {
            return Err(ConstructionError::KernelNotCentral { k, h: x });
        }
    }
    Ok(())
}

/// The smallest preimage of each element. Needs `tau` onto.
pub fn default_section(tau: &GroupHom) -> Result<Vec<Elem>, ConstructionError> {
    let mut section = vec![None; tau.dst().order()];
    for (h, &g) in tau.images().iter().enumerate() {
        section[g].get_or_insert(h);
    }
    section.into_iter().enumerate().map(|(g, h)| h.ok_or(ConstructionError::NotSurjective(g))).collect()
}

/// `(G, H, τ, α)` with `α(g, h) = σ(g)·h·σ(g)⁻¹` for a section `σ` of `τ`
/// (the default section when `None`). The action does not depend on `σ`.
pub fn xmod_from_central_extension(
    tau: &GroupHom,
    section: Option<&[Elem]>,
) -> Result<CrossedModule, ConstructionError> {
    is_central_extension(tau)?;
    let section = match section {
        Some(s) => s.to_vec(),
        None => default_section(tau)?,
    };
    let (g, h) = (tau.dst(), tau.src());
    if section.len() != g.order() {
        return Err(GroupError::LengthMismatch { expected: g.order(), len: section.len() }.into());
    }
    if let Some(x) = g.elements().find(|&x| section[x] >= h.order() || tau.apply(section[x]) != x) {
        return Err(ConstructionError::NotASection(x));
    }
    let rows = g.elements().map(|x| h.elements().map(|y| h.conj(section[x], y)).collect()).collect();
    let alpha = GroupAction::new(g.clone(), h.clone(), rows)?;
    Ok(CrossedModule::new(g.clone(), h.clone(), tau.clone(), alpha)?)
}

/// `(G, N, inclusion, conjugation)` for a normal subgroup given by an
/// injective homomorphism `N → G`.
pub fn xmod_from_normal_subgroup(
    g: &Arc<FiniteGroup>,
    inclusion: &GroupHom,
) -> Result<CrossedModule, ConstructionError> {
    if let Some((a, b)) = inclusion.injectivity_witness() {
        return Err(ConstructionError::NotInjective(a, b));
    }
    let n = inclusion.src();
    let mut lookup = vec![None; g.order()];
    for (k, &x) in inclusion.images().iter().enumerate() {
        lookup[x] = Some(k);
    }
    let mut rows = Vec::with_capacity(g.order());
    for x in g.elements() {
        let mut row = Vec::with_capacity(n.order());
        for k in n.elements() {
            let conj = g.conj(x, inclusion.apply(k));
            row.push(lookup[conj].ok_or(ConstructionError::NotNormal { g: x, n: k })?);
        }
        rows.push(row);
    }
    let alpha = GroupAction::new(g.clone(), n.clone(), rows)?;
    Ok(CrossedModule::new(g.clone(), n.clone(), inclusion.clone(), alpha)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::catalog;
    use crate::group::subgroup;

    #[test]
    fn identity_is_central() {
        let g = catalog::get("S3").unwrap();
        assert!(is_central_extension(&GroupHom::identity(g)).is_ok());
    }

    #[test]
    fn sign_is_not_central() {
        let s3 = catalog::get("S3").unwrap();
        let err = is_central_extension(&catalog::sign_hom(&s3)).unwrap_err();
        // The 3-cycle at index 3 does not commute with the transposition at 1.
        assert_eq!(err, ConstructionError::KernelNotCentral { k: 3, h: 1 });
    }

    #[test]
    fn z4_onto_z2() {
        let tau = catalog::mod_two();
        assert!(is_central_extension(&tau).is_ok());
        assert_eq!(default_section(&tau).unwrap(), vec![0, 1]);
        let a = xmod_from_central_extension(&tau, None).unwrap();
        let b = xmod_from_central_extension(&tau, Some(&[0, 3])).unwrap();
        assert!(a.alpha().is_trivial());
        assert_eq!(a.alpha().rows(), b.alpha().rows());
        assert_eq!(xmod_from_central_extension(&tau, Some(&[0, 2])).unwrap_err(), ConstructionError::NotASection(1));
    }

    #[test]
    fn normal_subgroups() {
        let s3 = catalog::get("S3").unwrap();
        let (_, a3) = subgroup(&s3, &[0, 3, 4]).unwrap();
        assert!(xmod_from_normal_subgroup(&s3, &a3).is_ok());
        let (_, c2) = subgroup(&s3, &[0, 1]).unwrap();
        assert_eq!(xmod_from_normal_subgroup(&s3, &c2).unwrap_err(), ConstructionError::NotNormal { g: 2, n: 1 });
    }
}
