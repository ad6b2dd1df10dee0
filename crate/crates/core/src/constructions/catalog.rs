//! Built-in small groups with pinned element orderings.
//!
//! | name     | order | element `k`                                              |
//! |----------|-------|----------------------------------------------------------|
//! | `trivial`| 1     | the identity                                             |
//! | `Zn`     | n     | the residue `k` (n = 2, 3, 4, 6, 8)                      |
//! | `Z2xZ2`  | 4     | the pair `(k / 2, k % 2)`                                |
//! | `S3`     | 6     | the `k`-th permutation of `{0,1,2}` in lexicographic one-line order |
//! | `D4`     | 8     | `r^(k % 4) s^(k / 4)` with `r⁴ = s² = e`, `s r s = r⁻¹`  |
//! | `Q8`     | 8     | `1, -1, i, -i, j, -j, k, -k` in that order               |
//! | `Z2xZ4`  | 8     | the pair `(k / 4, k % 4)`                                |
//! | `A4`     | 12    | the `k`-th even permutation of `{0,1,2,3}` in lexicographic order |
//!
//! Permutations multiply as composition of functions: `(σ·π)(x) = σ(π(x))`.

use std::sync::Arc;

use crate::group::{direct_product, Elem, FiniteGroup, GroupHom};

pub const NAMES: [&str; 12] = ["trivial", "Z2", "Z3", "Z4", "Z2xZ2", "Z6", "Z8", "S3", "D4", "Q8", "Z2xZ4", "A4"];

/// Every catalog group, in the order of [`NAMES`].
pub fn catalog() -> Vec<(&'static str, Arc<FiniteGroup>)> {
    NAMES.iter().map(|&n| (n, get(n).expect("listed names resolve"))).collect()
}

pub fn get(name: &str) -> Option<Arc<FiniteGroup>> {
    let g = match name {
        "trivial" => FiniteGroup::trivial(),
        "Z2" => FiniteGroup::cyclic(2),
        "Z3" => FiniteGroup::cyclic(3),
        "Z4" => FiniteGroup::cyclic(4),
        "Z6" => FiniteGroup::cyclic(6),
        "Z8" => FiniteGroup::cyclic(8),
        "Z2xZ2" => return Some(product_of(2, 2)),
        "Z2xZ4" => return Some(product_of(2, 4)),
        "S3" => permutation_group(3, false),
        "A4" => permutation_group(4, true),
        "D4" => dihedral_square(),
        "Q8" => quaternions(),
        _ => return None,
    };
    Some(Arc::new(g))
}

fn product_of(m: usize, n: usize) -> Arc<FiniteGroup> {
    direct_product(&Arc::new(FiniteGroup::cyclic(m)), &Arc::new(FiniteGroup::cyclic(n))).group
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                go(n, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]);
    inversions.count() % 2 == 0
}

fn permutation_group(n: usize, even_only: bool) -> FiniteGroup {
    let perms: Vec<Vec<usize>> = permutations(n).into_iter().filter(|p| !even_only || is_even(p)).collect();
    let m = perms.len();
    let mut table = Vec::with_capacity(m * m);
    for s in &perms {
        for p in &perms {
            let composite: Vec<usize> = p.iter().map(|&x| s[x]).collect();
            table.push(perms.iter().position(|q| *q == composite).expect("closed under composition"));
        }
    }
    let labels = perms.iter().map(|p| p.iter().map(|d| d.to_string()).collect()).collect();
    FiniteGroup::from_valid_table(m, table, Some(labels))
}

fn dihedral_square() -> FiniteGroup {
    let mut table = Vec::with_capacity(64);
    for x in 0..8 {
        let (a, b) = (x % 4, x / 4);
        for y in 0..8 {
            let (c, d) = (y % 4, y / 4);
            let rot = if b == 0 { (a + c) % 4 } else { (a + 4 - c) % 4 };
            table.push(rot + 4 * ((b + d) % 2));
        }
    }
    let labels = ["e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"].map(String::from).to_vec();
    FiniteGroup::from_valid_table(8, table, Some(labels))
}

fn quaternions() -> FiniteGroup {
    // Units 1, i, j, k as 0..4; UNIT[u][v] = (unit, sign flip) of u·v.
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    let mut table = Vec::with_capacity(64);
    for x in 0..8 {
        for y in 0..8 {
            let (u, flip) = UNIT[x / 2][y / 2];
            table.push(2 * u + (x % 2 + y % 2 + flip) % 2);
        }
    }
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
    FiniteGroup::from_valid_table(8, table, Some(labels))
}

/// The sign homomorphism of a catalog permutation group onto `Z2`.
pub fn sign_hom(s3: &Arc<FiniteGroup>) -> GroupHom {
    let signs: Vec<Elem> = permutations(3).iter().map(|p| usize::from(!is_even(p))).collect();
    GroupHom::new(s3.clone(), Arc::new(FiniteGroup::cyclic(2)), signs).expect("sign is a homomorphism")
}

/// `Q8 → Z2×Z2` with kernel `{1, -1}`: `±i ↦ (1,0)`, `±j ↦ (0,1)`, `±k ↦ (1,1)`.
pub fn quaternion_quotient() -> GroupHom {
    let q8 = get("Q8").expect("catalog group");
    let v4 = get("Z2xZ2").expect("catalog group");
    GroupHom::new(q8, v4, vec![0, 0, 2, 2, 1, 1, 3, 3]).expect("quotient by the centre is a homomorphism")
}

/// Reduction `Z4 → Z2`.
pub fn mod_two() -> GroupHom {
    GroupHom::new(get("Z4").expect("catalog group"), get("Z2").expect("catalog group"), vec![0, 1, 0, 1])
        .expect("reduction is a homomorphism")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_resolve() {
        let mut names = NAMES.to_vec();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), NAMES.len());
        assert!(get("nope").is_none());
    }

    #[test]
    fn every_group_passes_validation() {
        for (name, g) in catalog() {
            g.verify().unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn orders() {
        let orders: Vec<usize> = catalog().iter().map(|(_, g)| g.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 4, 6, 8, 6, 8, 8, 8, 12]);
    }

    #[test]
    fn q8_has_a_single_involution() {
        let q8 = get("Q8").unwrap();
        let involutions: Vec<Elem> = q8.elements().filter(|&x| q8.element_order(x) == 2).collect();
        assert_eq!(involutions, vec![1]);
        assert!(!q8.is_abelian());
    }

    #[test]
    fn d4_and_s3_are_nonabelian() {
        assert!(!get("D4").unwrap().is_abelian());
        assert!(!get("S3").unwrap().is_abelian());
        assert!(!get("A4").unwrap().is_abelian());
        assert!(get("Z2xZ4").unwrap().is_abelian());
    }
}
