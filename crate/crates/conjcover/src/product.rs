//! Setwise products of element subsets and double-coset ranks.

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::subgroup::Subgroup;
use crate::table::GroupTable;

/// `{ab : a ∈ A, b ∈ B}` under left-to-right composition.
///
/// Costs `O(|A|·|B|)` index compositions with bitmask accumulation.
pub fn set_product(table: &GroupTable, a: &SubsetMask, b: &SubsetMask) -> Result<SubsetMask> {
    if a.len() != table.order() || b.len() != table.order() {
        return Err(Error::ParentMismatch);
    }
    let mut out = SubsetMask::empty(table.order());
    let b_indices = b.to_indices();
    for x in a.iter_ones() {
        for &y in &b_indices {
            out.insert(table.compose_idx(x, y));
        }
    }
    Ok(out)
}

/// Left-coset partition of the group by a subgroup, cached for fast products.
///
/// `A · C` is the union of the left cosets `aC` that meet `A`, so a product
/// with a subgroup costs one lookup per element of `A` plus one mask union
/// per touched coset.
pub struct CosetTable {
    coset_of: Vec<u32>,
    coset_masks: Vec<SubsetMask>,
}

impl CosetTable {
    pub fn new(table: &GroupTable, c: &Subgroup) -> CosetTable {
        let order = table.order();
        let mut coset_of = vec![u32::MAX; order];
        let mut coset_masks = Vec::with_capacity(order / c.order());
        for g in 0..order as u32 {
            if coset_of[g as usize] != u32::MAX {
                continue;
            }
            let id = coset_masks.len() as u32;
            let mut mask = SubsetMask::empty(order);
            for &m in c.members() {
                let gm = table.compose_idx(g, m);
                coset_of[gm as usize] = id;
                mask.insert(gm);
            }
            coset_masks.push(mask);
        }
        CosetTable {
            coset_of,
            coset_masks,
        }
    }

    /// `a · C` for the subgroup this table was built from.
    pub fn product(&self, a: &SubsetMask) -> SubsetMask {
        let mut touched = vec![false; self.coset_masks.len()];
        for x in a.iter_ones() {
            touched[self.coset_of[x as usize] as usize] = true;
        }
        let mut out = SubsetMask::empty(a.len());
        for (id, hit) in touched.iter().enumerate() {
            if *hit {
                out.union_with(&self.coset_masks[id]);
            }
        }
        out
    }

    pub fn coset_count(&self) -> usize {
        self.coset_masks.len()
    }
}

/// Rank data for the action of the group on the right cosets of a subgroup.
#[derive(Debug)]
pub struct RankInfo {
    /// Number of double cosets `MxM`, i.e. of `M`-orbits on the coset space.
    pub rank: usize,
    /// One element representative per double coset, the first being the
    /// identity (for the coset `M` itself).
    pub double_coset_reps: Vec<u32>,
    /// Index `[G : M]`.
    pub coset_count: usize,
}

/// Partitions the right-coset space of `m` into `m`-orbits and counts them.
///
/// The rank is at least 2 for proper `m`, and equals 2 exactly when the coset
/// action is 2-transitive.
pub fn rank(table: &GroupTable, m: &Subgroup) -> Result<RankInfo> {
    if m.is_whole_group(table) {
        return Err(Error::NotProper);
    }
    let order = table.order();

    // Right cosets Mg.
    let mut coset_of = vec![u32::MAX; order];
    let mut reps: Vec<u32> = Vec::with_capacity(order / m.order());
    for g in 0..order as u32 {
        if coset_of[g as usize] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(g);
        for &x in m.members() {
            coset_of[table.compose_idx(x, g) as usize] = id;
        }
    }

    // Orbits of M acting by right multiplication: Mg · x = M(gx).
    let m_gens: &[u32] = if m.generator_indices().is_empty() {
        m.members()
    } else {
        m.generator_indices()
    };
    let mut orbit_of = vec![u32::MAX; reps.len()];
    let mut double_coset_reps = Vec::new();
    for start in 0..reps.len() as u32 {
        if orbit_of[start as usize] != u32::MAX {
            continue;
        }
        let orbit_id = double_coset_reps.len() as u32;
        double_coset_reps.push(reps[start as usize]);
        let mut stack = vec![start];
        orbit_of[start as usize] = orbit_id;
        while let Some(c) = stack.pop() {
            let rep = reps[c as usize];
            for &x in m_gens {
                let next = coset_of[table.compose_idx(rep, x) as usize];
                if orbit_of[next as usize] == u32::MAX {
                    orbit_of[next as usize] = orbit_id;
                    stack.push(next);
                }
            }
        }
    }

    Ok(RankInfo {
        rank: double_coset_reps.len(),
        double_coset_reps,
        coset_count: reps.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;
    use crate::subgroup::{point_stabilizer, subgroup_closure};

    fn table(gens: &[&str], degree: usize) -> GroupTable {
        let gens: Vec<Perm> = gens
            .iter()
            .map(|s| Perm::parse_cycles(s, degree).unwrap())
            .collect();
        GroupTable::generate(degree, &gens, 10_000).unwrap()
    }

    fn sym3() -> GroupTable {
        table(&["(1 2 3)", "(1 2)"], 3)
    }

    #[test]
    fn product_with_identity_singleton() {
        let g = sym3();
        let a = SubsetMask::from_indices(6, [0, 2, 4]);
        let id = SubsetMask::from_indices(6, [0]);
        assert_eq!(set_product(&g, &a, &id).unwrap(), a);
        assert_eq!(set_product(&g, &id, &a).unwrap(), a);
    }

    #[test]
    fn subgroup_is_a_product_fixed_point() {
        let g = sym3();
        let rot = g
            .index_of(&Perm::parse_cycles("(1 2 3)", 3).unwrap())
            .unwrap();
        let a3 = subgroup_closure(&g, &[rot]);
        let p = set_product(&g, a3.mask(), a3.mask()).unwrap();
        assert_eq!(&p, a3.mask());
    }

    #[test]
    fn transposition_product_expansion() {
        // {e,(1 2)} · {e,(1 3)} has four elements: e, (1 2), (1 3), (1 2 3).
        let g = sym3();
        let t12 = g
            .index_of(&Perm::parse_cycles("(1 2)", 3).unwrap())
            .unwrap();
        let t13 = g
            .index_of(&Perm::parse_cycles("(1 3)", 3).unwrap())
            .unwrap();
        let a = SubsetMask::from_indices(6, [0, t12]);
        let b = SubsetMask::from_indices(6, [0, t13]);
        let p = set_product(&g, &a, &b).unwrap();
        assert_eq!(p.cardinality(), 4);
        assert!(p.contains(0));
        assert!(p.contains(t12));
        assert!(p.contains(t13));
        let c123 = g
            .index_of(&Perm::parse_cycles("(1 2 3)", 3).unwrap())
            .unwrap();
        assert!(p.contains(c123));
    }

    #[test]
    fn coset_table_product_matches_generic() {
        let g = table(&["(1 2 3 4)", "(1 2)"], 4);
        let stab = point_stabilizer(&g, 0).unwrap();
        let cosets = CosetTable::new(&g, &stab);
        assert_eq!(cosets.coset_count(), 4);
        let a = SubsetMask::from_indices(g.order(), [0, 3, 7, 11, 20]);
        let fast = cosets.product(&a);
        let slow = set_product(&g, &a, stab.mask()).unwrap();
        assert_eq!(fast, slow);
    }

    #[test]
    fn rank_of_sym3_on_transposition_cosets() {
        let g = sym3();
        let t12 = g
            .index_of(&Perm::parse_cycles("(1 2)", 3).unwrap())
            .unwrap();
        let m = subgroup_closure(&g, &[t12]);
        let info = rank(&g, &m).unwrap();
        assert_eq!(info.rank, 2);
        assert_eq!(info.coset_count, 3);
        assert_eq!(info.double_coset_reps[0], 0);
    }

    #[test]
    fn rank_of_normal_subgroup_equals_index() {
        let g = table(&["(1 2 3 4 5 6)"], 6);
        let c3 = subgroup_closure(
            &g,
            &[
                g.index_of(&Perm::parse_cycles("(1 3 5)(2 4 6)", 6).unwrap())
                    .unwrap(),
            ],
        );
        assert_eq!(c3.order(), 3);
        let info = rank(&g, &c3).unwrap();
        assert_eq!(info.rank, 2);
        assert_eq!(info.coset_count, 2);
    }

    #[test]
    fn rank_of_alt5_point_stabilizer_is_two() {
        let g = table(&["(1 2 3)", "(1 2 3 4 5)"], 5);
        let stab = point_stabilizer(&g, 0).unwrap();
        assert_eq!(stab.order(), 12);
        assert_eq!(rank(&g, &stab).unwrap().rank, 2);
    }

    #[test]
    fn rank_rejects_whole_group() {
        let g = sym3();
        assert_eq!(rank(&g, &g.full_subgroup()).unwrap_err(), Error::NotProper);
    }

    #[test]
    fn product_monotonicity() {
        let g = sym3();
        let small = SubsetMask::from_indices(6, [0, 1]);
        let big = SubsetMask::from_indices(6, [0, 1, 3]);
        let c = SubsetMask::from_indices(6, [2, 4]);
        let ps = set_product(&g, &small, &c).unwrap();
        let pb = set_product(&g, &big, &c).unwrap();
        assert!(ps.is_subset_of(&pb));
    }
}
