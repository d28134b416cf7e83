//! Fully enumerated group tables: every element indexed, composition by index.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::perm::Perm;
use crate::subgroup::Subgroup;

/// Default cap on the order of an enumerated group.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// Orders up to this get a precomputed multiplication table.
const MULT_TABLE_CAP: usize = 2_048;

/// An indexed, closed enumeration of a finite permutation group.
///
/// Element 0 is the identity; the rest follow breadth-first discovery order
/// with generator index as tie-break, so tables are deterministic. Tables are
/// immutable after construction and safe to share across threads.
#[derive(Clone)]
pub struct GroupTable {
    degree: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    inverses: Vec<u32>,
    generators: Vec<u32>,
    mult: Option<Vec<u32>>,
}

impl GroupTable {
    /// Breadth-first closure of `gens` under composition.
    ///
    /// Fails with [`Error::OrderCapExceeded`] if the closure grows past `cap`.
    pub fn generate(degree: usize, gens: &[Perm], cap: usize) -> Result<GroupTable> {
        if degree == 0 {
            return Err(Error::InvalidParameter("degree must be positive".into()));
        }
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }

        let mut elements = vec![Perm::identity(degree)];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0u32);
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            for gen in gens {
                let next = current.compose(gen);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    index.insert(next.clone(), elements.len() as u32);
                    elements.push(next);
                }
            }
            head += 1;
        }

        let generators = gens
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| index[g])
            .collect();
        Ok(GroupTable::finish(degree, elements, index, generators))
    }

    fn finish(
        degree: usize,
        elements: Vec<Perm>,
        index: HashMap<Perm, u32>,
        generators: Vec<u32>,
    ) -> GroupTable {
        let order = elements.len();
        let mut inverses = vec![0u32; order];
        for (i, e) in elements.iter().enumerate() {
            inverses[i] = index[&e.inverse()];
        }
        let mult = if order <= MULT_TABLE_CAP {
            let mut table = vec![0u32; order * order];
            for (a, ea) in elements.iter().enumerate() {
                for (b, eb) in elements.iter().enumerate() {
                    table[a * order + b] = index[&ea.compose(eb)];
                }
            }
            Some(table)
        } else {
            None
        };
        GroupTable {
            degree,
            elements,
            index,
            inverses,
            generators,
            mult,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, index: u32) -> &Perm {
        &self.elements[index as usize]
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn index_of(&self, perm: &Perm) -> Option<u32> {
        self.index.get(perm).copied()
    }

    /// Indices of the defining generators.
    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    /// Index of `a · b` under left-to-right composition.
    #[inline]
    pub fn compose_idx(&self, a: u32, b: u32) -> u32 {
        match &self.mult {
            Some(table) => table[a as usize * self.elements.len() + b as usize],
            None => {
                let p = self.elements[a as usize].compose(&self.elements[b as usize]);
                self.index[&p]
            }
        }
    }

    #[inline]
    pub fn inverse_idx(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    /// Index of `by⁻¹ · a · by`.
    #[inline]
    pub fn conjugate_idx(&self, a: u32, by: u32) -> u32 {
        self.compose_idx(self.compose_idx(self.inverse_idx(by), a), by)
    }

    pub fn element_order(&self, a: u32) -> u64 {
        self.elements[a as usize].order()
    }

    pub fn full_mask(&self) -> SubsetMask {
        SubsetMask::full(self.order())
    }

    /// The whole group as a subgroup of itself.
    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup::from_members(
            self,
            (0..self.order() as u32).collect(),
            self.generators.clone(),
        )
    }

    /// Permutation action of the group on the right cosets of `h` by right
    /// multiplication, as a new group table plus the index map sending each
    /// element to its image. The kernel is the core of `h`; the action is a
    /// quotient construction when `h` is normal.
    pub fn coset_action(&self, h: &Subgroup) -> Result<(GroupTable, Vec<u32>)> {
        if h.mask().len() != self.order() {
            return Err(Error::ParentMismatch);
        }
        let order = self.order();
        let n_cosets = order / h.order();
        if n_cosets > u16::MAX as usize {
            return Err(Error::InvalidParameter(format!(
                "coset space of size {n_cosets} exceeds the permutation degree limit"
            )));
        }

        // Right cosets Hg: assign ids by scanning representatives in index order.
        let mut coset_of = vec![u32::MAX; order];
        let mut reps = Vec::with_capacity(n_cosets);
        for g in 0..order as u32 {
            if coset_of[g as usize] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(g);
            for &m in h.members() {
                coset_of[self.compose_idx(m, g) as usize] = id;
            }
        }

        // Image permutation of each element on the coset space.
        let mut image_elements: Vec<Perm> = Vec::new();
        let mut image_index: HashMap<Perm, u32> = HashMap::new();
        let mut projection = Vec::with_capacity(order);
        for g in 0..order as u32 {
            let images: Vec<u16> = reps
                .iter()
                .map(|&rep| coset_of[self.compose_idx(rep, g) as usize] as u16)
                .collect();
            let perm = Perm::from_images(images).expect("coset action is a permutation");
            let idx = match image_index.get(&perm) {
                Some(&i) => i,
                None => {
                    let i = image_elements.len() as u32;
                    image_index.insert(perm.clone(), i);
                    image_elements.push(perm);
                    i
                }
            };
            projection.push(idx);
        }

        let generators: Vec<u32> = {
            let mut seen = Vec::new();
            for &g in &self.generators {
                let img = projection[g as usize];
                if img != 0 && !seen.contains(&img) {
                    seen.push(img);
                }
            }
            seen
        };
        let image = GroupTable::finish(n_cosets.max(1), image_elements, image_index, generators);
        Ok((image, projection))
    }

    /// Quotient by a normal subgroup, acting on its cosets.
    ///
    /// Returns the quotient table and the projection homomorphism as an
    /// element-index map. Fails with [`Error::NotNormal`] otherwise.
    pub fn quotient(&self, n: &Subgroup) -> Result<(GroupTable, Vec<u32>)> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let (image, projection) = self.coset_action(n)?;
        debug_assert_eq!(image.order() * n.order(), self.order());
        Ok((image, projection))
    }

    /// True when every generator conjugate of `h` is `h` itself.
    pub fn is_normal(&self, h: &Subgroup) -> bool {
        if self.generators.is_empty() {
            return true;
        }
        self.generators.iter().all(|&g| {
            h.members()
                .iter()
                .all(|&m| h.contains(self.conjugate_idx(m, g)))
        })
    }
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GroupTable(degree {}, order {})",
            self.degree,
            self.order()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, degree: usize) -> Perm {
        Perm::parse_cycles(text, degree).unwrap()
    }

    #[test]
    fn symmetric_group_order() {
        let g = GroupTable::generate(5, &[p("(1 2 3 4 5)", 5), p("(1 2)", 5)], 10_000).unwrap();
        assert_eq!(g.order(), 120);
        assert!(g.element(0).is_identity());
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = GroupTable::generate(4, &[], 10).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn dihedral_of_order_14() {
        let g = GroupTable::generate(
            7,
            &[p("(1 2 3 4 5 6 7)", 7), p("(2 7)(3 6)(4 5)", 7)],
            10_000,
        )
        .unwrap();
        assert_eq!(g.order(), 14);
    }

    #[test]
    fn cap_exceeded() {
        let gens = [p("(1 2 3 4 5)", 5), p("(1 2)", 5)];
        assert_eq!(
            GroupTable::generate(5, &gens, 50).unwrap_err(),
            Error::OrderCapExceeded { cap: 50 }
        );
    }

    #[test]
    fn closure_and_inverse_invariants() {
        let g = GroupTable::generate(4, &[p("(1 2 3 4)", 4), p("(1 2)", 4)], 100).unwrap();
        assert_eq!(g.order(), 24);
        let n = g.order() as u32;
        for a in 0..n {
            assert!(g.compose_idx(a, g.inverse_idx(a)) == 0);
            for b in 0..n {
                assert!(g.compose_idx(a, b) < n);
            }
        }
        // sampled associativity
        for a in (0..n).step_by(5) {
            for b in (0..n).step_by(7) {
                for c in (0..n).step_by(3) {
                    let ab_c = g.compose_idx(g.compose_idx(a, b), c);
                    let a_bc = g.compose_idx(a, g.compose_idx(b, c));
                    assert_eq!(ab_c, a_bc);
                }
            }
        }
    }

    #[test]
    fn generator_order_does_not_change_element_set() {
        let a = p("(1 2 3 4 5)", 5);
        let b = p("(1 2)", 5);
        let g1 = GroupTable::generate(5, &[a.clone(), b.clone()], 1000).unwrap();
        let g2 = GroupTable::generate(5, &[b, a], 1000).unwrap();
        assert_eq!(g1.order(), g2.order());
        let mut e1: Vec<&Perm> = g1.elements().iter().collect();
        let mut e2: Vec<&Perm> = g2.elements().iter().collect();
        e1.sort();
        e2.sort();
        assert_eq!(e1, e2);
    }

    #[test]
    fn quotient_of_sym3_by_alt3() {
        let g = GroupTable::generate(3, &[p("(1 2 3)", 3), p("(1 2)", 3)], 100).unwrap();
        let a3 = crate::subgroup::subgroup_closure(&g, &[g.index_of(&p("(1 2 3)", 3)).unwrap()]);
        let (q, proj) = g.quotient(&a3).unwrap();
        assert_eq!(q.order(), 2);
        // projection is a homomorphism
        for a in 0..g.order() as u32 {
            for b in 0..g.order() as u32 {
                let lhs = proj[g.compose_idx(a, b) as usize];
                let rhs = q.compose_idx(proj[a as usize], proj[b as usize]);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn quotient_by_trivial_and_by_whole_group() {
        let g = GroupTable::generate(3, &[p("(1 2 3)", 3), p("(1 2)", 3)], 100).unwrap();
        let trivial = crate::subgroup::subgroup_closure(&g, &[]);
        let (q, _) = g.quotient(&trivial).unwrap();
        assert_eq!(q.order(), 6);
        let whole = g.full_subgroup();
        let (q, _) = g.quotient(&whole).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn quotient_requires_normality() {
        let g = GroupTable::generate(3, &[p("(1 2 3)", 3), p("(1 2)", 3)], 100).unwrap();
        let c2 = crate::subgroup::subgroup_closure(&g, &[g.index_of(&p("(1 2)", 3)).unwrap()]);
        assert_eq!(g.quotient(&c2).unwrap_err(), Error::NotNormal);
    }
}
