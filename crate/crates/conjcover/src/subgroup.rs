//! Subgroups of an enumerated group: closures, conjugates, normalizers,
//! point stabilizers and Sylow subgroups.

use crate::mask::SubsetMask;
use crate::table::GroupTable;

/// An element-index subset of a [`GroupTable`] closed under the operation.
///
/// Members are sorted ascending and mirrored in a bitmask; a small generating
/// set is kept for cheap joins.
#[derive(Clone, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<u32>,
    mask: SubsetMask,
    generator_indices: Vec<u32>,
}

impl Subgroup {
    pub(crate) fn from_members(
        table: &GroupTable,
        mut members: Vec<u32>,
        gens: Vec<u32>,
    ) -> Subgroup {
        members.sort_unstable();
        let mask = SubsetMask::from_indices(table.order(), members.iter().copied());
        debug_assert!(mask.contains(0), "subgroup must contain the identity");
        debug_assert_eq!(table.order() % members.len(), 0, "Lagrange violated");
        Subgroup {
            members,
            mask,
            generator_indices: gens,
        }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn mask(&self) -> &SubsetMask {
        &self.mask
    }

    pub fn generator_indices(&self) -> &[u32] {
        &self.generator_indices
    }

    #[inline]
    pub fn contains(&self, index: u32) -> bool {
        self.mask.contains(index)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole_group(&self, table: &GroupTable) -> bool {
        self.members.len() == table.order()
    }

    /// The conjugate subgroup `self^g = g⁻¹ · self · g`.
    pub fn conjugate(&self, table: &GroupTable, g: u32) -> Subgroup {
        let members: Vec<u32> = self
            .members
            .iter()
            .map(|&m| table.conjugate_idx(m, g))
            .collect();
        let gens = self
            .generator_indices
            .iter()
            .map(|&m| table.conjugate_idx(m, g))
            .collect();
        Subgroup::from_members(table, members, gens)
    }

    /// Cycle-notation strings for the stored generating set.
    pub fn generator_strings(&self, table: &GroupTable) -> Vec<String> {
        if self.generator_indices.is_empty() {
            return vec!["e".to_string()];
        }
        self.generator_indices
            .iter()
            .map(|&g| table.element(g).to_string())
            .collect()
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order {})", self.order())
    }
}

/// The smallest subgroup containing the given element indices.
pub fn subgroup_closure(table: &GroupTable, gens: &[u32]) -> Subgroup {
    let mut mask = SubsetMask::empty(table.order());
    mask.insert(0);
    let mut members = vec![0u32];
    let mut head = 0;
    while head < members.len() {
        let current = members[head];
        for &g in gens {
            let next = table.compose_idx(current, g);
            if mask.insert(next) {
                members.push(next);
            }
        }
        head += 1;
    }
    let gens = gens.iter().copied().filter(|&g| g != 0).collect();
    Subgroup::from_members(table, members, gens)
}

/// Extends a subgroup by one element, reusing its stored generators.
pub fn join_with_element(table: &GroupTable, h: &Subgroup, g: u32) -> Subgroup {
    let mut gens: Vec<u32> = h.generator_indices().to_vec();
    if g != 0 && !gens.contains(&g) {
        gens.push(g);
    }
    subgroup_closure(table, &gens)
}

/// Join of two subgroups.
pub fn join(table: &GroupTable, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let mut gens: Vec<u32> = a.generator_indices().to_vec();
    for &g in b.generator_indices() {
        if !gens.contains(&g) {
            gens.push(g);
        }
    }
    subgroup_closure(table, &gens)
}

/// Intersection of two subgroups (always a subgroup).
pub fn intersection(table: &GroupTable, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let members: Vec<u32> = a
        .members()
        .iter()
        .copied()
        .filter(|&m| b.contains(m))
        .collect();
    let gens = reduce_generators(table, &members);
    Subgroup::from_members(table, members, gens)
}

/// Greedy small generating set for a known member list.
pub fn reduce_generators(table: &GroupTable, members: &[u32]) -> Vec<u32> {
    let mut gens: Vec<u32> = Vec::new();
    let mut have = subgroup_closure(table, &gens);
    for &m in members {
        if !have.contains(m) {
            gens.push(m);
            have = subgroup_closure(table, &gens);
            if have.order() == members.len() {
                break;
            }
        }
    }
    gens
}

/// Builds a subgroup from an arbitrary closed member set.
pub fn from_closed_members(table: &GroupTable, members: Vec<u32>) -> Subgroup {
    let gens = reduce_generators(table, &members);
    Subgroup::from_members(table, members, gens)
}

/// The orbit of `h` under conjugation, as `(conjugator, conjugate)` pairs.
///
/// Deduplicated; the first entry is `(0, h)` itself and conjugators are the
/// lowest element indices realizing each conjugate, scanned in index order.
pub fn conjugates_of(table: &GroupTable, h: &Subgroup) -> Vec<(u32, Subgroup)> {
    let mut orbit: Vec<(u32, Subgroup)> = vec![(0, h.clone())];
    let mut seen: Vec<SubsetMask> = vec![h.mask().clone()];
    for g in 1..table.order() as u32 {
        let candidate = h.conjugate(table, g);
        if !seen.iter().any(|m| m == candidate.mask()) {
            seen.push(candidate.mask().clone());
            orbit.push((g, candidate));
        }
    }
    orbit
}

/// `{g ∈ G : h^g = h}`.
pub fn normalizer(table: &GroupTable, h: &Subgroup) -> Subgroup {
    let members: Vec<u32> = (0..table.order() as u32)
        .filter(|&g| {
            h.members()
                .iter()
                .all(|&m| h.contains(table.conjugate_idx(m, g)))
        })
        .collect();
    from_closed_members(table, members)
}

/// Elements fixing the given 0-based point.
pub fn point_stabilizer(table: &GroupTable, point: usize) -> crate::error::Result<Subgroup> {
    if point >= table.degree() {
        return Err(crate::error::Error::PointOutOfRange {
            point: point + 1,
            degree: table.degree(),
        });
    }
    let members: Vec<u32> = (0..table.order() as u32)
        .filter(|&g| table.element(g).image(point) == point)
        .collect();
    Ok(from_closed_members(table, members))
}

/// A Sylow `p`-subgroup, grown inside successive normalizers from the
/// lowest-index element of order `p`. Returns the trivial subgroup when `p`
/// does not divide the group order.
pub fn sylow_subgroup(table: &GroupTable, p: u64) -> Subgroup {
    let mut p_part = 1usize;
    {
        let mut n = table.order();
        while n.is_multiple_of(p as usize) {
            n /= p as usize;
            p_part *= p as usize;
        }
    }
    if p_part == 1 {
        return subgroup_closure(table, &[]);
    }

    let seed = (0..table.order() as u32)
        .find(|&g| table.element_order(g) == p)
        .expect("Cauchy: a prime dividing the order has an element of that order");
    let mut current = subgroup_closure(table, &[seed]);
    while current.order() < p_part {
        let norm = normalizer(table, &current);
        let mut grown = false;
        for &x in norm.members() {
            if current.contains(x) {
                continue;
            }
            // p-part of x: x^(m) where m is the p'-part of its order.
            let order = table.element_order(x);
            let mut m = order;
            while m.is_multiple_of(p) {
                m /= p;
            }
            let xp = power_idx(table, x, m);
            if xp != 0 && !current.contains(xp) {
                current = join_with_element(table, &current, xp);
                grown = true;
                break;
            }
        }
        assert!(
            grown,
            "p-subgroup below the Sylow order always grows in its normalizer"
        );
    }
    current
}

/// `a^exp` by repeated squaring on indices.
pub fn power_idx(table: &GroupTable, a: u32, mut exp: u64) -> u32 {
    let mut base = a;
    let mut acc = 0u32;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = table.compose_idx(acc, base);
        }
        base = table.compose_idx(base, base);
        exp >>= 1;
    }
    acc
}

/// Maximality test against the whole group: `⟨m, g⟩ = G` for every `g ∉ m`.
pub fn is_maximal(table: &GroupTable, m: &Subgroup) -> bool {
    if m.is_whole_group(table) {
        return false;
    }
    (0..table.order() as u32)
        .filter(|&g| !m.contains(g))
        .all(|g| join_with_element(table, m, g).order() == table.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;

    fn sym3() -> GroupTable {
        GroupTable::generate(
            3,
            &[
                Perm::parse_cycles("(1 2 3)", 3).unwrap(),
                Perm::parse_cycles("(1 2)", 3).unwrap(),
            ],
            100,
        )
        .unwrap()
    }

    fn alt4() -> GroupTable {
        GroupTable::generate(
            4,
            &[
                Perm::parse_cycles("(1 2 3)", 4).unwrap(),
                Perm::parse_cycles("(2 3 4)", 4).unwrap(),
            ],
            100,
        )
        .unwrap()
    }

    #[test]
    fn closure_examples() {
        let g = sym3();
        assert_eq!(subgroup_closure(&g, &[]).order(), 1);
        let rot = g
            .index_of(&Perm::parse_cycles("(1 2 3)", 3).unwrap())
            .unwrap();
        assert_eq!(subgroup_closure(&g, &[rot]).order(), 3);
        let flip = g
            .index_of(&Perm::parse_cycles("(1 2)", 3).unwrap())
            .unwrap();
        assert_eq!(subgroup_closure(&g, &[rot, flip]).order(), 6);
    }

    #[test]
    fn conjugates_counts() {
        let g = sym3();
        let rot = g
            .index_of(&Perm::parse_cycles("(1 2 3)", 3).unwrap())
            .unwrap();
        let a3 = subgroup_closure(&g, &[rot]);
        assert_eq!(conjugates_of(&g, &a3).len(), 1);
        let flip = g
            .index_of(&Perm::parse_cycles("(1 2)", 3).unwrap())
            .unwrap();
        let c2 = subgroup_closure(&g, &[flip]);
        assert_eq!(conjugates_of(&g, &c2).len(), 3);

        let a4 = alt4();
        let syl3 = sylow_subgroup(&a4, 3);
        assert_eq!(syl3.order(), 3);
        assert_eq!(conjugates_of(&a4, &syl3).len(), 4);
    }

    #[test]
    fn orbit_times_normalizer_is_group_order() {
        let a4 = alt4();
        let syl3 = sylow_subgroup(&a4, 3);
        let orbit = conjugates_of(&a4, &syl3);
        let norm = normalizer(&a4, &syl3);
        assert_eq!(orbit.len() * norm.order(), a4.order());
    }

    #[test]
    fn normalizer_examples() {
        let g = sym3();
        let rot = g
            .index_of(&Perm::parse_cycles("(1 2 3)", 3).unwrap())
            .unwrap();
        let a3 = subgroup_closure(&g, &[rot]);
        assert_eq!(normalizer(&g, &a3).order(), 6);
        let flip = g
            .index_of(&Perm::parse_cycles("(1 2)", 3).unwrap())
            .unwrap();
        let c2 = subgroup_closure(&g, &[flip]);
        assert_eq!(normalizer(&g, &c2), c2);
        // Sylow-3 of Sym(3) is normal, so its normalizer is the whole group.
        let syl = sylow_subgroup(&g, 3);
        assert_eq!(normalizer(&g, &syl).order(), 6);
    }

    #[test]
    fn point_stabilizers() {
        let g = sym3();
        assert_eq!(point_stabilizer(&g, 0).unwrap().order(), 2);

        let a5 = GroupTable::generate(
            5,
            &[
                Perm::parse_cycles("(1 2 3)", 5).unwrap(),
                Perm::parse_cycles("(1 2 3 4 5)", 5).unwrap(),
            ],
            100,
        )
        .unwrap();
        assert_eq!(a5.order(), 60);
        assert_eq!(point_stabilizer(&a5, 2).unwrap().order(), 12);

        // A fixed point of an intransitive action stabilizes to the whole group.
        let c2 = GroupTable::generate(3, &[Perm::parse_cycles("(1 2)", 3).unwrap()], 10).unwrap();
        assert_eq!(point_stabilizer(&c2, 2).unwrap().order(), 2);
        assert!(point_stabilizer(&g, 7).is_err());
    }

    #[test]
    fn sylow_examples() {
        let g = sym3();
        let syl3 = sylow_subgroup(&g, 3);
        assert_eq!(syl3.order(), 3);
        let syl5 = sylow_subgroup(&g, 5);
        assert!(syl5.is_trivial());

        let a6 = GroupTable::generate(
            6,
            &[
                Perm::parse_cycles("(1 2 3)", 6).unwrap(),
                Perm::parse_cycles("(2 3 4 5 6)", 6).unwrap(),
            ],
            1000,
        )
        .unwrap();
        assert_eq!(a6.order(), 360);
        assert_eq!(sylow_subgroup(&a6, 3).order(), 9);
        assert_eq!(sylow_subgroup(&a6, 2).order(), 8);
        assert_eq!(sylow_subgroup(&a6, 5).order(), 5);
    }

    #[test]
    fn maximality_check() {
        let g = sym3();
        let flip = g
            .index_of(&Perm::parse_cycles("(1 2)", 3).unwrap())
            .unwrap();
        let c2 = subgroup_closure(&g, &[flip]);
        assert!(is_maximal(&g, &c2));
        let trivial = subgroup_closure(&g, &[]);
        assert!(!is_maximal(&g, &trivial));
        assert!(!is_maximal(&g, &g.full_subgroup()));
    }

    #[test]
    fn intersection_and_join() {
        let g = sym3();
        let rot = g
            .index_of(&Perm::parse_cycles("(1 2 3)", 3).unwrap())
            .unwrap();
        let flip = g
            .index_of(&Perm::parse_cycles("(1 2)", 3).unwrap())
            .unwrap();
        let a3 = subgroup_closure(&g, &[rot]);
        let c2 = subgroup_closure(&g, &[flip]);
        assert_eq!(intersection(&g, &a3, &c2).order(), 1);
        assert_eq!(join(&g, &a3, &c2).order(), 6);
    }
}
