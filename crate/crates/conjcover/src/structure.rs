//! Structural predicates: lower central series, nilpotent residual, center,
//! Frattini subgroup, minimal normal subgroups, qmnn detection.

use std::collections::HashMap;

use crate::error::Result;
use crate::lattice::{all_subgroups, maximal_subgroups, LatticeCaps};
use crate::mask::SubsetMask;
use crate::subgroup::{from_closed_members, join, subgroup_closure, Subgroup};
use crate::table::GroupTable;

/// Structural summary of a group.
pub struct StructureReport {
    /// Strictly descending until it stabilizes; the last term is the residual.
    pub lower_central_series: Vec<Subgroup>,
    /// Smallest normal subgroup with nilpotent quotient.
    pub nilpotent_residual: Subgroup,
    pub is_nilpotent: bool,
    pub center: Subgroup,
    /// Intersection of all maximal subgroups.
    pub frattini: Subgroup,
    pub minimal_normals: Vec<Subgroup>,
    /// Non-nilpotent with every proper quotient nilpotent.
    pub is_qmnn: bool,
}

/// Commutator `[a, b] = a⁻¹ b⁻¹ a b` by index.
#[inline]
pub fn commutator_idx(table: &GroupTable, a: u32, b: u32) -> u32 {
    let ia = table.inverse_idx(a);
    let ib = table.inverse_idx(b);
    table.compose_idx(table.compose_idx(table.compose_idx(ia, ib), a), b)
}

/// `[G, H]`: the subgroup generated by all commutators with one side in `h`.
pub fn commutator_subgroup(table: &GroupTable, h: &Subgroup) -> Subgroup {
    let mut mask = SubsetMask::empty(table.order());
    let mut gens: Vec<u32> = Vec::new();
    for g in 0..table.order() as u32 {
        for &m in h.members() {
            let c = commutator_idx(table, g, m);
            if c != 0 && mask.insert(c) {
                gens.push(c);
            }
        }
    }
    subgroup_closure(table, &crate::subgroup::reduce_generators(table, &gens))
}

/// Lower central series `γ₁ = G, γ_{i+1} = [G, γ_i]` up to stabilization.
pub fn lower_central_series(table: &GroupTable) -> Vec<Subgroup> {
    let mut series = vec![table.full_subgroup()];
    loop {
        let next = commutator_subgroup(table, series.last().unwrap());
        if next.mask() == series.last().unwrap().mask() {
            break;
        }
        series.push(next);
    }
    series
}

/// The stable term of the lower central series.
pub fn nilpotent_residual(table: &GroupTable) -> Subgroup {
    lower_central_series(table).pop().unwrap()
}

pub fn is_nilpotent(table: &GroupTable) -> bool {
    nilpotent_residual(table).is_trivial()
}

/// Elements commuting with the generators (hence with everything).
pub fn center(table: &GroupTable) -> Subgroup {
    let members: Vec<u32> = (0..table.order() as u32)
        .filter(|&z| {
            table
                .generators()
                .iter()
                .all(|&s| table.compose_idx(z, s) == table.compose_idx(s, z))
        })
        .collect();
    from_closed_members(table, members)
}

/// All normal subgroups, including the trivial one and the whole group.
///
/// Computed as the join closure of the normal closures of single conjugacy
/// classes; every normal subgroup is a join of closures of the classes of
/// its elements.
pub fn normal_subgroups(table: &GroupTable) -> Vec<Subgroup> {
    let order = table.order();
    let mut found: Vec<Subgroup> = Vec::new();
    let mut by_mask: HashMap<Vec<u64>, ()> = HashMap::new();
    let register =
        |sub: Subgroup, found: &mut Vec<Subgroup>, by_mask: &mut HashMap<Vec<u64>, ()>| -> bool {
            let key = sub.mask().words().to_vec();
            if let std::collections::hash_map::Entry::Vacant(e) = by_mask.entry(key) {
                e.insert(());
                found.push(sub);
                true
            } else {
                false
            }
        };

    register(subgroup_closure(table, &[]), &mut found, &mut by_mask);

    // Normal closure of each conjugacy class.
    let mut class_seen = SubsetMask::empty(order);
    class_seen.insert(0);
    for g in 1..order as u32 {
        if class_seen.contains(g) {
            continue;
        }
        let class = conjugacy_class(table, g);
        for &c in &class {
            class_seen.insert(c);
        }
        let closure = normal_closure(table, &class);
        register(closure, &mut found, &mut by_mask);
    }

    // Join closure.
    let mut head = 0;
    while head < found.len() {
        let current = found[head].clone();
        let snapshot = found.len();
        for i in 0..snapshot {
            if i == head {
                continue;
            }
            let j = join(table, &current, &found[i]);
            register(j, &mut found, &mut by_mask);
        }
        head += 1;
    }

    found.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.members().cmp(b.members()))
    });
    found
}

/// Orbit of an element under conjugation by the generators.
pub fn conjugacy_class(table: &GroupTable, g: u32) -> Vec<u32> {
    let mut mask = SubsetMask::empty(table.order());
    mask.insert(g);
    let mut class = vec![g];
    let mut head = 0;
    while head < class.len() {
        let current = class[head];
        for &s in table.generators() {
            let next = table.conjugate_idx(current, s);
            if mask.insert(next) {
                class.push(next);
            }
        }
        head += 1;
    }
    class
}

/// Smallest normal subgroup containing the given elements.
pub fn normal_closure(table: &GroupTable, seed: &[u32]) -> Subgroup {
    let mut current = subgroup_closure(table, &crate::subgroup::reduce_generators(table, seed));
    loop {
        let mut gens: Vec<u32> = current.generator_indices().to_vec();
        let mut grew = false;
        for &s in table.generators() {
            for &g in current.generator_indices() {
                let c = table.conjugate_idx(g, s);
                if !current.contains(c) {
                    gens.push(c);
                    grew = true;
                }
            }
        }
        if !grew {
            return current;
        }
        current = subgroup_closure(table, &gens);
    }
}

/// Minimal elements among the nontrivial normal subgroups.
pub fn minimal_normal_subgroups(table: &GroupTable) -> Vec<Subgroup> {
    let normals = normal_subgroups(table);
    let nontrivial: Vec<&Subgroup> = normals.iter().filter(|n| !n.is_trivial()).collect();
    nontrivial
        .iter()
        .filter(|n| {
            !nontrivial
                .iter()
                .any(|m| m.order() < n.order() && m.mask().is_subset_of(n.mask()))
        })
        .map(|n| (*n).clone())
        .collect()
}

/// Non-nilpotent with all proper quotients nilpotent. Only quotients by
/// minimal normal subgroups are tested; nilpotency is quotient-closed, so a
/// quotient by any larger normal subgroup factors through one of these.
pub fn is_qmnn(table: &GroupTable) -> bool {
    if is_nilpotent(table) {
        return false;
    }
    minimal_normal_subgroups(table).iter().all(|n| {
        if n.is_whole_group(table) {
            return true;
        }
        let (q, _) = table
            .quotient(n)
            .expect("minimal normal subgroups are normal");
        is_nilpotent(&q)
    })
}

/// Full structural report. The Frattini subgroup needs the subgroup lattice,
/// so this propagates lattice-cap errors; everything else is direct.
pub fn structure_report(table: &GroupTable, caps: LatticeCaps) -> Result<StructureReport> {
    let series = lower_central_series(table);
    let residual = series.last().unwrap().clone();
    let nilpotent = residual.is_trivial();

    let lattice = all_subgroups(table, caps)?;
    let maximals = maximal_subgroups(table, &lattice);
    let mut frattini_mask = table.full_mask();
    for (m, _) in &maximals {
        frattini_mask = frattini_mask.intersection(m.mask());
    }
    let frattini = from_closed_members(table, frattini_mask.to_indices());

    let minimal_normals = minimal_normal_subgroups(table);
    let qmnn = is_qmnn(table);

    Ok(StructureReport {
        lower_central_series: series,
        nilpotent_residual: residual,
        is_nilpotent: nilpotent,
        center: center(table),
        frattini,
        minimal_normals,
        is_qmnn: qmnn,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;

    fn table(gens: &[&str], degree: usize) -> GroupTable {
        let gens: Vec<Perm> = gens
            .iter()
            .map(|s| Perm::parse_cycles(s, degree).unwrap())
            .collect();
        GroupTable::generate(degree, &gens, 10_000).unwrap()
    }

    #[test]
    fn sym3_structure() {
        let g = table(&["(1 2 3)", "(1 2)"], 3);
        let report = structure_report(&g, LatticeCaps::default()).unwrap();
        assert_eq!(report.nilpotent_residual.order(), 3);
        assert!(!report.is_nilpotent);
        assert!(report.center.is_trivial());
        assert!(report.frattini.is_trivial());
        assert_eq!(report.minimal_normals.len(), 1);
        assert_eq!(report.minimal_normals[0].order(), 3);
        assert!(report.is_qmnn);
    }

    #[test]
    fn cyclic6_structure() {
        let g = table(&["(1 2 3 4 5 6)"], 6);
        let report = structure_report(&g, LatticeCaps::default()).unwrap();
        assert!(report.is_nilpotent);
        assert!(report.nilpotent_residual.is_trivial());
        assert!(!report.is_qmnn);
        assert_eq!(report.center.order(), 6);
    }

    #[test]
    fn alt4_structure() {
        let g = table(&["(1 2 3)", "(2 3 4)"], 4);
        let report = structure_report(&g, LatticeCaps::default()).unwrap();
        assert_eq!(report.nilpotent_residual.order(), 4);
        assert_eq!(report.minimal_normals.len(), 1);
        assert_eq!(report.minimal_normals[0].order(), 4);
        assert!(report.is_qmnn);
    }

    #[test]
    fn dihedral12_is_not_qmnn() {
        // D_12 ≅ C_2 × Sym(3) has two minimal normal subgroups and a
        // non-nilpotent proper quotient.
        let g = table(&["(1 2 3 4 5 6)", "(2 6)(3 5)"], 6);
        assert_eq!(g.order(), 12);
        let report = structure_report(&g, LatticeCaps::default()).unwrap();
        assert!(!report.is_qmnn);
        assert!(report.minimal_normals.len() > 1);
    }

    #[test]
    fn simple_group_is_qmnn_with_itself_as_minimal_normal() {
        let g = table(&["(1 2 3)", "(1 2 3 4 5)"], 5);
        assert_eq!(g.order(), 60);
        let minimals = minimal_normal_subgroups(&g);
        assert_eq!(minimals.len(), 1);
        assert_eq!(minimals[0].order(), 60);
        assert!(is_qmnn(&g));
    }

    #[test]
    fn lower_central_series_strictly_decreases() {
        let g = table(&["(1 2 3 4)", "(1 2)"], 4); // Sym(4)
        let series = lower_central_series(&g);
        assert_eq!(series[0].order(), 24);
        for w in series.windows(2) {
            assert!(w[1].order() < w[0].order());
            assert!(w[1].mask().is_subset_of(w[0].mask()));
        }
        assert_eq!(series.last().unwrap().order(), 12); // residual = Alt(4)
        assert!(!is_nilpotent(&g));
    }

    #[test]
    fn quaternion_group_is_nilpotent() {
        let g = table(&["(1 3 2 4)(5 8 6 7)", "(1 5 2 6)(3 7 4 8)"], 8);
        assert_eq!(g.order(), 8);
        assert!(is_nilpotent(&g));
        assert_eq!(center(&g).order(), 2);
    }

    #[test]
    fn normal_subgroups_of_sym4() {
        let g = table(&["(1 2 3 4)", "(1 2)"], 4);
        let normals = normal_subgroups(&g);
        let orders: Vec<usize> = normals.iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
    }
}
