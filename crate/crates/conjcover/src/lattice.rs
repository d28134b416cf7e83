//! Exhaustive subgroup lattice enumeration at desk scale.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::subgroup::{join_with_element, subgroup_closure, Subgroup};
use crate::table::GroupTable;

/// Default cap on the group order for lattice enumeration.
pub const DEFAULT_LATTICE_ORDER_CAP: usize = 2_000;
/// Default cap on the number of subgroups.
pub const DEFAULT_SUBGROUP_CAP: usize = 20_000;

#[derive(Clone, Copy)]
pub struct LatticeCaps {
    pub max_order: usize,
    pub max_subgroups: usize,
}

impl Default for LatticeCaps {
    fn default() -> Self {
        LatticeCaps {
            max_order: DEFAULT_LATTICE_ORDER_CAP,
            max_subgroups: DEFAULT_SUBGROUP_CAP,
        }
    }
}

/// Every subgroup of the group, exactly once.
///
/// Seeds with all cyclic subgroups and closes under joins `⟨H, g⟩` until
/// stable, deduplicating by membership mask. Output is sorted by order and
/// then by member list, so it is deterministic.
pub fn all_subgroups(table: &GroupTable, caps: LatticeCaps) -> Result<Vec<Subgroup>> {
    if table.order() > caps.max_order {
        return Err(Error::LatticeCapExceeded {
            what: "group order",
            cap: caps.max_order,
        });
    }

    let mut by_mask: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut found: Vec<Subgroup> = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::new();

    let register = |sub: Subgroup,
                    found: &mut Vec<Subgroup>,
                    queue: &mut VecDeque<usize>,
                    by_mask: &mut HashMap<Vec<u64>, usize>|
     -> Result<()> {
        let key = sub.mask().words().to_vec();
        if let std::collections::hash_map::Entry::Vacant(e) = by_mask.entry(key) {
            if found.len() >= caps.max_subgroups {
                return Err(Error::LatticeCapExceeded {
                    what: "subgroup count",
                    cap: caps.max_subgroups,
                });
            }
            e.insert(found.len());
            queue.push_back(found.len());
            found.push(sub);
        }
        Ok(())
    };

    register(
        subgroup_closure(table, &[]),
        &mut found,
        &mut queue,
        &mut by_mask,
    )?;
    for g in 1..table.order() as u32 {
        register(
            subgroup_closure(table, &[g]),
            &mut found,
            &mut queue,
            &mut by_mask,
        )?;
    }

    while let Some(i) = queue.pop_front() {
        let current = found[i].clone();
        if current.is_whole_group(table) {
            continue;
        }
        for g in 1..table.order() as u32 {
            if current.contains(g) {
                continue;
            }
            let joined = join_with_element(table, &current, g);
            register(joined, &mut found, &mut queue, &mut by_mask)?;
        }
    }

    found.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.members().cmp(b.members()))
    });
    Ok(found)
}

/// Maximal elements of the proper-subgroup lattice, each flagged with
/// normality.
pub fn maximal_subgroups(table: &GroupTable, lattice: &[Subgroup]) -> Vec<(Subgroup, bool)> {
    let proper: Vec<&Subgroup> = lattice
        .iter()
        .filter(|s| !s.is_whole_group(table))
        .collect();
    proper
        .iter()
        .filter(|m| {
            !proper
                .iter()
                .any(|other| other.order() > m.order() && m.mask().is_subset_of(other.mask()))
        })
        .map(|m| ((*m).clone(), table.is_normal(m)))
        .collect()
}
