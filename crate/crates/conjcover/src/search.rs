//! Exact minimal coverings by products of conjugate subgroups.
//!
//! The per-class engine searches products `M · M^{g₂} ⋯ M^{g_k}` whose first
//! factor is the class representative itself; conjugating any covering by the
//! inverse of its first conjugator shows this loses no solutions. Search
//! states are product bitmasks. Minimality is established by iterative
//! deepening: the order bound `|G| ≤ |M|^k` rules out every length below a
//! starting target, and for each target a complete depth-first search with
//! exact state memoization and size pruning either finds a covering of at
//! most that length or proves none exists.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::lattice::{all_subgroups, maximal_subgroups, LatticeCaps};
use crate::mask::SubsetMask;
use crate::product::{rank, CosetTable};
use crate::structure::is_nilpotent;
use crate::subgroup::{conjugates_of, subgroup_closure, Subgroup};
use crate::table::GroupTable;
use crate::witness::{verify_witness, CoveringWitness};

/// A covering length, with `Infinite` ordered above every integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Gamma {
    Finite(u32),
    Infinite,
}

impl Gamma {
    pub fn is_finite(&self) -> bool {
        matches!(self, Gamma::Finite(_))
    }
}

impl std::fmt::Display for Gamma {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Gamma::Finite(k) => write!(f, "{k}"),
            Gamma::Infinite => write!(f, "infinity"),
        }
    }
}

/// Search knobs. `limit` bounds the admissible covering length; the state cap
/// aborts searches whose memo table outgrows desk scale instead of thrashing.
#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    pub limit: Option<u32>,
    /// Drop a freshly generated state when a sibling at the same depth
    /// already dominates it. Sound for minimal length, but changes which
    /// witness is reported; off by default.
    pub domination_pruning: bool,
    pub state_cap: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            limit: None,
            domination_pruning: false,
            state_cap: 4_000_000,
        }
    }
}

/// Outcome of the minimal-covering search for one conjugacy class.
#[derive(Debug, Clone)]
pub enum ClassOutcome {
    /// Exact minimum over products of conjugates of this class.
    Covered { k: u32, witness: CoveringWitness },
    /// No covering within the length limit.
    Exceeded { limit: u32 },
    /// The conjugates generate a proper subgroup, so no product of them ever
    /// covers the group.
    NoCover,
}

/// Per-class record inside a [`GammaResult`].
#[derive(Debug, Clone)]
pub struct ClassReport {
    pub representative: Subgroup,
    pub rank: usize,
    /// Order-bound lower bound `max(3, ⌈log |G| / log |M|⌉)`.
    pub lower_bound: u32,
    pub outcome: ClassOutcome,
}

/// Result of a covering-number computation.
#[derive(Debug)]
pub struct GammaResult {
    pub value: Gamma,
    pub witness: Option<CoveringWitness>,
    pub per_class: Vec<ClassReport>,
}

/// Smallest `k ≥ 1` with `base^k ≥ n`.
fn ceil_log(n: usize, base: usize) -> u32 {
    debug_assert!(base >= 2);
    let mut k = 1u32;
    let mut acc = base as u128;
    while acc < n as u128 {
        acc = acc.saturating_mul(base as u128);
        k += 1;
    }
    k
}

struct ClassSearcher<'a> {
    table: &'a GroupTable,
    conjugates: Vec<(u32, Subgroup)>,
    coset_tables: Vec<CosetTable>,
    m_order: usize,
    /// memo[mask] = shallowest depth at which the state was fully explored.
    memo: HashMap<Box<[u64]>, u32>,
    state_cap: usize,
    domination: bool,
    /// pows[e] = min(|M|^e, huge), for the size prune.
    pows: Vec<u128>,
}

enum DfsResult {
    Found(Vec<usize>),
    Exhausted,
}

impl<'a> ClassSearcher<'a> {
    fn new(table: &'a GroupTable, m: &Subgroup, cfg: &SearchConfig) -> ClassSearcher<'a> {
        let conjugates = conjugates_of(table, m);
        let coset_tables = conjugates
            .iter()
            .map(|(_, c)| CosetTable::new(table, c))
            .collect();
        ClassSearcher {
            table,
            conjugates,
            coset_tables,
            m_order: m.order(),
            memo: HashMap::new(),
            state_cap: cfg.state_cap,
            domination: cfg.domination_pruning,
            pows: Vec::new(),
        }
    }

    /// Union of all conjugates generates a proper subgroup iff no product of
    /// conjugates ever covers the group.
    fn covers_eventually(&self) -> bool {
        let mut union = SubsetMask::empty(self.table.order());
        for (_, c) in &self.conjugates {
            union.union_with(c.mask());
        }
        let gens = crate::subgroup::reduce_generators(self.table, &union.to_indices());
        subgroup_closure(self.table, &gens).order() == self.table.order()
    }

    /// Complete search for a covering with at most `target` factors rooted at
    /// the class representative. `Found` carries conjugate-orbit indices for
    /// factors 2..=k.
    fn dfs_target(&mut self, target: u32) -> Result<DfsResult> {
        self.memo.clear();
        self.pows = {
            let mut pows = vec![1u128; target as usize + 1];
            for e in 1..=target as usize {
                pows[e] = pows[e - 1].saturating_mul(self.m_order as u128);
            }
            pows
        };
        let root = self.conjugates[0].1.mask().clone();
        let mut path = Vec::new();
        match self.dfs(&root, 1, target, &mut path)? {
            true => Ok(DfsResult::Found(path)),
            false => Ok(DfsResult::Exhausted),
        }
    }

    fn dfs(
        &mut self,
        state: &SubsetMask,
        depth: u32,
        target: u32,
        path: &mut Vec<usize>,
    ) -> Result<bool> {
        if depth >= target {
            return Ok(false);
        }
        // Children, deduplicated, largest first; conjugate index breaks ties.
        let mut children: Vec<(usize, SubsetMask)> = Vec::with_capacity(self.conjugates.len());
        for (i, cosets) in self.coset_tables.iter().enumerate() {
            let child = cosets.product(state);
            if child.is_full() {
                path.push(i);
                return Ok(true);
            }
            // Size prune: the remaining factors each multiply the size by at
            // most |M|.
            let remaining = (target - depth - 1) as usize;
            if (child.cardinality() as u128).saturating_mul(self.pows[remaining])
                < self.table.order() as u128
            {
                continue;
            }
            if !children.iter().any(|(_, c)| c == &child) {
                children.push((i, child));
            }
        }
        children.sort_by(|a, b| {
            b.1.cardinality()
                .cmp(&a.1.cardinality())
                .then_with(|| a.0.cmp(&b.0))
        });
        if self.domination {
            let mut kept: Vec<(usize, SubsetMask)> = Vec::with_capacity(children.len());
            for (i, child) in children {
                if !kept.iter().any(|(_, k)| child.is_subset_of(k)) {
                    kept.push((i, child));
                }
            }
            children = kept;
        }

        for (i, child) in children {
            let key: Box<[u64]> = child.words().into();
            match self.memo.get(&key) {
                Some(&level) if level <= depth + 1 => continue,
                _ => {}
            }
            if self.memo.len() >= self.state_cap {
                return Err(Error::SearchAborted {
                    cap: self.state_cap,
                    explored: self.memo.len(),
                });
            }
            self.memo.insert(key, depth + 1);
            path.push(i);
            if self.dfs(&child, depth + 1, target, path)? {
                return Ok(true);
            }
            path.pop();
        }
        Ok(false)
    }

    fn witness_from_path(&self, m: &Subgroup, path: &[usize]) -> Result<CoveringWitness> {
        let mut conjugators = vec![0u32];
        conjugators.extend(path.iter().map(|&i| self.conjugates[i].0));
        CoveringWitness::new(m.clone(), conjugators)
    }
}

/// Minimal `k` such that the group is a product of `k` conjugates of `m`,
/// searched up to `hard_limit`.
fn class_search(
    table: &GroupTable,
    m: &Subgroup,
    hard_limit: u32,
    lower_bound: u32,
    cfg: &SearchConfig,
) -> Result<ClassOutcome> {
    let mut searcher = ClassSearcher::new(table, m, cfg);
    if !searcher.covers_eventually() {
        return Ok(ClassOutcome::NoCover);
    }
    for target in lower_bound..=hard_limit {
        match searcher.dfs_target(target)? {
            DfsResult::Found(path) => {
                let witness = searcher.witness_from_path(m, &path)?;
                let k = witness.len() as u32;
                debug_assert!(verify_witness(table, &witness)?.valid);
                return Ok(ClassOutcome::Covered { k, witness });
            }
            DfsResult::Exhausted => {}
        }
    }
    Ok(ClassOutcome::Exceeded { limit: hard_limit })
}

/// Order-bound lower bound for coverings by conjugates of `m`.
pub fn class_lower_bound(table: &GroupTable, m: &Subgroup) -> u32 {
    if m.order() < 2 {
        return 3;
    }
    ceil_log(table.order(), m.order()).max(3)
}

/// Minimal covering length over conjugates of one proper non-normal subgroup.
///
/// Returns [`ClassOutcome::Exceeded`] when nothing is found within `limit`,
/// and [`ClassOutcome::NoCover`] when the conjugates generate a proper
/// subgroup (so no length ever works).
pub fn gamma_for_subgroup(table: &GroupTable, m: &Subgroup, limit: u32) -> Result<ClassOutcome> {
    gamma_for_subgroup_with(table, m, limit, &SearchConfig::default())
}

pub fn gamma_for_subgroup_with(
    table: &GroupTable,
    m: &Subgroup,
    limit: u32,
    cfg: &SearchConfig,
) -> Result<ClassOutcome> {
    if m.is_whole_group(table) {
        return Err(Error::NotProper);
    }
    if table.is_normal(m) {
        return Err(Error::NormalSubgroup);
    }
    let lower = class_lower_bound(table, m);
    if limit < lower {
        return Ok(ClassOutcome::Exceeded { limit });
    }
    class_search(table, m, limit, lower, cfg)
}

/// Exact covering number minimized over one representative per conjugacy
/// class of non-normal maximal subgroups. Infinite exactly when the group is
/// nilpotent.
pub fn gamma_cp_exact(table: &GroupTable, cfg: &SearchConfig) -> Result<GammaResult> {
    gamma_cp_exact_impl(table, None, cfg)
}

/// Like [`gamma_cp_exact`] but with caller-supplied lattice caps.
pub fn gamma_cp_exact_with_caps(
    table: &GroupTable,
    caps: LatticeCaps,
    cfg: &SearchConfig,
) -> Result<GammaResult> {
    gamma_cp_exact_impl(table, Some(caps), cfg)
}

fn gamma_cp_exact_impl(
    table: &GroupTable,
    caps: Option<LatticeCaps>,
    cfg: &SearchConfig,
) -> Result<GammaResult> {
    if is_nilpotent(table) {
        return Ok(GammaResult {
            value: Gamma::Infinite,
            witness: None,
            per_class: Vec::new(),
        });
    }

    let lattice = all_subgroups(table, caps.unwrap_or_default())?;
    let maximals = maximal_subgroups(table, &lattice);
    let candidates: Vec<Subgroup> = maximals
        .into_iter()
        .filter(|(_, normal)| !normal)
        .map(|(m, _)| m)
        .collect();
    gamma_over_candidate_classes(table, &candidates, cfg, true)
}

/// Exact covering number over explicitly supplied candidate subgroups, for
/// groups whose lattice is out of reach. Normal candidates are rejected.
pub fn gamma_cp_with_candidates(
    table: &GroupTable,
    candidates: &[Subgroup],
    cfg: &SearchConfig,
) -> Result<GammaResult> {
    if is_nilpotent(table) {
        return Ok(GammaResult {
            value: Gamma::Infinite,
            witness: None,
            per_class: Vec::new(),
        });
    }
    for c in candidates {
        if c.is_whole_group(table) {
            return Err(Error::NotProper);
        }
        if table.is_normal(c) {
            return Err(Error::NormalSubgroup);
        }
    }
    gamma_over_candidate_classes(table, candidates, cfg, false)
}

fn gamma_over_candidate_classes(
    table: &GroupTable,
    candidates: &[Subgroup],
    cfg: &SearchConfig,
    candidates_are_maximal: bool,
) -> Result<GammaResult> {
    // One representative per conjugacy class, keeping candidate order.
    let mut class_reps: Vec<&Subgroup> = Vec::new();
    let mut seen_masks: Vec<SubsetMask> = Vec::new();
    for c in candidates {
        if seen_masks.iter().any(|m| m == c.mask()) {
            continue;
        }
        for (_, conj) in conjugates_of(table, c) {
            seen_masks.push(conj.mask().clone());
        }
        class_reps.push(c);
    }

    let mut per_class = Vec::with_capacity(class_reps.len());
    let mut best: Option<(u32, CoveringWitness)> = None;
    for rep in class_reps {
        let rank_info = rank(table, rep)?;
        let lower = class_lower_bound(table, rep);
        // A non-normal maximal subgroup admits a covering of length at most
        // rank + 1, which caps the per-class deepening. Without maximality
        // only the trivial |G| cap is sound: whenever the conjugates generate
        // the whole group, some product of at most |G| of them covers it.
        let class_cap = if candidates_are_maximal {
            rank_info.rank as u32 + 1
        } else {
            table.order() as u32
        };
        let hard_limit = cfg.limit.unwrap_or(u32::MAX).min(class_cap);
        let outcome = if lower > hard_limit {
            ClassOutcome::Exceeded { limit: hard_limit }
        } else {
            class_search(table, rep, hard_limit, lower, cfg)?
        };
        if let ClassOutcome::Covered { k, witness } = &outcome {
            if best.as_ref().is_none_or(|(bk, _)| k < bk) {
                best = Some((*k, witness.clone()));
            }
        }
        per_class.push(ClassReport {
            representative: rep.clone(),
            rank: rank_info.rank,
            lower_bound: lower,
            outcome,
        });
    }

    match best {
        Some((k, witness)) => {
            // The minimum is always certified by expanding its product.
            if k <= 2 || !verify_witness(table, &witness)?.valid {
                return Err(Error::InvalidParameter(
                    "search returned an unverifiable covering; composition tables are inconsistent"
                        .into(),
                ));
            }
            Ok(GammaResult {
                value: Gamma::Finite(k),
                witness: Some(witness),
                per_class,
            })
        }
        None => Err(Error::SearchExhausted {
            limit: cfg.limit.unwrap_or(u32::MAX),
        }),
    }
}

/// Exhaustive oracle: minimum over every conjugacy class of proper subgroups
/// and all conjugate sequences up to `maxlen`, via plain breadth-first search
/// with exact-state deduplication and no other reductions. Intended for tiny
/// groups.
pub fn gamma_bruteforce_oracle(table: &GroupTable, maxlen: u32) -> Result<GammaResult> {
    let lattice = all_subgroups(table, LatticeCaps::default())?;

    let mut covered_masks: Vec<SubsetMask> = Vec::new();
    let mut per_class = Vec::new();
    let mut best: Option<(u32, CoveringWitness)> = None;
    let mut any_could_cover = false;

    for h in lattice.iter().filter(|h| !h.is_whole_group(table)) {
        if covered_masks.iter().any(|m| m == h.mask()) {
            continue;
        }
        let orbit = conjugates_of(table, h);
        for (_, conj) in &orbit {
            covered_masks.push(conj.mask().clone());
        }

        // Products of conjugates stay inside the subgroup they generate.
        let mut union = SubsetMask::empty(table.order());
        for (_, c) in &orbit {
            union.union_with(c.mask());
        }
        let gens = crate::subgroup::reduce_generators(table, &union.to_indices());
        if subgroup_closure(table, &gens).order() < table.order() {
            per_class.push(ClassReport {
                representative: h.clone(),
                rank: 0,
                lower_bound: 3,
                outcome: ClassOutcome::NoCover,
            });
            continue;
        }
        any_could_cover = true;

        let outcome = oracle_bfs(table, h, &orbit, maxlen)?;
        if let ClassOutcome::Covered { k, witness } = &outcome {
            if best.as_ref().is_none_or(|(bk, _)| k < bk) {
                best = Some((*k, witness.clone()));
            }
        }
        per_class.push(ClassReport {
            representative: h.clone(),
            rank: 0,
            lower_bound: 3,
            outcome,
        });
    }

    match best {
        Some((k, witness)) => Ok(GammaResult {
            value: Gamma::Finite(k),
            witness: Some(witness),
            per_class,
        }),
        None if !any_could_cover => Ok(GammaResult {
            value: Gamma::Infinite,
            witness: None,
            per_class,
        }),
        None => Err(Error::SearchExhausted { limit: maxlen }),
    }
}

type ParentMap = HashMap<Box<[u64]>, Option<(Box<[u64]>, usize)>>;

/// Level-synchronous search over products of conjugates, rooted at every
/// conjugate, reporting the first full-group level.
fn oracle_bfs(
    table: &GroupTable,
    h: &Subgroup,
    orbit: &[(u32, Subgroup)],
    maxlen: u32,
) -> Result<ClassOutcome> {
    let coset_tables: Vec<CosetTable> = orbit
        .iter()
        .map(|(_, c)| CosetTable::new(table, c))
        .collect();

    // parent[state] = (parent state, orbit index); roots have no parent.
    let mut parents: ParentMap = HashMap::new();
    let mut frontier: Vec<SubsetMask> = Vec::new();
    for (_, c) in orbit {
        let key: Box<[u64]> = c.mask().words().into();
        if let std::collections::hash_map::Entry::Vacant(e) = parents.entry(key) {
            e.insert(None);
            frontier.push(c.mask().clone());
        }
    }

    // Walks parent links from the state *before* the covering step, then
    // prepends the root conjugate and appends the final step.
    let reconstruct =
        |parents: &ParentMap, state: &SubsetMask, final_step: usize| -> Result<CoveringWitness> {
            let mut steps = vec![final_step];
            let mut key: Box<[u64]> = state.words().into();
            while let Some((parent, step)) = parents.get(&key).expect("state recorded") {
                steps.push(*step);
                key = parent.clone();
            }
            let root_index = orbit
                .iter()
                .position(|(_, c)| c.mask().words() == &key[..])
                .expect("root is one of the conjugates");
            steps.push(root_index);
            steps.reverse();
            let conjugators = steps.iter().map(|&i| orbit[i].0).collect();
            CoveringWitness::new(h.clone(), conjugators)
        };

    let mut level = 1u32;
    while level < maxlen && !frontier.is_empty() {
        let mut next_frontier = Vec::new();
        for state in &frontier {
            for (i, cosets) in coset_tables.iter().enumerate() {
                let child = cosets.product(state);
                if child.is_full() {
                    let witness = reconstruct(&parents, state, i)?;
                    return Ok(ClassOutcome::Covered {
                        k: level + 1,
                        witness,
                    });
                }
                let key: Box<[u64]> = child.words().into();
                if let std::collections::hash_map::Entry::Vacant(e) = parents.entry(key) {
                    e.insert(Some((state.words().into(), i)));
                    next_frontier.push(child);
                }
            }
        }
        frontier = next_frontier;
        level += 1;
    }
    Ok(ClassOutcome::Exceeded { limit: maxlen })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;
    use crate::subgroup::{point_stabilizer, subgroup_closure, sylow_subgroup};

    fn table(gens: &[&str], degree: usize) -> GroupTable {
        let gens: Vec<Perm> = gens
            .iter()
            .map(|s| Perm::parse_cycles(s, degree).unwrap())
            .collect();
        GroupTable::generate(degree, &gens, 10_000).unwrap()
    }

    fn dihedral(n: usize) -> GroupTable {
        let rot: Vec<String> = vec![(1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(" ")];
        let rot = format!("({})", rot[0]);
        let refl: String = (2..=n / 2 + 1)
            .filter(|&i| i != n + 2 - i)
            .map(|i| format!("({} {})", i, n + 2 - i))
            .collect();
        let refl = if refl.is_empty() {
            "e".to_string()
        } else {
            refl
        };
        table(&[rot.as_str(), refl.as_str()], n)
    }

    #[test]
    fn gamma_for_transposition_subgroup_of_sym3() {
        let g = table(&["(1 2 3)", "(1 2)"], 3);
        let t12 = g
            .index_of(&Perm::parse_cycles("(1 2)", 3).unwrap())
            .unwrap();
        let m = subgroup_closure(&g, &[t12]);
        match gamma_for_subgroup(&g, &m, 5).unwrap() {
            ClassOutcome::Covered { k, witness } => {
                assert_eq!(k, 3);
                assert!(verify_witness(&g, &witness).unwrap().valid);
            }
            other => panic!("expected covering, got {other:?}"),
        }
    }

    #[test]
    fn gamma_for_reflection_subgroup_of_d14() {
        let g = dihedral(7);
        assert_eq!(g.order(), 14);
        let refl = (1..g.order() as u32)
            .find(|&i| g.element_order(i) == 2)
            .unwrap();
        let m = subgroup_closure(&g, &[refl]);
        match gamma_for_subgroup(&g, &m, 6).unwrap() {
            ClassOutcome::Covered { k, witness } => {
                assert_eq!(k, 4);
                assert!(verify_witness(&g, &witness).unwrap().valid);
            }
            other => panic!("expected covering, got {other:?}"),
        }
    }

    #[test]
    fn gamma_rejects_normal_subgroup() {
        let g = table(&["(1 2 3)", "(2 3 4)"], 4);
        let v4 = sylow_subgroup(&g, 2);
        assert_eq!(
            gamma_for_subgroup(&g, &v4, 10).unwrap_err(),
            Error::NormalSubgroup
        );
    }

    #[test]
    fn gamma_reports_exceeded_below_the_minimum() {
        let g = table(&["(1 2 3)", "(1 2)"], 3);
        let t12 = g
            .index_of(&Perm::parse_cycles("(1 2)", 3).unwrap())
            .unwrap();
        let m = subgroup_closure(&g, &[t12]);
        assert!(matches!(
            gamma_for_subgroup(&g, &m, 2).unwrap(),
            ClassOutcome::Exceeded { limit: 2 }
        ));
    }

    #[test]
    fn reflections_in_d24_never_cover() {
        // Reflections of D_24 generate a proper index-2 dihedral subgroup.
        let g = dihedral(12);
        let refl = (1..g.order() as u32)
            .find(|&i| g.element_order(i) == 2 && g.element(i).image(0) == 0)
            .unwrap();
        let m = subgroup_closure(&g, &[refl]);
        assert!(!g.is_normal(&m));
        assert!(matches!(
            gamma_for_subgroup(&g, &m, 10).unwrap(),
            ClassOutcome::NoCover
        ));
    }

    #[test]
    fn gamma_cp_exact_on_small_groups() {
        let c12 = table(&["(1 2 3 4 5 6 7 8 9 10 11 12)"], 12);
        assert_eq!(
            gamma_cp_exact(&c12, &SearchConfig::default())
                .unwrap()
                .value,
            Gamma::Infinite
        );

        let s3 = table(&["(1 2 3)", "(1 2)"], 3);
        let r = gamma_cp_exact(&s3, &SearchConfig::default()).unwrap();
        assert_eq!(r.value, Gamma::Finite(3));
        assert!(
            verify_witness(&s3, r.witness.as_ref().unwrap())
                .unwrap()
                .valid
        );

        let d14 = dihedral(7);
        assert_eq!(
            gamma_cp_exact(&d14, &SearchConfig::default())
                .unwrap()
                .value,
            Gamma::Finite(4)
        );

        let a4 = table(&["(1 2 3)", "(2 3 4)"], 4);
        assert_eq!(
            gamma_cp_exact(&a4, &SearchConfig::default()).unwrap().value,
            Gamma::Finite(3)
        );

        let a5 = table(&["(1 2 3)", "(1 2 3 4 5)"], 5);
        let r = gamma_cp_exact(&a5, &SearchConfig::default()).unwrap();
        assert_eq!(r.value, Gamma::Finite(3));
    }

    #[test]
    fn oracle_matches_exact_on_tiny_groups() {
        for (gens, degree) in [
            (vec!["(1 2 3)", "(1 2)"], 3),
            (vec!["(1 2 3)", "(2 3 4)"], 4),
        ] {
            let g = table(&gens, degree);
            let exact = gamma_cp_exact(&g, &SearchConfig::default()).unwrap();
            let oracle = gamma_bruteforce_oracle(&g, 5).unwrap();
            assert_eq!(exact.value, oracle.value);
            if let Some(w) = &oracle.witness {
                assert!(verify_witness(&g, w).unwrap().valid);
            }
        }
    }

    #[test]
    fn oracle_reports_infinite_for_nilpotent_groups() {
        let c6 = table(&["(1 2 3 4 5 6)"], 6);
        assert_eq!(
            gamma_bruteforce_oracle(&c6, 6).unwrap().value,
            Gamma::Infinite
        );
        let q8 = table(&["(1 3 2 4)(5 8 6 7)", "(1 5 2 6)(3 7 4 8)"], 8);
        assert_eq!(
            gamma_bruteforce_oracle(&q8, 6).unwrap().value,
            Gamma::Infinite
        );
    }

    #[test]
    fn point_stabilizer_route_matches_lattice_route() {
        let a5 = table(&["(1 2 3)", "(1 2 3 4 5)"], 5);
        let stab = point_stabilizer(&a5, 0).unwrap();
        let via_candidates =
            gamma_cp_with_candidates(&a5, &[stab], &SearchConfig::default()).unwrap();
        assert_eq!(via_candidates.value, Gamma::Finite(3));
    }

    #[test]
    fn gamma_ordering_puts_infinity_on_top() {
        assert!(Gamma::Finite(5) < Gamma::Infinite);
        assert!(Gamma::Finite(3) < Gamma::Finite(4));
        assert!(Gamma::Infinite <= Gamma::Infinite);
        assert_eq!(Gamma::Finite(4).to_string(), "4");
        assert_eq!(Gamma::Infinite.to_string(), "infinity");
    }

    #[test]
    fn oracle_matches_exact_on_a_deeper_dihedral_group() {
        // Order 26: the reflection class needs a length-5 product, so the
        // deepening engine and the naive search meet well past the base case.
        let g = dihedral(13);
        let exact = gamma_cp_exact(&g, &SearchConfig::default()).unwrap();
        let oracle = gamma_bruteforce_oracle(&g, 6).unwrap();
        assert_eq!(exact.value, Gamma::Finite(5));
        assert_eq!(oracle.value, Gamma::Finite(5));
        assert!(
            verify_witness(&g, oracle.witness.as_ref().unwrap())
                .unwrap()
                .valid
        );
    }

    #[test]
    fn domination_pruning_preserves_values() {
        let cfg = SearchConfig {
            domination_pruning: true,
            ..SearchConfig::default()
        };
        let d14 = dihedral(7);
        assert_eq!(gamma_cp_exact(&d14, &cfg).unwrap().value, Gamma::Finite(4));
        let s4 = table(&["(1 2 3 4)", "(1 2)"], 4);
        assert_eq!(gamma_cp_exact(&s4, &cfg).unwrap().value, Gamma::Finite(3));
    }
}
