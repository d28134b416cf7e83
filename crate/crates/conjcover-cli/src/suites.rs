//! Verification suites: each criterion builds a list of check records, and
//! named suites group related criteria for the command line.

use conjcover::constructions::{alternating, bertrand_prime, cyclic, dihedral, wreath_product};
use conjcover::error::{Error, Result};
use conjcover::lattice::{all_subgroups, maximal_subgroups, LatticeCaps};
use conjcover::mask::SubsetMask;
use conjcover::perm::Perm;
use conjcover::product::{rank, CosetTable};
use conjcover::search::{gamma_bruteforce_oracle, gamma_cp_exact, Gamma, SearchConfig};
use conjcover::solvable::{
    agl1, ceil_log2, dihedral_factorization, solvable_bounds, solvable_covering, x_set,
    x_set_mod_coverage,
};
use conjcover::structure::{
    is_nilpotent, is_qmnn, minimal_normal_subgroups, normal_subgroups, structure_report,
};
use conjcover::subgroup::{
    conjugates_of, normalizer, point_stabilizer, subgroup_closure, sylow_subgroup, Subgroup,
};
use conjcover::table::GroupTable;
use conjcover::witness::{rank_factorization, verify_witness, CoveringWitness};

use crate::corpus::build_corpus;
use crate::report::{CheckRecord, SuiteReport};

pub const SUITE_NAMES: [&str; 10] = [
    "dihedral-formula",
    "rank-bound",
    "lifting",
    "solvable-bounds",
    "xn-lemma",
    "qmnn-structure",
    "oracle-equivalence",
    "table1-m11",
    "wreath-smoke",
    "gamma-range",
];

#[derive(Clone, Copy)]
pub struct SuiteOptions {
    pub threads: usize,
    pub config: SearchConfig,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            threads: 1,
            config: SearchConfig::default(),
        }
    }
}

/// Runs a named suite; unknown names are usage errors.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    let records = match name {
        "dihedral-formula" => {
            let mut r = dihedral_prime_formula(opts)?;
            r.extend(dihedral_general_formula(opts)?);
            r
        }
        "rank-bound" => {
            let mut r = rank_two_groups(opts)?;
            r.extend(rank_factorization_corpus(opts)?);
            r
        }
        "lifting" => lifting_property(opts)?,
        "solvable-bounds" => {
            let mut r = affine_bound_gap(opts)?;
            r.extend(solvable_sandwich(opts)?);
            r
        }
        "xn-lemma" => alternating_sum_sets()?,
        "qmnn-structure" => qmnn_structure(opts)?,
        "oracle-equivalence" => oracle_equivalence(opts)?,
        "table1-m11" => mathieu_stabilizer_covering()?,
        "wreath-smoke" => wreath_normalizer_covering()?,
        "gamma-range" => {
            let mut r = realization_by_dihedral_groups(opts)?;
            r.extend(global_gamma_bounds(opts)?);
            r
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown suite '{other}'; available: {}",
                SUITE_NAMES.join(", ")
            )))
        }
    };
    let budget = match name {
        "dihedral-formula" => 420,
        "rank-bound" => 600,
        "lifting" => 300,
        "solvable-bounds" => 120,
        "xn-lemma" => 60,
        "qmnn-structure" => 120,
        "oracle-equivalence" => 600,
        "table1-m11" => 600,
        "wreath-smoke" => 900,
        "gamma-range" => 300,
        _ => unreachable!(),
    };
    Ok(SuiteReport::new(name, budget, records))
}

/// Maps items in order, fanning out over `threads` worker threads.
fn parallel_map<T, R, F>(items: Vec<T>, threads: usize, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync,
{
    if threads <= 1 {
        return items.into_iter().map(f).collect();
    }
    let items: Vec<Option<T>> = items.into_iter().map(Some).collect();
    let n = items.len();
    let mut slots: Vec<Option<R>> = (0..n).map(|_| None).collect();
    {
        let items = std::sync::Mutex::new(items);
        let next = std::sync::atomic::AtomicUsize::new(0);
        let slots_mutex = std::sync::Mutex::new(&mut slots);
        std::thread::scope(|scope| {
            for _ in 0..threads.min(n) {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                    if i >= n {
                        break;
                    }
                    let item = items.lock().unwrap()[i].take().unwrap();
                    let result = f(item);
                    slots_mutex.lock().unwrap()[i] = Some(result);
                });
            }
        });
    }
    slots.into_iter().map(|r| r.unwrap()).collect()
}

fn gamma_of(table: &GroupTable, cfg: &SearchConfig) -> Result<Gamma> {
    Ok(gamma_cp_exact(table, cfg)?.value)
}

fn least_odd_prime_divisor(mut n: u64) -> Option<u64> {
    while n.is_multiple_of(2) {
        n /= 2;
    }
    if n == 1 {
        return None;
    }
    (3..=n).step_by(2).find(|&d| n.is_multiple_of(d))
}

const DIHEDRAL_CLAIM: &str =
    "the dihedral group of order 2p has covering number ceil(log2 p) + 1 for every odd prime p";

/// Covering numbers and explicit factorizations of D_2p for the first ten
/// odd primes.
pub fn dihedral_prime_formula(opts: &SuiteOptions) -> Result<Vec<CheckRecord>> {
    let primes = [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31];
    let cfg = opts.config;
    let results = parallel_map(
        primes.to_vec(),
        opts.threads,
        |p| -> Result<Vec<CheckRecord>> {
            let expected = ceil_log2(p) + 1;
            let table = dihedral(p as usize)?;
            let value = gamma_of(&table, &cfg)?;
            let mut records = vec![CheckRecord::new(
                DIHEDRAL_CLAIM,
                format!("p = {p}"),
                format!("{expected}"),
                format!("{value}"),
                value == Gamma::Finite(expected),
            )];
            let fact = dihedral_factorization(p)?;
            let report = verify_witness(&fact.table, &fact.witness)?;
            records.push(CheckRecord::new(
            "the rotation-tower factorization of D_2p verifies with exactly ceil(log2 p) + 1 factors",
            format!("p = {p}"),
            format!("length {expected}, full product"),
            format!(
                "length {}, product size {}, chain {}",
                fact.witness.len(),
                report.product_size,
                if fact.chain_verified { "verified" } else { "broken" }
            ),
            report.valid && fact.witness.len() as u32 == expected && fact.chain_verified,
        ));
            Ok(records)
        },
    );
    flatten(results)
}

/// Covering numbers of all dihedral groups D_2n for 3 ≤ n ≤ 32.
pub fn dihedral_general_formula(opts: &SuiteOptions) -> Result<Vec<CheckRecord>> {
    let cfg = opts.config;
    let results = parallel_map(
        (3u64..=32).collect(),
        opts.threads,
        |n| -> Result<CheckRecord> {
            let expected = match least_odd_prime_divisor(n) {
                None => Gamma::Infinite,
                Some(p) => Gamma::Finite(ceil_log2(p) + 1),
            };
            let table = dihedral(n as usize)?;
            let value = gamma_of(&table, &cfg)?;
            Ok(CheckRecord::new(
                "conjectured for all n and verified here for 3 <= n <= 32: gamma_cp(D_2n) is \
             infinite iff n is a power of two, else ceil(log2 p) + 1 for the least odd \
             prime divisor p of n",
                format!("n = {n}"),
                format!("{expected:?}"),
                format!("{value:?}"),
                value == expected,
            ))
        },
    );
    collect(results)
}

/// Groups whose best maximal class has a 2-transitive coset action all have
/// covering number exactly 3.
pub fn rank_two_groups(opts: &SuiteOptions) -> Result<Vec<CheckRecord>> {
    let cfg = opts.config;
    let entries: Vec<(String, GroupSource)> = vec![
        ("Sym(3)".into(), GroupSource::Spec("sym:3")),
        ("Alt(4)".into(), GroupSource::Spec("alt:4")),
        ("Sym(4)".into(), GroupSource::Spec("sym:4")),
        ("Alt(5)".into(), GroupSource::Spec("alt:5")),
        ("Sym(5)".into(), GroupSource::Spec("sym:5")),
        ("Alt(6)".into(), GroupSource::Spec("alt:6")),
        ("AGL1(5,4)".into(), GroupSource::Spec("agl1:5:4")),
        ("AGL1(7,6)".into(), GroupSource::Spec("agl1:7:6")),
        ("AGL1(11,10)".into(), GroupSource::Spec("agl1:11:10")),
    ];
    let mut records = collect(parallel_map(entries, opts.threads, |(name, source)| {
        let table = source.build()?;
        let value = gamma_of(&table, &cfg)?;
        Ok(CheckRecord::new(
            "a group with a 2-transitive faithful primitive action has covering number 3",
            name,
            "3",
            format!("{value}"),
            value == Gamma::Finite(3),
        ))
    }))?;

    // The degree-10 action of Alt(6) on the cosets of a Sylow-3 normalizer is
    // 2-transitive and yields the 3-factor covering directly.
    let a6 = alternating(6)?;
    let sylow3 = sylow_subgroup(&a6, 3);
    let norm = normalizer(&a6, &sylow3);
    let (action, _) = a6.coset_action(&norm)?;
    let stab = point_stabilizer(&action, 0)?;
    let action_rank = rank(&action, &stab)?.rank;
    let fact = rank_factorization(&action, &stab)?;
    let report = verify_witness(&action, &fact.witness)?;
    records.push(CheckRecord::new(
        "Alt(6) acting on the 10 cosets of a Sylow-3 normalizer is 2-transitive and is a \
         product of three conjugate point stabilizers",
        format!(
            "degree {} action of order {} group, stabilizer order {}",
            action.degree(),
            action.order(),
            stab.order()
        ),
        "rank 2, 3 verified factors",
        format!(
            "rank {action_rank}, {} factors, valid {}",
            fact.witness.len(),
            report.valid
        ),
        action_rank == 2 && fact.witness.len() == 3 && report.valid,
    ));
    Ok(records)
}

enum GroupSource {
    Spec(&'static str),
}

impl GroupSource {
    fn build(&self) -> Result<GroupTable> {
        match self {
            GroupSource::Spec(text) => Ok(crate::spec::GroupSpec::parse(text)?
                .resolve(conjcover::table::DEFAULT_ORDER_CAP)?
                .table),
        }
    }
}

/// The affine frame over 13 points with multiplicative part of order 4 has
/// covering number 4 while the logarithmic lower bound is only 3.
pub fn affine_bound_gap(opts: &SuiteOptions) -> Result<Vec<CheckRecord>> {
    let frame = agl1(13, 4)?;
    let value = gamma_of(&frame.table, &opts.config)?;
    let (lower, _) = solvable_bounds(13, 1, 4)?;
    Ok(vec![CheckRecord::new(
        "stated without proof for prime-power frames and verified here computationally: \
         the order-52 affine frame has covering number 4, strictly above its logarithmic \
         lower bound of 3",
        "p = 13, k = 4",
        "gamma 4, lower bound 3",
        format!("gamma {value}, lower bound {lower}"),
        value == Gamma::Finite(4) && lower == 3,
    )])
}

/// For every affine corpus frame: lower bound ≤ gamma ≤ length of the
/// constructed covering ≤ 2n·ceil(log2 p), with the witness verifying.
pub fn solvable_sandwich(opts: &SuiteOptions) -> Result<Vec<CheckRecord>> {
    let mut frames = Vec::new();
    for p in [3u64, 5, 7, 11, 13] {
        for k in 2..p {
            if (p - 1) % k == 0 {
                frames.push((p, k));
            }
        }
    }
    let cfg = opts.config;
    collect(parallel_map(frames, opts.threads, |(p, k)| {
        let frame = agl1(p, k)?;
        let witness = solvable_covering(&frame)?;
        let report = verify_witness(&frame.table, &witness)?;
        let (lower, _) = solvable_bounds(p, frame.n, k)?;
        let value = gamma_of(&frame.table, &cfg)?;
        let cap = 2 * frame.n * ceil_log2(p);
        let Gamma::Finite(g) = value else {
            return Ok(CheckRecord::new(
                SANDWICH_CLAIM,
                format!("p = {p}, k = {k}"),
                "finite",
                "infinite",
                false,
            ));
        };
        Ok(CheckRecord::new(
            SANDWICH_CLAIM,
            format!("p = {p}, k = {k}"),
            format!(
                "{lower} <= gamma <= {} <= {cap}, witness valid",
                witness.len()
            ),
            format!(
                "gamma {g}, covering length {}, valid {}",
                witness.len(),
                report.valid
            ),
            report.valid
                && lower <= g
                && g as usize <= witness.len()
                && witness.len() as u32 <= cap,
        ))
    }))
}

const SANDWICH_CLAIM: &str = "the affine covering construction sandwiches gamma: \
     n*log2(p)/log2(k) + 1 <= gamma <= covering length <= 2n*ceil(log2 p)";

/// Realizes every covering number from 3 to 8 by a dihedral group of a prime
/// in the matching dyadic interval.
pub fn realization_by_dihedral_groups(opts: &SuiteOptions) -> Result<Vec<CheckRecord>> {
    let cfg = opts.config;
    collect(parallel_map((3u32..=8).collect(), opts.threads, |n| {
        let p = bertrand_prime(n)?;
        let table = dihedral(p as usize)?;
        let value = gamma_of(&table, &cfg)?;
        Ok(CheckRecord::new(
            "every integer n >= 3 is the covering number of a dihedral group over a prime \
             between 2^{n-2} and 2^{n-1}",
            format!("n = {n}, p = {p}"),
            format!("{n}"),
            format!("{value}"),
            value == Gamma::Finite(n),
        ))
    }))
}

/// Non-nilpotent corpus groups of order at most 200 satisfy
/// 2 < gamma ≤ 4·log2|G|.
pub fn global_gamma_bounds(opts: &SuiteOptions) -> Result<Vec<CheckRecord>> {
    let cfg = opts.config;
    let entries = build_corpus(200);
    collect(parallel_map(entries, opts.threads, move |entry| {
        let table = entry
            .spec
            .resolve(conjcover::table::DEFAULT_ORDER_CAP)?
            .table;
        if is_nilpotent(&table) {
            let value = gamma_of(&table, &cfg)?;
            return Ok(CheckRecord::new(
                GLOBAL_BOUND_CLAIM,
                format!("{} (nilpotent)", entry.name),
                "infinity",
                format!("{value}"),
                value == Gamma::Infinite,
            ));
        }
        let value = gamma_of(&table, &cfg)?;
        let bound = 4.0 * (table.order() as f64).log2();
        let pass = match value {
            Gamma::Finite(k) => k > 2 && (k as f64) <= bound,
            Gamma::Infinite => false,
        };
        Ok(CheckRecord::new(
            GLOBAL_BOUND_CLAIM,
            format!("{} of order {}", entry.name, table.order()),
            format!("2 < gamma <= {bound:.2}"),
            format!("gamma {value}"),
            pass,
        ))
    }))
}

const GLOBAL_BOUND_CLAIM: &str =
    "2 < gamma_cp(G) <= 4*log2|G| for non-nilpotent G; nilpotent groups have no covering";

/// Covering numbers never increase along quotients: gamma(G) ≤ gamma(G/N)
/// for every nontrivial proper normal subgroup N.
pub fn lifting_property(opts: &SuiteOptions) -> Result<Vec<CheckRecord>> {
    let cfg = opts.config;
    let entries = build_corpus(100);
    collect(parallel_map(entries, opts.threads, move |entry| {
        let table = entry
            .spec
            .resolve(conjcover::table::DEFAULT_ORDER_CAP)?
            .table;
        let value = gamma_of(&table, &cfg)?;
        let normals: Vec<Subgroup> = normal_subgroups(&table)
            .into_iter()
            .filter(|n| !n.is_trivial() && !n.is_whole_group(&table))
            .collect();
        let mut worst: Option<(usize, Gamma)> = None;
        let mut all_ok = true;
        for n in &normals {
            let (quotient, _) = table.quotient(n)?;
            let qvalue = gamma_of(&quotient, &cfg)?;
            if value > qvalue {
                all_ok = false;
            }
            if worst.is_none_or(|(_, w)| qvalue < w) {
                worst = Some((n.order(), qvalue));
            }
        }
        Ok(CheckRecord::new(
            "gamma_cp(G) <= gamma_cp(G/N) for every normal subgroup N, with infinity on top",
            format!(
                "{} with {} nontrivial proper normal subgroups",
                entry.name,
                normals.len()
            ),
            format!("gamma {value} below every quotient value"),
            match worst {
                Some((order, w)) => format!("smallest quotient value {w} (at |N| = {order})"),
                None => "no nontrivial proper normal subgroups".to_string(),
            },
            all_ok,
        ))
    }))
}

/// Every non-normal maximal class of every corpus group of order ≤ 200
/// yields a verified rank factorization within the rank bound.
pub fn rank_factorization_corpus(opts: &SuiteOptions) -> Result<Vec<CheckRecord>> {
    let entries = build_corpus(200);
    collect(parallel_map(entries, opts.threads, move |entry| {
        let table = entry
            .spec
            .resolve(conjcover::table::DEFAULT_ORDER_CAP)?
            .table;
        let lattice = all_subgroups(&table, LatticeCaps::default())?;
        let maximals = maximal_subgroups(&table, &lattice);
        let mut seen: Vec<SubsetMask> = Vec::new();
        let mut class_count = 0usize;
        let mut lengths: Vec<usize> = Vec::new();
        let mut all_ok = true;
        for (m, normal) in maximals {
            if normal || seen.iter().any(|s| s == m.mask()) {
                continue;
            }
            for (_, c) in conjugates_of(&table, &m) {
                seen.push(c.mask().clone());
            }
            class_count += 1;
            let fact = rank_factorization(&table, &m)?;
            let report = verify_witness(&table, &fact.witness)?;
            if !report.valid || fact.witness.len() > fact.rank + 1 || !fact.union_identity_checked {
                all_ok = false;
            }
            lengths.push(fact.witness.len());
        }
        Ok(CheckRecord::new(
            "iterating B = M ∪ MxM from a non-normal maximal subgroup stabilizes at the whole \
             group, the power-chain union identity holds at every step, and the witness length \
             is at most rank + 1",
            format!(
                "{} with {class_count} non-normal maximal classes",
                entry.name
            ),
            "all classes verified within the rank bound",
            format!("witness lengths {lengths:?}"),
            all_ok,
        ))
    }))
}

/// Alternating-sum sets: closed form versus the independent subset oracle,
/// and full residue coverage.
pub fn alternating_sum_sets() -> Result<Vec<CheckRecord>> {
    let mut records = Vec::new();
    for n in 1..=16u32 {
        let computed = x_set(n)?;
        let oracle = subset_oracle(n);
        let pass = computed.values == oracle && computed.values.len() == (1usize << n) - 1;
        records.push(CheckRecord::new(
            "alternating sums of strictly increasing powers of two fill the interval \
             [-2^{n-1}+1, 2^{n-1}] minus zero, one sum per nonempty exponent subset",
            format!("n = {n}"),
            format!(
                "{} values matching the subset enumeration",
                (1usize << n) - 1
            ),
            format!(
                "{} values, oracle match {}",
                computed.values.len(),
                computed.values == oracle
            ),
            pass,
        ));
    }
    for n in 1..=10u32 {
        let all_covered = (1..(1u64 << n)).all(|k| x_set_mod_coverage(n, k).unwrap_or(false));
        records.push(CheckRecord::new(
            "the alternating-sum set covers every residue class 1..k modulo k+1 for all \
             1 <= k < 2^n",
            format!("n = {n}"),
            "covered for every k",
            format!("covered: {all_covered}"),
            all_covered,
        ));
    }
    Ok(records)
}

/// Literal enumeration of all nonempty subsets in increasing order with
/// alternating signs; independent of the recursive tuple builder.
fn subset_oracle(n: u32) -> Vec<i64> {
    let mut values = Vec::new();
    for subset in 1u64..(1 << n) {
        let mut sum = 0i64;
        let mut sign = 1i64;
        for bit in 0..n {
            if subset & (1 << bit) != 0 {
                sum += sign * (1i64 << bit);
                sign = -sign;
            }
        }
        values.push(sum);
    }
    values.sort_unstable();
    values.dedup();
    values
}

/// Groups with every proper quotient nilpotent have a unique minimal normal
/// subgroup and trivial center and Frattini subgroup.
pub fn qmnn_structure(opts: &SuiteOptions) -> Result<Vec<CheckRecord>> {
    let entries = build_corpus(200);
    let mut records = collect(
        parallel_map(entries, opts.threads, |entry| {
            let table = entry
                .spec
                .resolve(conjcover::table::DEFAULT_ORDER_CAP)?
                .table;
            if !is_qmnn(&table) {
                return Ok(None);
            }
            let report = structure_report(&table, LatticeCaps::default())?;
            let pass = report.minimal_normals.len() == 1
                && report.center.is_trivial()
                && report.frattini.is_trivial();
            Ok(Some(CheckRecord::new(
                QMNN_CLAIM,
                format!("{} of order {}", entry.name, table.order()),
                "one minimal normal subgroup, trivial center, trivial Frattini subgroup",
                format!(
                    "{} minimal normal(s), |Z| = {}, |Phi| = {}",
                    report.minimal_normals.len(),
                    report.center.order(),
                    report.frattini.order()
                ),
                pass,
            )))
        })
        .into_iter()
        .filter_map(|r| r.transpose())
        .collect::<Vec<_>>(),
    )?;

    // Non-example: D_12 has a non-nilpotent proper quotient and two minimal
    // normal subgroups, so it must be rejected.
    let d12 = dihedral(6)?;
    let rejected = !is_qmnn(&d12);
    let minimals = minimal_normal_subgroups(&d12).len();
    records.push(CheckRecord::new(
        QMNN_CLAIM,
        "D_12 (non-example)",
        "rejected",
        format!("rejected: {rejected}, {minimals} minimal normal subgroups"),
        rejected && minimals > 1,
    ));
    Ok(records)
}

const QMNN_CLAIM: &str = "a non-nilpotent group whose proper quotients are all nilpotent has \
     a unique minimal normal subgroup and trivial center and Frattini subgroup";

/// The lattice-reduced engine agrees with the reduction-free exhaustive
/// search on every corpus group of order at most 24.
pub fn oracle_equivalence(opts: &SuiteOptions) -> Result<Vec<CheckRecord>> {
    let cfg = opts.config;
    let entries = build_corpus(24);
    collect(parallel_map(entries, opts.threads, move |entry| {
        let table = entry
            .spec
            .resolve(conjcover::table::DEFAULT_ORDER_CAP)?
            .table;
        let exact = gamma_cp_exact(&table, &cfg)?;
        let oracle = gamma_bruteforce_oracle(&table, 6)?;
        let witness_ok = match &oracle.witness {
            Some(w) => verify_witness(&table, w)?.valid,
            None => oracle.value == Gamma::Infinite,
        };
        Ok(CheckRecord::new(
            "minimizing over non-normal maximal classes equals the exhaustive minimum over \
             all proper subgroup classes with no search reductions",
            format!("{} of order {}", entry.name, table.order()),
            format!("{}", exact.value),
            format!("{}", oracle.value),
            exact.value == oracle.value && witness_ok,
        ))
    }))
}

/// The degree-11 point stabilizer of the order-7920 Mathieu group has rank 2
/// and gives a verified 3-factor covering.
pub fn mathieu_stabilizer_covering() -> Result<Vec<CheckRecord>> {
    let table = crate::spec::GroupSpec::parse("m11")?
        .resolve(conjcover::table::DEFAULT_ORDER_CAP)?
        .table;
    let stab = point_stabilizer(&table, 0)?;
    let rank_info = rank(&table, &stab)?;
    let fact = rank_factorization(&table, &stab)?;
    let report = verify_witness(&table, &fact.witness)?;
    Ok(vec![CheckRecord::new(
        "the degree-11 point stabilizer of the order-7920 Mathieu group has rank 2, so three \
         of its conjugates multiply to the whole group",
        format!(
            "group order {}, stabilizer order {}",
            table.order(),
            stab.order()
        ),
        "order 7920, rank 2, 3 verified factors covering 7920 elements",
        format!(
            "order {}, rank {}, {} factors, product size {}, valid {}",
            table.order(),
            rank_info.rank,
            fact.witness.len(),
            report.product_size,
            report.valid
        ),
        table.order() == 7920
            && rank_info.rank == 2
            && fact.witness.len() == 3
            && report.product_size == 7920
            && report.valid,
    )])
}

/// Embeds a base permutation into one block of the wreath product.
fn embed_in_block(perm: &Perm, block: usize, blocks: usize) -> Perm {
    let d = perm.degree();
    let mut images: Vec<u16> = (0..(d * blocks) as u16).collect();
    for i in 0..d {
        images[block * d + i] = (block * d + perm.image(i)) as u16;
    }
    Perm::from_images(images).unwrap()
}

/// Diagonal embedding across all blocks.
fn embed_diagonal(perm: &Perm, blocks: usize) -> Perm {
    let d = perm.degree();
    let mut images: Vec<u16> = vec![0; d * blocks];
    for b in 0..blocks {
        for i in 0..d {
            images[b * d + i] = (b * d + perm.image(i)) as u16;
        }
    }
    Perm::from_images(images).unwrap()
}

/// In the order-7200 wreath product of Alt(5) by C_2, the normalizers of the
/// three diagonal-power conjugates of A_4 × A_4 multiply to the whole group.
pub fn wreath_normalizer_covering() -> Result<Vec<CheckRecord>> {
    let a5 = alternating(5)?;
    let c2 = cyclic(2)?;
    let w = wreath_product(&a5, 2, &c2, conjcover::table::DEFAULT_ORDER_CAP)?;

    // Three conjugates of A_4 whose product is Alt(5), from the rank
    // factorization of the point stabilizer.
    let a4 = point_stabilizer(&a5, 0)?;
    let fact = rank_factorization(&a5, &a4)?;
    let conjugator_perms: Vec<Perm> = fact
        .witness
        .conjugators()
        .iter()
        .map(|&g| a5.element(g).clone())
        .collect();

    let mut normalizers: Vec<Subgroup> = Vec::new();
    let mut conjugacy_ok = true;
    let mut diag_indices: Vec<u32> = Vec::new();
    for s in &conjugator_perms {
        let factor = a4.conjugate(&a5, a5.index_of(s).unwrap());
        let mut gens: Vec<u32> = Vec::new();
        for &g in factor.generator_indices() {
            let perm = a5.element(g);
            for block in 0..2 {
                gens.push(w.index_of(&embed_in_block(perm, block, 2)).unwrap());
            }
        }
        let m_i = subgroup_closure(&w, &gens);
        debug_assert_eq!(m_i.order(), a4.order() * a4.order());
        normalizers.push(normalizer(&w, &m_i));
        diag_indices.push(w.index_of(&embed_diagonal(s, 2)).unwrap());
    }

    // The normalizers are conjugate via the diagonal embeddings.
    for (i, n_i) in normalizers.iter().enumerate() {
        let d = w.compose_idx(w.inverse_idx(diag_indices[0]), diag_indices[i]);
        if normalizers[0].conjugate(&w, d).mask() != n_i.mask() {
            conjugacy_ok = false;
        }
    }

    let mut product = normalizers[0].mask().clone();
    for n in &normalizers[1..] {
        product = CosetTable::new(&w, n).product(&product);
    }
    let all_proper = normalizers.iter().all(|n| !n.is_whole_group(&w));

    // The same covering as a checkable witness over the base normalizer.
    let base = normalizers[0].clone();
    let conjugators: Vec<u32> = diag_indices
        .iter()
        .map(|&d| w.compose_idx(w.inverse_idx(diag_indices[0]), d))
        .collect();
    let witness = CoveringWitness::new(base, conjugators)?;
    let report = verify_witness(&w, &witness)?;

    let mut records = vec![CheckRecord::new(
        "in the order-7200 wreath product of Alt(5) by C_2, three conjugate normalizers of \
         diagonal-power A_4 subgroups multiply to the whole group",
        format!(
            "group order {}, normalizer orders {:?}",
            w.order(),
            normalizers.iter().map(|n| n.order()).collect::<Vec<_>>()
        ),
        "proper pairwise-conjugate normalizers with full product of size 7200",
        format!(
            "product size {}, proper {all_proper}, conjugate {conjugacy_ok}, witness valid {}",
            product.cardinality(),
            report.valid
        ),
        product.is_full() && all_proper && conjugacy_ok && report.valid,
    )];

    // Structural smoke check: the socle Alt(5) × Alt(5) is the unique minimal
    // normal subgroup.
    let minimals = minimal_normal_subgroups(&w);
    records.push(CheckRecord::new(
        "the wreath product of a non-abelian simple group by a transitive top group has a \
         unique minimal normal subgroup, the direct power of the base",
        format!("group order {}", w.order()),
        "one minimal normal subgroup of order 3600",
        format!(
            "{} minimal normal(s) of orders {:?}",
            minimals.len(),
            minimals.iter().map(|n| n.order()).collect::<Vec<_>>()
        ),
        minimals.len() == 1 && minimals[0].order() == 3600,
    ));
    Ok(records)
}

fn flatten(results: Vec<Result<Vec<CheckRecord>>>) -> Result<Vec<CheckRecord>> {
    let mut records = Vec::new();
    for r in results {
        records.extend(r?);
    }
    Ok(records)
}

fn collect(results: Vec<Result<CheckRecord>>) -> Result<Vec<CheckRecord>> {
    results.into_iter().collect()
}
