//! The minimal solvable setting `G = V ⋊ K` with `V` elementary abelian and
//! `K` nilpotent acting irreducibly: affine frames over prime fields, the
//! alternating-sum residue sets behind the dihedral formula, explicit
//! covering constructions, and the solvable covering-number bounds.

use crate::constructions::{dihedral, is_prime, reflection, rotation};
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::product::set_product;
use crate::subgroup::{intersection, power_idx, subgroup_closure, Subgroup};
use crate::table::{GroupTable, DEFAULT_ORDER_CAP};
use crate::witness::{verify_witness, CoveringWitness};

/// Integers expressible as alternating sums `Σ (−1)^i 2^{a_i}` over strictly
/// increasing exponent tuples inside `{0, …, n−1}`.
#[derive(Debug, Clone)]
pub struct XSet {
    pub n: u32,
    /// Sorted, deduplicated values.
    pub values: Vec<i64>,
}

/// Enumerates all `2^n − 1` alternating sums and checks they fill the
/// interval `[−2^{n−1}+1, 2^{n−1}]` minus zero.
pub fn x_set(n: u32) -> Result<XSet> {
    if n == 0 || n > 24 {
        return Err(Error::InvalidParameter(format!(
            "alternating-sum enumeration supports 1 <= n <= 24, got {n}"
        )));
    }
    let mut values = Vec::with_capacity((1usize << n) - 1);
    let mut tuple: Vec<u32> = Vec::new();
    build_alternating_sums(n, 0, 0, &mut tuple, &mut values);
    values.sort_unstable();
    values.dedup();

    let half = 1i64 << (n - 1);
    let expected: Vec<i64> = (-half + 1..=half).filter(|&x| x != 0).collect();
    if values != expected {
        return Err(Error::InvalidParameter(
            "alternating sums missed the closed-form interval".into(),
        ));
    }
    Ok(XSet { n, values })
}

fn build_alternating_sums(n: u32, from: u32, acc: i64, tuple: &mut Vec<u32>, out: &mut Vec<i64>) {
    for a in from..n {
        let sign = if tuple.len().is_multiple_of(2) { 1 } else { -1 };
        let value = acc + sign * (1i64 << a);
        out.push(value);
        tuple.push(a);
        build_alternating_sums(n, a + 1, value, tuple, out);
        tuple.pop();
    }
}

/// Do the residues of the alternating sums modulo `k + 1` cover `{1, …, k}`?
pub fn x_set_mod_coverage(n: u32, k: u64) -> Result<bool> {
    if k == 0 || k >= 1u64 << n {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= k < 2^n, got k = {k} for n = {n}"
        )));
    }
    let xs = x_set(n)?;
    let modulus = (k + 1) as i64;
    let mut hit = vec![false; modulus as usize];
    for &x in &xs.values {
        hit[x.rem_euclid(modulus) as usize] = true;
    }
    Ok((1..=k as usize).all(|r| hit[r]))
}

/// An affine frame `G = V ⋊ K` over the prime field: `V` the translations,
/// `K` a multiplicative subgroup acting on them, with a basis of `V`.
pub struct SolvableFrame {
    pub table: GroupTable,
    pub p: u64,
    /// Dimension of `V` over the `p`-element field.
    pub n: u32,
    pub v: Subgroup,
    pub k: Subgroup,
    /// Element indices of a basis of `V`; for prime fields a single entry.
    pub basis: Vec<u32>,
}

impl SolvableFrame {
    /// Checks the frame invariants: orders, normality, trivial intersection,
    /// nontrivial nilpotent `K` acting irreducibly and coprimely.
    pub fn validate(&self) -> Result<()> {
        let expected_v = (self.p as u128).pow(self.n);
        if self.v.order() as u128 != expected_v {
            return Err(Error::BrokenFrame(format!(
                "|V| = {} but p^n = {expected_v}",
                self.v.order()
            )));
        }
        if !self.table.is_normal(&self.v) {
            return Err(Error::BrokenFrame("V is not normal".into()));
        }
        if intersection(&self.table, &self.v, &self.k).order() != 1 {
            return Err(Error::BrokenFrame("V ∩ K is nontrivial".into()));
        }
        if self.v.order() * self.k.order() != self.table.order() {
            return Err(Error::BrokenFrame("|V|·|K| ≠ |G|".into()));
        }
        if self.k.order() < 2 {
            return Err(Error::BrokenFrame("K is trivial".into()));
        }
        if (self.k.order() as u64).is_multiple_of(self.p) {
            return Err(Error::BrokenFrame("p divides |K|".into()));
        }
        // K abelian suffices for nilpotency here; frames are built cyclic.
        for &a in self.k.members() {
            for &b in self.k.members() {
                if self.table.compose_idx(a, b) != self.table.compose_idx(b, a) {
                    return Err(Error::BrokenFrame("constructed K is not abelian".into()));
                }
            }
        }
        // Irreducibility: no proper nontrivial subgroup of V is K-invariant.
        // Prime order makes this automatic; checked directly for n = 1 frames.
        if self.n != 1 {
            return Err(Error::BrokenFrame(
                "only one-dimensional frames are constructed".into(),
            ));
        }
        if !is_prime(self.v.order() as u64) {
            return Err(Error::BrokenFrame("V does not have prime order".into()));
        }
        for &b in &self.basis {
            if !self.v.contains(b) || b == 0 {
                return Err(Error::BrokenFrame("basis element outside V".into()));
            }
        }
        Ok(())
    }
}

/// Builds `V ⋊ K ≤ AGL₁(F_p)` on `p` points: `V` the translations and `K`
/// the order-`k` subgroup of the multiplicative group.
pub fn agl1(p: u64, k: u64) -> Result<SolvableFrame> {
    if !is_prime(p) || p == 2 {
        return Err(Error::InvalidParameter(format!(
            "p must be an odd prime, got {p}"
        )));
    }
    if k < 2 || !(p - 1).is_multiple_of(k) {
        return Err(Error::InvalidParameter(format!(
            "k must divide p − 1 and exceed 1, got k = {k} for p = {p}"
        )));
    }

    let degree = p as usize;
    let translation = rotation(degree);
    let root = primitive_root(p);
    let multiplier = mod_pow(root, (p - 1) / k, p);
    let mult_images: Vec<u16> = (0..p).map(|x| ((x * multiplier) % p) as u16).collect();
    let mult = Perm::from_images(mult_images).unwrap();

    let table = GroupTable::generate(
        degree,
        &[translation.clone(), mult.clone()],
        DEFAULT_ORDER_CAP,
    )?;
    let t_idx = table.index_of(&translation).unwrap();
    let m_idx = table.index_of(&mult).unwrap();
    let v = subgroup_closure(&table, &[t_idx]);
    let k_sub = subgroup_closure(&table, &[m_idx]);

    // Basis: the lowest-index nontrivial element of V.
    let basis = vec![v.members().iter().copied().find(|&i| i != 0).unwrap()];

    let frame = SolvableFrame {
        table,
        p,
        n: 1,
        v,
        k: k_sub,
        basis,
    };
    frame.validate()?;
    Ok(frame)
}

fn primitive_root(p: u64) -> u64 {
    'outer: for g in 2..p {
        let mut seen_order = 1u64;
        let mut acc = g % p;
        while acc != 1 {
            acc = acc * g % p;
            seen_order += 1;
            if seen_order > p {
                continue 'outer;
            }
        }
        if seen_order == p - 1 {
            return g;
        }
    }
    unreachable!("prime fields have primitive roots")
}

fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Finds `t ∈ V` with `v ∈ K·K^t`, by solving `w^x · w⁻¹ = v` over `V` for
/// the lowest-index nontrivial central element `x` of `K` and returning
/// `t = w⁻¹`. The solved membership is re-checked on the set product.
pub fn central_commutator_solve(frame: &SolvableFrame, v: u32) -> Result<u32> {
    if !frame.v.contains(v) {
        return Err(Error::BrokenFrame("target element lies outside V".into()));
    }
    let table = &frame.table;

    let x = frame
        .k
        .members()
        .iter()
        .copied()
        .find(|&z| {
            z != 0
                && frame
                    .k
                    .members()
                    .iter()
                    .all(|&y| table.compose_idx(z, y) == table.compose_idx(y, z))
        })
        .ok_or_else(|| Error::BrokenFrame("center of K is trivial".into()))?;

    let x_inv = table.inverse_idx(x);
    let w = frame
        .v
        .members()
        .iter()
        .copied()
        .find(|&w| {
            // w^x · w⁻¹ = x⁻¹ w x w⁻¹
            let conj = table.compose_idx(table.compose_idx(x_inv, w), x);
            table.compose_idx(conj, table.inverse_idx(w)) == v
        })
        .ok_or_else(|| {
            Error::BrokenFrame("no commutator solution; the action is not irreducible".into())
        })?;
    let t = table.inverse_idx(w);

    let k_conj = frame.k.conjugate(table, t);
    let product = set_product(table, frame.k.mask(), k_conj.mask())?;
    if !product.contains(v) {
        return Err(Error::BrokenFrame(
            "solved conjugate product misses the target".into(),
        ));
    }
    Ok(t)
}

/// The explicit `2n⌈log₂ p⌉`-factor covering
/// `∏_i ∏_j K · K^{t_{ij}}` with `t_{ij}` solving `(2^j)·v_i ∈ K·K^{t_{ij}}`.
pub fn solvable_covering(frame: &SolvableFrame) -> Result<CoveringWitness> {
    frame.validate()?;
    let table = &frame.table;
    let m = ceil_log2(frame.p);

    let mut conjugators: Vec<u32> = Vec::with_capacity(2 * frame.n as usize * m as usize);
    for &vi in &frame.basis {
        for j in 0..m {
            let target = power_idx(table, vi, 1u64 << j);
            let t = central_commutator_solve(frame, target)?;
            conjugators.push(0);
            conjugators.push(t);
        }
    }
    let witness = CoveringWitness::new(frame.k.clone(), conjugators)?;
    let report = verify_witness(table, &witness)?;
    if !report.valid {
        return Err(Error::BrokenFrame(
            "constructed covering does not verify".into(),
        ));
    }
    Ok(witness)
}

/// Covering-number bounds for the minimal solvable setting:
/// `⌈n·log₂(p)/log₂(k) + 1⌉ ≤ γ ≤ 2n(log₂(p) + 1)`.
pub fn solvable_bounds(p: u64, n: u32, k: u64) -> Result<(u32, f64)> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("p must be prime, got {p}")));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "k must be at least 2, got {k}"
        )));
    }
    let ratio = n as f64 * (p as f64).log2() / (k as f64).log2() + 1.0;
    let lower = (ratio - 1e-9).ceil() as u32;
    let upper = 2.0 * n as f64 * ((p as f64).log2() + 1.0);
    debug_assert!((lower as f64) <= upper);
    Ok((lower, upper))
}

pub fn ceil_log2(p: u64) -> u32 {
    let mut m = 0u32;
    let mut acc = 1u64;
    while acc < p {
        acc = acc.saturating_mul(2);
        m += 1;
    }
    m
}

/// The explicit dihedral covering of `D_2p` of length `⌈log₂ p⌉ + 1`:
/// `⟨b⟩^{v} · ⟨b⟩^{v²} · ⟨b⟩^{v⁴} ⋯ ⟨b⟩^{v^{2^{m−1}}} · ⟨b⟩`.
pub struct DihedralFactorization {
    pub table: GroupTable,
    pub witness: CoveringWitness,
    pub m: u32,
    /// The rotation subgroup was contained in the partial product, and
    /// multiplying by the final factor closed it to the whole group.
    pub chain_verified: bool,
}

pub fn dihedral_factorization(p: u64) -> Result<DihedralFactorization> {
    if !is_prime(p) || p == 2 {
        return Err(Error::InvalidParameter(format!(
            "p must be an odd prime, got {p}"
        )));
    }
    let n = p as usize;
    let table = dihedral(n)?;
    let v = table.index_of(&rotation(n)).unwrap();
    let b = table.index_of(&reflection(n)).unwrap();
    let base = subgroup_closure(&table, &[b]);
    let rotations = subgroup_closure(&table, &[v]);
    let m = ceil_log2(p);

    let mut conjugators: Vec<u32> = (0..m).map(|j| power_idx(&table, v, 1u64 << j)).collect();
    conjugators.push(0);
    let witness = CoveringWitness::new(base.clone(), conjugators)?;

    // Containment chain: the product of the first m factors followed by ⟨b⟩
    // covers the rotations, and ⟨v⟩·⟨b⟩ = G then forces the full group.
    let factors = witness.factors(&table)?;
    let mut product = factors[0].mask().clone();
    for f in &factors[1..] {
        product = set_product(&table, &product, f.mask())?;
    }
    let chain_verified = rotations.mask().is_subset_of(&product)
        && set_product(&table, rotations.mask(), base.mask())?.is_full();

    let report = verify_witness(&table, &witness)?;
    if !report.valid || !chain_verified {
        return Err(Error::BrokenFrame(
            "dihedral covering does not verify".into(),
        ));
    }
    Ok(DihedralFactorization {
        table,
        witness,
        m,
        chain_verified,
    })
}
