//! Covering witnesses: a base subgroup plus conjugators certifying that the
//! ordered product of the conjugates is the whole group, and the
//! rank-factorization construction that produces one from any non-normal
//! maximal subgroup.

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::product::{rank, set_product, CosetTable};
use crate::subgroup::{conjugates_of, Subgroup};
use crate::table::GroupTable;

/// Certifies `G = M^{g₁} ⋯ M^{g_k}` for a base subgroup `M` and ordered
/// conjugators `g₁, …, g_k`.
#[derive(Clone)]
pub struct CoveringWitness {
    base: Subgroup,
    conjugators: Vec<u32>,
}

impl CoveringWitness {
    /// A witness needs at least two factors.
    pub fn new(base: Subgroup, conjugators: Vec<u32>) -> Result<CoveringWitness> {
        if conjugators.len() < 2 {
            return Err(Error::WitnessTooShort);
        }
        Ok(CoveringWitness { base, conjugators })
    }

    pub fn base(&self) -> &Subgroup {
        &self.base
    }

    pub fn conjugators(&self) -> &[u32] {
        &self.conjugators
    }

    pub fn len(&self) -> usize {
        self.conjugators.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The factor subgroups `M^{g_i}` in order.
    pub fn factors(&self, table: &GroupTable) -> Result<Vec<Subgroup>> {
        self.conjugators
            .iter()
            .map(|&g| {
                if g as usize >= table.order() {
                    Err(Error::IndexOutOfRange {
                        index: g as usize,
                        order: table.order(),
                    })
                } else {
                    Ok(self.base.conjugate(table, g))
                }
            })
            .collect()
    }
}

impl std::fmt::Debug for CoveringWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "CoveringWitness(base order {}, {} factors)",
            self.base.order(),
            self.len()
        )
    }
}

/// Outcome of expanding a witness product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub valid: bool,
    /// Size of the full ordered product.
    pub product_size: usize,
    /// All factors are conjugates of the base, hence pairwise conjugate.
    pub pairwise_conjugate: bool,
    pub factors_proper: bool,
}

/// Expands the ordered product of the witness factors and checks it covers
/// the whole group with every factor proper.
pub fn verify_witness(table: &GroupTable, witness: &CoveringWitness) -> Result<WitnessReport> {
    let factors = witness.factors(table)?;
    let factors_proper = factors.iter().all(|f| !f.is_whole_group(table));

    let mut product: SubsetMask = factors[0].mask().clone();
    for factor in &factors[1..] {
        let cosets = CosetTable::new(table, factor);
        product = cosets.product(&product);
    }

    let valid = factors_proper && product.is_full();
    Ok(WitnessReport {
        valid,
        product_size: product.cardinality(),
        pairwise_conjugate: true,
        factors_proper,
    })
}

/// Result of the constructive rank factorization.
#[derive(Debug)]
pub struct RankFactorization {
    pub witness: CoveringWitness,
    /// Minimal exponent with `B^{k₀} = B^{k₀+1}` for `B = M ∪ MxM`.
    pub k0: usize,
    /// Rank of the coset action of the base subgroup; the witness length is
    /// `k₀ + 2 ≤ rank + 1`.
    pub rank: usize,
    /// Both sides of `B^{k+1} = B^k ∪ (MxM)^{k+1}` were compared at every
    /// iteration.
    pub union_identity_checked: bool,
}

/// Builds the covering `G = M · M^{x⁻¹} · M^{x⁻²} ⋯ M^{x^{−k₀}} · M₁` from a
/// non-normal maximal subgroup `m`.
///
/// Picks the first conjugate `M₁ ≠ M` and the lowest-index `x ∈ M₁ − M`,
/// iterates `B = M ∪ MxM` until `B^{k₀} = B^{k₀+1}`, and reads the witness
/// off the stabilized power. Fails with [`Error::NormalSubgroup`] when no
/// conjugate differs from `m`, and with [`Error::NotMaximal`] when the chain
/// stabilizes below the full group.
pub fn rank_factorization(table: &GroupTable, m: &Subgroup) -> Result<RankFactorization> {
    if m.is_whole_group(table) {
        return Err(Error::NotProper);
    }
    let rank_info = rank(table, m)?;

    let orbit = conjugates_of(table, m);
    let (conj_by, m1) = orbit
        .iter()
        .find(|(_, c)| c.mask() != m.mask())
        .ok_or(Error::NormalSubgroup)?;
    let x = m1
        .mask()
        .iter_ones()
        .find(|&e| !m.contains(e))
        .expect("a distinct conjugate of equal size has an element outside m");

    // B = M ∪ MxM.
    let x_mask = SubsetMask::from_indices(table.order(), [x]);
    let mxm = {
        let mx = set_product(table, m.mask(), &x_mask)?;
        set_product(table, &mx, m.mask())?
    };
    let b = m.mask().union(&mxm);

    // Iterate B^k, maintaining (MxM)^k and checking the union identity
    // B^{k+1} = B^k ∪ (MxM)^{k+1} at every step.
    let mut b_power = b.clone();
    let mut mxm_power = mxm.clone();
    let mut k0 = 0usize;
    loop {
        let next = set_product(table, &b_power, &b)?;
        mxm_power = set_product(table, &mxm_power, &mxm)?;
        let expected = b_power.union(&mxm_power);
        if next != expected {
            return Err(Error::InvalidParameter(
                "power-chain union identity failed; composition tables are inconsistent".into(),
            ));
        }
        if !b_power.is_subset_of(&next) {
            return Err(Error::InvalidParameter(
                "power chain is not ascending; composition tables are inconsistent".into(),
            ));
        }
        if next == b_power {
            break;
        }
        b_power = next;
        k0 += 1;
    }
    // k0 is now minimal with B^{k0} = B^{k0+1} (the loop counts strict growth
    // steps starting from B^1).
    let k0 = k0 + 1;

    if !b_power.is_full() {
        return Err(Error::NotMaximal);
    }

    // Witness (M, M^{x⁻¹}, M^{x⁻²}, …, M^{x^{−k₀}}, M₁).
    let x_inv = table.inverse_idx(x);
    let mut conjugators = vec![0u32];
    let mut acc = 0u32;
    for _ in 0..k0 {
        acc = table.compose_idx(acc, x_inv);
        conjugators.push(acc);
    }
    conjugators.push(*conj_by);
    let witness = CoveringWitness::new(m.clone(), conjugators)?;

    let report = verify_witness(table, &witness)?;
    if !report.valid {
        return Err(Error::NotMaximal);
    }
    debug_assert!(witness.len() <= rank_info.rank + 1);

    Ok(RankFactorization {
        witness,
        k0,
        rank: rank_info.rank,
        union_identity_checked: true,
    })
}
