//! Named group builders: dihedral, cyclic, symmetric, alternating and wreath
//! products, plus the Bertrand prime picker used to realize prescribed
//! covering numbers.

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::table::{GroupTable, DEFAULT_ORDER_CAP};

/// The dihedral group of order `2n` as a degree-`n` permutation group:
/// the `n`-cycle together with the reflection fixing point 1.
pub fn dihedral(n: usize) -> Result<GroupTable> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "dihedral groups need n >= 3, got {n}"
        )));
    }
    let table = GroupTable::generate(n, &[rotation(n), reflection(n)], DEFAULT_ORDER_CAP)?;
    debug_assert_eq!(table.order(), 2 * n);
    Ok(table)
}

/// The `n`-cycle `(1 2 … n)`.
pub fn rotation(n: usize) -> Perm {
    let images: Vec<u16> = (0..n).map(|i| ((i + 1) % n) as u16).collect();
    Perm::from_images(images).unwrap()
}

/// The reflection `i ↦ n + 2 − i` fixing point 1.
pub fn reflection(n: usize) -> Perm {
    let images: Vec<u16> = (0..n).map(|i| ((n - i) % n) as u16).collect();
    Perm::from_images(images).unwrap()
}

/// The cyclic group of order `n` acting regularly.
pub fn cyclic(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "cyclic group order must be positive".into(),
        ));
    }
    if n == 1 {
        return GroupTable::generate(1, &[], 2);
    }
    GroupTable::generate(n, &[rotation(n)], n + 1)
}

/// The symmetric group on `n` points.
pub fn symmetric(n: usize) -> Result<GroupTable> {
    match n {
        0 => Err(Error::InvalidParameter("degree must be positive".into())),
        1 => GroupTable::generate(1, &[], 2),
        _ => {
            let swap = Perm::parse_cycles("(1 2)", n).unwrap();
            GroupTable::generate(n, &[rotation(n), swap], DEFAULT_ORDER_CAP)
        }
    }
}

/// The alternating group on `n` points.
pub fn alternating(n: usize) -> Result<GroupTable> {
    match n {
        0 => Err(Error::InvalidParameter("degree must be positive".into())),
        1 | 2 => GroupTable::generate(n, &[], 2),
        3 => GroupTable::generate(3, &[Perm::parse_cycles("(1 2 3)", 3).unwrap()], 4),
        _ => {
            let three_cycle = Perm::parse_cycles("(1 2 3)", n).unwrap();
            // An even long cycle: the n-cycle for odd n, an (n−1)-cycle else.
            let long = if n % 2 == 1 {
                rotation(n)
            } else {
                let body: Vec<String> = (2..=n).map(|i| i.to_string()).collect();
                Perm::parse_cycles(&format!("({})", body.join(" ")), n).unwrap()
            };
            GroupTable::generate(n, &[three_cycle, long], DEFAULT_ORDER_CAP)
        }
    }
}

/// Permutation wreath product acting imprimitively on `base.degree() · m`
/// points: `m` blocks each carrying a copy of `base`, permuted by `top`.
pub fn wreath_product(
    base: &GroupTable,
    m: usize,
    top: &GroupTable,
    cap: usize,
) -> Result<GroupTable> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "wreath product needs at least one copy".into(),
        ));
    }
    if top.degree() != m {
        return Err(Error::DegreeMismatch {
            left: top.degree(),
            right: m,
        });
    }
    let expected: u128 = (base.order() as u128)
        .checked_pow(m as u32)
        .unwrap_or(u128::MAX)
        .saturating_mul(top.order() as u128);
    if expected > cap as u128 {
        return Err(Error::OrderCapExceeded { cap });
    }

    let d = base.degree();
    let degree = d * m;
    let mut gens: Vec<Perm> = Vec::new();
    for block in 0..m {
        for &g in base.generators() {
            let base_perm = base.element(g);
            let mut images: Vec<u16> = (0..degree as u16).collect();
            for i in 0..d {
                images[block * d + i] = (block * d + base_perm.image(i)) as u16;
            }
            gens.push(Perm::from_images(images).unwrap());
        }
    }
    for &t in top.generators() {
        let top_perm = top.element(t);
        let mut images: Vec<u16> = vec![0; degree];
        for block in 0..m {
            let target = top_perm.image(block);
            for i in 0..d {
                images[block * d + i] = (target * d + i) as u16;
            }
        }
        gens.push(Perm::from_images(images).unwrap());
    }

    let table = GroupTable::generate(degree, &gens, cap)?;
    debug_assert_eq!(table.order() as u128, expected);
    Ok(table)
}

/// Smallest prime `p` with `2^{n−2} < p < 2^{n−1}`; Bertrand's postulate
/// guarantees one exists for every `n ≥ 3`.
pub fn bertrand_prime(n: u32) -> Result<u64> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "the dyadic prime interval needs n >= 3, got {n}"
        )));
    }
    let low = 1u64 << (n - 2);
    let high = 1u64 << (n - 1);
    ((low + 1)..high)
        .find(|&p| is_prime(p))
        .ok_or_else(|| Error::InvalidParameter("no prime in dyadic interval".into()))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::is_nilpotent;

    #[test]
    fn dihedral_orders_and_relations() {
        for n in 3..=12 {
            let g = dihedral(n).unwrap();
            assert_eq!(g.order(), 2 * n);
            let v = g.index_of(&rotation(n)).unwrap();
            let b = g.index_of(&reflection(n)).unwrap();
            // v^n = b^2 = e and bvb = v^{-1}
            assert_eq!(crate::subgroup::power_idx(&g, v, n as u64), 0);
            assert_eq!(g.compose_idx(b, b), 0);
            let bvb = g.compose_idx(g.compose_idx(b, v), b);
            assert_eq!(bvb, g.inverse_idx(v));
        }
        assert!(dihedral(2).is_err());
    }

    #[test]
    fn dihedral_6_is_nonabelian_of_order_6() {
        let g = dihedral(3).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!is_nilpotent(&g));
    }

    #[test]
    fn dihedral_8_is_nilpotent() {
        let g = dihedral(4).unwrap();
        assert_eq!(g.order(), 8);
        assert!(is_nilpotent(&g));
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        let facts = [1usize, 1, 2, 6, 24, 120, 720];
        #[allow(clippy::needless_range_loop)]
        for n in 1..=6 {
            assert_eq!(symmetric(n).unwrap().order(), facts[n]);
            let alt = alternating(n).unwrap();
            assert_eq!(alt.order(), if n < 2 { 1 } else { facts[n] / 2 });
        }
    }

    #[test]
    fn cyclic_orders() {
        for n in 1..=12 {
            assert_eq!(cyclic(n).unwrap().order(), n);
        }
    }

    #[test]
    fn wreath_sym3_by_c2() {
        let base = symmetric(3).unwrap();
        let top = cyclic(2).unwrap();
        let w = wreath_product(&base, 2, &top, 10_000).unwrap();
        assert_eq!(w.order(), 72);
        assert_eq!(w.degree(), 6);
    }

    #[test]
    fn wreath_with_one_copy_is_the_base() {
        let base = symmetric(3).unwrap();
        let top = cyclic(1).unwrap();
        let w = wreath_product(&base, 1, &top, 100).unwrap();
        assert_eq!(w.order(), 6);
    }

    #[test]
    fn wreath_respects_cap() {
        let base = alternating(5).unwrap();
        let top = cyclic(2).unwrap();
        assert!(matches!(
            wreath_product(&base, 2, &top, 1000),
            Err(Error::OrderCapExceeded { .. })
        ));
    }

    #[test]
    fn bertrand_primes() {
        assert_eq!(bertrand_prime(3).unwrap(), 3);
        assert_eq!(bertrand_prime(4).unwrap(), 5);
        assert_eq!(bertrand_prime(5).unwrap(), 11);
        assert_eq!(bertrand_prime(6).unwrap(), 17);
        assert_eq!(bertrand_prime(7).unwrap(), 37);
        assert_eq!(bertrand_prime(8).unwrap(), 67);
        assert!(bertrand_prime(2).is_err());
    }
}
