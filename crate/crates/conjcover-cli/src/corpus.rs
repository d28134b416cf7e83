//! The standard verification corpus of small groups.

use crate::spec::{GroupSpec, M11_GENERATORS, Q8_GENERATORS};

pub struct CorpusEntry {
    pub name: String,
    pub spec: GroupSpec,
    /// Nominal group order, used for gating without resolving.
    pub order: usize,
}

/// Dihedral groups for 3 ≤ n ≤ 32, symmetric and alternating groups up to
/// degree 6, affine groups over the primes up to 13 with every admissible
/// multiplicative part, cyclic groups up to order 16, the quaternion group,
/// and — when `max_order` admits them — the degree-11 Mathieu group and the
/// order-7200 wreath product.
pub fn build_corpus(max_order: usize) -> Vec<CorpusEntry> {
    let mut corpus: Vec<CorpusEntry> = Vec::new();
    let mut push = |name: String, spec: GroupSpec, order: usize| {
        if order <= max_order {
            corpus.push(CorpusEntry { name, spec, order });
        }
    };

    for n in 3..=32 {
        push(format!("D_{}", 2 * n), GroupSpec::Dihedral { n }, 2 * n);
    }
    let mut fact = 2usize;
    for n in 3..=6 {
        fact *= n;
        push(format!("Sym({n})"), GroupSpec::Symmetric { n }, fact);
        push(
            format!("Alt({n})"),
            GroupSpec::Alternating { n },
            if n == 3 { 3 } else { fact / 2 },
        );
    }
    for p in [3u64, 5, 7, 11, 13] {
        for k in 2..p {
            if (p - 1) % k == 0 {
                push(
                    format!("AGL1({p},{k})"),
                    GroupSpec::Agl1 { p, k },
                    (p * k) as usize,
                );
            }
        }
    }
    for m in 2..=16 {
        push(format!("C_{m}"), GroupSpec::Cyclic { n: m }, m);
    }
    push(
        "Q_8".to_string(),
        GroupSpec::Perm {
            degree: 8,
            generators: Q8_GENERATORS.iter().map(|s| s.to_string()).collect(),
        },
        8,
    );
    push(
        "M_11".to_string(),
        GroupSpec::Perm {
            degree: 11,
            generators: M11_GENERATORS.iter().map(|s| s.to_string()).collect(),
        },
        7920,
    );
    push(
        "Alt(5) wr C_2".to_string(),
        GroupSpec::Wreath {
            base: Box::new(GroupSpec::Alternating { n: 5 }),
            copies: 2,
            top: Box::new(GroupSpec::Cyclic { n: 2 }),
        },
        7200,
    );

    corpus
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_gate_excludes_large_entries() {
        let corpus = build_corpus(100);
        assert!(corpus.iter().all(|e| e.order <= 100));
        assert!(!corpus.iter().any(|e| e.name == "Sym(5)"));
        assert!(corpus.iter().any(|e| e.name == "Sym(4)"));
        assert!(!corpus.iter().any(|e| e.name == "M_11"));
    }

    #[test]
    fn corpus_mixes_nilpotent_and_non_nilpotent_entries() {
        let corpus = build_corpus(100);
        assert!(corpus.iter().any(|e| e.name == "C_12"));
        assert!(corpus.iter().any(|e| e.name == "D_14"));
        assert!(corpus.iter().any(|e| e.name == "Q_8"));
    }

    #[test]
    fn nominal_orders_match_resolved_orders() {
        for entry in build_corpus(200) {
            let resolved = entry.spec.resolve(10_000).unwrap();
            assert_eq!(resolved.table.order(), entry.order, "{}", entry.name);
        }
    }

    #[test]
    fn m11_resolves_to_order_7920() {
        let corpus = build_corpus(10_000);
        let entry = corpus.iter().find(|e| e.name == "M_11").unwrap();
        let resolved = entry.spec.resolve(10_000).unwrap();
        assert_eq!(resolved.table.order(), 7920);
    }
}
