//! Builds one covering witness per constructive route and prints them.

use conjcover::constructions::alternating;
use conjcover::solvable::{agl1, dihedral_factorization, solvable_covering};
use conjcover::subgroup::point_stabilizer;
use conjcover::table::GroupTable;
use conjcover::witness::{rank_factorization, verify_witness, CoveringWitness};

fn show(label: &str, table: &GroupTable, witness: &CoveringWitness) {
    let report = verify_witness(table, witness).unwrap();
    println!(
        "{label}: {} factors over a base of order {}, product {}/{} ({})",
        witness.len(),
        witness.base().order(),
        report.product_size,
        table.order(),
        if report.valid { "valid" } else { "INVALID" }
    );
    let conj: Vec<String> = witness
        .conjugators()
        .iter()
        .map(|&g| table.element(g).to_string())
        .collect();
    println!("  base {:?}", witness.base().generator_strings(table));
    println!("  conjugators {conj:?}");
}

fn main() {
    // Rank route: three conjugate point stabilizers cover Alt(5).
    let a5 = alternating(5).unwrap();
    let stab = point_stabilizer(&a5, 0).unwrap();
    let fact = rank_factorization(&a5, &stab).unwrap();
    show("rank factorization of Alt(5)", &a5, &fact.witness);

    // Rotation-tower route: reflections cover a prime dihedral group.
    let fact = dihedral_factorization(11).unwrap();
    show("rotation tower for the order-22 dihedral group", &fact.table, &fact.witness);

    // Commutator route: complements cover an affine frame.
    let frame = agl1(13, 4).unwrap();
    let witness = solvable_covering(&frame).unwrap();
    show("affine covering of the order-52 frame", &frame.table, &witness);
}
