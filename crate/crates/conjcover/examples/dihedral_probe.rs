//! Timing probe for deep dihedral covering searches.

use std::time::Instant;

use conjcover::constructions::dihedral;
use conjcover::search::{gamma_cp_exact, Gamma, SearchConfig};
use conjcover::solvable::ceil_log2;

fn main() {
    for p in [19u64, 23, 29, 31, 37, 41, 53, 61, 67] {
        let g = dihedral(p as usize).unwrap();
        let start = Instant::now();
        let result = gamma_cp_exact(&g, &SearchConfig::default()).unwrap();
        let elapsed = start.elapsed();
        let expect = ceil_log2(p) + 1;
        println!(
            "D_{:<4} gamma = {:<9} expected {:<3} [{elapsed:?}]",
            2 * p,
            result.value.to_string(),
            expect,
        );
        assert_eq!(result.value, Gamma::Finite(expect));
    }
}
