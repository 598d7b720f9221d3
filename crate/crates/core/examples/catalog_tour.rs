//! Every catalog entry with its parameters, minimum distance and dual distance.

use gf4codes::catalog;
use gf4codes::enumerator::{dual_distance, min_distance, weight_enumerator};
use gf4codes::Budget;

fn main() {
    for name in catalog::list() {
        let e = catalog::get(name).unwrap();
        let c = &e.code;
        let d = min_distance(&weight_enumerator(c, Budget::default()).unwrap());
        let dd = dual_distance(c, Budget::default()).unwrap();
        println!(
            "{name:<20} [{:>2},{:>2},{d}]  dual distance {dd}  {}",
            c.n(),
            c.k(),
            e.provenance
        );
    }
}
