//! The doubling construction on the three input pairs, with the dual distance
//! of each result next to its upper bound.

use gf4codes::doubling::{double, OddDualVector};
use gf4codes::enumerator::dual_distance;
use gf4codes::{catalog, Budget};

fn main() {
    let budget = Budget::default();
    for (a, b) in [("c5_2", "c5_2"), ("c7_3", "c7_3"), ("c13_6_a", "c13_6_b")] {
        let c1 = catalog::get(a).unwrap().code;
        let c2 = catalog::get(b).unwrap().code;
        let x1 = OddDualVector::all_ones(&c1).unwrap();
        let x2 = OddDualVector::all_ones(&c2).unwrap();
        let r = double(&c1, &c2, &x1, &x2, budget).unwrap();
        let dp = dual_distance(&r.code_prime, budget).unwrap();
        let dpp = dual_distance(&r.code_double_prime, budget).unwrap();
        println!("{a} + {b}  ([{}, {}] inputs)", c1.n(), c1.k());
        println!(
            "  C'  [{}, {}]  dual distance {dp}  bound {}",
            r.code_prime.n(),
            r.code_prime.k(),
            r.bound_prime
        );
        println!(
            "  C'' [{}, {}]  dual distance {dpp}  bound {}",
            r.code_double_prime.n(),
            r.code_double_prime.k(),
            r.bound_double_prime
        );
        println!(
            "  C11 [{}, {}] self-dual {}",
            r.c11.n(),
            r.c11.k(),
            r.c11.is_self_dual()
        );
    }
}
