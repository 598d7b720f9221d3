//! Quantum code parameters of the six doubled codes, annotated against a
//! small bounds table.

use gf4codes::doubling::{double_even, double_odd, OddDualVector};
use gf4codes::quantum::{quantum_params, BoundsTable};
use gf4codes::{catalog, Budget};

// A sample bounds file in the `n,k,d_lower,d_upper` format. In practice this
// comes from an external table of quantum code bounds.
const BOUNDS: &str = "\
n,k,d_lower,d_upper
11,5,3,3
12,4,4,4
15,7,3,3
16,6,4,4
27,13,5,5
28,12,6,6
";

fn main() {
    let table = BoundsTable::from_csv(BOUNDS).unwrap();
    for (a, b) in [("c5_2", "c5_2"), ("c7_3", "c7_3"), ("c13_6_a", "c13_6_b")] {
        let c1 = catalog::get(a).unwrap().code;
        let c2 = catalog::get(b).unwrap().code;
        let x1 = OddDualVector::all_ones(&c1).unwrap();
        let x2 = OddDualVector::all_ones(&c2).unwrap();
        for code in [
            double_odd(&c1, &c2, &x1).unwrap(),
            double_even(&c1, &c2, &x1, &x2).unwrap(),
        ] {
            let q = quantum_params(&code, Budget::default()).unwrap();
            println!("{:<20} from [{},{}]  {}", q.to_string(), code.n(), code.k(), table.annotate(&q));
        }
    }
}
