//! Weight distribution of the [28,8] doubled code, by Gray-code enumeration.

use std::time::Instant;

use gf4codes::doubling::{double_even, OddDualVector};
use gf4codes::enumerator::weight_enumerator;
use gf4codes::{catalog, Budget};

fn main() {
    let a = catalog::get("c13_6_a").unwrap().code;
    let b = catalog::get("c13_6_b").unwrap().code;
    let x1 = OddDualVector::all_ones(&a).unwrap();
    let x2 = OddDualVector::all_ones(&b).unwrap();
    let code = double_even(&a, &b, &x1, &x2).unwrap();

    let start = Instant::now();
    let w = weight_enumerator(&code, Budget::default()).unwrap();
    let elapsed = start.elapsed();

    println!("[{}, {}] code, {} codewords in {elapsed:?}", code.n(), code.k(), w.total());
    println!("{:>4} | {:>6}", "w", "A_w");
    println!("-----+-------");
    for (j, a) in w.nonzero_terms().filter(|&(j, _)| j > 0) {
        println!("{j:>4} | {a:>6}");
    }
}
