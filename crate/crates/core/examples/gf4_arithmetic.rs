//! Field tables for GF(4) and the two inner products on GF(4)^n.

use gf4codes::gf4::{hermitian_inner, trace_inner};
use gf4codes::{Gf4, Gf4Vector};

fn main() {
    println!("digits: 0 = 0, 1 = 1, 2 = α, 3 = α²\n");
    println!("  + | 0 1 2 3        * | 0 1 2 3");
    println!("----+--------     ----+--------");
    for a in Gf4::ALL {
        let sums: Vec<String> = Gf4::ALL.iter().map(|&b| (a + b).to_string()).collect();
        let prods: Vec<String> = Gf4::ALL.iter().map(|&b| (a * b).to_string()).collect();
        println!("  {a} | {}        {a} | {}", sums.join(" "), prods.join(" "));
    }
    println!();
    for a in Gf4::ALL {
        println!("conj({a}) = {}   trace({a}) = {}", a.conjugate(), a.trace());
    }

    let x = Gf4Vector::from_digits(&[1, 0, 1, 2, 2]).unwrap();
    let y = Gf4Vector::from_digits(&[0, 1, 2, 2, 1]).unwrap();
    let z = Gf4Vector::from_digits(&[1, 2, 3, 0, 1]).unwrap();
    println!();
    for (a, b) in [(&x, &y), (&x, &x), (&x, &z), (&z, &x)] {
        println!(
            "({a}) . ({b}):  hermitian = {}, trace = {}",
            hermitian_inner(a, b).unwrap(),
            trace_inner(a, b).unwrap()
        );
    }
    println!("weight({z}) = {}", z.weight());
}
