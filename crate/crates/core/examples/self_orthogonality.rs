//! Self-orthogonality, duals, evenness and shortening on small codes.

use gf4codes::{catalog, Budget, Gf4Vector, LinearCode};

fn describe(name: &str, c: &LinearCode) {
    println!(
        "{name:<22} [{:>2},{:>2}]  hermitian-SO {:<5}  trace-SO {:<5}  self-dual {:<5}  even {}",
        c.n(),
        c.k(),
        c.is_hermitian_self_orthogonal(),
        c.is_trace_self_orthogonal(),
        c.is_self_dual(),
        c.is_even(Budget::default()).unwrap()
    );
}

fn main() {
    let c = catalog::get("c5_2").unwrap().code;
    describe("c5_2", &c);
    let d = c.dual();
    describe("dual of c5_2", &d);
    println!(
        "c5_2 inside its dual: {}",
        c.generator().iter().all(|g| d.contains(g).unwrap())
    );
    println!(
        "all-one vector in c5_2: {}, in its dual: {}",
        c.contains(&Gf4Vector::ones(5)).unwrap(),
        d.contains(&Gf4Vector::ones(5)).unwrap()
    );

    let hexacode = catalog::get("hexacode").unwrap().code;
    describe("hexacode", &hexacode);
    for p in 0..6 {
        describe(&format!("hexacode shortened@{p}"), &hexacode.shorten(p).unwrap());
    }

    let odd = LinearCode::from_rows(vec![Gf4Vector::from_digits(&[1, 2, 0]).unwrap()]).unwrap();
    describe("span(1 2 0)", &odd);
}
