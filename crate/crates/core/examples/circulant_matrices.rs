//! Building the circulant [13,6] generators and moving them through the
//! matrix text format.

use gf4codes::format::{emit_matrix, parse_matrix};
use gf4codes::{circulant, Gf4Vector, LinearCode};

fn main() {
    let first = Gf4Vector::from_digits(&[0, 0, 0, 0, 1, 0, 0, 2, 1, 0, 2, 3, 3]).unwrap();
    let m = circulant(&first, 6).unwrap();
    let text = emit_matrix(&m);
    print!("{text}");

    let back = parse_matrix(&text).unwrap();
    assert_eq!(back, m);
    let code = LinearCode::from_generator(back);
    println!(
        "rank {}, hermitian self-orthogonal {}, all-one vector in dual {}",
        code.k(),
        code.is_hermitian_self_orthogonal(),
        code.is_in_dual(&Gf4Vector::ones(13)).unwrap()
    );
}
