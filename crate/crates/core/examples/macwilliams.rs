//! Dual weight enumerator of the [28,8] code from its own enumerator.

use gf4codes::enumerator::{macwilliams, min_distance};
use gf4codes::WeightEnumerator;

fn main() {
    let w = WeightEnumerator::from_pairs(
        28,
        &[
            (0, 1),
            (12, 39),
            (14, 6),
            (16, 3198),
            (18, 9204),
            (20, 18213),
            (22, 22854),
            (24, 10569),
            (26, 1248),
            (28, 204),
        ],
    )
    .unwrap();
    let dual = macwilliams(&w, 8).unwrap();
    let terms: Vec<String> = dual
        .nonzero_terms()
        .take(6)
        .map(|(j, a)| if j == 0 { a.to_string() } else { format!("{a}y^{j}") })
        .collect();
    println!("W_dual = {} + ...", terms.join(" + "));
    println!("dual distance: {}", min_distance(&dual));
    println!("dual size: {} = 4^20", dual.total());

    // applying the transform again recovers the original
    assert_eq!(macwilliams(&dual, 20).unwrap(), w);
    println!("round trip through MacWilliams recovers the [28,8] enumerator");
}
