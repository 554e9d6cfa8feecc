//! Fixed instances shared by the benchmarks.

use semigroup_lengths::{validate, WeightSystem};

/// `(label, m, n)` triples covering `d = 1`, `d = 2` and a vanishing `ρ1`.
pub const INSTANCES: [(&str, [i64; 3], [i64; 3]); 3] = [
    ("boxes", [20, 9, 6], [1, 1, 1]),
    ("d2", [2, 4, 0], [2, 4, 3]),
    ("mcnuggets", [4, 7, 2], [9, 20, 6]),
];

pub fn instance(m: [i64; 3], n: [i64; 3]) -> WeightSystem {
    validate(m, n, false).expect("benchmark instances are valid")
}
