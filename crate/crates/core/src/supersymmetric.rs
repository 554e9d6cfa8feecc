//! Semigroups `⟨ab, ac, bc⟩` with the weightings `(b, a, c)` and `(a, c, b)`,
//! whose length histograms are exact translates of one another.

use serde::{Deserialize, Serialize};

use crate::enumeration::{enumerate_factorizations, length_multiset_for, Factorization};
use crate::error::{Error, Result};
use crate::system::Generators;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SupersymmetricSystem {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl SupersymmetricSystem {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        if a <= 0 || b <= 0 || c <= 0 {
            return Err(Error::NotSupersymmetric(format!(
                "a, b, c must be positive, got ({a}, {b}, {c})"
            )));
        }
        if a == b || b == c || a == c {
            return Err(Error::NotSupersymmetric(format!(
                "a, b, c must be distinct, got ({a}, {b}, {c})"
            )));
        }
        let sys = SupersymmetricSystem { a, b, c };
        Generators::new(sys.generator_values())?;
        Ok(sys)
    }

    fn generator_values(&self) -> [i64; 3] {
        [self.a * self.b, self.a * self.c, self.b * self.c]
    }

    pub fn gens(&self) -> Generators {
        Generators::new(self.generator_values()).expect("validated on construction")
    }

    /// `(b, a, c)`
    pub fn first_weights(&self) -> [i64; 3] {
        [self.b, self.a, self.c]
    }

    /// `(a, c, b)`
    pub fn second_weights(&self) -> [i64; 3] {
        [self.a, self.c, self.b]
    }

    pub fn abc(&self) -> u64 {
        (self.a * self.b * self.c) as u64
    }
}

/// Membership in `⟨n1, n2, n3⟩`; negative values are never members.
pub fn is_element(gens: &Generators, n: i128) -> bool {
    if n < 0 {
        return false;
    }
    let n = n as u128;
    let [n1, n2, n3] = gens.get().map(|v| v as u128);
    let mut x3 = 0u128;
    while x3 * n3 <= n {
        let rem3 = n - x3 * n3;
        let mut x2 = 0u128;
        while x2 * n2 <= rem3 {
            if (rem3 - x2 * n2).is_multiple_of(n1) {
                return true;
            }
            x2 += 1;
        }
        x3 += 1;
    }
    false
}

/// `n = q abc + r` with `r ∈ S`, `r - abc ∉ S`, and the single
/// factorization `x` of `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub q: u64,
    pub r: u64,
    pub x: Factorization,
}

pub fn decompose(sys: &SupersymmetricSystem, n: u64) -> Result<Decomposition> {
    let gens = sys.gens();
    if !is_element(&gens, n as i128) {
        return Err(Error::NotInSemigroup { n });
    }
    let abc = sys.abc();
    let hits: Vec<u64> = (0..=n / abc)
        .rev()
        .filter(|&q| {
            let r = n - q * abc;
            is_element(&gens, r as i128) && !is_element(&gens, r as i128 - abc as i128)
        })
        .collect();
    let q = match hits.as_slice() {
        [q] => *q,
        _ => {
            return Err(Error::StructureViolated {
                n,
                detail: format!("expected exactly one admissible quotient, found {hits:?}"),
            })
        }
    };
    let r = n - q * abc;
    let factorizations: Vec<Factorization> = enumerate_factorizations(&gens, r).collect();
    match factorizations.as_slice() {
        [x] => Ok(Decomposition { q, r, x: *x }),
        _ => Err(Error::StructureViolated {
            n,
            detail: format!("{r} has {} factorizations, expected 1", factorizations.len()),
        }),
    }
}

/// `r_n = (m2 - m1) . x` where `x` factors the remainder of `n`.
pub fn translation_offset(sys: &SupersymmetricSystem, n: u64) -> Result<i128> {
    Ok(offset_of(sys, &decompose(sys, n)?.x))
}

fn offset_of(sys: &SupersymmetricSystem, x: &Factorization) -> i128 {
    let (m1, m2) = (sys.first_weights(), sys.second_weights());
    (0..3)
        .map(|i| (m2[i] - m1[i]) as i128 * x.x[i] as i128)
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranslationCheck {
    pub n: u64,
    pub decomposition: Decomposition,
    pub offset: i128,
    pub passed: bool,
}

/// Builds both histograms by brute force and checks
/// `|Z1(m, n)| = |Z2(m + r_n, n)|` for every `m`.
pub fn verify_translation(sys: &SupersymmetricSystem, n: u64) -> Result<TranslationCheck> {
    let decomposition = decompose(sys, n)?;
    let offset = offset_of(sys, &decomposition.x);
    let gens = sys.gens();
    let first = length_multiset_for(&sys.first_weights(), &gens, n)?;
    let second = length_multiset_for(&sys.second_weights(), &gens, n)?;
    let passed = first.total() == second.total()
        && first.iter().all(|(m, c)| second.count(m + offset) == c);
    Ok(TranslationCheck {
        n,
        decomposition,
        offset,
        passed,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    First,
    Second,
}

/// How an input weighting maps onto a canonical system: canonical
/// coordinate `i` is input coordinate `permutation[i]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alignment {
    pub system: SupersymmetricSystem,
    pub role: Role,
    pub permutation: [usize; 3],
}

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

fn integer_sqrt(v: i128) -> Option<i128> {
    if v < 0 {
        return None;
    }
    let mut r = (v as f64).sqrt() as i128;
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    (r * r == v).then_some(r)
}

/// Every way the weighting `(m, n)` can be read as one of the two
/// canonical weightings of some `⟨ab, ac, bc⟩`.
pub fn alignments(m: [i64; 3], n: [i64; 3]) -> Vec<Alignment> {
    let mut out = Vec::new();
    for perm in PERMUTATIONS {
        let gens = perm.map(|i| n[i] as i128);
        let weights = perm.map(|i| m[i]);
        if gens.iter().any(|&g| g <= 0) {
            continue;
        }
        // ab * ac / bc = a^2
        let (ab, ac, bc) = (gens[0], gens[1], gens[2]);
        if (ab * ac) % bc != 0 {
            continue;
        }
        let Some(a) = integer_sqrt(ab * ac / bc) else {
            continue;
        };
        if a == 0 || ab % a != 0 || ac % a != 0 {
            continue;
        }
        let (b, c) = (ab / a, ac / a);
        if b * c != bc {
            continue;
        }
        let Ok(system) = SupersymmetricSystem::new(a as i64, b as i64, c as i64) else {
            continue;
        };
        for (role, expected) in [
            (Role::First, system.first_weights()),
            (Role::Second, system.second_weights()),
        ] {
            if weights == expected {
                out.push(Alignment {
                    system,
                    role,
                    permutation: perm,
                });
            }
        }
    }
    out
}

/// A pair of weightings brought into canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalPair {
    pub system: SupersymmetricSystem,
    pub first: Alignment,
    pub second: Alignment,
    /// The inputs were given as (second, first).
    pub swapped: bool,
}

pub fn canonicalize_pair(
    first: ([i64; 3], [i64; 3]),
    second: ([i64; 3], [i64; 3]),
) -> Result<CanonicalPair> {
    let xs = alignments(first.0, first.1);
    let ys = alignments(second.0, second.1);
    let mut candidates = Vec::new();
    for x in &xs {
        for y in ys.iter().filter(|y| y.system == x.system && y.role != x.role) {
            let swapped = x.role == Role::Second;
            let (first, second) = if swapped { (*y, *x) } else { (*x, *y) };
            candidates.push(CanonicalPair {
                system: x.system,
                first,
                second,
                swapped,
            });
        }
    }
    // relabelling b <-> c exchanges the two weightings, so most pairs have
    // several readings; prefer one that keeps the input order
    if let Some(best) = candidates.into_iter().min_by_key(|p| {
        (
            p.swapped,
            [p.system.a, p.system.b, p.system.c],
            p.first.permutation,
            p.second.permutation,
        )
    }) {
        return Ok(best);
    }
    Err(Error::NotSupersymmetric(format!(
        "no common (a, b, c) for m={:?} n={:?} and m={:?} n={:?}",
        first.0, first.1, second.0, second.1
    )))
}
