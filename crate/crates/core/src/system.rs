//! Problem instances: generators, weights, the cross-product direction and
//! the explicit integer solutions of `m.x = m_target`, `n.x = n_target`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{cross, dot, ext_gcd3, frac, gcd3, iadd, imul, isub, widen, Rational};

/// Largest accepted magnitude for a generator or weight. Keeps every
/// intermediate product of the algorithms comfortably inside `i128`.
pub const MAX_INPUT: i64 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generators([i64; 3]);

impl Generators {
    pub fn new(n: [i64; 3]) -> Result<Self> {
        for (index, &value) in n.iter().enumerate() {
            if value <= 0 {
                return Err(Error::NonPositiveGenerator {
                    index: index + 1,
                    value,
                });
            }
            check_magnitude(value)?;
        }
        Ok(Generators(n))
    }

    pub fn get(&self) -> [i64; 3] {
        self.0
    }

    pub fn wide(&self) -> [i128; 3] {
        widen(&self.0)
    }

    pub fn gcd(&self) -> i64 {
        gcd3(&self.wide()) as i64
    }

    pub fn is_coprime(&self) -> bool {
        self.gcd() == 1
    }

    pub fn is_distinct(&self) -> bool {
        let [a, b, c] = self.0;
        a != b && b != c && a != c
    }

    pub fn product(&self) -> i128 {
        self.wide().iter().product()
    }
}

fn check_magnitude(value: i64) -> Result<()> {
    if value.unsigned_abs() > MAX_INPUT as u64 {
        return Err(Error::InputTooLarge {
            value: value as i128,
            limit: MAX_INPUT as i128,
        });
    }
    Ok(())
}

/// A weighting `m` together with generators `n`, ordered so that
/// `m3/n3 <= m2/n2 <= m1/n1` with at least one strict inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightSystem {
    weights: [i64; 3],
    gens: Generators,
}

impl WeightSystem {
    /// Validates a raw instance. In `theorem_mode` the generators must also
    /// be pairwise distinct and coprime.
    pub fn validate(m: [i64; 3], n: [i64; 3], theorem_mode: bool) -> Result<Self> {
        let gens = Generators::new(n)?;
        for &w in &m {
            check_magnitude(w)?;
        }
        let (mw, nw) = (widen(&m), gens.wide());
        // m_i/n_i >= m_j/n_j  <=>  m_i n_j >= m_j n_i, since n > 0
        let at_least = |i: usize, j: usize| mw[i] * nw[j] >= mw[j] * nw[i];
        if !at_least(1, 2) {
            return Err(Error::RatioOrderViolated { hi: 2, lo: 3 });
        }
        if !at_least(0, 1) {
            return Err(Error::RatioOrderViolated { hi: 1, lo: 2 });
        }
        if mw[0] * nw[2] == mw[2] * nw[0] {
            return Err(Error::AllRatiosEqual);
        }
        if theorem_mode {
            if !gens.is_distinct() {
                return Err(Error::GeneratorsNotDistinct);
            }
            if !gens.is_coprime() {
                return Err(Error::GeneratorsNotCoprime { gcd: gens.gcd() });
            }
        }
        Ok(WeightSystem { weights: m, gens })
    }

    pub fn weights(&self) -> [i64; 3] {
        self.weights
    }

    pub fn weights_wide(&self) -> [i128; 3] {
        widen(&self.weights)
    }

    pub fn gens(&self) -> Generators {
        self.gens
    }

    /// `m_i / n_i` for `i` in `0..3`.
    pub fn ratio(&self, i: usize) -> Rational {
        frac(self.weights[i] as i128, self.gens.0[i] as i128)
    }

    pub fn direction(&self) -> DirectionData {
        direction_data(self)
    }

    pub(crate) fn require_coprime(&self) -> Result<()> {
        if self.gens.is_coprime() {
            Ok(())
        } else {
            Err(Error::GeneratorsNotCoprime {
                gcd: self.gens.gcd(),
            })
        }
    }
}

pub fn validate(raw_m: [i64; 3], raw_n: [i64; 3], theorem_mode: bool) -> Result<WeightSystem> {
    WeightSystem::validate(raw_m, raw_n, theorem_mode)
}

/// The ρ-triple, `d = gcd(ρ)`, the kernel vector `r = m × n = (ρ1, -ρ2, ρ3)`
/// and its primitive part `r / d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectionData {
    pub rho: [i128; 3],
    pub d: i128,
    pub r: [i128; 3],
    pub r_primitive: [i128; 3],
}

impl DirectionData {
    pub fn rho1(&self) -> i128 {
        self.rho[0]
    }

    pub fn rho2(&self) -> i128 {
        self.rho[1]
    }

    pub fn rho3(&self) -> i128 {
        self.rho[2]
    }

    /// Squared Euclidean norm of `r`; the norm itself is never needed.
    pub fn r_norm_squared(&self) -> i128 {
        self.r.iter().map(|x| x * x).sum()
    }
}

pub fn direction_data(ws: &WeightSystem) -> DirectionData {
    let (m, n) = (ws.weights_wide(), ws.gens.wide());
    // inputs are bounded by MAX_INPUT, so these products cannot overflow
    let rho = [
        m[1] * n[2] - m[2] * n[1],
        m[0] * n[2] - m[2] * n[0],
        m[0] * n[1] - m[1] * n[0],
    ];
    let d = gcd3(&rho);
    let r = [rho[0], -rho[1], rho[2]];
    let r_primitive = [r[0] / d, r[1] / d, r[2] / d];
    debug_assert!(rho[0] >= 0 && rho[1] > 0 && rho[2] >= 0);
    debug_assert!(rho[0] != 0 || rho[2] != 0);
    debug_assert_eq!(dot(&m, &r).ok(), Some(0));
    debug_assert_eq!(dot(&n, &r).ok(), Some(0));
    DirectionData {
        rho,
        d,
        r,
        r_primitive,
    }
}

/// For a fixed `n`, integer solutions of `A x = (m, n)` exist exactly when
/// `m ≡ c (mod d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueClass {
    pub n: i128,
    pub c: i128,
    pub d: i128,
}

impl ResidueClass {
    pub fn contains(&self, m: i128) -> bool {
        (m - self.c).rem_euclid(self.d) == 0
    }
}

pub fn residue_class(ws: &WeightSystem, dd: &DirectionData, n: i128) -> Result<ResidueClass> {
    Ok(LineSolver::new(ws, dd, n)?.residue())
}

/// An explicit integer point on the lattice line `A z = (m, n)`, together
/// with the Bézout vectors used to build it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegerPointWitness {
    pub z: [i128; 3],
    /// Bézout vector with `r . v = d`.
    pub v: [i128; 3],
    /// `w = n × v`, so `n . w = 0` and `m . w = d`.
    pub w: [i128; 3],
    pub m_target: i128,
    pub n_target: i128,
}

pub fn integer_point(
    ws: &WeightSystem,
    dd: &DirectionData,
    m: i128,
    n: i128,
) -> Result<Option<IntegerPointWitness>> {
    let solver = LineSolver::new(ws, dd, n)?;
    Ok(solver.point(m)?.map(|z| IntegerPointWitness {
        z,
        v: solver.v,
        w: solver.w,
        m_target: m,
        n_target: n,
    }))
}

/// Precomputed Bézout data for a fixed `n`: a base point `z0` with
/// `n . z0 = n`, its weight `s = m . z0`, and the shift vector `w`.
/// Integer points for any admissible `m` are `z0 + ((m - s)/d) w`.
#[derive(Clone, Copy, Debug)]
pub struct LineSolver {
    weights: [i128; 3],
    gens: [i128; 3],
    d: i128,
    n: i128,
    v: [i128; 3],
    w: [i128; 3],
    base: [i128; 3],
    base_weight: i128,
    residue: i128,
}

impl LineSolver {
    pub fn new(ws: &WeightSystem, dd: &DirectionData, n: i128) -> Result<Self> {
        ws.require_coprime()?;
        let (_, a) = ext_gcd3(&ws.gens.wide())?;
        let (_, v) = ext_gcd3(&dd.r)?;
        Self::with_coefficients(ws, dd, n, a, v)
    }

    /// Builds the solver from caller-chosen Bézout coefficients:
    /// `a . gens = 1` and `r . v = d`.
    pub fn with_coefficients(
        ws: &WeightSystem,
        dd: &DirectionData,
        n: i128,
        a: [i128; 3],
        v: [i128; 3],
    ) -> Result<Self> {
        let gens = ws.gens.wide();
        let weights = ws.weights_wide();
        if dot(&a, &gens)? != 1 {
            return Err(Error::GeneratorsNotCoprime {
                gcd: ws.gens.gcd(),
            });
        }
        assert_eq!(dot(&dd.r, &v)?, dd.d, "v must satisfy r . v = d");
        let w = cross(&gens, &v)?;
        let base = [imul(a[0], n)?, imul(a[1], n)?, imul(a[2], n)?];
        let base_weight = dot(&weights, &base)?;
        // the residue of (a . m) n equals that of s = m . z0
        let residue = base_weight.rem_euclid(dd.d);
        Ok(LineSolver {
            weights,
            gens,
            d: dd.d,
            n,
            v,
            w,
            base,
            base_weight,
            residue,
        })
    }

    pub fn residue(&self) -> ResidueClass {
        ResidueClass {
            n: self.n,
            c: self.residue,
            d: self.d,
        }
    }

    pub fn shift(&self) -> [i128; 3] {
        self.w
    }

    /// An integer `z` with `m . z = m` and `n . z = n`, or `None` when
    /// `m` is outside the residue class.
    pub fn point(&self, m: i128) -> Result<Option<[i128; 3]>> {
        let delta = isub(m, self.base_weight)?;
        if delta.rem_euclid(self.d) != 0 {
            return Ok(None);
        }
        let k = delta / self.d;
        let mut z = self.base;
        for (zi, &wi) in z.iter_mut().zip(&self.w) {
            *zi = iadd(*zi, imul(k, wi)?)?;
        }
        debug_assert_eq!(dot(&self.weights, &z).ok(), Some(m));
        debug_assert_eq!(dot(&self.gens, &z).ok(), Some(self.n));
        Ok(Some(z))
    }
}
