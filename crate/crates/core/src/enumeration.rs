//! Factorization sets, weighted-length multisets and the per-value counts
//! `|Z(m, n)|`, obtained either by brute force or by intersecting the lattice
//! line `z + s r/d` with the nonnegative octant.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{ceil_int, frac, floor_int, imul, int, mul, Rational};
use crate::system::{DirectionData, Generators, LineSolver, ResidueClass, WeightSystem};

/// Widest support a materialized multiset may span.
pub const MAX_SUPPORT_WIDTH: i128 = 1 << 28;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Factorization {
    pub x: [u64; 3],
}

/// Iterator over `Z_S(n)` with `x3` as the outer and `x2` as the inner loop.
#[derive(Clone, Debug)]
pub struct Factorizations {
    gens: [u64; 3],
    n: u64,
    x3: u64,
    x2: u64,
    done: bool,
}

impl Iterator for Factorizations {
    type Item = Factorization;

    fn next(&mut self) -> Option<Factorization> {
        let [n1, n2, n3] = self.gens;
        while !self.done {
            let rem3 = self.n - self.x3 * n3;
            if self.x2 * n2 > rem3 {
                self.x3 += 1;
                self.x2 = 0;
                if self.x3 * n3 > self.n {
                    self.done = true;
                }
                continue;
            }
            let rem2 = rem3 - self.x2 * n2;
            let x2 = self.x2;
            self.x2 += 1;
            if rem2.is_multiple_of(n1) {
                return Some(Factorization {
                    x: [rem2 / n1, x2, self.x3],
                });
            }
        }
        None
    }
}

pub fn enumerate_factorizations(gens: &Generators, n: u64) -> Factorizations {
    let g = gens.get();
    Factorizations {
        gens: [g[0] as u64, g[1] as u64, g[2] as u64],
        n,
        x3: 0,
        x2: 0,
        done: false,
    }
}

pub fn weighted_length(weights: &[i64; 3], x: &Factorization) -> i128 {
    (0..3).map(|i| weights[i] as i128 * x.x[i] as i128).sum()
}

/// The multiset of weighted lengths `m . x` over `x ∈ Z_S(n)`, stored as
/// counts over a contiguous window of values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthMultiset {
    n: u64,
    offset: i128,
    counts: Vec<u64>,
    total: u64,
}

impl LengthMultiset {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn count(&self, m: i128) -> u64 {
        let idx = m - self.offset;
        if idx < 0 || idx >= self.counts.len() as i128 {
            return 0;
        }
        self.counts[idx as usize]
    }

    /// `(value, multiplicity)` pairs with positive multiplicity, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (i128, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(move |(i, &c)| (self.offset + i as i128, c))
    }

    pub fn min(&self) -> Option<i128> {
        self.iter().next().map(|(m, _)| m)
    }

    pub fn max(&self) -> Option<i128> {
        self.counts
            .iter()
            .rposition(|&c| c > 0)
            .map(|i| self.offset + i as i128)
    }

    /// Number of elements (with multiplicity) in the integer range `[lo, hi]`.
    pub fn count_between(&self, lo: i128, hi: i128) -> u128 {
        self.iter()
            .filter(|(m, _)| (lo..=hi).contains(m))
            .map(|(_, c)| c as u128)
            .sum()
    }
}

pub fn length_multiset(ws: &WeightSystem, n: u64) -> Result<LengthMultiset> {
    length_multiset_for(&ws.weights(), &ws.gens(), n)
}

/// Brute-force multiset for an arbitrary weighting; the weights need not
/// satisfy any ratio ordering.
pub fn length_multiset_for(weights: &[i64; 3], gens: &Generators, n: u64) -> Result<LengthMultiset> {
    let g = gens.get();
    let ratios: Vec<Rational> = (0..3)
        .map(|i| frac(weights[i] as i128, g[i] as i128))
        .collect();
    let lo_ratio = *ratios.iter().min().unwrap();
    let hi_ratio = *ratios.iter().max().unwrap();
    let n_wide = int(n as i128);
    let offset = floor_int(&mul(&lo_ratio, &n_wide)?);
    let top = ceil_int(&mul(&hi_ratio, &n_wide)?);
    let width = top - offset + 1;
    if width > MAX_SUPPORT_WIDTH {
        return Err(Error::InputTooLarge {
            value: width,
            limit: MAX_SUPPORT_WIDTH,
        });
    }
    let mut counts = vec![0u64; width as usize];
    let mut total = 0u64;

    let [n1, n2, n3] = g.map(|v| v as u64);
    let [m1, m2, m3] = weights.map(|v| v as i128);
    let mut x3 = 0u64;
    while x3 * n3 <= n {
        let rem3 = n - x3 * n3;
        let mut x2 = 0u64;
        while x2 * n2 <= rem3 {
            let rem2 = rem3 - x2 * n2;
            if rem2.is_multiple_of(n1) {
                let x1 = rem2 / n1;
                let value = m1 * x1 as i128 + m2 * x2 as i128 + m3 * x3 as i128;
                counts[(value - offset) as usize] += 1;
                total += 1;
            }
            x2 += 1;
        }
        x3 += 1;
    }
    Ok(LengthMultiset {
        n,
        offset,
        counts,
        total,
    })
}

/// The real parameter interval `[s_lo, s_hi]` for which `z + s r/d` lies in
/// the nonnegative octant, and the exact number of integers in it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSegment {
    pub witness: Option<[i128; 3]>,
    /// `None` when no witness exists or a coordinate with zero direction is
    /// negative; otherwise the (possibly inverted) interval.
    pub interval: Option<(Rational, Rational)>,
    pub count: u128,
}

impl LatticeSegment {
    fn empty(witness: Option<[i128; 3]>) -> Self {
        LatticeSegment {
            witness,
            interval: None,
            count: 0,
        }
    }
}

/// Counts `|Z(m, n)|` for a fixed `n` and many `m`, reusing the Bézout data.
#[derive(Clone, Copy, Debug)]
pub struct LineCounter {
    solver: LineSolver,
    direction: [i128; 3],
}

impl LineCounter {
    pub fn new(ws: &WeightSystem, dd: &DirectionData, n: i128) -> Result<Self> {
        Ok(LineCounter {
            solver: LineSolver::new(ws, dd, n)?,
            direction: dd.r_primitive,
        })
    }

    pub fn residue(&self) -> ResidueClass {
        self.solver.residue()
    }

    pub fn segment(&self, m: i128) -> Result<LatticeSegment> {
        let z = match self.solver.point(m)? {
            Some(z) => z,
            None => return Ok(LatticeSegment::empty(None)),
        };
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for i in 0..3 {
            let step = self.direction[i];
            if step == 0 {
                if z[i] < 0 {
                    return Ok(LatticeSegment::empty(Some(z)));
                }
                continue;
            }
            // z_i + s * step >= 0
            let bound = frac(-z[i], step);
            if step > 0 {
                lo = Some(lo.map_or(bound, |b| b.max(bound)));
            } else {
                hi = Some(hi.map_or(bound, |b| b.min(bound)));
            }
        }
        // generators are positive, so the line leaves the octant both ways
        let (lo, hi) = (lo.expect("bounded below"), hi.expect("bounded above"));
        let count = (floor_int(&hi) - ceil_int(&lo) + 1).max(0) as u128;
        Ok(LatticeSegment {
            witness: Some(z),
            interval: Some((lo, hi)),
            count,
        })
    }

    /// Same count as [`LineCounter::segment`], using only integer division.
    pub fn count(&self, m: i128) -> Result<u128> {
        let z = match self.solver.point(m)? {
            Some(z) => z,
            None => return Ok(0),
        };
        let mut lo = i128::MIN;
        let mut hi = i128::MAX;
        for (&zi, &step) in z.iter().zip(&self.direction) {
            match step.signum() {
                0 if zi < 0 => return Ok(0),
                0 => {}
                1 => lo = lo.max(ceil_div(-zi, step)),
                _ => hi = hi.min(floor_div(zi, -step)),
            }
        }
        Ok(if hi < lo { 0 } else { (hi - lo + 1) as u128 })
    }
}

fn floor_div(a: i128, b: i128) -> i128 {
    num_integer::Integer::div_floor(&a, &b)
}

fn ceil_div(a: i128, b: i128) -> i128 {
    num_integer::Integer::div_ceil(&a, &b)
}

pub fn count_on_line(
    ws: &WeightSystem,
    dd: &DirectionData,
    m: i128,
    n: i128,
) -> Result<LatticeSegment> {
    LineCounter::new(ws, dd, n)?.segment(m)
}

/// Integer range `[lo, hi]` of `[alpha n, beta n]` intersected with the
/// support `[t3 n, t1 n]` of `Λ⟦n⟧`. Empty when `lo > hi`.
pub(crate) fn window_range(
    ws: &WeightSystem,
    n: u64,
    alpha: &Rational,
    beta: &Rational,
) -> Result<(i128, i128)> {
    let nq = int(n as i128);
    let lo = ceil_int(&mul(alpha, &nq)?).max(ceil_int(&mul(&ws.ratio(2), &nq)?));
    let hi = floor_int(&mul(beta, &nq)?).min(floor_int(&mul(&ws.ratio(0), &nq)?));
    Ok((lo, hi))
}

pub(crate) fn check_window(alpha: &Rational, beta: &Rational) -> Result<()> {
    if alpha > beta {
        return Err(Error::InvalidWindow {
            alpha: alpha.to_string(),
            beta: beta.to_string(),
        });
    }
    Ok(())
}

/// `|Λ⟦n⟧ ∩ [alpha n, beta n]|`.
pub fn count_in_window(ws: &WeightSystem, n: u64, alpha: &Rational, beta: &Rational) -> Result<u128> {
    check_window(alpha, beta)?;
    let (lo, hi) = window_range(ws, n, alpha, beta)?;
    if lo > hi {
        return Ok(0);
    }
    if !ws.gens().is_coprime() {
        return Ok(length_multiset(ws, n)?.count_between(lo, hi));
    }
    let dd = ws.direction();
    let counter = LineCounter::new(ws, &dd, n as i128)?;
    let class = counter.residue();
    let first = lo + (class.c - lo).rem_euclid(class.d);
    let mut total = 0u128;
    let mut m = first;
    while m <= hi {
        total += counter.count(m)?;
        m += class.d;
    }
    Ok(total)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistogramPoint {
    pub m: i128,
    pub count: u128,
    /// `m / n`
    pub position: Rational,
    /// `|Z(m, n)| * 2 n1 n2 n3 / (d n)`
    pub value: Rational,
}

enum CountSource {
    Line(Box<LineCounter>),
    Multiset(LengthMultiset),
}

/// Streaming scaled histogram over the support `[⌈t3 n⌉, ⌊t1 n⌋]`.
pub struct ScaledHistogram {
    source: CountSource,
    n: i128,
    scale: Rational,
    next: i128,
    last: i128,
}

impl Iterator for ScaledHistogram {
    type Item = Result<HistogramPoint>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next > self.last {
            return None;
        }
        let m = self.next;
        self.next += 1;
        let count = match &self.source {
            CountSource::Line(counter) => match counter.count(m) {
                Ok(c) => c,
                Err(e) => return Some(Err(e)),
            },
            CountSource::Multiset(ms) => ms.count(m) as u128,
        };
        let point = i128::try_from(count)
            .map_err(|_| Error::Overflow)
            .and_then(|c| mul(&int(c), &self.scale))
            .map(|value| HistogramPoint {
                m,
                count,
                position: frac(m, self.n),
                value,
            });
        Some(point)
    }
}

pub fn scaled_histogram(ws: &WeightSystem, dd: &DirectionData, n: u64) -> Result<ScaledHistogram> {
    if n == 0 {
        return Err(Error::ZeroElement);
    }
    let nw = n as i128;
    let source = if ws.gens().is_coprime() {
        CountSource::Line(Box::new(LineCounter::new(ws, dd, nw)?))
    } else {
        CountSource::Multiset(length_multiset(ws, n)?)
    };
    let scale = frac(imul(2, ws.gens().product())?, imul(dd.d, nw)?);
    let nq = int(nw);
    Ok(ScaledHistogram {
        source,
        n: nw,
        scale,
        next: ceil_int(&mul(&ws.ratio(2), &nq)?),
        last: floor_int(&mul(&ws.ratio(0), &nq)?),
    })
}
