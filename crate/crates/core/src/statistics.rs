//! Summary statistics of `Λ⟦n⟧`, both measured and predicted from the
//! limiting triangular density.

use serde::{Deserialize, Serialize};

use crate::enumeration::LengthMultiset;
use crate::error::{Error, Result};
use crate::exact::{add, div, frac, int, mul, square, sub, to_f64, Rational};
use crate::system::WeightSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StatsKind {
    Empirical,
    Predicted,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct StatsReport {
    pub kind: StatsKind,
    pub n: u64,
    pub mean: f64,
    pub median: f64,
    pub stdev: f64,
    /// Exact mean: `Σ m c_m / total` or `(n/3) Σ m_i/n_i`.
    pub mean_exact: Rational,
    pub mode: Rational,
    pub min: Rational,
    pub max: Rational,
}

/// Mean, lower median, smallest mode and population standard deviation of
/// the multiset.
pub fn empirical_stats(lm: &LengthMultiset) -> Result<StatsReport> {
    if lm.is_empty() {
        return Err(Error::EmptyMultiset);
    }
    let total = lm.total() as i128;
    let mut sum = 0i128;
    let mut sum_sq = 0i128;
    let mut mode = (0i128, 0u64);
    for (m, c) in lm.iter() {
        let c_wide = c as i128;
        sum = sum.checked_add(m * c_wide).ok_or(Error::Overflow)?;
        sum_sq = m
            .checked_mul(m)
            .and_then(|sq| sq.checked_mul(c_wide))
            .and_then(|v| sum_sq.checked_add(v))
            .ok_or(Error::Overflow)?;
        if c > mode.1 {
            mode = (m, c);
        }
    }
    // the ⌈total/2⌉-th smallest element
    let rank = lm.total().div_ceil(2);
    let mut seen = 0u64;
    let mut median = 0i128;
    for (m, c) in lm.iter() {
        seen += c;
        if seen >= rank {
            median = m;
            break;
        }
    }
    let mean_exact = frac(sum, total);
    // total^2 var = total Σ m^2 - (Σ m)^2
    let var_numer = total
        .checked_mul(sum_sq)
        .and_then(|a| sum.checked_mul(sum).and_then(|b| a.checked_sub(b)))
        .ok_or(Error::Overflow)?;
    let variance = var_numer as f64 / (total as f64 * total as f64);
    Ok(StatsReport {
        kind: StatsKind::Empirical,
        n: lm.n(),
        mean: to_f64(&mean_exact),
        median: median as f64,
        stdev: variance.max(0.0).sqrt(),
        mean_exact,
        mode: int(mode.0),
        min: int(lm.min().unwrap_or(0)),
        max: int(lm.max().unwrap_or(0)),
    })
}

/// Limiting statistics scaled by `n`.
pub fn predicted_stats(ws: &WeightSystem, n: u64) -> Result<StatsReport> {
    let (hi, mid, lo) = (ws.ratio(0), ws.ratio(1), ws.ratio(2));
    let nq = int(n as i128);
    let mean_exact = div(&mul(&add(&add(&hi, &mid)?, &lo)?, &nq)?, &int(3))?;
    let squares = add(&add(&square(&hi)?, &square(&mid)?)?, &square(&lo)?)?;
    let cross = add(&add(&mul(&hi, &mid)?, &mul(&mid, &lo)?)?, &mul(&lo, &hi)?)?;
    let spread = sub(&squares, &cross)?;
    let variance = to_f64(&spread) * (n as f64) * (n as f64) / 18.0;

    let width = to_f64(&sub(&hi, &lo)?);
    let median_ratio = if mul(&mid, &int(2))? >= add(&hi, &lo)? {
        to_f64(&lo) + (0.5 * width * to_f64(&sub(&mid, &lo)?)).sqrt()
    } else {
        to_f64(&hi) - (0.5 * width * to_f64(&sub(&hi, &mid)?)).sqrt()
    };

    Ok(StatsReport {
        kind: StatsKind::Predicted,
        n,
        mean: to_f64(&mean_exact),
        median: median_ratio * n as f64,
        stdev: variance.max(0.0).sqrt(),
        mean_exact,
        mode: mul(&mid, &nq)?,
        min: mul(&lo, &nq)?,
        max: mul(&hi, &nq)?,
    })
}
