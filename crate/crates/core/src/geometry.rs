//! Cross-sections `L(t, 1)` of the simplex `{x >= 0 : n.x = 1}` cut by the
//! plane `m.x = t`, and the triangular density they produce.
//!
//! Lengths are reported divided by `‖r‖`, which cancels everywhere, so all
//! values stay rational.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exact::{add, div, frac, int, mul, square, sub, to_f64, Rational};
use crate::system::{DirectionData, WeightSystem};

/// Piecewise-linear density supported on `[m3/n3, m1/n1]` with its peak at
/// `m2/n2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleDensity {
    /// `m3/n3`
    pub left: Rational,
    /// `m2/n2`
    pub peak: Rational,
    /// `m1/n1`
    pub right: Rational,
    weights: [i128; 3],
    gens: [i128; 3],
    rho: [i128; 3],
}

impl TriangleDensity {
    pub fn new(ws: &WeightSystem) -> Self {
        let dd = ws.direction();
        TriangleDensity {
            left: ws.ratio(2),
            peak: ws.ratio(1),
            right: ws.ratio(0),
            weights: ws.weights_wide(),
            gens: ws.gens().wide(),
            rho: dd.rho,
        }
    }

    pub fn degenerate_left(&self) -> bool {
        self.rho[0] == 0
    }

    pub fn degenerate_right(&self) -> bool {
        self.rho[2] == 0
    }

    /// `2 n1 n2 n3`
    fn mass_scale(&self) -> Rational {
        int(2 * self.gens.iter().product::<i128>())
    }

    /// `(n3 t - m3) / (ρ1 ρ2)`
    fn rising(&self, t: &Rational) -> Result<Rational> {
        let num = sub(&mul(&int(self.gens[2]), t)?, &int(self.weights[2]))?;
        div(&num, &int(self.rho[0] * self.rho[1]))
    }

    /// `(m1 - n1 t) / (ρ2 ρ3)`
    fn falling(&self, t: &Rational) -> Result<Rational> {
        let num = sub(&int(self.weights[0]), &mul(&int(self.gens[0]), t)?)?;
        div(&num, &int(self.rho[1] * self.rho[2]))
    }

    /// `ℓ(t, 1) / ‖r‖`. On a degenerate side the surviving branch also
    /// covers the jump point.
    pub fn normalized_length(&self, t: &Rational) -> Result<Rational> {
        if *t < self.left || *t > self.right {
            Ok(int(0))
        } else if *t < self.peak {
            self.rising(t)
        } else if !self.degenerate_right() {
            self.falling(t)
        } else {
            self.rising(t)
        }
    }

    pub fn density(&self, t: &Rational) -> Result<Rational> {
        mul(&self.mass_scale(), &self.normalized_length(t)?)
    }

    pub fn peak_height(&self) -> Rational {
        frac(self.mass_scale().to_integer(), self.gens[1] * self.rho[1])
    }

    /// Exact `∫_alpha^beta F`.
    pub fn integrate(&self, alpha: &Rational, beta: &Rational) -> Result<Rational> {
        crate::enumeration::check_window(alpha, beta)?;
        let half_scale = self.mass_scale() / int(2);
        let mut total = int(0);
        // rising side: N/(ρ1 ρ2 n3) [(n3 t - m3)^2] from a to b
        if !self.degenerate_left() {
            let a = (*alpha).max(self.left);
            let b = (*beta).min(self.peak);
            if a < b {
                let value = |t: &Rational| -> Result<Rational> {
                    square(&sub(&mul(&int(self.gens[2]), t)?, &int(self.weights[2]))?)
                };
                let coeff = div(&half_scale, &int(self.rho[0] * self.rho[1] * self.gens[2]))?;
                total = add(&total, &mul(&coeff, &sub(&value(&b)?, &value(&a)?)?)?)?;
            }
        }
        // falling side: N/(ρ2 ρ3 n1) [(m1 - n1 a)^2 - (m1 - n1 b)^2]
        if !self.degenerate_right() {
            let a = (*alpha).max(self.peak);
            let b = (*beta).min(self.right);
            if a < b {
                let value = |t: &Rational| -> Result<Rational> {
                    square(&sub(&int(self.weights[0]), &mul(&int(self.gens[0]), t)?)?)
                };
                let coeff = div(&half_scale, &int(self.rho[1] * self.rho[2] * self.gens[0]))?;
                total = add(&total, &mul(&coeff, &sub(&value(&a)?, &value(&b)?)?)?)?;
            }
        }
        Ok(total)
    }

    /// Floating-point `∫_{-∞}^x F`, from the same closed form.
    pub fn cdf_f64(&self, x: f64) -> f64 {
        let (left, peak, right) = (to_f64(&self.left), to_f64(&self.peak), to_f64(&self.right));
        let n = self.gens.map(|v| v as f64);
        let m = self.weights.map(|v| v as f64);
        let rho = self.rho.map(|v| v as f64);
        let half_scale = n[0] * n[1] * n[2];
        if x <= left {
            0.0
        } else if x >= right {
            1.0
        } else if x <= peak && !self.degenerate_left() {
            half_scale / (rho[0] * rho[1] * n[2]) * (n[2] * x - m[2]).powi(2)
        } else {
            1.0 - half_scale / (rho[1] * rho[2] * n[0]) * (m[0] - n[0] * x).powi(2)
        }
    }

    /// Lipschitz constant of `ℓ(t, 1)/‖r‖` on the support:
    /// `(1/ρ2) max{n3/ρ1, n1/ρ3}`, skipping a vanishing `ρ`.
    pub fn lipschitz_constant(&self) -> Rational {
        let mut best = int(0);
        if !self.degenerate_left() {
            best = best.max(frac(self.gens[2], self.rho[0]));
        }
        if !self.degenerate_right() {
            best = best.max(frac(self.gens[0], self.rho[2]));
        }
        best / int(self.rho[1])
    }

    pub fn endpoints(&self, t: &Rational) -> Result<SegmentEndpoints> {
        let (n, m) = (self.gens.map(int), self.weights.map(int));
        let lin = |a: &Rational, b: &Rational| -> Result<Rational> { sub(&mul(a, t)?, b) };
        // n_i t - m_i and m_i - n_i t
        let up = |i: usize| lin(&n[i], &m[i]);
        let down = |i: usize| -> Result<Rational> { sub(&m[i], &mul(&n[i], t)?) };
        let scaled = |v: [Rational; 3], rho: i128| -> Result<[Rational; 3]> {
            let k = int(rho);
            Ok([div(&v[0], &k)?, div(&v[1], &k)?, div(&v[2], &k)?])
        };
        let within = |lo: &Rational, hi: &Rational| *lo <= *t && *t <= *hi;
        let p1 = if self.degenerate_left() {
            None
        } else {
            Some(Endpoint {
                point: scaled([int(0), up(2)?, down(1)?], self.rho[0])?,
                valid: within(&self.left, &self.peak),
            })
        };
        let p2 = Some(Endpoint {
            point: scaled([up(2)?, int(0), down(0)?], self.rho[1])?,
            valid: within(&self.left, &self.right),
        });
        let p3 = if self.degenerate_right() {
            None
        } else {
            Some(Endpoint {
                point: scaled([up(1)?, down(0)?, int(0)], self.rho[2])?,
                valid: within(&self.peak, &self.right),
            })
        };
        Ok(SegmentEndpoints { t: *t, p1, p2, p3 })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Endpoint {
    pub point: [Rational; 3],
    /// Whether the point lies in the nonnegative octant.
    pub valid: bool,
}

/// Intersections of the line `{x : m.x = t, n.x = 1}` with the coordinate
/// planes `x1 = 0`, `x2 = 0` and `x3 = 0`. A plane parallel to the line
/// (vanishing `ρ`) gives `None`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentEndpoints {
    pub t: Rational,
    pub p1: Option<Endpoint>,
    pub p2: Option<Endpoint>,
    pub p3: Option<Endpoint>,
}

impl SegmentEndpoints {
    pub fn valid_points(&self) -> Vec<[Rational; 3]> {
        [self.p1, self.p2, self.p3]
            .into_iter()
            .flatten()
            .filter(|e| e.valid)
            .map(|e| e.point)
            .collect()
    }
}

pub fn segment_endpoints(ws: &WeightSystem, t: &Rational) -> Result<SegmentEndpoints> {
    TriangleDensity::new(ws).endpoints(t)
}

pub fn normalized_segment_length(
    ws: &WeightSystem,
    _dd: &DirectionData,
    t: &Rational,
) -> Result<Rational> {
    TriangleDensity::new(ws).normalized_length(t)
}

pub fn density_f(ws: &WeightSystem, t: &Rational) -> Result<Rational> {
    TriangleDensity::new(ws).density(t)
}

pub fn integrate_f(ws: &WeightSystem, alpha: &Rational, beta: &Rational) -> Result<Rational> {
    TriangleDensity::new(ws).integrate(alpha, beta)
}
