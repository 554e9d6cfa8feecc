//! Explicit error bounds for the distance between the scaled window mass of
//! `Λ⟦n⟧` and the integral of the limiting density.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::enumeration::{check_window, count_in_window};
use crate::error::{Error, Result};
use crate::exact::{add, div, frac, int, mul, sub, Rational};
use crate::geometry::TriangleDensity;
use crate::system::{DirectionData, WeightSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundInputs {
    pub n: u64,
    pub alpha: Rational,
    pub beta: Rational,
    pub d: i128,
    /// `1 / (n2 ρ2)`, the peak of `ℓ(t, 1)/‖r‖`.
    pub c1: Rational,
    /// `(1/ρ2) max{n3/ρ1, n1/ρ3}`, its Lipschitz constant.
    pub c2: Rational,
}

impl BoundInputs {
    pub fn new(
        ws: &WeightSystem,
        dd: &DirectionData,
        n: u64,
        alpha: &Rational,
        beta: &Rational,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroElement);
        }
        check_window(alpha, beta)?;
        let n2 = ws.gens().get()[1] as i128;
        Ok(BoundInputs {
            n,
            alpha: *alpha,
            beta: *beta,
            d: dd.d,
            c1: frac(1, n2 * dd.rho2()),
            c2: TriangleDensity::new(ws).lipschitz_constant(),
        })
    }

    /// `beta - alpha + 2d/n`
    fn padded_width(&self) -> Result<Rational> {
        add(&sub(&self.beta, &self.alpha)?, &frac(2 * self.d, self.n as i128))
    }
}

/// `(2 n1 n2 n3 / n) [5d/n2 + 2d/n + (β − α + 2d/n)(1 + d max{n1, n3})]`
pub fn theorem_bound(
    ws: &WeightSystem,
    dd: &DirectionData,
    n: u64,
    alpha: &Rational,
    beta: &Rational,
) -> Result<Rational> {
    let inputs = BoundInputs::new(ws, dd, n, alpha, beta)?;
    let [n1, n2, n3] = ws.gens().wide();
    let d = dd.d;
    let nn = n as i128;
    let slope = int(1 + d * n1.max(n3));
    let bracket = add(
        &add(&frac(5 * d, n2), &frac(2 * d, nn))?,
        &mul(&inputs.padded_width()?, &slope)?,
    )?;
    mul(&frac(2 * ws.gens().product(), nn), &bracket)
}

/// `2 n1 n2 n3 [(β − α + 2d/n)(1 + d C2) + d(5 C1 + 2/n)] / n`
pub fn refined_bound(
    ws: &WeightSystem,
    dd: &DirectionData,
    n: u64,
    alpha: &Rational,
    beta: &Rational,
) -> Result<Rational> {
    let inputs = BoundInputs::new(ws, dd, n, alpha, beta)?;
    refined_from(&inputs, ws.gens().product())
}

fn refined_from(inputs: &BoundInputs, gens_product: i128) -> Result<Rational> {
    let d = int(inputs.d);
    let nn = inputs.n as i128;
    let slope = add(&int(1), &mul(&d, &inputs.c2)?)?;
    let tail = mul(&d, &add(&mul(&int(5), &inputs.c1)?, &frac(2, nn))?)?;
    let bracket = add(&mul(&inputs.padded_width()?, &slope)?, &tail)?;
    mul(&frac(2 * gens_product, nn), &bracket)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: u64,
    pub alpha: Rational,
    pub beta: Rational,
    /// `[alpha, beta] ∩ [m3/n3, m1/n1]`, or `None` when they are disjoint.
    pub clipped: Option<(Rational, Rational)>,
    pub count: u128,
    /// `|Λ⟦n⟧ ∩ [αn, βn]| / (n² / (2 n1 n2 n3))`
    pub scaled_mass: Rational,
    pub integral: Rational,
    pub error: Rational,
    pub theorem_bound: Rational,
    pub refined_bound: Rational,
}

impl BoundReport {
    pub fn within_theorem_bound(&self) -> bool {
        self.error <= self.theorem_bound
    }

    pub fn within_refined_bound(&self) -> bool {
        self.error <= self.refined_bound
    }
}

/// Computes the actual discrepancy for `[alpha, beta]` and both bounds,
/// evaluated on the window clipped to the support of the density.
pub fn verify_bound(
    ws: &WeightSystem,
    dd: &DirectionData,
    n: u64,
    alpha: &Rational,
    beta: &Rational,
) -> Result<BoundReport> {
    if n == 0 {
        return Err(Error::ZeroElement);
    }
    check_window(alpha, beta)?;
    let density = TriangleDensity::new(ws);
    let lo = (*alpha).max(density.left);
    let hi = (*beta).min(density.right);
    let clipped = (lo <= hi).then_some((lo, hi));
    // a window missing the support is measured as the empty window at its
    // nearest support endpoint
    let (lo, hi) = clipped.unwrap_or(if *beta < density.left {
        (density.left, density.left)
    } else {
        (density.right, density.right)
    });

    let count = match clipped {
        Some(_) => count_in_window(ws, n, &lo, &hi)?,
        None => 0,
    };
    let nn = n as i128;
    let count_q = int(i128::try_from(count).map_err(|_| Error::Overflow)?);
    let scaled_mass = div(
        &mul(&count_q, &int(2 * ws.gens().product()))?,
        &int(nn.checked_mul(nn).ok_or(Error::Overflow)?),
    )?;
    let integral = density.integrate(&lo, &hi)?;
    let error = sub(&scaled_mass, &integral)?.abs();
    Ok(BoundReport {
        n,
        alpha: *alpha,
        beta: *beta,
        clipped,
        count,
        scaled_mass,
        integral,
        error,
        theorem_bound: theorem_bound(ws, dd, n, &lo, &hi)?,
        refined_bound: refined_bound(ws, dd, n, &lo, &hi)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::to_decimal_string;
    use crate::system::validate;

    fn boxes() -> (WeightSystem, DirectionData) {
        let ws = validate([20, 9, 6], [1, 1, 1], false).unwrap();
        let dd = ws.direction();
        (ws, dd)
    }

    #[test]
    fn constants() {
        let (ws, dd) = boxes();
        let b = BoundInputs::new(&ws, &dd, 100, &int(8), &int(15)).unwrap();
        assert_eq!(b.c1, frac(1, 14));
        assert_eq!(b.c2, frac(1, 42));
        assert_eq!(b.d, 1);
    }

    #[test]
    fn bound_values() {
        let (ws, dd) = boxes();
        let dec = |q: Rational, p| to_decimal_string(&q, p);
        assert_eq!(dec(theorem_bound(&ws, &dd, 100, &int(8), &int(15)).unwrap(), 4), "0.3812");
        assert_eq!(dec(theorem_bound(&ws, &dd, 1000, &int(8), &int(15)).unwrap(), 6), "0.038012");
        assert_eq!(dec(refined_bound(&ws, &dd, 100, &int(8), &int(15)).unwrap(), 6), "0.151286");
        let seven_one = frac(71, 10);
        assert_eq!(dec(refined_bound(&ws, &dd, 10_000, &int(7), &seven_one).unwrap(), 6), "0.000092");
        assert_eq!(dec(refined_bound(&ws, &dd, 1000, &int(7), &seven_one).unwrap(), 6), "0.000927");
    }

    #[test]
    fn bounds_shrink_like_one_over_n() {
        let (ws, dd) = boxes();
        let at = |n| theorem_bound(&ws, &dd, n, &int(8), &int(15)).unwrap();
        assert!(at(1000) < at(100) / int(9));
        for bound in [theorem_bound, refined_bound] {
            let scaled: Vec<Rational> = [100u64, 1000, 10_000]
                .iter()
                .map(|&n| bound(&ws, &dd, n, &int(8), &int(15)).unwrap() * int(n as i128))
                .collect();
            assert!(scaled.iter().all(|v| *v > int(0)));
            let change = (scaled[2] - scaled[1]).abs() / scaled[1];
            assert!(change < frac(1, 10));
        }
    }

    #[test]
    fn first_table_row() {
        let (ws, dd) = boxes();
        let r = verify_bound(&ws, &dd, 100, &int(8), &int(15)).unwrap();
        assert_eq!(r.count, 3785);
        assert_eq!(r.scaled_mass, frac(757, 1000));
        assert_eq!(r.integral, frac(2401, 3234));
        assert_eq!(to_decimal_string(&r.error, 6), "0.014576");
        assert!(r.within_theorem_bound() && r.within_refined_bound());
    }

    #[test]
    fn clipping_leaves_mass_and_integral_unchanged() {
        let (ws, dd) = boxes();
        for n in [1u64, 37, 100, 523] {
            let wide = verify_bound(&ws, &dd, n, &int(-5), &int(40)).unwrap();
            let tight = verify_bound(&ws, &dd, n, &int(6), &int(20)).unwrap();
            assert_eq!(wide.scaled_mass, tight.scaled_mass);
            assert_eq!(wide.integral, tight.integral);
            assert_eq!(wide.clipped, Some((int(6), int(20))));
        }
        let outside = verify_bound(&ws, &dd, 100, &int(25), &int(30)).unwrap();
        assert_eq!(outside.clipped, None);
        assert_eq!(outside.count, 0);
        assert_eq!(outside.error, int(0));
    }

    #[test]
    fn rejects_bad_arguments() {
        let (ws, dd) = boxes();
        assert_eq!(verify_bound(&ws, &dd, 0, &int(8), &int(15)), Err(Error::ZeroElement));
        assert!(matches!(
            verify_bound(&ws, &dd, 10, &int(15), &int(8)),
            Err(Error::InvalidWindow { .. })
        ));
    }
}
