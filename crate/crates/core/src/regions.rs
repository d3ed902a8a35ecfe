//! Exact sets of attainable (footrule, beta) and (gamma, beta) pairs.

use crate::concordance::{MeasureKind, MeasureValue};
use crate::error::{check_range, Error, Result};
use crate::footrule::FootruleParam;
use crate::gini::GiniParam;

/// Range of Blomqvist's beta over copulas with footrule `φ`.
pub fn beta_range_given_phi(phi: FootruleParam) -> (f64, f64) {
    let f = phi.value();
    let lo = 1.0 - 2.0 * (2.0 / 3.0 * (1.0 - f)).sqrt();
    let hi = if f <= 0.25 {
        -1.0 + 2.0 * (2.0 / 3.0 * (1.0 + 2.0 * f)).sqrt()
    } else {
        1.0
    };
    (lo.clamp(-1.0, 1.0), hi.clamp(-1.0, 1.0))
}

/// Range of the footrule over copulas with Blomqvist's beta `β`.
pub fn phi_range_given_beta(beta: f64) -> Result<(f64, f64)> {
    let b = check_range("beta", beta, -1.0, 1.0)?;
    Ok((
        3.0 * (1.0 + b).powi(2) / 16.0 - 0.5,
        1.0 - 3.0 * (1.0 - b).powi(2) / 8.0,
    ))
}

/// Range of Blomqvist's beta over copulas with Gini's gamma `γ`.
pub fn beta_range_given_gamma(gamma: GiniParam) -> (f64, f64) {
    let g = gamma.value();
    let lo = if g <= -0.5 {
        -1.0
    } else {
        1.0 - 2.0 * (2.0 / 3.0 * (1.0 - g)).sqrt()
    };
    let hi = if g <= 0.5 {
        -1.0 + 2.0 * (2.0 / 3.0 * (1.0 + g)).sqrt()
    } else {
        1.0
    };
    (lo.clamp(-1.0, 1.0), hi.clamp(-1.0, 1.0))
}

/// Range of Gini's gamma over copulas with Blomqvist's beta `β`.
pub fn gamma_range_given_beta(beta: f64) -> Result<(f64, f64)> {
    let b = check_range("beta", beta, -1.0, 1.0)?;
    Ok((
        3.0 * (1.0 + b).powi(2) / 8.0 - 1.0,
        1.0 - 3.0 * (1.0 - b).powi(2) / 8.0,
    ))
}

/// A (footrule or gamma, beta) pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurePair {
    pub x: MeasureValue,
    pub y: MeasureValue,
}

impl MeasurePair {
    pub fn new(x: MeasureValue, y: MeasureValue) -> Result<Self> {
        if y.kind != MeasureKind::Blomqvist {
            return Err(Error::KindMismatch(format!(
                "second component must be blomqvist, got {}",
                y.kind.name()
            )));
        }
        Ok(Self { x, y })
    }
}

/// Whether `pair` is attainable by some copula, with closed intervals widened
/// by `slack` in the beta direction.
pub fn pair_in_region(pair: &MeasurePair, slack: f64) -> Result<bool> {
    let (lo, hi) = match pair.x.kind {
        MeasureKind::Footrule => beta_range_given_phi(FootruleParam::new(pair.x.value)?),
        MeasureKind::Gini => beta_range_given_gamma(GiniParam::new(pair.x.value)?),
        MeasureKind::Blomqvist => {
            return Err(Error::KindMismatch(
                "first component must be footrule or gini".into(),
            ));
        }
    };
    let b = pair.y.value;
    Ok(lo - slack <= b && b <= hi + slack)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::copula::UnitPoint;
    use crate::footrule::{f_lower_bound, f_upper_bound};
    use crate::gini::{g_lower_bound, g_upper_bound};

    fn fp(x: f64) -> FootruleParam {
        FootruleParam::new(x).unwrap()
    }

    fn gp(x: f64) -> GiniParam {
        GiniParam::new(x).unwrap()
    }

    fn pair(kind: MeasureKind, x: f64, beta: f64) -> MeasurePair {
        MeasurePair::new(
            MeasureValue::new(kind, x).unwrap(),
            MeasureValue::new(MeasureKind::Blomqvist, beta).unwrap(),
        )
        .unwrap()
    }

    fn close(x: (f64, f64), y: (f64, f64)) -> bool {
        (x.0 - y.0).abs() < 1e-6 && (x.1 - y.1).abs() < 1e-6
    }

    #[test]
    fn examples() {
        assert!(close(beta_range_given_phi(fp(1.0)), (1.0, 1.0)));
        assert!(close(beta_range_given_phi(fp(-0.5)), (-1.0, -1.0)));
        assert!(close(beta_range_given_phi(fp(0.25)), (-0.414214, 1.0)));
        assert!(close(phi_range_given_beta(-1.0).unwrap(), (-0.5, -0.5)));
        assert!(close(phi_range_given_beta(1.0).unwrap(), (0.25, 1.0)));
        assert!(close(phi_range_given_beta(0.0).unwrap(), (-0.3125, 0.625)));
        assert!(close(beta_range_given_gamma(gp(-1.0)), (-1.0, -1.0)));
        assert!(close(beta_range_given_gamma(gp(0.5)), (-0.154701, 1.0)));
        assert!(close(
            beta_range_given_gamma(gp(0.0)),
            (-0.632993, 0.632993)
        ));
        assert!(close(gamma_range_given_beta(0.0).unwrap(), (-0.625, 0.625)));
        assert!(close(gamma_range_given_beta(-1.0).unwrap(), (-1.0, -0.5)));
        assert!(close(gamma_range_given_beta(1.0).unwrap(), (0.5, 1.0)));
        assert!(phi_range_given_beta(1.5).is_err());
    }

    #[test]
    fn membership() {
        assert!(pair_in_region(&pair(MeasureKind::Footrule, 0.0, 0.0), 0.0).unwrap());
        assert!(!pair_in_region(&pair(MeasureKind::Footrule, 1.0, -1.0), 0.0).unwrap());
        assert!(!pair_in_region(&pair(MeasureKind::Gini, -1.0, 0.0), 0.0).unwrap());
        let bb = MeasurePair {
            x: MeasureValue::new(MeasureKind::Blomqvist, 0.0).unwrap(),
            y: MeasureValue::new(MeasureKind::Blomqvist, 0.0).unwrap(),
        };
        assert!(matches!(
            pair_in_region(&bb, 0.0),
            Err(Error::KindMismatch(_))
        ));
        let g = MeasureValue::new(MeasureKind::Gini, 0.0).unwrap();
        assert!(MeasurePair::new(g, g).is_err());
    }

    #[test]
    fn forms_are_mutually_consistent() {
        for i in 0..=400 {
            for j in 0..=400 {
                let beta = -1.0 + 2.0 * i as f64 / 400.0;
                let f = -0.5 + 1.5 * j as f64 / 400.0;
                let g = -1.0 + 2.0 * j as f64 / 400.0;
                let (blo, bhi) = beta_range_given_phi(fp(f));
                let (flo, fhi) = phi_range_given_beta(beta).unwrap();
                let a = blo - 1e-9 <= beta && beta <= bhi + 1e-9;
                let b = flo - 1e-9 <= f && f <= fhi + 1e-9;
                if a != b {
                    // disagreement is allowed only on the boundary curves
                    assert!(
                        (beta - blo).abs().min((beta - bhi).abs()) < 1e-6,
                        "φ={f} β={beta}"
                    );
                }
                let (blo, bhi) = beta_range_given_gamma(gp(g));
                let (glo, ghi) = gamma_range_given_beta(beta).unwrap();
                let a = blo - 1e-9 <= beta && beta <= bhi + 1e-9;
                let b = glo - 1e-9 <= g && g <= ghi + 1e-9;
                if a != b {
                    assert!(
                        (beta - blo).abs().min((beta - bhi).abs()) < 1e-6,
                        "γ={g} β={beta}"
                    );
                }
            }
        }
    }

    #[test]
    fn agrees_with_bounds_at_the_centre() {
        let c = UnitPoint::new(0.5, 0.5).unwrap();
        for i in 0..=60 {
            let f = -0.5 + 1.5 * i as f64 / 60.0;
            let (lo, hi) = beta_range_given_phi(fp(f));
            assert!((lo - (4.0 * f_lower_bound(fp(f), c) - 1.0)).abs() < 1e-12);
            assert!((hi - (4.0 * f_upper_bound(fp(f), c) - 1.0)).abs() < 1e-12);
            let g = -1.0 + 2.0 * i as f64 / 60.0;
            let (lo, hi) = beta_range_given_gamma(gp(g));
            assert!(
                (lo - (4.0 * g_lower_bound(gp(g), c) - 1.0)).abs() < 1e-12,
                "γ={g}"
            );
            assert!(
                (hi - (4.0 * g_upper_bound(gp(g), c) - 1.0)).abs() < 1e-12,
                "γ={g}"
            );
        }
    }
}
