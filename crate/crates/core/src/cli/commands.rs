use crate::concordance::{beta, gamma, phi};
use crate::copula::{
    check_quasicopula, frechet_w, sample_conditional, Basic, BivariateEvaluator, ShuffleSpec,
    UnitPoint,
};
use crate::effectiveness::table1;
use crate::error::{Error, Result};
use crate::footrule::{delta_region, f_lower_bound, f_upper_bound, FootruleParam};
use crate::gini::{g_lower_bound, g_upper_bound, omega_region, GiniParam, OmegaRegionId};
use crate::quadrature::QuadratureConfig;
use crate::regions::{beta_range_given_gamma, beta_range_given_phi};

use super::csv::{Cell, CsvTable};
use super::spec::CopulaSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measure {
    Phi,
    Gamma,
    Beta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundName {
    FLower,
    FUpper,
    GLower,
    GUpper,
}

impl BoundName {
    pub fn name(self) -> &'static str {
        match self {
            BoundName::FLower => "f-lower",
            BoundName::FUpper => "f-upper",
            BoundName::GLower => "g-lower",
            BoundName::GUpper => "g-upper",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    PhiBeta,
    GammaBeta,
}

pub fn cmd_eval(measure: Measure, spec: &str, n: usize) -> Result<CsvTable> {
    let c = CopulaSpec::parse(spec)?;
    let q = QuadratureConfig::simpson(n)?;
    let (name, value) = match measure {
        Measure::Phi => ("phi", phi(&c, q).value),
        Measure::Gamma => ("gamma", gamma(&c, q).value),
        Measure::Beta => ("beta", beta(&c).value),
    };
    let mut t = CsvTable::new(["measure", "copula", "value"]);
    t.push(vec![name.into(), c.label().into(), value.into()])?;
    Ok(t)
}

pub fn cmd_grid(bound: BoundName, param: f64, n: usize) -> Result<CsvTable> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "grid n",
            value: n as f64,
            lo: 2.0,
            hi: f64::INFINITY,
        });
    }
    enum P {
        F(FootruleParam),
        G(GiniParam),
    }
    let p = match bound {
        BoundName::FLower | BoundName::FUpper => P::F(FootruleParam::new(param)?),
        BoundName::GLower | BoundName::GUpper => P::G(GiniParam::new(param)?),
    };
    let mut t = CsvTable::new(["a", "b", "value", "region"]);
    for i in 0..=n {
        for j in 0..=n {
            let x = UnitPoint::clamped(i as f64 / n as f64, j as f64 / n as f64);
            let (value, region) = match (&p, bound) {
                (P::F(f), BoundName::FLower) => {
                    let v = f_lower_bound(*f, x);
                    (
                        v,
                        if v > frechet_w(x) {
                            "L".to_string()
                        } else {
                            "W".to_string()
                        },
                    )
                }
                (P::F(f), _) => (f_upper_bound(*f, x), delta_region(*f, x).to_string()),
                (P::G(g), BoundName::GLower) => {
                    let neg = GiniParam::new(-g.value())?;
                    let r = omega_region(neg, UnitPoint::clamped(x.u(), 1.0 - x.v()));
                    let label = if r == OmegaRegionId::None {
                        "W".to_string()
                    } else {
                        r.to_string()
                    };
                    (g_lower_bound(*g, x), label)
                }
                (P::G(g), _) => (g_upper_bound(*g, x), omega_region(*g, x).to_string()),
            };
            t.push(vec![
                x.u().into(),
                x.v().into(),
                value.into(),
                region.into(),
            ])?;
        }
    }
    Ok(t)
}

pub fn cmd_table1(n: usize) -> Result<CsvTable> {
    let mut t = CsvTable::new(["kind", "k", "m"]);
    for r in table1(n)? {
        t.push(vec![r.kind.name().into(), r.k.into(), r.m.into()])?;
    }
    Ok(t)
}

pub fn cmd_region(kind: PairKind, step: f64) -> Result<CsvTable> {
    if !(step > 0.0 && step <= 0.1) {
        return Err(Error::OutOfRange {
            what: "step",
            value: step,
            lo: 0.0,
            hi: 0.1,
        });
    }
    let (lo, hi) = match kind {
        PairKind::PhiBeta => (-0.5, 1.0),
        PairKind::GammaBeta => (-1.0, 1.0),
    };
    let mut ks: Vec<f64> = (0..)
        .map(|i| lo + i as f64 * step)
        .take_while(|&k| k < hi - 1e-9)
        .collect();
    ks.push(hi);
    let mut t = CsvTable::new(["k", "beta_lo", "beta_hi"]);
    for k in ks {
        let (b_lo, b_hi) = match kind {
            PairKind::PhiBeta => beta_range_given_phi(FootruleParam::new(k)?),
            PairKind::GammaBeta => beta_range_given_gamma(GiniParam::new(k)?),
        };
        t.push(vec![k.into(), b_lo.into(), b_hi.into()])?;
    }
    Ok(t)
}

/// Grid resolution of the 2-increasingness audit run before sampling.
pub const SAMPLE_AUDIT_N: usize = 200;

pub fn cmd_sample(spec: &str, count: usize, seed: u64) -> Result<CsvTable> {
    let c = CopulaSpec::parse(spec)?;
    let report = check_quasicopula(&c, SAMPLE_AUDIT_N, 1e-9)?;
    if !report.is_two_increasing {
        return Err(Error::NotACopula(format!(
            "{} (rectangle [{}, {}] x [{}, {}] has volume {:.3e})",
            c.label(),
            report.worst_rectangle.0.u(),
            report.worst_rectangle.1.u(),
            report.worst_rectangle.0.v(),
            report.worst_rectangle.1.v(),
            report.worst_volume
        )));
    }
    let points = match &c {
        CopulaSpec::Basic(Basic::M) => {
            ShuffleSpec::new(vec![0.0, 1.0], vec![1], vec![1])?.sample(count, seed)?
        }
        CopulaSpec::Basic(Basic::W) => {
            ShuffleSpec::new(vec![0.0, 1.0], vec![1], vec![-1])?.sample(count, seed)?
        }
        CopulaSpec::Extremal(e) => e.to_shuffle().sample(count, seed)?,
        CopulaSpec::Shuffle(s) => s.sample(count, seed)?,
        other => sample_conditional(other, count, seed, 1e-9)?,
    };
    let mut t = CsvTable::new(["u", "v"]);
    for p in points {
        t.push(vec![p.u().into(), p.v().into()])?;
    }
    Ok(t)
}

pub fn cmd_check(spec: &str, n: usize, tol: f64) -> Result<CsvTable> {
    let c = CopulaSpec::parse(spec)?;
    let r = check_quasicopula(&c, n, tol)?;
    let mut t = CsvTable::new([
        "is_quasicopula",
        "is_two_increasing",
        "worst_volume",
        "rect_u_lo",
        "rect_v_lo",
        "rect_u_hi",
        "rect_v_hi",
        "lipschitz_violation",
        "margin_violation",
    ]);
    let (lo, hi) = r.worst_rectangle;
    t.push(vec![
        r.is_quasicopula.into(),
        r.is_two_increasing.into(),
        Cell::Text(format!("{:.6e}", r.worst_volume)),
        lo.u().into(),
        lo.v().into(),
        hi.u().into(),
        hi.v().into(),
        Cell::Text(format!("{:.6e}", r.lipschitz_violation)),
        Cell::Text(format!("{:.6e}", r.margin_violation)),
    ])?;
    Ok(t)
}
