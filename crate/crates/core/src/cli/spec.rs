//! The flat copula-spec grammar used on the command line:
//! `W | M | Pi | f-lower:<φ> | f-upper:<φ> | g-lower:<γ> | g-upper:<γ> |
//! extremal:<lower|upper>,<a>,<b>,<c> | shuffle:<file>`.

use std::path::Path;

use crate::copula::{
    Basic, BivariateEvaluator, ExtremalCopulaSpec, ExtremalKind, ShuffleSpec, UnitPoint,
};
use crate::error::{Error, Result};
use crate::footrule::{FootruleBound, FootruleParam};
use crate::gini::{GiniBound, GiniParam};

#[derive(Debug, Clone, PartialEq)]
pub enum CopulaSpec {
    Basic(Basic),
    Footrule(FootruleBound),
    Gini(GiniBound),
    Extremal(ExtremalCopulaSpec),
    Shuffle(ShuffleSpec),
}

fn real(s: &str, what: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .ok_or_else(|| Error::Parse(format!("{what}: expected a decimal number, got {s:?}")))
}

impl CopulaSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let (head, arg) = match text.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (text, None),
        };
        let need = |name: &str| {
            arg.ok_or_else(|| Error::Parse(format!("{name} needs a parameter, e.g. {name}:0.25")))
        };
        Ok(match head {
            "W" | "M" | "Pi" if arg.is_some() => {
                return Err(Error::Parse(format!("{head} takes no parameter")));
            }
            "W" => CopulaSpec::Basic(Basic::W),
            "M" => CopulaSpec::Basic(Basic::M),
            "Pi" => CopulaSpec::Basic(Basic::Pi),
            "f-lower" => CopulaSpec::Footrule(FootruleBound::lower(FootruleParam::new(real(
                need(head)?,
                "phi",
            )?)?)),
            "f-upper" => CopulaSpec::Footrule(FootruleBound::upper(FootruleParam::new(real(
                need(head)?,
                "phi",
            )?)?)),
            "g-lower" => CopulaSpec::Gini(GiniBound::lower(GiniParam::new(real(
                need(head)?,
                "gamma",
            )?)?)),
            "g-upper" => CopulaSpec::Gini(GiniBound::upper(GiniParam::new(real(
                need(head)?,
                "gamma",
            )?)?)),
            "extremal" => {
                let parts: Vec<&str> = need(head)?.split(',').collect();
                if parts.len() != 4 {
                    return Err(Error::Parse(
                        "extremal expects <lower|upper>,<a>,<b>,<c>".into(),
                    ));
                }
                let kind = match parts[0].trim() {
                    "lower" => ExtremalKind::Lower,
                    "upper" => ExtremalKind::Upper,
                    other => return Err(Error::Parse(format!("unknown extremal kind {other:?}"))),
                };
                ExtremalCopulaSpec::new(
                    kind,
                    real(parts[1], "a")?,
                    real(parts[2], "b")?,
                    real(parts[3], "c")?,
                )
                .map(CopulaSpec::Extremal)?
            }
            "shuffle" => {
                let path = need(head)?;
                let body = std::fs::read_to_string(Path::new(path))
                    .map_err(|e| Error::Parse(format!("cannot read shuffle file {path:?}: {e}")))?;
                CopulaSpec::Shuffle(ShuffleSpec::parse(&body)?)
            }
            other => return Err(Error::Parse(format!("unknown copula spec {other:?}"))),
        })
    }
}

impl BivariateEvaluator for CopulaSpec {
    fn eval(&self, p: UnitPoint) -> f64 {
        match self {
            CopulaSpec::Basic(c) => c.eval(p),
            CopulaSpec::Footrule(c) => c.eval(p),
            CopulaSpec::Gini(c) => c.eval(p),
            CopulaSpec::Extremal(c) => c.eval(p),
            CopulaSpec::Shuffle(c) => c.eval(p),
        }
    }

    fn label(&self) -> String {
        match self {
            CopulaSpec::Basic(c) => c.label(),
            CopulaSpec::Footrule(c) => c.label(),
            CopulaSpec::Gini(c) => c.label(),
            CopulaSpec::Extremal(c) => c.label(),
            CopulaSpec::Shuffle(c) => c.label(),
        }
    }
}
