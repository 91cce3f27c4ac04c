//! Ring selectors such as `coxeter`, `interval:1,sqrt2:poly` or `product:box:1,coxeter`.

use std::fmt;
use std::str::FromStr;

use minkring::geometry::{format_point, Ambient, GridPoint, Scalar};
use minkring::laurent::{LaurentPoly, ParseOptions};
use minkring::presentations::{
    box_ring, coxeter_ring, interval_ring, point_ring, principal_member, principal_presentation,
    IntervalCase, IntervalNaming, Presentation, PrincipalShape, RingMode,
};
use minkring::products::{product_presentation, ProductPresentation};
use num_rational::BigRational;
use num_traits::Zero;

use crate::CliError;

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq)]
pub enum RingSelector {
    Coxeter,
    Point,
    Interval {
        alpha: Scalar,
        beta: Scalar,
        mode: RingMode,
        naming: IntervalNaming,
    },
    Box {
        d: usize,
        signed: bool,
    },
    Product(Box<RingSelector>, Box<RingSelector>),
    Principal {
        shape: PrincipalShape,
        mode: RingMode,
    },
}

fn mode_name(mode: RingMode) -> &'static str {
    match mode {
        RingMode::Polynomial => "poly",
        RingMode::Laurent => "laurent",
    }
}

fn bad(text: &str) -> CliError {
    CliError::Selector(text.to_string())
}

impl fmt::Display for RingSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSelector::Coxeter => write!(f, "coxeter"),
            RingSelector::Point => write!(f, "point"),
            RingSelector::Interval {
                alpha,
                beta,
                mode,
                naming,
            } => {
                write!(f, "interval:{alpha},{beta}:{}", mode_name(*mode))?;
                if *naming == IntervalNaming::Full {
                    write!(f, ":full")?;
                }
                Ok(())
            }
            RingSelector::Box { d, signed } => {
                write!(f, "box:{d}{}", if *signed { ":signed" } else { "" })
            }
            RingSelector::Product(l, r) => write!(f, "product:{l},{r}"),
            RingSelector::Principal { shape, mode } => {
                write!(f, "principal:{shape}:{}", mode_name(*mode))
            }
        }
    }
}

fn parse_interval(text: &str, rest: &str) -> Result<RingSelector, CliError> {
    let mut parts = rest.split(':');
    let (a, b) = parts
        .next()
        .and_then(|p| p.split_once(','))
        .ok_or_else(|| bad(text))?;
    let alpha: Scalar = a.parse().map_err(|_| bad(text))?;
    let beta: Scalar = b.parse().map_err(|_| bad(text))?;
    let mut mode = RingMode::Laurent;
    let mut naming = IntervalNaming::Relabeled;
    for option in parts {
        match option {
            "poly" => mode = RingMode::Polynomial,
            "laurent" => mode = RingMode::Laurent,
            "full" => naming = IntervalNaming::Full,
            "relabeled" => naming = IntervalNaming::Relabeled,
            _ => return Err(bad(text)),
        }
    }
    Ok(RingSelector::Interval {
        alpha,
        beta,
        mode,
        naming,
    })
}

fn parse_product(text: &str, rest: &str) -> Result<RingSelector, CliError> {
    rest.match_indices(',')
        .find_map(|(i, _)| {
            let l = rest[..i].parse::<RingSelector>().ok()?;
            let r = rest[i + 1..].parse::<RingSelector>().ok()?;
            Some(RingSelector::Product(Box::new(l), Box::new(r)))
        })
        .ok_or_else(|| bad(text))
}

impl FromStr for RingSelector {
    type Err = CliError;

    fn from_str(text: &str) -> Result<Self, CliError> {
        let text = text.trim();
        let (head, rest) = text.split_once(':').unwrap_or((text, ""));
        match head {
            "coxeter" if rest.is_empty() => Ok(RingSelector::Coxeter),
            "point" if rest.is_empty() => Ok(RingSelector::Point),
            "interval" => parse_interval(text, rest),
            "box" => {
                let (d, flag) = rest.split_once(':').unwrap_or((rest, ""));
                let d = d.parse().map_err(|_| bad(text))?;
                match flag {
                    "" => Ok(RingSelector::Box { d, signed: false }),
                    "signed" => Ok(RingSelector::Box { d, signed: true }),
                    _ => Err(bad(text)),
                }
            }
            "product" => parse_product(text, rest),
            "principal" => {
                let (shape, mode) = rest.split_once(':').unwrap_or((rest, "poly"));
                let shape = shape.parse().map_err(|_| bad(text))?;
                let mode = match mode {
                    "poly" => RingMode::Polynomial,
                    "laurent" => RingMode::Laurent,
                    _ => return Err(bad(text)),
                };
                Ok(RingSelector::Principal { shape, mode })
            }
            _ => Err(bad(text)),
        }
    }
}

impl RingSelector {
    pub fn build(&self) -> Result<Ring, CliError> {
        Ok(match self {
            RingSelector::Coxeter => Ring::Presented(coxeter_ring()),
            RingSelector::Point => Ring::Presented(point_ring()),
            RingSelector::Interval {
                alpha,
                beta,
                mode,
                naming,
            } => {
                let (p, case) = interval_ring(alpha.clone(), beta.clone(), *mode, *naming)?;
                Ring::Interval(p, case)
            }
            RingSelector::Box { d, signed } => Ring::Presented(box_ring(*d, *signed)),
            RingSelector::Product(l, r) => {
                let l = l.build()?.into_presentation()?;
                let r = r.build()?.into_presentation()?;
                Ring::Product(Box::new(product_presentation(&l, &r)?))
            }
            RingSelector::Principal { shape, mode } => Ring::Principal {
                shape: *shape,
                mode: *mode,
                realised: principal_presentation(*shape, *mode),
            },
        })
    }
}

/// A constructed ring, ready for queries.
#[derive(Clone, Debug)]
pub enum Ring {
    Presented(Presentation),
    Interval(Presentation, IntervalCase),
    Product(Box<ProductPresentation>),
    /// `x ↦ S`; only some shapes have a geometric realisation.
    Principal {
        shape: PrincipalShape,
        mode: RingMode,
        realised: Option<Presentation>,
    },
}

/// Verdict of a kernel query with a printable witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub member: bool,
    pub witness: Option<String>,
}

impl Ring {
    pub fn presentation(&self) -> Option<&Presentation> {
        match self {
            Ring::Presented(p) | Ring::Interval(p, _) => Some(p),
            Ring::Product(p) => Some(p.combined()),
            Ring::Principal { realised, .. } => realised.as_ref(),
        }
    }

    fn into_presentation(self) -> Result<Presentation, CliError> {
        match self {
            Ring::Presented(p) | Ring::Interval(p, _) => Ok(p),
            Ring::Product(p) => Ok(p.combined().clone()),
            Ring::Principal { shape, .. } => Err(CliError::Unsupported(format!(
                "principal:{shape} cannot be a product factor"
            ))),
        }
    }

    pub fn id(&self) -> String {
        match self {
            Ring::Principal { shape, mode, .. } => {
                format!("principal:{shape}:{}", mode_name(*mode))
            }
            _ => self.presentation().expect("presented").id().to_string(),
        }
    }

    pub fn parse(&self, text: &str) -> Result<LaurentPoly, CliError> {
        match self {
            Ring::Principal { mode, .. } => {
                let invertible = match mode {
                    RingMode::Laurent => vec!["x".to_string()],
                    RingMode::Polynomial => Vec::new(),
                };
                let options = ParseOptions::new(["x".to_string()], invertible);
                Ok(LaurentPoly::parse_with(text, &options)?)
            }
            _ => Ok(self.presentation().expect("presented").parse(text)?),
        }
    }

    pub fn verdict(&self, f: &LaurentPoly) -> Result<Verdict, CliError> {
        match self {
            Ring::Principal { shape, mode, .. } => {
                let member = principal_member(*shape, *mode, f)?;
                let witness = if member { None } else { principal_witness(f)? };
                Ok(Verdict { member, witness })
            }
            _ => {
                let p = self.presentation().expect("presented");
                let m = p.membership(f)?;
                let ambient = p.ambient();
                Ok(Verdict {
                    member: m.member,
                    witness: m
                        .witness
                        .map(|(point, value)| describe_point(&ambient, &point, &value)),
                })
            }
        }
    }
}

/// Evaluation point `x = 0` or `x = 1` where `f` does not vanish, if any.
fn principal_witness(f: &LaurentPoly) -> Result<Option<String>, CliError> {
    for v in [0i64, 1] {
        let at = BigRational::from_integer(v.into());
        let Ok(image) = f.substitute(&[("x".to_string(), at)].into()) else {
            continue;
        };
        let value = image.constant_value().unwrap_or_else(BigRational::zero);
        if !value.is_zero() {
            return Ok(Some(format!("x={v} -> {value}")));
        }
    }
    Ok(None)
}

const GRID_LABELS: [(&str, i64, i64); 4] = [("O", 0, 0), ("A", 1, 0), ("B", 0, 1), ("A+B", 1, 1)];

/// `A (1,0) -> 1`, naming the corners of the unit rhombus on the grid.
pub fn describe_point(ambient: &Ambient, point: &[Scalar], value: &BigRational) -> String {
    let label = match ambient {
        Ambient::Grid => {
            let p = point
                .iter()
                .map(Scalar::as_integer)
                .collect::<Option<Vec<_>>>();
            p.and_then(|p| {
                let at = GridPoint::new(p[0], p[1]);
                GRID_LABELS
                    .iter()
                    .find(|(_, u, v)| GridPoint::new(*u, *v) == at)
                    .map(|(name, _, _)| format!("{name} "))
            })
        }
        _ => None,
    };
    format!(
        "{}{} -> {value}",
        label.unwrap_or_default(),
        format_point(point)
    )
}
