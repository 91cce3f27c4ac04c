//! Command layer behind the `minkring` binary.
//!
//! A [`Command`] names a verb, a ring selector and a payload; [`run`] executes
//! it against the library and returns a [`Report`] that renders as text or as
//! `field: value` lines.

use std::fmt;

use minkring::identities::{
    covers_vertices, id_expand_in, id_holds_in, minimal_antichains, minimal_covers,
    FacePresentation,
};
use minkring::laurent::LaurentPoly;
use minkring::presentations::{classify_principal, Presentation};
use minkring::rewriting::{
    first_normal_form, recognize_grid_set, second_normal_form, zn_tiling, Tiling,
};

mod faces;
mod report;
mod selector;

pub use faces::LabeledPolytope;
pub use report::{Format, Report};
pub use selector::{describe_point, Ring, RingSelector, Verdict};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] minkring::Error),
    #[error("invalid ring selector `{0}`")]
    Selector(String),
    #[error(
        "invalid face `{0}`: expected vertex:X, edge:XY or face:XYZ with known vertex letters"
    )]
    Face(String),
    #[error("{verb}: {message}")]
    Arity { verb: Verb, message: String },
    #[error("{0}")]
    Unsupported(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Verb {
    Member,
    Normalize,
    Tile,
    Identity,
    MinimalCovers,
    Euler,
    Product,
    Classify,
}

impl fmt::Display for Verb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verb::Member => "member",
            Verb::Normalize => "normalize",
            Verb::Tile => "tile",
            Verb::Identity => "identity",
            Verb::MinimalCovers => "minimal-covers",
            Verb::Euler => "euler",
            Verb::Product => "product",
            Verb::Classify => "classify",
        })
    }
}

/// How `tile` prints its result.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, clap::ValueEnum)]
pub enum TileForm {
    /// Translated open tiles such as `x1*ẙ2`.
    #[default]
    Open,
    /// The tiling expanded into the generator alphabet.
    Expanded,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Command {
    pub verb: Verb,
    pub ring: RingSelector,
    pub payload: Option<String>,
    pub polytope: Option<String>,
    pub cover: Option<String>,
    /// `tile` the power `z^n` instead of a payload.
    pub zn: Option<u32>,
    pub tile_form: TileForm,
}

impl Command {
    pub fn new(verb: Verb, ring: RingSelector) -> Self {
        Command {
            verb,
            ring,
            payload: None,
            polytope: None,
            cover: None,
            zn: None,
            tile_form: TileForm::default(),
        }
    }

    pub fn payload(mut self, text: impl Into<String>) -> Self {
        self.payload = Some(text.into());
        self
    }

    pub fn polytope(mut self, text: impl Into<String>) -> Self {
        self.polytope = Some(text.into());
        self
    }

    pub fn cover(mut self, text: impl Into<String>) -> Self {
        self.cover = Some(text.into());
        self
    }

    /// Whether the verb reads a polynomial, so a missing one may come from standard input.
    pub fn wants_polynomial(&self) -> bool {
        match self.verb {
            Verb::Member | Verb::Normalize | Verb::Euler => true,
            Verb::Tile => self.zn.is_none(),
            _ => false,
        }
    }

    /// Checks the payload and flags the verb needs before anything runs.
    pub fn validate(&self) -> Result<(), CliError> {
        let fail = |message: &str| {
            Err(CliError::Arity {
                verb: self.verb,
                message: message.to_string(),
            })
        };
        let has_payload = self.payload.is_some();
        match self.verb {
            Verb::Member | Verb::Normalize | Verb::Euler if !has_payload => {
                fail("expected one polynomial")
            }
            Verb::Tile if has_payload == self.zn.is_some() => {
                fail("expected either a polynomial or --zn")
            }
            Verb::Identity if has_payload || self.polytope.is_none() || self.cover.is_none() => {
                fail("expected --polytope and --cover and no polynomial")
            }
            Verb::MinimalCovers if has_payload || self.polytope.is_none() => {
                fail("expected --polytope and no polynomial")
            }
            Verb::Classify if has_payload => fail("takes no polynomial"),
            Verb::Product if !matches!(self.ring, RingSelector::Product(..)) => {
                fail("expected a product:<left>,<right> ring")
            }
            Verb::Normalize | Verb::Tile if self.ring != RingSelector::Coxeter => {
                fail("normal forms and tilings live in the coxeter ring")
            }
            _ => Ok(()),
        }
    }
}

fn presented(ring: &Ring) -> Result<&Presentation, CliError> {
    ring.presentation()
        .ok_or_else(|| CliError::Unsupported(format!("{} has no geometric realisation", ring.id())))
}

fn counts(t: &Tiling) -> String {
    t.counts()
        .iter()
        .map(|(tile, c)| format!("{}={c}", tile.symbol()))
        .collect::<Vec<_>>()
        .join(" ")
}

fn ideal(declared: &[LaurentPoly]) -> String {
    let gens: Vec<String> = declared.iter().map(ToString::to_string).collect();
    format!("({})", gens.join(", "))
}

/// Executes a validated command.
pub fn run(cmd: &Command) -> Result<Report, CliError> {
    cmd.validate()?;
    let payload = cmd.payload.as_deref().unwrap_or_default();
    match cmd.verb {
        Verb::Member => {
            let ring = cmd.ring.build()?;
            let f = ring.parse(payload)?;
            let v = ring.verdict(&f)?;
            let mut r = Report::new(ring.id(), payload, v.member).with("canonical", &f);
            r.witness = v.witness;
            Ok(r)
        }
        Verb::Normalize => {
            let ring = cmd.ring.build()?;
            let f = ring.parse(payload)?;
            let s = recognize_grid_set(&f)?;
            let (params, nf) = first_normal_form(&s);
            Ok(Report::new(ring.id(), payload, nf)
                .with("canonical", &f)
                .with("grid", minkring::geometry::Polytope::Grid(s))
                .with("params", params))
        }
        Verb::Tile => {
            let ring = cmd.ring.build()?;
            let p = presented(&ring)?;
            let (input, target, tiling) = match cmd.zn {
                Some(n) => (
                    format!("z^{n}"),
                    LaurentPoly::var_pow("z", n as i64),
                    zn_tiling(n),
                ),
                None => {
                    let f = ring.parse(payload)?;
                    let t = second_normal_form(&recognize_grid_set(&f)?);
                    (payload.to_string(), f, t)
                }
            };
            let expanded = tiling.to_poly();
            let verified = p.kernel_member(&(&target - &expanded))?;
            let result = match cmd.tile_form {
                TileForm::Open => tiling.to_string(),
                TileForm::Expanded => expanded.to_string(),
            };
            Ok(Report::new(ring.id(), input, result)
                .with("counts", counts(&tiling))
                .with("verified", verified))
        }
        Verb::Identity => {
            let lp: LabeledPolytope = cmd.polytope.as_deref().unwrap_or_default().parse()?;
            let cover_text = cmd.cover.as_deref().unwrap_or_default();
            let c = lp.cover(cover_text)?;
            let fp = FacePresentation::new(lp.polytope())?;
            let expansion = id_expand_in(&fp, &c)?;
            let holds = id_holds_in(&fp, &c)?;
            let covers = covers_vertices(&c);
            let mut r = Report::new(
                fp.presentation().id(),
                cover_text,
                format!("holds={holds} covers={covers}"),
            )
            .with("polytope", lp.name())
            .with("identity", expansion.clone());
            if !holds {
                let v = Ring::Presented(fp.presentation().clone()).verdict(&expansion)?;
                r.witness = v.witness;
            }
            Ok(r)
        }
        Verb::MinimalCovers => {
            let lp: LabeledPolytope = cmd.polytope.as_deref().unwrap_or_default().parse()?;
            let fp = FacePresentation::new(lp.polytope())?;
            let antichains = minimal_antichains(lp.polytope())?;
            let mut r = Report::new(fp.presentation().id(), lp.name(), antichains.len())
                .with("covers", minimal_covers(lp.polytope())?.len());
            for c in &antichains {
                let line = format!("{} | {}", lp.cover_name(c), id_expand_in(&fp, c)?);
                r = r.with("antichain", line);
            }
            Ok(r)
        }
        Verb::Euler => {
            let ring = cmd.ring.build()?;
            let p = presented(&ring)?;
            let f = ring.parse(payload)?;
            let chi = p.phi_map(&f)?.euler_char();
            let ones = f.at_ones();
            Ok(Report::new(ring.id(), payload, &chi)
                .with("at-ones", &ones)
                .with("agree", chi == ones))
        }
        Verb::Product => {
            let ring = cmd.ring.build()?;
            let Ring::Product(pp) = &ring else {
                unreachable!("validated product selector")
            };
            let combined = pp.combined();
            match &cmd.payload {
                None => {
                    let mut r = Report::new(
                        combined.id(),
                        "",
                        format!(
                            "{} generators, {} declared",
                            combined.generators().len(),
                            combined.declared().len()
                        ),
                    );
                    for (block, factor, name) in pp.name_table() {
                        r = r.with("generator", format!("{block} {factor} -> {name}"));
                    }
                    for g in combined.declared() {
                        r = r.with("declared", g);
                    }
                    Ok(r)
                }
                Some(text) => {
                    let f = ring.parse(text)?;
                    let v = ring.verdict(&f)?;
                    let (l, rt) = pp.psi(&f)?;
                    let mut r = Report::new(combined.id(), text.as_str(), v.member)
                        .with("canonical", &f)
                        .with("psi-left", &l)
                        .with("psi-right", &rt)
                        .with("left-member", pp.left().kernel_member(&l)?)
                        .with("right-member", pp.right().kernel_member(&rt)?);
                    r.witness = v.witness;
                    Ok(r)
                }
            }
        }
        Verb::Classify => {
            let ring = cmd.ring.build()?;
            let r = match &ring {
                Ring::Principal { shape, mode, .. } => {
                    Report::new(ring.id(), "", classify_principal(*shape, *mode))
                }
                Ring::Interval(p, case) => {
                    Report::new(ring.id(), "", ideal(p.declared())).with("case", case)
                }
                _ => {
                    let p = presented(&ring)?;
                    Report::new(ring.id(), "", ideal(p.declared()))
                }
            };
            let generators = ring
                .presentation()
                .map(|p| {
                    p.generators()
                        .iter()
                        .map(|g| format!("{}={}", g.name, g.polytope))
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .unwrap_or_else(|| "x".to_string());
            Ok(r.with("generators", generators))
        }
    }
}
