use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use num_traits::Signed;

use super::{Generator, Polarity, Presentation, RingMode};
use crate::error::{Error, Result};
use crate::geometry::{GridPoint, GridSet, Polytope, Scalar};
use crate::laurent::LaurentPoly;

fn poly(text: &str) -> LaurentPoly {
    text.parse().expect("catalog polynomial")
}

/// The triangular-grid ring on `x1, x2, y1, y2, y3, z`, all invertible.
pub fn coxeter_ring() -> Presentation {
    let hull = |pts: &[GridPoint]| Polytope::Grid(GridSet::from_points(pts).expect("nonempty"));
    let (o, a, b) = (GridPoint::ORIGIN, GridPoint::A, GridPoint::B);
    let generators = vec![
        ("x1", hull(&[a])),
        ("x2", hull(&[b])),
        ("y1", hull(&[o, a])),
        ("y2", hull(&[o, b])),
        ("y3", hull(&[a, b])),
        ("z", hull(&[o, a, b])),
    ]
    .into_iter()
    .map(|(n, p)| Generator::new(n, p, Polarity::Invertible))
    .collect();
    let declared = [
        "(y1 - 1)*(y1 - x1)",
        "(y2 - 1)*(y2 - x2)",
        "(y3 - x1)*(y3 - x2)",
        "(z - 1)*(z - y3)",
        "(z - x1)*(z - y2)",
        "(z - x2)*(z - y1)",
        "(z - y1)*(z - y2)",
        "(z - y1)*(z - y3)",
        "(z - y2)*(z - y3)",
    ]
    .iter()
    .map(|t| poly(t))
    .collect();
    Presentation::new("coxeter", generators, hull(&[o]), declared).expect("coxeter relations hold")
}

/// One assignment per declared generator of [`coxeter_ring`] separating it
/// from the others.
///
/// The first three and last three evaluate everything; the middle three
/// leave one variable free.
pub fn coxeter_minimality_witnesses() -> Vec<BTreeMap<String, BigRational>> {
    const NAMES: [&str; 6] = ["x1", "x2", "y1", "y2", "y3", "z"];
    let build = |rest: Option<i64>, pins: &[(&str, i64)]| -> BTreeMap<String, BigRational> {
        let mut out: BTreeMap<String, BigRational> = match rest {
            Some(v) => NAMES
                .iter()
                .map(|n| (n.to_string(), BigRational::from_integer(v.into())))
                .collect(),
            None => BTreeMap::new(),
        };
        for (n, v) in pins {
            out.insert(n.to_string(), BigRational::from_integer((*v).into()));
        }
        out
    };
    vec![
        build(Some(1), &[("y1", 2)]),
        build(Some(1), &[("y2", 2)]),
        build(Some(1), &[("y3", 2)]),
        build(
            None,
            &[("z", 2), ("y1", 2), ("y2", 2), ("x1", 2), ("x2", 2)],
        ),
        build(
            None,
            &[("z", 1), ("y1", 1), ("y3", 1), ("x2", 1), ("x1", 2)],
        ),
        build(
            None,
            &[("z", 1), ("y2", 1), ("y3", 1), ("x1", 1), ("x2", 2)],
        ),
        build(Some(0), &[("y1", 1), ("y2", 1)]),
        build(
            None,
            &[
                ("z", 1),
                ("y2", 1),
                ("x2", 1),
                ("y1", 2),
                ("y3", 2),
                ("x1", 2),
            ],
        ),
        build(
            None,
            &[
                ("z", 1),
                ("y1", 1),
                ("x1", 1),
                ("y2", 2),
                ("y3", 2),
                ("x2", 2),
            ],
        ),
    ]
}

/// Unit points `x_i ↦ e_i` and unit segments `y_i ↦ [0, e_i]` of `ℝ^d`.
///
/// With `d = 1` the names are `x, y`; otherwise `x1, y1, …, xd, yd`.
pub fn box_ring(d: usize, signed: bool) -> Presentation {
    let polarity = if signed {
        Polarity::Invertible
    } else {
        Polarity::Plain
    };
    let label = |letter: &str, i: usize| {
        if d == 1 {
            letter.to_string()
        } else {
            format!("{letter}{}", i + 1)
        }
    };
    let mut generators = Vec::new();
    let mut declared = Vec::new();
    for i in 0..d {
        let (x, y) = (label("x", i), label("y", i));
        declared.push(poly(&format!("({y} - 1)*({y} - {x})")));
        generators.push(Generator::new(x, Polytope::unit_point(d, i), polarity));
        generators.push(Generator::new(y, Polytope::unit_segment(d, i), polarity));
    }
    let id = if signed {
        format!("box:{d}:signed")
    } else {
        format!("box:{d}")
    };
    Presentation::new(id, generators, Polytope::Box(vec![(0, 0); d]), declared)
        .expect("box relations hold")
}

/// The ring of a single point `w ↦ {0}`; its kernel is `(w - 1)`.
pub fn point_ring() -> Presentation {
    Presentation::new(
        "point",
        vec![Generator::new(
            "w",
            Polytope::Box(Vec::new()),
            Polarity::Invertible,
        )],
        Polytope::Box(Vec::new()),
        vec![poly("w - 1")],
    )
    .expect("point relation holds")
}

/// Which of the four interval-ring families `(α, β)` falls into.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IntervalCase {
    /// One endpoint is the origin.
    Endpoint,
    /// `α/β` is irrational.
    Irrational,
    /// `α/β = m/n > 0` in lowest terms.
    Positive { m: u64, n: u64 },
    /// `α/β = -m/n < 0` in lowest terms.
    Negative { m: u64, n: u64 },
}

impl fmt::Display for IntervalCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntervalCase::Endpoint => write!(f, "A (endpoint at origin)"),
            IntervalCase::Irrational => write!(f, "B (irrational ratio)"),
            IntervalCase::Positive { m, n } => write!(f, "C (ratio {m}/{n})"),
            IntervalCase::Negative { m, n } => write!(f, "D (ratio -{m}/{n})"),
        }
    }
}

/// Generator naming for the endpoint case.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IntervalNaming {
    /// `x ↦ {nonzero endpoint}`, `y ↦ [α, β]`, dropping the unit generator.
    Relabeled,
    /// `x ↦ {α}`, `y ↦ {β}`, `z ↦ [α, β]` in every case.
    Full,
}

pub fn interval_case(alpha: &Scalar, beta: &Scalar) -> Result<IntervalCase> {
    if alpha == beta {
        return Err(Error::DegenerateInterval);
    }
    if alpha.is_zero() || beta.is_zero() {
        return Ok(IntervalCase::Endpoint);
    }
    let ratio = alpha.checked_div(beta).expect("beta is nonzero");
    let Some(r) = ratio.as_rational() else {
        return Ok(IntervalCase::Irrational);
    };
    let to_u64 = |v: &num_bigint::BigInt| {
        u64::try_from(v.abs()).map_err(|_| Error::Unsupported(format!("ratio {r} too large")))
    };
    let m = to_u64(r.numer())?;
    let n = to_u64(r.denom())?;
    Ok(if r.is_positive() {
        IntervalCase::Positive { m, n }
    } else {
        IntervalCase::Negative { m, n }
    })
}

/// The ring generated by `[α, β]` and its endpoints.
pub fn interval_ring(
    alpha: Scalar,
    beta: Scalar,
    mode: RingMode,
    naming: IntervalNaming,
) -> Result<(Presentation, IntervalCase)> {
    if alpha > beta {
        return Err(Error::InvalidInterval {
            lo: alpha.to_string(),
            hi: beta.to_string(),
        });
    }
    let case = interval_case(&alpha, &beta)?;
    let polarity = mode.polarity();
    let segment = Polytope::interval(alpha.clone(), beta.clone())?;
    let suffix = match mode {
        RingMode::Polynomial => "poly",
        RingMode::Laurent => "laurent",
    };
    let id = format!("interval:{alpha},{beta}:{suffix}");
    let unit = Polytope::Point(Scalar::zero());

    if case == IntervalCase::Endpoint && naming == IntervalNaming::Relabeled {
        let other = if alpha.is_zero() { beta } else { alpha };
        let generators = vec![
            Generator::new("x", Polytope::Point(other), polarity),
            Generator::new("y", segment, polarity),
        ];
        let p = Presentation::new(id, generators, unit, vec![poly("(y - 1)*(y - x)")])?;
        return Ok((p, case));
    }

    let generators = vec![
        Generator::new("x", Polytope::Point(alpha.clone()), polarity),
        Generator::new("y", Polytope::Point(beta), polarity),
        Generator::new("z", segment, polarity),
    ];
    let mut declared = vec![poly("(z - x)*(z - y)")];
    match case {
        IntervalCase::Endpoint if alpha.is_zero() => declared.push(poly("x - 1")),
        IntervalCase::Endpoint => declared.push(poly("y - 1")),
        IntervalCase::Irrational => {}
        IntervalCase::Positive { m, n } => declared.push(poly(&format!("y^{m} - x^{n}"))),
        IntervalCase::Negative { m, n } => declared.push(poly(&format!("x^{n}*y^{m} - 1"))),
    }
    let p = Presentation::new(id, generators, unit, declared)?;
    Ok((p, case))
}
