//! Relatively open cells that tile each ambient space.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{GridPoint, GridSet, Polytope, Scalar};

/// The space a family of polytopes lives in.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Ambient {
    /// The real line with exact coordinates in ℚ(√2).
    Line,
    /// `ℝ^d` cut by the integer lattice hyperplanes.
    Lattice(usize),
    /// The plane cut by the three line families of the triangular grid.
    Grid,
    /// Orthogonal blocks, each a lattice or grid space.
    Product(Vec<Ambient>),
}

impl Ambient {
    /// Number of coordinates of a point.
    pub fn coordinate_dim(&self) -> usize {
        match self {
            Ambient::Line => 1,
            Ambient::Lattice(d) => *d,
            Ambient::Grid => 2,
            Ambient::Product(parts) => parts.iter().map(Ambient::coordinate_dim).sum(),
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambient::Line => write!(f, "line"),
            Ambient::Lattice(d) => write!(f, "lattice{d}"),
            Ambient::Grid => write!(f, "grid"),
            Ambient::Product(parts) => {
                let names: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "{}", names.join(" x "))
            }
        }
    }
}

/// One coordinate of a box cell.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum AxisCell {
    At(i64),
    /// The open unit interval `(k, k+1)`.
    Open(i64),
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Cell {
    GridVertex(GridPoint),
    /// Open segment from `p` to `p + A`.
    GridEdgeU(GridPoint),
    /// Open segment from `p` to `p + B`.
    GridEdgeV(GridPoint),
    /// Open segment from `p + A` to `p + B`.
    GridEdgeS(GridPoint),
    /// Open triangle `p, p + A, p + B`.
    GridTriUp(GridPoint),
    /// Open triangle `p + A, p + B, p + A + B`.
    GridTriDown(GridPoint),
    Point1D(Scalar),
    OpenInterval1D(Scalar, Scalar),
    BoxCell(Vec<AxisCell>),
    ProductCell(Vec<Cell>),
}

fn rational(n: i64, d: i64) -> Scalar {
    Scalar::from(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

impl Cell {
    pub fn dim(&self) -> usize {
        match self {
            Cell::GridVertex(_) | Cell::Point1D(_) => 0,
            Cell::GridEdgeU(_)
            | Cell::GridEdgeV(_)
            | Cell::GridEdgeS(_)
            | Cell::OpenInterval1D(..) => 1,
            Cell::GridTriUp(_) | Cell::GridTriDown(_) => 2,
            Cell::BoxCell(axes) => axes
                .iter()
                .filter(|a| matches!(a, AxisCell::Open(_)))
                .count(),
            Cell::ProductCell(parts) => parts.iter().map(Cell::dim).sum(),
        }
    }

    /// Corners of a grid cell's closure.
    pub fn grid_vertices(&self) -> Option<Vec<GridPoint>> {
        let v = match *self {
            Cell::GridVertex(p) => vec![p],
            Cell::GridEdgeU(p) => vec![p, p.offset(1, 0)],
            Cell::GridEdgeV(p) => vec![p, p.offset(0, 1)],
            Cell::GridEdgeS(p) => vec![p.offset(1, 0), p.offset(0, 1)],
            Cell::GridTriUp(p) => vec![p, p.offset(1, 0), p.offset(0, 1)],
            Cell::GridTriDown(p) => vec![p.offset(1, 0), p.offset(0, 1), p.offset(1, 1)],
            _ => return None,
        };
        Some(v)
    }

    pub fn closure(&self) -> Polytope {
        match self {
            Cell::Point1D(x) => Polytope::Point(x.clone()),
            Cell::OpenInterval1D(lo, hi) => Polytope::Interval(lo.clone(), hi.clone()),
            Cell::BoxCell(axes) => Polytope::Box(
                axes.iter()
                    .map(|a| match *a {
                        AxisCell::At(k) => (k, k),
                        AxisCell::Open(k) => (k, k + 1),
                    })
                    .collect(),
            ),
            Cell::ProductCell(parts) => {
                Polytope::Product(parts.iter().map(Cell::closure).collect())
            }
            grid => {
                let corners = grid.grid_vertices().expect("grid cell");
                Polytope::Grid(GridSet::from_points(&corners).expect("nonempty"))
            }
        }
    }

    /// Whether the point lies in this (relatively open) cell.
    pub fn contains(&self, point: &[Scalar]) -> bool {
        let int = |k: i64| Scalar::from(k);
        let open = |x: &Scalar, lo: i64| int(lo) < *x && *x < int(lo + 1);
        match self {
            Cell::Point1D(x) => point == std::slice::from_ref(x),
            Cell::OpenInterval1D(lo, hi) => point.len() == 1 && *lo < point[0] && point[0] < *hi,
            Cell::BoxCell(axes) => {
                axes.len() == point.len()
                    && axes.iter().zip(point).all(|(a, x)| match *a {
                        AxisCell::At(k) => *x == int(k),
                        AxisCell::Open(k) => open(x, k),
                    })
            }
            Cell::ProductCell(parts) => {
                let mut rest = point;
                for part in parts {
                    let n = part.coordinate_dim();
                    if rest.len() < n || !part.contains(&rest[..n]) {
                        return false;
                    }
                    rest = &rest[n..];
                }
                rest.is_empty()
            }
            grid => {
                let [u, v] = point else { return false };
                let s = u + v;
                match *grid {
                    Cell::GridVertex(p) => *u == int(p.u) && *v == int(p.v),
                    Cell::GridEdgeU(p) => *v == int(p.v) && open(u, p.u),
                    Cell::GridEdgeV(p) => *u == int(p.u) && open(v, p.v),
                    Cell::GridEdgeS(p) => s == int(p.s() + 1) && open(u, p.u),
                    Cell::GridTriUp(p) => int(p.u) < *u && int(p.v) < *v && s < int(p.s() + 1),
                    Cell::GridTriDown(p) => {
                        *u < int(p.u + 1) && *v < int(p.v + 1) && int(p.s() + 1) < s
                    }
                    _ => unreachable!(),
                }
            }
        }
    }

    fn coordinate_dim(&self) -> usize {
        match self {
            Cell::Point1D(_) | Cell::OpenInterval1D(..) => 1,
            Cell::BoxCell(axes) => axes.len(),
            Cell::ProductCell(parts) => parts.iter().map(Cell::coordinate_dim).sum(),
            _ => 2,
        }
    }

    /// A point inside the cell.
    pub fn representative_point(&self) -> Vec<Scalar> {
        let shifted = |p: GridPoint, du: Scalar, dv: Scalar| {
            vec![&Scalar::from(p.u) + &du, &Scalar::from(p.v) + &dv]
        };
        match self {
            Cell::Point1D(x) => vec![x.clone()],
            Cell::OpenInterval1D(lo, hi) => vec![lo.midpoint(hi)],
            Cell::BoxCell(axes) => axes
                .iter()
                .map(|a| match *a {
                    AxisCell::At(k) => Scalar::from(k),
                    AxisCell::Open(k) => &Scalar::from(k) + &rational(1, 2),
                })
                .collect(),
            Cell::ProductCell(parts) => parts.iter().flat_map(Cell::representative_point).collect(),
            Cell::GridVertex(p) => shifted(*p, Scalar::zero(), Scalar::zero()),
            Cell::GridEdgeU(p) => shifted(*p, rational(1, 2), Scalar::zero()),
            Cell::GridEdgeV(p) => shifted(*p, Scalar::zero(), rational(1, 2)),
            Cell::GridEdgeS(p) => shifted(*p, rational(1, 2), rational(1, 2)),
            Cell::GridTriUp(p) => shifted(*p, rational(1, 3), rational(1, 3)),
            Cell::GridTriDown(p) => shifted(*p, rational(2, 3), rational(2, 3)),
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::GridVertex(p) => write!(f, "vertex{p}"),
            Cell::GridEdgeU(p) => write!(f, "edge_u{p}"),
            Cell::GridEdgeV(p) => write!(f, "edge_v{p}"),
            Cell::GridEdgeS(p) => write!(f, "edge_s{p}"),
            Cell::GridTriUp(p) => write!(f, "tri_up{p}"),
            Cell::GridTriDown(p) => write!(f, "tri_down{p}"),
            Cell::Point1D(x) => write!(f, "{{{x}}}"),
            Cell::OpenInterval1D(lo, hi) => write!(f, "({lo},{hi})"),
            Cell::BoxCell(axes) => {
                let parts: Vec<String> = axes
                    .iter()
                    .map(|a| match a {
                        AxisCell::At(k) => k.to_string(),
                        AxisCell::Open(k) => format!("({},{})", k, k + 1),
                    })
                    .collect();
                write!(f, "cell[{}]", parts.join(","))
            }
            Cell::ProductCell(parts) => {
                let parts: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "{}", parts.join(" x "))
            }
        }
    }
}

/// Formats a point as `(x,y,...)`.
pub fn format_point(point: &[Scalar]) -> String {
    let coords: Vec<String> = point.iter().map(ToString::to_string).collect();
    format!("({})", coords.join(","))
}
