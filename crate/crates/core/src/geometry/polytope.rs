use std::fmt;
use std::str::FromStr;

use super::{Ambient, AxisCell, Cell, GridPoint, GridSet, Scalar};
use crate::error::{Error, Result};

/// A nonempty closed convex polytope from one of the supported families.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Polytope {
    /// A point of the real line.
    Point(Scalar),
    /// A closed interval with `lo < hi`.
    Interval(Scalar, Scalar),
    /// A product of integer intervals `[a_i, b_i]`, possibly degenerate.
    Box(Vec<(i64, i64)>),
    Grid(GridSet),
    /// Boxes and grid polygons in orthogonal coordinate blocks.
    Product(Vec<Polytope>),
}

/// All ways of picking one element from each list.
pub(crate) fn cartesian<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    lists.iter().fold(vec![Vec::new()], |acc, list| {
        acc.iter()
            .flat_map(|prefix| {
                list.iter().map(move |x| {
                    let mut next = prefix.clone();
                    next.push(x.clone());
                    next
                })
            })
            .collect()
    })
}

impl Polytope {
    /// Interval `[lo, hi]`; a degenerate interval collapses to a point.
    pub fn interval(lo: Scalar, hi: Scalar) -> Result<Self> {
        match lo.cmp(&hi) {
            std::cmp::Ordering::Less => Ok(Polytope::Interval(lo, hi)),
            std::cmp::Ordering::Equal => Ok(Polytope::Point(lo)),
            std::cmp::Ordering::Greater => Err(Error::InvalidInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            }),
        }
    }

    pub fn cube(bounds: Vec<(i64, i64)>) -> Result<Self> {
        match bounds.iter().position(|(a, b)| a > b) {
            Some(axis) => Err(Error::InvalidBox { axis }),
            None => Ok(Polytope::Box(bounds)),
        }
    }

    /// Unit point `e_axis` of the lattice `ℝ^d`.
    pub fn unit_point(d: usize, axis: usize) -> Self {
        Polytope::Box(
            (0..d)
                .map(|i| if i == axis { (1, 1) } else { (0, 0) })
                .collect(),
        )
    }

    /// Unit segment `[0, e_axis]` of the lattice `ℝ^d`.
    pub fn unit_segment(d: usize, axis: usize) -> Self {
        Polytope::Box(
            (0..d)
                .map(|i| if i == axis { (0, 1) } else { (0, 0) })
                .collect(),
        )
    }

    pub fn grid_hull(points: &[GridPoint]) -> Result<Self> {
        GridSet::from_points(points).map(Polytope::Grid)
    }

    /// Cartesian product; factors must be boxes, grid polygons or products of those.
    pub fn product(parts: Vec<Polytope>) -> Result<Self> {
        let mut flat = Vec::new();
        for part in parts {
            match part {
                Polytope::Box(_) | Polytope::Grid(_) => flat.push(part),
                Polytope::Product(inner) => flat.extend(inner),
                other => return Err(Error::InvalidProductFactor(other.to_string())),
            }
        }
        Ok(Polytope::Product(flat))
    }

    pub fn ambient(&self) -> Ambient {
        match self {
            Polytope::Point(_) | Polytope::Interval(..) => Ambient::Line,
            Polytope::Box(b) => Ambient::Lattice(b.len()),
            Polytope::Grid(_) => Ambient::Grid,
            Polytope::Product(parts) => {
                Ambient::Product(parts.iter().map(Polytope::ambient).collect())
            }
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Polytope::Point(_) => 0,
            Polytope::Interval(..) => 1,
            Polytope::Box(b) => b.iter().filter(|(a, b)| a < b).count(),
            Polytope::Grid(g) => g.dim(),
            Polytope::Product(parts) => parts.iter().map(Polytope::dim).sum(),
        }
    }

    /// The point at the origin of the same ambient space.
    pub fn origin(&self) -> Polytope {
        match self {
            Polytope::Point(_) | Polytope::Interval(..) => Polytope::Point(Scalar::zero()),
            Polytope::Box(b) => Polytope::Box(vec![(0, 0); b.len()]),
            Polytope::Grid(_) => Polytope::Grid(GridSet::point(GridPoint::ORIGIN)),
            Polytope::Product(parts) => {
                Polytope::Product(parts.iter().map(Polytope::origin).collect())
            }
        }
    }

    fn mismatch(&self, other: &Polytope) -> Error {
        Error::FamilyMismatch {
            left: self.ambient().to_string(),
            right: other.ambient().to_string(),
        }
    }

    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Polytope> {
        use Polytope::*;
        Ok(match (self, other) {
            (Point(p), Point(q)) => Point(p + q),
            (Point(p), Interval(lo, hi)) | (Interval(lo, hi), Point(p)) => Interval(p + lo, p + hi),
            (Interval(a, b), Interval(c, d)) => Interval(a + c, b + d),
            (Box(a), Box(b)) if a.len() == b.len() => Box(a
                .iter()
                .zip(b)
                .map(|(x, y)| (x.0 + y.0, x.1 + y.1))
                .collect()),
            (Grid(a), Grid(b)) => Grid(a.minkowski_sum(b)),
            (Product(a), Product(b)) if self.ambient() == other.ambient() => Product(
                a.iter()
                    .zip(b)
                    .map(|(x, y)| x.minkowski_sum(y))
                    .collect::<Result<_>>()?,
            ),
            _ => return Err(self.mismatch(other)),
        })
    }

    /// The reflection `-P`.
    pub fn neg(&self) -> Polytope {
        match self {
            Polytope::Point(p) => Polytope::Point(-p),
            Polytope::Interval(lo, hi) => Polytope::Interval(-hi, -lo),
            Polytope::Box(b) => Polytope::Box(b.iter().map(|&(lo, hi)| (-hi, -lo)).collect()),
            Polytope::Grid(g) => Polytope::Grid(g.neg()),
            Polytope::Product(parts) => {
                Polytope::Product(parts.iter().map(Polytope::neg).collect())
            }
        }
    }

    /// The dilation `kP`; `k = 0` gives the origin.
    pub fn scale(&self, k: u32) -> Polytope {
        if k == 0 {
            return self.origin();
        }
        let factor = Scalar::from(i64::from(k));
        let ki = i64::from(k);
        match self {
            Polytope::Point(p) => Polytope::Point(p * &factor),
            Polytope::Interval(lo, hi) => Polytope::Interval(lo * &factor, hi * &factor),
            Polytope::Box(b) => {
                Polytope::Box(b.iter().map(|&(lo, hi)| (lo * ki, hi * ki)).collect())
            }
            Polytope::Grid(g) => Polytope::Grid(g.scale(k)),
            Polytope::Product(parts) => {
                Polytope::Product(parts.iter().map(|p| p.scale(k)).collect())
            }
        }
    }

    /// All nonempty faces including the polytope itself, sorted by dimension.
    pub fn faces(&self) -> Vec<Polytope> {
        let mut faces = match self {
            Polytope::Point(_) => vec![self.clone()],
            Polytope::Interval(lo, hi) => vec![
                Polytope::Point(lo.clone()),
                Polytope::Point(hi.clone()),
                self.clone(),
            ],
            Polytope::Box(b) => {
                let axes: Vec<Vec<(i64, i64)>> = b
                    .iter()
                    .map(|&(lo, hi)| {
                        if lo == hi {
                            vec![(lo, hi)]
                        } else {
                            vec![(lo, lo), (hi, hi), (lo, hi)]
                        }
                    })
                    .collect();
                cartesian(&axes).into_iter().map(Polytope::Box).collect()
            }
            Polytope::Grid(g) => g.faces().into_iter().map(Polytope::Grid).collect(),
            Polytope::Product(parts) => {
                let lists: Vec<Vec<Polytope>> = parts.iter().map(Polytope::faces).collect();
                cartesian(&lists)
                    .into_iter()
                    .map(Polytope::Product)
                    .collect()
            }
        };
        faces.sort_by(|a, b| (a.dim(), a).cmp(&(b.dim(), b)));
        faces.dedup();
        faces
    }

    pub fn vertices(&self) -> Vec<Polytope> {
        self.faces().into_iter().filter(|f| f.dim() == 0).collect()
    }

    pub fn is_face_of(&self, other: &Polytope) -> bool {
        other.faces().contains(self)
    }

    /// Disjoint relatively open cells whose union is the polytope.
    pub fn decompose_cells(&self) -> Vec<Cell> {
        match self {
            Polytope::Point(p) => vec![Cell::Point1D(p.clone())],
            Polytope::Interval(lo, hi) => vec![
                Cell::Point1D(lo.clone()),
                Cell::OpenInterval1D(lo.clone(), hi.clone()),
                Cell::Point1D(hi.clone()),
            ],
            Polytope::Box(b) => {
                let axes: Vec<Vec<AxisCell>> = b
                    .iter()
                    .map(|&(lo, hi)| {
                        (lo..=hi)
                            .map(AxisCell::At)
                            .chain((lo..hi).map(AxisCell::Open))
                            .collect()
                    })
                    .collect();
                cartesian(&axes).into_iter().map(Cell::BoxCell).collect()
            }
            Polytope::Grid(g) => grid_cells(g),
            Polytope::Product(parts) => {
                let lists: Vec<Vec<Cell>> = parts.iter().map(Polytope::decompose_cells).collect();
                cartesian(&lists)
                    .into_iter()
                    .map(Cell::ProductCell)
                    .collect()
            }
        }
    }

    pub fn contains(&self, point: &[Scalar]) -> bool {
        match self {
            Polytope::Point(p) => point == std::slice::from_ref(p),
            Polytope::Interval(lo, hi) => point.len() == 1 && *lo <= point[0] && point[0] <= *hi,
            Polytope::Box(b) => {
                b.len() == point.len()
                    && b.iter()
                        .zip(point)
                        .all(|(&(lo, hi), x)| Scalar::from(lo) <= *x && *x <= Scalar::from(hi))
            }
            Polytope::Grid(g) => matches!(point, [u, v] if g.contains(u, v)),
            Polytope::Product(parts) => {
                let mut rest = point;
                for part in parts {
                    let n = part.ambient().coordinate_dim();
                    if rest.len() < n || !part.contains(&rest[..n]) {
                        return false;
                    }
                    rest = &rest[n..];
                }
                rest.is_empty()
            }
        }
    }
}

fn grid_cells(g: &GridSet) -> Vec<Cell> {
    let (u_min, u_max) = g.u_range();
    let (v_min, v_max) = g.v_range();
    let mut cells = Vec::new();
    for u in u_min - 1..=u_max {
        for v in v_min - 1..=v_max {
            let p = GridPoint::new(u, v);
            for cell in [
                Cell::GridVertex(p),
                Cell::GridEdgeU(p),
                Cell::GridEdgeV(p),
                Cell::GridEdgeS(p),
                Cell::GridTriUp(p),
                Cell::GridTriDown(p),
            ] {
                let corners = cell.grid_vertices().expect("grid cell");
                if corners.iter().all(|c| g.contains_point(*c)) {
                    cells.push(cell);
                }
            }
        }
    }
    cells
}

impl fmt::Display for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Polytope::Point(p) => write!(f, "{{{p}}}"),
            Polytope::Interval(lo, hi) => write!(f, "[{lo},{hi}]"),
            Polytope::Box(b) => {
                let axes: Vec<String> = b.iter().map(|(lo, hi)| format!("{lo}..{hi}")).collect();
                write!(f, "box[{}]", axes.join(","))
            }
            Polytope::Grid(g) => {
                let ((u0, u1), (v0, v1), (s0, s1)) = (g.u_range(), g.v_range(), g.s_range());
                write!(f, "grid[u={u0}..{u1},v={v0}..{v1},s={s0}..{s1}]")
            }
            Polytope::Product(parts) => {
                let parts: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "{}", parts.join(" x "))
            }
        }
    }
}

fn parse_range(text: &str) -> Option<(i64, i64)> {
    let (lo, hi) = text.trim().split_once("..")?;
    Some((lo.trim().parse().ok()?, hi.trim().parse().ok()?))
}

fn parse_single(text: &str) -> Result<Polytope> {
    let text = text.trim();
    let bad = || Error::Unsupported(format!("cannot parse polytope `{text}`"));
    if let Some(inner) = text.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
        return inner.parse().map(Polytope::Point).map_err(|_| bad());
    }
    if let Some(inner) = text.strip_prefix("box[").and_then(|t| t.strip_suffix(']')) {
        let bounds = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(parse_range)
                .collect::<Option<Vec<_>>>()
                .ok_or_else(bad)?
        };
        return Polytope::cube(bounds);
    }
    if let Some(inner) = text.strip_prefix("grid[").and_then(|t| t.strip_suffix(']')) {
        let mut ranges = [None; 3];
        for part in inner.split(',') {
            let (key, range) = part.split_once('=').ok_or_else(bad)?;
            let slot = ["u", "v", "s"]
                .iter()
                .position(|k| *k == key.trim())
                .ok_or_else(bad)?;
            ranges[slot] = Some(parse_range(range).ok_or_else(bad)?);
        }
        let [Some(u), Some(v), Some(s)] = ranges else {
            return Err(bad());
        };
        return GridSet::new(u, v, s).map(Polytope::Grid);
    }
    if let Some(inner) = text.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        let (lo, hi) = inner.split_once(',').ok_or_else(bad)?;
        let lo = lo.parse().map_err(|_| bad())?;
        let hi = hi.parse().map_err(|_| bad())?;
        return Polytope::interval(lo, hi);
    }
    Err(bad())
}

impl FromStr for Polytope {
    type Err = Error;

    /// Parses the `Display` syntax, e.g. `[0,sqrt2]` or `box[0..1] x grid[u=0..1,v=0..1,s=0..1]`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(" x ").collect();
        if parts.len() == 1 {
            parse_single(parts[0])
        } else {
            Polytope::product(parts.into_iter().map(parse_single).collect::<Result<_>>()?)
        }
    }
}
