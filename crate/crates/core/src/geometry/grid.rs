//! Polygons of the triangular grid.
//!
//! Points are written in the lattice basis `A = (1,0)`, `B = (0,1)`, so the
//! three line directions of the arrangement become `u = const`,
//! `v = const` and `s = u + v = const`. A convex grid polygon is the set cut
//! out by integer bounds on `u`, `v` and `s`.

use std::fmt;

use super::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct GridPoint {
    pub u: i64,
    pub v: i64,
}

impl GridPoint {
    pub const ORIGIN: GridPoint = GridPoint { u: 0, v: 0 };
    pub const A: GridPoint = GridPoint { u: 1, v: 0 };
    pub const B: GridPoint = GridPoint { u: 0, v: 1 };

    pub const fn new(u: i64, v: i64) -> Self {
        GridPoint { u, v }
    }

    pub fn s(self) -> i64 {
        self.u + self.v
    }

    pub fn offset(self, du: i64, dv: i64) -> Self {
        GridPoint::new(self.u + du, self.v + dv)
    }
}

impl std::ops::Add for GridPoint {
    type Output = GridPoint;
    fn add(self, rhs: GridPoint) -> GridPoint {
        GridPoint::new(self.u + rhs.u, self.v + rhs.v)
    }
}

impl std::ops::Neg for GridPoint {
    type Output = GridPoint;
    fn neg(self) -> GridPoint {
        GridPoint::new(-self.u, -self.v)
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// `u_min ≤ u ≤ u_max`, `v_min ≤ v ≤ v_max`, `s_min ≤ u+v ≤ s_max`, with
/// every bound attained.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GridSet {
    u_min: i64,
    u_max: i64,
    v_min: i64,
    v_max: i64,
    s_min: i64,
    s_max: i64,
}

/// One of the six bounds of a [`GridSet`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Bound {
    UMin,
    UMax,
    VMin,
    VMax,
    SMin,
    SMax,
}

const BOUNDS: [Bound; 6] = [
    Bound::UMin,
    Bound::UMax,
    Bound::VMin,
    Bound::VMax,
    Bound::SMin,
    Bound::SMax,
];

impl GridSet {
    /// Builds the set from raw bounds and tightens them.
    pub fn new(u: (i64, i64), v: (i64, i64), s: (i64, i64)) -> Result<Self> {
        GridSet {
            u_min: u.0,
            u_max: u.1,
            v_min: v.0,
            v_max: v.1,
            s_min: s.0,
            s_max: s.1,
        }
        .tightened()
    }

    pub fn point(p: GridPoint) -> Self {
        GridSet {
            u_min: p.u,
            u_max: p.u,
            v_min: p.v,
            v_max: p.v,
            s_min: p.s(),
            s_max: p.s(),
        }
    }

    /// Smallest grid polygon containing the points.
    pub fn from_points(points: &[GridPoint]) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyGridSet)?;
        let mut set = GridSet::point(*first);
        for p in &points[1..] {
            set.u_min = set.u_min.min(p.u);
            set.u_max = set.u_max.max(p.u);
            set.v_min = set.v_min.min(p.v);
            set.v_max = set.v_max.max(p.v);
            set.s_min = set.s_min.min(p.s());
            set.s_max = set.s_max.max(p.s());
        }
        Ok(set)
    }

    /// The closed triangle `O, A, B`.
    pub fn unit_triangle() -> Self {
        GridSet::new((0, 1), (0, 1), (0, 1)).expect("nonempty")
    }

    /// Shrinks bounds until each is attained; fails if the set is empty.
    fn tightened(mut self) -> Result<Self> {
        loop {
            let before = self;
            self.u_max = self.u_max.min(self.s_max - self.v_min);
            self.u_min = self.u_min.max(self.s_min - self.v_max);
            self.v_max = self.v_max.min(self.s_max - self.u_min);
            self.v_min = self.v_min.max(self.s_min - self.u_max);
            self.s_max = self.s_max.min(self.u_max + self.v_max);
            self.s_min = self.s_min.max(self.u_min + self.v_min);
            if self.u_min > self.u_max || self.v_min > self.v_max || self.s_min > self.s_max {
                return Err(Error::EmptyGridSet);
            }
            if self == before {
                return Ok(self);
            }
        }
    }

    pub fn u_range(&self) -> (i64, i64) {
        (self.u_min, self.u_max)
    }

    pub fn v_range(&self) -> (i64, i64) {
        (self.v_min, self.v_max)
    }

    pub fn s_range(&self) -> (i64, i64) {
        (self.s_min, self.s_max)
    }

    pub fn dim(&self) -> usize {
        let flat = [
            self.u_min == self.u_max,
            self.v_min == self.v_max,
            self.s_min == self.s_max,
        ]
        .iter()
        .filter(|&&f| f)
        .count();
        match flat {
            3 => 0,
            1 => 1,
            _ => 2,
        }
    }

    pub fn minkowski_sum(&self, other: &GridSet) -> GridSet {
        GridSet::new(
            (self.u_min + other.u_min, self.u_max + other.u_max),
            (self.v_min + other.v_min, self.v_max + other.v_max),
            (self.s_min + other.s_min, self.s_max + other.s_max),
        )
        .expect("sum of nonempty sets is nonempty")
    }

    pub fn neg(&self) -> GridSet {
        GridSet {
            u_min: -self.u_max,
            u_max: -self.u_min,
            v_min: -self.v_max,
            v_max: -self.v_min,
            s_min: -self.s_max,
            s_max: -self.s_min,
        }
    }

    pub fn scale(&self, k: u32) -> GridSet {
        let k = i64::from(k);
        GridSet {
            u_min: self.u_min * k,
            u_max: self.u_max * k,
            v_min: self.v_min * k,
            v_max: self.v_max * k,
            s_min: self.s_min * k,
            s_max: self.s_max * k,
        }
    }

    pub fn translate(&self, p: GridPoint) -> GridSet {
        self.minkowski_sum(&GridSet::point(p))
    }

    pub fn contains_point(&self, p: GridPoint) -> bool {
        (self.u_min..=self.u_max).contains(&p.u)
            && (self.v_min..=self.v_max).contains(&p.v)
            && (self.s_min..=self.s_max).contains(&p.s())
    }

    pub fn contains(&self, u: &Scalar, v: &Scalar) -> bool {
        let s = u + v;
        let within =
            |x: &Scalar, lo: i64, hi: i64| Scalar::from(lo) <= *x && *x <= Scalar::from(hi);
        within(u, self.u_min, self.u_max)
            && within(v, self.v_min, self.v_max)
            && within(&s, self.s_min, self.s_max)
    }

    pub fn is_subset_of(&self, other: &GridSet) -> bool {
        other.u_min <= self.u_min
            && self.u_max <= other.u_max
            && other.v_min <= self.v_min
            && self.v_max <= other.v_max
            && other.s_min <= self.s_min
            && self.s_max <= other.s_max
    }

    /// Lattice points of the set.
    pub fn points(&self) -> impl Iterator<Item = GridPoint> + '_ {
        (self.u_min..=self.u_max)
            .flat_map(move |u| (self.v_min..=self.v_max).map(move |v| GridPoint::new(u, v)))
            .filter(move |p| self.contains_point(*p))
    }

    fn collapse(&self, bound: Bound) -> GridSet {
        let mut face = *self;
        match bound {
            Bound::UMin => face.u_max = face.u_min,
            Bound::UMax => face.u_min = face.u_max,
            Bound::VMin => face.v_max = face.v_min,
            Bound::VMax => face.v_min = face.v_max,
            Bound::SMin => face.s_max = face.s_min,
            Bound::SMax => face.s_min = face.s_max,
        }
        face
    }

    /// All nonempty faces, the set itself included.
    pub fn faces(&self) -> Vec<GridSet> {
        let mut faces: Vec<GridSet> = (0u32..1 << BOUNDS.len())
            .filter_map(|mask| {
                BOUNDS
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .try_fold(*self, |face, (_, &b)| face.collapse(b).tightened())
                    .ok()
            })
            .collect();
        faces.sort();
        faces.dedup();
        faces
    }

    pub fn vertices(&self) -> Vec<GridPoint> {
        self.faces()
            .into_iter()
            .filter(|f| f.dim() == 0)
            .map(|f| GridPoint::new(f.u_min, f.v_min))
            .collect()
    }

    /// Number of bounds of the set that a point attains.
    pub fn tight_count(&self, p: GridPoint) -> usize {
        [
            p.u == self.u_min,
            p.u == self.u_max,
            p.v == self.v_min,
            p.v == self.v_max,
            p.s() == self.s_min,
            p.s() == self.s_max,
        ]
        .iter()
        .filter(|&&t| t)
        .count()
    }
}

impl fmt::Display for GridSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "grid(u={}..{},v={}..{},s={}..{})",
            self.u_min, self.u_max, self.v_min, self.v_max, self.s_min, self.s_max
        )
    }
}
