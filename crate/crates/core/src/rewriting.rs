//! Normal forms and tilings in the triangular-grid ring.
//!
//! The first normal form writes a convex grid polygon as a scaled triangle
//! with three corners cut off. The second tiles it by translates of the
//! point, the three open unit edges, the open triangle and the open
//! down-triangle.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::{Cell, GridPoint, GridSet, Polytope};
use crate::laurent::{LaurentPoly, Monomial};
use crate::presentations::coxeter_ring;
use crate::simplefn::{IndicatorMode, SimpleFunction};

fn p(text: &str) -> LaurentPoly {
    text.parse().expect("tiling polynomial")
}

fn translate(a: i64, b: i64) -> Monomial {
    Monomial::from_exponents([("x1".to_string(), a), ("x2".to_string(), b)])
}

/// Hexagon traversal counts of a convex grid polygon together with its translation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct NormalFormParams {
    pub a: i64,
    pub b: i64,
    pub n: u32,
    pub n1: u32,
    pub n2: u32,
    pub n3: u32,
    pub m1: u32,
    pub m2: u32,
    pub m3: u32,
}

impl NormalFormParams {
    /// Builds the parameters from the translation, `N` and the three corner cuts.
    pub fn new(a: i64, b: i64, n: u32, m1: u32, m2: u32, m3: u32) -> Result<Self> {
        let cut = |x: u32, y: u32| {
            n.checked_sub(x + y).ok_or_else(|| {
                Error::Unsupported(format!("corner cuts {m1},{m2},{m3} exceed N = {n}"))
            })
        };
        Ok(NormalFormParams {
            a,
            b,
            n,
            n1: cut(m2, m3)?,
            n2: cut(m1, m3)?,
            n3: cut(m1, m2)?,
            m1,
            m2,
            m3,
        })
    }

    /// Reads the parameters off the tight bounds of `s`.
    pub fn of(s: &GridSet) -> Self {
        let (u0, u1) = s.u_range();
        let (v0, v1) = s.v_range();
        let (s0, s1) = s.s_range();
        let n = s1 - u0 - v0;
        let m3 = s0 - u0 - v0;
        let m2 = n - (u1 - u0);
        let m1 = n - (v1 - v0);
        let c = |x: i64| u32::try_from(x).expect("tight bounds give nonnegative counts");
        NormalFormParams::new(u0, v0, c(n), c(m1), c(m2), c(m3))
            .expect("tight bounds are consistent")
    }

    pub fn grid_set(&self) -> GridSet {
        let (n, m1, m2, m3) = (
            self.n as i64,
            self.m1 as i64,
            self.m2 as i64,
            self.m3 as i64,
        );
        let (a, b) = (self.a, self.b);
        GridSet::new((a, a + n - m2), (b, b + n - m1), (a + b + m3, a + b + n))
            .expect("nonempty by construction")
    }

    /// `x1^a x2^b c_S`.
    pub fn poly(&self) -> LaurentPoly {
        let z = LaurentPoly::var("z");
        let y = |i: u32| LaurentPoly::var(&format!("y{i}"));
        let x1 = LaurentPoly::var("x1");
        let x2 = LaurentPoly::var("x2");
        let c = z.pow(self.n)
            - (z.pow(self.m3) - y(3).pow(self.m3))
            - x1.pow(self.m3 + self.n1) * (z.pow(self.m2) - y(2).pow(self.m2))
            - x2.pow(self.m3 + self.n2) * (z.pow(self.m1) - y(1).pow(self.m1));
        c.mul_monomial(&translate(self.a, self.b))
    }
}

impl fmt::Display for NormalFormParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a={} b={} N={} n1={} n2={} n3={} m1={} m2={} m3={}",
            self.a, self.b, self.n, self.n1, self.n2, self.n3, self.m1, self.m2, self.m3
        )
    }
}

pub fn first_normal_form(s: &GridSet) -> (NormalFormParams, LaurentPoly) {
    let params = NormalFormParams::of(s);
    let poly = params.poly();
    (params, poly)
}

/// The grid polygon whose indicator is the image of `f` in the triangular-grid ring.
pub fn recognize_grid_set(f: &LaurentPoly) -> Result<GridSet> {
    let image = coxeter_ring().phi_map(f)?;
    let mut points = Vec::new();
    for cell in image.terms().keys() {
        points.extend(cell.grid_vertices().ok_or(Error::NotAConvexGridSet)?);
    }
    let s = GridSet::from_points(&points).map_err(|_| Error::NotAConvexGridSet)?;
    if image == SimpleFunction::indicator(&Polytope::Grid(s), IndicatorMode::Closed) {
        Ok(s)
    } else {
        Err(Error::NotAConvexGridSet)
    }
}

/// Relatively open tiles of the triangular grid, placed at the origin.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum OpenTile {
    Point,
    Y1,
    Y2,
    Y3,
    Z,
    /// The open down-triangle `z^-1`, with corners `-A`, `-B`, `-A-B`.
    ZInv,
}

impl OpenTile {
    pub const ALL: [OpenTile; 6] = [
        OpenTile::Point,
        OpenTile::Y1,
        OpenTile::Y2,
        OpenTile::Y3,
        OpenTile::Z,
        OpenTile::ZInv,
    ];

    /// The tile in the generator alphabet.
    pub fn expand(self) -> LaurentPoly {
        match self {
            OpenTile::Point => LaurentPoly::one(),
            OpenTile::Y1 => p("y1 - 1 - x1"),
            OpenTile::Y2 => p("y2 - 1 - x2"),
            OpenTile::Y3 => p("y3 - x1 - x2"),
            OpenTile::Z => p("z - y1 - y2 - y3 + 1 + x1 + x2"),
            OpenTile::ZInv => p("z^-1"),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            OpenTile::Point => "1",
            OpenTile::Y1 => "ẙ1",
            OpenTile::Y2 => "ẙ2",
            OpenTile::Y3 => "ẙ3",
            OpenTile::Z => "z̊",
            OpenTile::ZInv => "z^-1",
        }
    }

    /// Splits a grid cell into a tile and the translation placing it.
    pub fn of_cell(cell: &Cell) -> Option<(OpenTile, GridPoint)> {
        Some(match cell {
            Cell::GridVertex(q) => (OpenTile::Point, *q),
            Cell::GridEdgeU(q) => (OpenTile::Y1, *q),
            Cell::GridEdgeV(q) => (OpenTile::Y2, *q),
            Cell::GridEdgeS(q) => (OpenTile::Y3, *q),
            Cell::GridTriUp(q) => (OpenTile::Z, *q),
            Cell::GridTriDown(q) => (OpenTile::ZInv, q.offset(1, 1)),
            _ => return None,
        })
    }

    pub fn cell_at(self, at: GridPoint) -> Cell {
        match self {
            OpenTile::Point => Cell::GridVertex(at),
            OpenTile::Y1 => Cell::GridEdgeU(at),
            OpenTile::Y2 => Cell::GridEdgeV(at),
            OpenTile::Y3 => Cell::GridEdgeS(at),
            OpenTile::Z => Cell::GridTriUp(at),
            OpenTile::ZInv => Cell::GridTriDown(at.offset(-1, -1)),
        }
    }
}

/// An integer combination of translated open tiles.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Tiling {
    terms: BTreeMap<(OpenTile, GridPoint), BigRational>,
}

impl Tiling {
    pub fn new() -> Self {
        Tiling::default()
    }

    pub fn add(&mut self, tile: OpenTile, at: GridPoint, coeff: BigRational) {
        let entry = self
            .terms
            .entry((tile, at))
            .or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(tile, at));
        }
    }

    pub fn terms(&self) -> &BTreeMap<(OpenTile, GridPoint), BigRational> {
        &self.terms
    }

    /// Number of tiles of each kind, counted with coefficient.
    pub fn counts(&self) -> BTreeMap<OpenTile, BigRational> {
        let mut out = BTreeMap::new();
        for ((tile, _), c) in &self.terms {
            *out.entry(*tile).or_insert_with(BigRational::zero) += c;
        }
        out
    }

    pub fn cells(&self) -> Vec<(Cell, BigRational)> {
        self.terms
            .iter()
            .map(|((t, at), c)| (t.cell_at(*at), c.clone()))
            .collect()
    }

    pub fn to_poly(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for ((tile, at), c) in &self.terms {
            out = out + tile.expand().mul_monomial(&translate(at.u, at.v)).scale(c);
        }
        out
    }
}

impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by_key(|((tile, at), _)| {
            (*tile, at.u + at.v, std::cmp::Reverse(translate(at.u, at.v)))
        });
        for (i, ((tile, at), c)) in ordered.into_iter().enumerate() {
            let negative = c < &BigRational::zero();
            if i > 0 {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            } else if negative {
                write!(f, "-")?;
            }
            let mag = if negative { -c } else { c.clone() };
            let shift = translate(at.u, at.v);
            let mut factors = Vec::new();
            if !mag.is_one() {
                factors.push(mag.to_string());
            }
            if !shift.is_one() {
                factors.push(shift.to_string());
            }
            if *tile != OpenTile::Point || factors.is_empty() {
                factors.push(tile.symbol().to_string());
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Tiles `s` by its cells; every coefficient is one.
pub fn second_normal_form(s: &GridSet) -> Tiling {
    let mut t = Tiling::new();
    for cell in Polytope::Grid(*s).decompose_cells() {
        let (tile, at) = OpenTile::of_cell(&cell).expect("grid cells only");
        t.add(tile, at, BigRational::one());
    }
    t
}

/// Lattice points on the line `u + v = k`, `u, v ≥ 0`, shifted by `at`.
fn add_layer(t: &mut Tiling, k: i64, tiles: &[OpenTile], at: GridPoint) {
    for i in 0..=k {
        for tile in tiles {
            t.add(*tile, at.offset(i, k - i), BigRational::one());
        }
    }
}

const OPEN_TILES: [OpenTile; 4] = [OpenTile::Y1, OpenTile::Y2, OpenTile::Y3, OpenTile::Z];

/// `f_n + f_{n-1}(ẙ1 + ẙ2 + ẙ3 + z̊) + f_{n-2} x1 x2 z^-1`, with
/// `f_k = Σ_{j ≤ k} Σ_i x1^i x2^{j-i}`.
pub fn zn_tiling(n: u32) -> Tiling {
    let mut t = Tiling::new();
    if n == 0 {
        t.add(OpenTile::Point, GridPoint::ORIGIN, BigRational::one());
        return t;
    }
    let n = n as i64;
    for j in 0..=n {
        add_layer(&mut t, j, &[OpenTile::Point], GridPoint::ORIGIN);
    }
    for j in 0..n {
        add_layer(&mut t, j, &OPEN_TILES, GridPoint::ORIGIN);
    }
    for j in 0..n - 1 {
        add_layer(&mut t, j, &[OpenTile::ZInv], GridPoint::new(1, 1));
    }
    t
}

/// `f_n` at `x1 = x2 = 1`, the number of lattice points of the side-`n` triangle.
pub fn f_at_ones(n: u32) -> BigRational {
    let mut t = Tiling::new();
    for j in 0..=n as i64 {
        add_layer(&mut t, j, &[OpenTile::Point], GridPoint::ORIGIN);
    }
    t.to_poly().at_ones()
}

/// Which segment generator a `y^n` tiling refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum YAxis {
    /// `y ↦ [0, 1]` with `x ↦ {1}` in the one-dimensional ring.
    Line,
    Y1,
    Y2,
    Y3,
}

/// `y^n` as translated points plus translated open unit segments.
pub fn y_tiling(axis: YAxis, n: u32) -> LaurentPoly {
    let (step, open): (Box<dyn Fn(u32) -> LaurentPoly>, LaurentPoly) = match axis {
        YAxis::Line => (
            Box::new(|i| LaurentPoly::var_pow("x", i as i64)),
            p("y - 1 - x"),
        ),
        YAxis::Y1 => (
            Box::new(|i| LaurentPoly::var_pow("x1", i as i64)),
            OpenTile::Y1.expand(),
        ),
        YAxis::Y2 => (
            Box::new(|i| LaurentPoly::var_pow("x2", i as i64)),
            OpenTile::Y2.expand(),
        ),
        YAxis::Y3 => (Box::new(|_| LaurentPoly::one()), OpenTile::Y3.expand()),
    };
    let point = |i: u32, total: u32| match axis {
        YAxis::Y3 => LaurentPoly::monomial(translate(i as i64, (total - i) as i64)),
        _ => step(i),
    };
    let mut out = LaurentPoly::zero();
    for i in 0..=n {
        out = out + point(i, n);
    }
    for i in 0..n {
        out = out + &open * &point(i, n - 1);
    }
    out
}

/// `Σ_{i=0}^{k} x1^i x2^{k-i}`, zero for negative `k`.
fn homogeneous(k: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for i in 0..=k.max(-1) {
        out = out + LaurentPoly::monomial(translate(i, k - i));
    }
    out
}

/// The common right-hand side of the strip relations.
fn strip_rhs(n: u32) -> LaurentPoly {
    let n = n as i64;
    let open: LaurentPoly = OPEN_TILES
        .iter()
        .map(|t| t.expand())
        .fold(LaurentPoly::zero(), |a, b| a + b);
    homogeneous(n) + homogeneous(n - 1) * open + homogeneous(n - 2) * p("x1*x2*z^-1")
}

/// `z^n - z^{n-1}` minus its strip tiling.
pub fn strip_identity(n: u32) -> LaurentPoly {
    let z = LaurentPoly::var("z");
    z.pow(n) - z.pow(n - 1) - strip_rhs(n)
}

/// `y3^{n-1} z - y3^{n-1}` minus the same strip tiling.
pub fn strip_reduced_identity(n: u32) -> LaurentPoly {
    let y3 = LaurentPoly::var("y3").pow(n - 1);
    &y3 * &LaurentPoly::var("z") - y3 - strip_rhs(n)
}

/// `(y3 - x1)(z - 1) - x2(z - 1 - x1 + x1 z^-1)`.
pub fn strip_core_identity() -> LaurentPoly {
    p("(y3 - x1)*(z - 1) - x2*(z - 1 - x1 + x1*z^-1)")
}

/// Checks the strip relation at `n`, its reduced form and the core relation.
pub fn verify_strip(n: u32) -> Result<bool> {
    if n == 0 {
        return Err(Error::Unsupported("strip relation needs n ≥ 1".into()));
    }
    let cox = coxeter_ring();
    Ok(cox.kernel_member(&strip_identity(n))?
        && cox.kernel_member(&strip_reduced_identity(n))?
        && cox.kernel_member(&strip_core_identity())?)
}
