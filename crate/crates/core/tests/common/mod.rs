//! Pointwise oracle for kernel membership.
//!
//! Each monomial is expanded with `[N]^-1 = Σ_F (-1)^dim F [-F]` into a signed
//! sum of closed polytopes `P+ + (-F)`. Those are stored as plain coordinate
//! data and evaluated at sample points, one per cell of the common refinement.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use minkring::geometry::{GridSet, Polytope, Scalar};
use minkring::laurent::{LaurentPoly, Monomial};
use minkring::presentations::Presentation;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// One orthogonal block of a closed polytope.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Block {
    Line(Scalar, Scalar),
    Axis(i64, i64),
    /// Lattice points of a grid polygon in `(u, v)` coordinates.
    Grid(BTreeSet<(i64, i64)>),
}

pub type Shape = Vec<Block>;

fn grid_points(g: &GridSet) -> BTreeSet<(i64, i64)> {
    let (u0, u1) = g.u_range();
    let (v0, v1) = g.v_range();
    let (s0, s1) = g.s_range();
    let mut out = BTreeSet::new();
    for u in u0..=u1 {
        for v in v0..=v1 {
            if s0 <= u + v && u + v <= s1 {
                out.insert((u, v));
            }
        }
    }
    out
}

pub fn shape_of(p: &Polytope) -> Shape {
    match p {
        Polytope::Point(x) => vec![Block::Line(x.clone(), x.clone())],
        Polytope::Interval(a, b) => vec![Block::Line(a.clone(), b.clone())],
        Polytope::Box(axes) => axes.iter().map(|&(a, b)| Block::Axis(a, b)).collect(),
        Polytope::Grid(g) => vec![Block::Grid(grid_points(g))],
        Polytope::Product(parts) => parts.iter().flat_map(shape_of).collect(),
    }
}

fn zero_like(shape: &Shape) -> Shape {
    shape
        .iter()
        .map(|b| match b {
            Block::Line(..) => Block::Line(Scalar::zero(), Scalar::zero()),
            Block::Axis(..) => Block::Axis(0, 0),
            Block::Grid(_) => Block::Grid([(0, 0)].into()),
        })
        .collect()
}

fn sum_block(a: &Block, b: &Block) -> Block {
    match (a, b) {
        (Block::Line(a0, a1), Block::Line(b0, b1)) => Block::Line(a0 + b0, a1 + b1),
        (Block::Axis(a0, a1), Block::Axis(b0, b1)) => Block::Axis(a0 + b0, a1 + b1),
        (Block::Grid(p), Block::Grid(q)) => Block::Grid(
            p.iter()
                .flat_map(|x| q.iter().map(move |y| (x.0 + y.0, x.1 + y.1)))
                .collect(),
        ),
        _ => panic!("block kinds differ"),
    }
}

pub fn sum(a: &Shape, b: &Shape) -> Shape {
    a.iter().zip(b).map(|(x, y)| sum_block(x, y)).collect()
}

pub fn neg(a: &Shape) -> Shape {
    a.iter()
        .map(|b| match b {
            Block::Line(x, y) => Block::Line(-y, -x),
            Block::Axis(x, y) => Block::Axis(-y, -x),
            Block::Grid(p) => Block::Grid(p.iter().map(|&(u, v)| (-u, -v)).collect()),
        })
        .collect()
}

/// Planar image `(2u + v, v)`; an affine map, so hulls and faces carry over.
fn planar(p: (i64, i64)) -> (i64, i64) {
    (2 * p.0 + p.1, p.1)
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Hull vertices in counter-clockwise order (monotone chain), in `(u, v)` coordinates.
fn hull(points: &BTreeSet<(i64, i64)>) -> Vec<(i64, i64)> {
    let mut pts: Vec<(i64, i64)> = points.iter().map(|&p| planar(p)).collect();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts.into_iter().map(unplanar).collect();
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower.into_iter().map(unplanar).collect()
}

fn unplanar(p: (i64, i64)) -> (i64, i64) {
    ((p.0 - p.1) / 2, p.1)
}

fn segment_points(a: (i64, i64), b: (i64, i64)) -> BTreeSet<(i64, i64)> {
    let (du, dv) = (b.0 - a.0, b.1 - a.1);
    let g = num_integer::gcd(du, dv).max(1);
    (0..=g)
        .map(|k| (a.0 + du / g * k, a.1 + dv / g * k))
        .collect()
}

/// Faces of one block with their dimensions.
fn block_faces(b: &Block) -> Vec<(Block, usize)> {
    match b {
        Block::Line(x, y) if x == y => vec![(b.clone(), 0)],
        Block::Line(x, y) => vec![
            (Block::Line(x.clone(), x.clone()), 0),
            (Block::Line(y.clone(), y.clone()), 0),
            (b.clone(), 1),
        ],
        Block::Axis(x, y) if x == y => vec![(b.clone(), 0)],
        Block::Axis(x, y) => vec![
            (Block::Axis(*x, *x), 0),
            (Block::Axis(*y, *y), 0),
            (b.clone(), 1),
        ],
        Block::Grid(points) => {
            let h = hull(points);
            let mut out: Vec<(Block, usize)> =
                h.iter().map(|&v| (Block::Grid([v].into()), 0)).collect();
            match h.len() {
                1 => {}
                2 => out.push((b.clone(), 1)),
                n => {
                    for i in 0..n {
                        out.push((Block::Grid(segment_points(h[i], h[(i + 1) % n])), 1));
                    }
                    out.push((b.clone(), 2));
                }
            }
            out
        }
    }
}

pub fn faces(s: &Shape) -> Vec<(Shape, usize)> {
    s.iter().fold(vec![(Vec::new(), 0)], |acc, block| {
        acc.iter()
            .flat_map(|(prefix, d)| {
                block_faces(block).into_iter().map(move |(f, e)| {
                    let mut next = prefix.clone();
                    next.push(f);
                    (next, d + e)
                })
            })
            .collect()
    })
}

/// Sample coordinate of one block: a scalar on the line, twice the value on an
/// axis, six times `(u, v)` on the grid.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Coord {
    Line(Scalar),
    Axis(i64),
    Grid(i64, i64),
}

/// A block ready for containment tests; grid hulls are precomputed in planar coordinates.
enum Prepared<'a> {
    Line(&'a Scalar, &'a Scalar),
    Axis(i64, i64),
    Hull(Vec<(i64, i64)>),
}

fn prepare(b: &Block) -> Prepared<'_> {
    match b {
        Block::Line(x, y) => Prepared::Line(x, y),
        Block::Axis(x, y) => Prepared::Axis(*x, *y),
        Block::Grid(points) => Prepared::Hull(
            hull(points)
                .into_iter()
                .map(|(a, b)| planar((6 * a, 6 * b)))
                .collect(),
        ),
    }
}

fn prepared_contains(b: &Prepared<'_>, c: &Coord) -> bool {
    match (b, c) {
        (Prepared::Line(x, y), Coord::Line(t)) => *x <= t && t <= *y,
        (Prepared::Axis(x, y), Coord::Axis(t)) => 2 * x <= *t && *t <= 2 * y,
        (Prepared::Hull(h), Coord::Grid(u, v)) => {
            let q = planar((*u, *v));
            match h.len() {
                1 => h[0] == q,
                2 => {
                    cross(h[0], h[1], q) == 0
                        && (q.0 - h[0].0) * (q.0 - h[1].0) <= 0
                        && (q.1 - h[0].1) * (q.1 - h[1].1) <= 0
                }
                n => (0..n).all(|i| cross(h[i], h[(i + 1) % n], q) >= 0),
            }
        }
        _ => panic!("coordinate kind differs from block"),
    }
}

pub fn contains(s: &Shape, point: &[Coord]) -> bool {
    s.iter()
        .zip(point)
        .all(|(b, c)| prepared_contains(&prepare(b), c))
}

/// `φ(m)` as a signed sum of closed shapes.
pub fn monomial_image(p: &Presentation, m: &Monomial) -> Vec<(Shape, i64)> {
    let unit = shape_of(p.unit());
    let mut pos = zero_like(&unit);
    let mut negative = zero_like(&unit);
    for (name, &e) in m.exponents() {
        let g = shape_of(&p.generator(name).expect("known generator").polytope);
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                pos = sum(&pos, &g);
            } else {
                negative = sum(&negative, &g);
            }
        }
    }
    faces(&negative)
        .into_iter()
        .map(|(f, d)| (sum(&pos, &neg(&f)), if d % 2 == 0 { 1 } else { -1 }))
        .collect()
}

pub fn image(p: &Presentation, f: &LaurentPoly) -> Vec<(Shape, BigRational)> {
    let mut out = Vec::new();
    for (m, c) in f.terms() {
        for (s, sign) in monomial_image(p, m) {
            out.push((s, c * BigRational::from_integer(sign.into())));
        }
    }
    out
}

fn block_samples(blocks: &[&Block]) -> Vec<Coord> {
    match blocks[0] {
        Block::Line(..) => {
            let mut ends: Vec<Scalar> = blocks
                .iter()
                .flat_map(|b| match b {
                    Block::Line(x, y) => [x.clone(), y.clone()],
                    _ => unreachable!(),
                })
                .collect();
            ends.sort();
            ends.dedup();
            let mut out = vec![
                &ends[0] - &Scalar::one(),
                &ends[ends.len() - 1] + &Scalar::one(),
            ];
            out.extend(ends.windows(2).map(|w| w[0].midpoint(&w[1])));
            out.extend(ends);
            out.into_iter().map(Coord::Line).collect()
        }
        Block::Axis(..) => {
            let lo = blocks.iter().map(|b| match b {
                Block::Axis(x, _) => *x,
                _ => unreachable!(),
            });
            let hi = blocks.iter().map(|b| match b {
                Block::Axis(_, y) => *y,
                _ => unreachable!(),
            });
            let (lo, hi) = (lo.min().unwrap() - 1, hi.max().unwrap() + 1);
            (2 * lo..=2 * hi).map(Coord::Axis).collect()
        }
        Block::Grid(_) => {
            let all: Vec<(i64, i64)> = blocks
                .iter()
                .flat_map(|b| match b {
                    Block::Grid(p) => p.iter().copied().collect::<Vec<_>>(),
                    _ => unreachable!(),
                })
                .collect();
            let (u0, u1) = (
                all.iter().map(|p| p.0).min().unwrap() - 1,
                all.iter().map(|p| p.0).max().unwrap() + 1,
            );
            let (v0, v1) = (
                all.iter().map(|p| p.1).min().unwrap() - 1,
                all.iter().map(|p| p.1).max().unwrap() + 1,
            );
            let offsets = [(0, 0), (3, 0), (0, 3), (3, 3), (2, 2), (4, 4)];
            let mut out = Vec::new();
            for u in u0..=u1 {
                for v in v0..=v1 {
                    for (du, dv) in offsets {
                        out.push(Coord::Grid(6 * u + du, 6 * v + dv));
                    }
                }
            }
            out
        }
    }
}

/// Values of a signed sum of shapes at one point of every cell it can distinguish.
pub fn evaluate(terms: &[(Shape, BigRational)]) -> BTreeMap<Vec<Coord>, BigRational> {
    let mut out = BTreeMap::new();
    let Some((first, _)) = terms.first() else {
        return out;
    };
    let per_block: Vec<Vec<Coord>> = (0..first.len())
        .map(|i| block_samples(&terms.iter().map(|(s, _)| &s[i]).collect::<Vec<_>>()))
        .collect();
    let points = per_block.iter().fold(vec![Vec::new()], |acc, samples| {
        acc.iter()
            .flat_map(|prefix| {
                samples.iter().map(move |c| {
                    let mut next: Vec<Coord> = prefix.clone();
                    next.push(c.clone());
                    next
                })
            })
            .collect::<Vec<_>>()
    });
    let prepared: Vec<(Vec<Prepared<'_>>, &BigRational)> = terms
        .iter()
        .map(|(s, c)| (s.iter().map(prepare).collect(), c))
        .collect();
    for point in points {
        let value: BigRational = prepared
            .iter()
            .filter(|(s, _)| s.iter().zip(&point).all(|(b, c)| prepared_contains(b, c)))
            .map(|(_, c)| (*c).clone())
            .sum();
        out.insert(point, value);
    }
    out
}

pub fn oracle_member(p: &Presentation, f: &LaurentPoly) -> bool {
    evaluate(&image(p, f)).values().all(Zero::is_zero)
}

/// Indicator values of a closed polytope at the same kind of sample points.
pub fn indicator_terms(p: &Polytope) -> Vec<(Shape, BigRational)> {
    vec![(shape_of(p), BigRational::one())]
}

/// Whether `φ(f) = [target]` pointwise.
pub fn oracle_is_indicator(p: &Presentation, f: &LaurentPoly, target: &Polytope) -> bool {
    let mut terms = image(p, f);
    terms.push((shape_of(target), -BigRational::one()));
    evaluate(&terms).values().all(Zero::is_zero)
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
