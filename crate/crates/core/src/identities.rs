//! Identities `∏_{F ∈ C} ([P] - [F]) = 0` for sets `C` of faces of a polytope.
//!
//! Such an identity holds exactly when `C` covers every vertex of `P`. The
//! vertex covers that are antichains are ordered by replacing one face with
//! a vertex cover of that face; minimal elements give the defining identities.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{GridSet, Polytope};
use crate::laurent::LaurentPoly;
use crate::presentations::{coxeter_ring, Generator, Polarity, Presentation};

const MAX_FACES: usize = 12;

/// A polytope with a set of its faces.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct CoverSpec {
    polytope: Polytope,
    faces: BTreeSet<Polytope>,
}

impl CoverSpec {
    pub fn new(polytope: Polytope, faces: impl IntoIterator<Item = Polytope>) -> Result<Self> {
        let all = polytope.faces();
        let mut set = BTreeSet::new();
        for f in faces {
            if !all.contains(&f) {
                return Err(Error::FaceNotInPolytope(f.to_string()));
            }
            if set.contains(&f) {
                return Err(Error::DuplicateFace(f.to_string()));
            }
            set.insert(f);
        }
        Ok(CoverSpec {
            polytope,
            faces: set,
        })
    }

    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    pub fn faces(&self) -> &BTreeSet<Polytope> {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// First pair `(F, G)` with `F ⊊ G`, if any.
    pub fn antichain_violation(&self) -> Option<(&Polytope, &Polytope)> {
        for f in &self.faces {
            for g in &self.faces {
                if f != g && f.is_face_of(g) {
                    return Some((f, g));
                }
            }
        }
        None
    }

    fn check_antichain(&self) -> Result<()> {
        if self.faces.contains(&self.polytope) {
            return Err(Error::ContainsWholePolytope);
        }
        match self.antichain_violation() {
            Some((f, g)) => Err(Error::AntichainViolation(f.to_string(), g.to_string())),
            None => Ok(()),
        }
    }
}

impl fmt::Display for CoverSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let faces: Vec<String> = self.faces.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", faces.join(", "))
    }
}

/// The face ring of a polytope: one generator per face, except that a face
/// equal to the origin is the unit `1`.
#[derive(Clone, Debug)]
pub struct FacePresentation {
    polytope: Polytope,
    labels: BTreeMap<Polytope, LaurentPoly>,
    presentation: Presentation,
}

impl FacePresentation {
    pub fn new(polytope: &Polytope) -> Result<Self> {
        let named = conventional_names(polytope).unwrap_or_else(|| generic_names(polytope));
        let unit = polytope.origin();
        let mut labels = BTreeMap::new();
        let mut generators = Vec::new();
        for (face, name) in named {
            if name == "1" {
                labels.insert(face, LaurentPoly::one());
                continue;
            }
            labels.insert(face.clone(), LaurentPoly::var(&name));
            generators.push(Generator::new(name, face, Polarity::Plain));
        }
        let presentation =
            Presentation::new(format!("faces:{polytope}"), generators, unit, Vec::new())?;
        Ok(FacePresentation {
            polytope: polytope.clone(),
            labels,
            presentation,
        })
    }

    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn label(&self, face: &Polytope) -> Result<&LaurentPoly> {
        self.labels
            .get(face)
            .ok_or_else(|| Error::FaceNotInPolytope(face.to_string()))
    }

    pub fn labels(&self) -> &BTreeMap<Polytope, LaurentPoly> {
        &self.labels
    }
}

/// Names of the unit triangle and its faces in the triangular-grid ring,
/// and `x, y, z` for a segment and its endpoints on the line.
fn conventional_names(p: &Polytope) -> Option<Vec<(Polytope, String)>> {
    match p {
        Polytope::Grid(g) if *g == GridSet::unit_triangle() => {
            let cox = coxeter_ring();
            let mut out: Vec<(Polytope, String)> = cox
                .generators()
                .iter()
                .map(|g| (g.polytope.clone(), g.name.clone()))
                .collect();
            out.push((cox.unit().clone(), "1".into()));
            Some(out)
        }
        Polytope::Interval(lo, hi) => Some(vec![
            (Polytope::Point(lo.clone()), "x".into()),
            (Polytope::Point(hi.clone()), "y".into()),
            (p.clone(), "z".into()),
        ]),
        _ => None,
    }
}

/// `p` for the polytope, `v1, v2, …` for vertices, `e1, …` for edges,
/// `f1, …` for 2-faces and `g{d}_{i}` above that.
fn generic_names(p: &Polytope) -> Vec<(Polytope, String)> {
    let mut counters: BTreeMap<usize, usize> = BTreeMap::new();
    p.faces()
        .into_iter()
        .map(|face| {
            if face == *p {
                return (face, "p".to_string());
            }
            let d = face.dim();
            let i = counters.entry(d).or_insert(0);
            *i += 1;
            let name = match d {
                0 => format!("v{i}"),
                1 => format!("e{i}"),
                2 => format!("f{i}"),
                _ => format!("g{d}_{i}"),
            };
            (face, name)
        })
        .collect()
}

/// `∏_{F ∈ C} ([P] - [F])` in the face ring's alphabet; the empty product is `1`.
pub fn id_expand(c: &CoverSpec) -> Result<LaurentPoly> {
    id_expand_in(&FacePresentation::new(&c.polytope)?, c)
}

pub fn id_expand_in(fp: &FacePresentation, c: &CoverSpec) -> Result<LaurentPoly> {
    if fp.polytope != c.polytope {
        return Err(Error::PolytopeMismatch);
    }
    let top = fp.label(&c.polytope)?;
    let mut out = LaurentPoly::one();
    for face in &c.faces {
        out = out * (top - fp.label(face)?);
    }
    Ok(out)
}

/// Whether every vertex of the polytope lies in some listed face.
pub fn covers_vertices(c: &CoverSpec) -> bool {
    c.polytope
        .vertices()
        .iter()
        .all(|v| c.faces.iter().any(|f| v.is_face_of(f)))
}

pub fn id_holds(c: &CoverSpec) -> Result<bool> {
    id_holds_in(&FacePresentation::new(&c.polytope)?, c)
}

/// Decides the identity through the face ring's kernel.
pub fn id_holds_in(fp: &FacePresentation, c: &CoverSpec) -> Result<bool> {
    fp.presentation.kernel_member(&id_expand_in(fp, c)?)
}

/// Whether `b = (a ∖ {A}) ∪ B` for a face `A ∈ a` and a nonempty set `B`
/// of proper faces of `A` covering the vertices of `A`.
pub fn covers_relation(a: &CoverSpec, b: &CoverSpec) -> Result<bool> {
    if a.polytope != b.polytope {
        return Err(Error::PolytopeMismatch);
    }
    a.check_antichain()?;
    b.check_antichain()?;
    for big in &a.faces {
        let rest: BTreeSet<&Polytope> = a.faces.iter().filter(|f| *f != big).collect();
        if !rest.iter().all(|f| b.faces.contains(*f)) {
            continue;
        }
        let replacement: Vec<&Polytope> = b.faces.iter().filter(|f| !rest.contains(f)).collect();
        if replacement.is_empty() || replacement.iter().any(|f| *f == big || !f.is_face_of(big)) {
            continue;
        }
        let covered = big
            .vertices()
            .iter()
            .all(|v| replacement.iter().any(|f| v.is_face_of(f)));
        if covered {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Vertex covers by proper faces that stop covering when any face is removed.
pub fn minimal_covers(p: &Polytope) -> Result<Vec<CoverSpec>> {
    let proper: Vec<Polytope> = p.faces().into_iter().filter(|f| f != p).collect();
    let total = proper.len() + 1;
    if total > MAX_FACES {
        return Err(Error::FaceBoundExceeded(total));
    }
    let vertices = p.vertices();
    // bitmask of vertices in each face
    let masks: Vec<u32> = proper
        .iter()
        .map(|f| {
            vertices
                .iter()
                .enumerate()
                .filter(|(_, v)| v.is_face_of(f))
                .fold(0, |m, (i, _)| m | (1 << i))
        })
        .collect();
    let full: u32 = (1u32 << vertices.len()) - 1;
    let union = |set: u32| -> u32 {
        (0..proper.len())
            .filter(|i| set & (1 << i) != 0)
            .fold(0, |m, i| m | masks[i])
    };
    let mut out = Vec::new();
    for set in 1u32..(1 << proper.len()) {
        if union(set) != full {
            continue;
        }
        let minimal = (0..proper.len())
            .filter(|i| set & (1 << i) != 0)
            .all(|i| union(set & !(1 << i)) != full);
        if minimal {
            let faces = (0..proper.len())
                .filter(|i| set & (1 << i) != 0)
                .map(|i| proper[i].clone());
            out.push(CoverSpec::new(p.clone(), faces)?);
        }
    }
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    Ok(out)
}

/// Minimal elements of the minimal covers under the replacement order.
pub fn minimal_antichains(p: &Polytope) -> Result<Vec<CoverSpec>> {
    let covers = minimal_covers(p)?;
    let mut out = Vec::new();
    for b in &covers {
        let mut has_predecessor = false;
        for a in &covers {
            if a != b && covers_relation(a, b)? {
                has_predecessor = true;
                break;
            }
        }
        if !has_predecessor {
            out.push(b.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::GridPoint;

    fn triangle() -> Polytope {
        Polytope::Grid(GridSet::unit_triangle())
    }

    fn g(points: &[(i64, i64)]) -> Polytope {
        let pts: Vec<GridPoint> = points.iter().map(|(u, v)| GridPoint::new(*u, *v)).collect();
        Polytope::grid_hull(&pts).unwrap()
    }

    fn p(text: &str) -> LaurentPoly {
        text.parse().unwrap()
    }

    fn square() -> Polytope {
        Polytope::cube(vec![(0, 1), (0, 1)]).unwrap()
    }

    fn cover(poly: &Polytope, faces: &[Polytope]) -> CoverSpec {
        CoverSpec::new(poly.clone(), faces.iter().cloned()).unwrap()
    }

    const O: (i64, i64) = (0, 0);
    const A: (i64, i64) = (1, 0);
    const B: (i64, i64) = (0, 1);

    #[test]
    fn expansion_examples() {
        let c = cover(&triangle(), &[g(&[O, A]), g(&[B])]);
        assert_eq!(id_expand(&c).unwrap(), p("(z - y1)*(z - x2)"));
        let interval = Polytope::interval(1.into(), 3.into()).unwrap();
        let ends = cover(&interval, &interval.vertices());
        assert_eq!(id_expand(&ends).unwrap(), p("(z - x)*(z - y)"));
        assert_eq!(
            id_expand(&cover(&triangle(), &[])).unwrap(),
            LaurentPoly::one()
        );
        let all = cover(&triangle(), &triangle().vertices());
        assert_eq!(id_expand(&all).unwrap(), p("(z - 1)*(z - x1)*(z - x2)"));
    }

    #[test]
    fn spec_validation() {
        let outside = g(&[(2, 0)]);
        assert!(matches!(
            CoverSpec::new(triangle(), [outside]),
            Err(Error::FaceNotInPolytope(_))
        ));
        assert!(matches!(
            CoverSpec::new(triangle(), [g(&[A]), g(&[A])]),
            Err(Error::DuplicateFace(_))
        ));
    }

    #[test]
    fn vertex_cover_examples() {
        assert!(covers_vertices(&cover(&triangle(), &[g(&[O, A]), g(&[B])])));
        assert!(!covers_vertices(&cover(&triangle(), &[g(&[O, A])])));
        let sq = square();
        let bottom = Polytope::cube(vec![(0, 1), (0, 0)]).unwrap();
        let top = Polytope::cube(vec![(0, 1), (1, 1)]).unwrap();
        assert!(covers_vertices(&cover(&sq, &[bottom, top])));
    }

    #[test]
    fn holds_examples() {
        assert!(id_holds(&cover(&triangle(), &triangle().vertices())).unwrap());
        assert!(!id_holds(&cover(&triangle(), &[g(&[A, B])])).unwrap());
        assert!(id_holds(&cover(&square(), &square().vertices())).unwrap());
        // the whole polytope contributes a zero factor
        assert!(id_holds(&cover(&triangle(), &[triangle()])).unwrap());
    }

    fn subsets(poly: &Polytope) -> impl Iterator<Item = CoverSpec> + '_ {
        let faces = poly.faces();
        (1u32..(1 << faces.len())).map(move |mask| {
            let chosen = (0..faces.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| faces[i].clone());
            CoverSpec::new(poly.clone(), chosen).unwrap()
        })
    }

    #[test]
    fn iff_law_on_triangle() {
        let fp = FacePresentation::new(&triangle()).unwrap();
        let mut count = 0;
        for c in subsets(&triangle()) {
            assert_eq!(id_holds_in(&fp, &c).unwrap(), covers_vertices(&c), "{c}");
            count += 1;
        }
        assert_eq!(count, 127);
    }

    #[test]
    fn cover_relation_examples() {
        let a = cover(&triangle(), &[g(&[O, A]), g(&[B])]);
        let b = cover(&triangle(), &triangle().vertices());
        assert!(covers_relation(&a, &b).unwrap());
        assert!(!covers_relation(&b, &a).unwrap());
        assert!(!covers_relation(&a, &a).unwrap());
        let whole = cover(&triangle(), &[triangle()]);
        assert_eq!(
            covers_relation(&whole, &b),
            Err(Error::ContainsWholePolytope)
        );
        let chain = cover(&triangle(), &[g(&[O, A]), g(&[A])]);
        assert!(matches!(
            covers_relation(&chain, &b),
            Err(Error::AntichainViolation(_, _))
        ));
        let other = cover(&square(), &square().vertices());
        assert_eq!(covers_relation(&a, &other), Err(Error::PolytopeMismatch));
    }

    #[test]
    fn triangle_minimal_antichains_are_the_quadratic_relations() {
        let fp = FacePresentation::new(&triangle()).unwrap();
        let mins = minimal_antichains(&triangle()).unwrap();
        let polys: BTreeSet<String> = mins
            .iter()
            .map(|c| id_expand_in(&fp, c).unwrap().to_string())
            .collect();
        let expected: BTreeSet<String> = [
            "(z - 1)*(z - y3)",
            "(z - x1)*(z - y2)",
            "(z - x2)*(z - y1)",
            "(z - y1)*(z - y2)",
            "(z - y1)*(z - y3)",
            "(z - y2)*(z - y3)",
        ]
        .iter()
        .map(|t| p(t).to_string())
        .collect();
        assert_eq!(polys, expected);
        let vertex_cover = cover(&triangle(), &triangle().vertices());
        assert!(minimal_covers(&triangle()).unwrap().contains(&vertex_cover));
        assert!(!mins.contains(&vertex_cover));
    }

    #[test]
    fn interval_has_one_minimal_antichain() {
        let interval = Polytope::interval(0.into(), 1.into()).unwrap();
        let mins = minimal_antichains(&interval).unwrap();
        assert_eq!(mins, vec![cover(&interval, &interval.vertices())]);
    }

    #[test]
    fn cover_steps_grow_and_preserve_identities() {
        let fp = FacePresentation::new(&triangle()).unwrap();
        let covers = minimal_covers(&triangle()).unwrap();
        for a in &covers {
            for b in &covers {
                if covers_relation(a, b).unwrap() {
                    assert!(b.len() >= a.len());
                    assert!(!id_holds_in(&fp, a).unwrap() || id_holds_in(&fp, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn face_bound() {
        let cube = Polytope::cube(vec![(0, 1); 3]).unwrap();
        assert_eq!(minimal_antichains(&cube), Err(Error::FaceBoundExceeded(27)));
    }
}
