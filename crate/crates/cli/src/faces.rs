//! Polytopes with lettered vertices, and faces written as `edge:OA` or `vertex:B`.

use std::collections::BTreeSet;
use std::str::FromStr;

use minkring::geometry::{GridPoint, GridSet, Polytope, Scalar};
use minkring::identities::CoverSpec;

use crate::CliError;

const LETTERS: &str = "OABCDEFGHIJKLMNPQRSTUVWXYZ";

#[derive(Clone, Debug, PartialEq)]
pub struct LabeledPolytope {
    name: String,
    polytope: Polytope,
    vertices: Vec<(char, Polytope)>,
}

fn grid_vertex(u: i64, v: i64) -> Polytope {
    Polytope::Grid(GridSet::point(GridPoint::new(u, v)))
}

impl FromStr for LabeledPolytope {
    type Err = CliError;

    /// `triangle`, `square`, `interval`, or any polytope literal such as `box[0..1,0..2]`.
    fn from_str(text: &str) -> Result<Self, CliError> {
        let text = text.trim();
        let labeled = |polytope: Polytope, vertices: Vec<(char, Polytope)>| LabeledPolytope {
            name: text.to_string(),
            polytope,
            vertices,
        };
        Ok(match text {
            "triangle" => labeled(
                Polytope::Grid(GridSet::unit_triangle()),
                vec![
                    ('O', grid_vertex(0, 0)),
                    ('A', grid_vertex(1, 0)),
                    ('B', grid_vertex(0, 1)),
                ],
            ),
            "square" => labeled(
                Polytope::Box(vec![(0, 1), (0, 1)]),
                vec![
                    ('O', Polytope::Box(vec![(0, 0), (0, 0)])),
                    ('A', Polytope::Box(vec![(1, 1), (0, 0)])),
                    ('B', Polytope::Box(vec![(0, 0), (1, 1)])),
                    ('C', Polytope::Box(vec![(1, 1), (1, 1)])),
                ],
            ),
            "interval" | "segment" => labeled(
                Polytope::Interval(Scalar::zero(), Scalar::one()),
                vec![
                    ('O', Polytope::Point(Scalar::zero())),
                    ('A', Polytope::Point(Scalar::one())),
                ],
            ),
            literal => {
                let polytope: Polytope = literal.parse()?;
                let vertices = polytope.vertices();
                if vertices.len() > LETTERS.len() {
                    return Err(CliError::Unsupported(format!(
                        "{literal} has too many vertices to letter"
                    )));
                }
                labeled(polytope, LETTERS.chars().zip(vertices).collect())
            }
        })
    }
}

impl LabeledPolytope {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    pub fn vertex_labels(&self) -> &[(char, Polytope)] {
        &self.vertices
    }

    fn letters_of(&self, face: &Polytope) -> String {
        let corners: BTreeSet<Polytope> = face.vertices().into_iter().collect();
        self.vertices
            .iter()
            .filter(|(_, v)| corners.contains(v))
            .map(|(c, _)| *c)
            .collect()
    }

    /// Face with exactly the listed vertices, e.g. `edge:OA`.
    pub fn face(&self, text: &str) -> Result<Polytope, CliError> {
        let bad = || CliError::Face(text.to_string());
        let (kind, letters) = text.trim().split_once(':').ok_or_else(bad)?;
        let dim = match kind {
            "vertex" => Some(0),
            "edge" => Some(1),
            "face" => None,
            _ => return Err(bad()),
        };
        let mut wanted = BTreeSet::new();
        for c in letters.chars() {
            let (_, v) = self
                .vertices
                .iter()
                .find(|(l, _)| *l == c)
                .ok_or_else(bad)?;
            wanted.insert(v.clone());
        }
        self.polytope
            .faces()
            .into_iter()
            .find(|f| {
                dim.is_none_or(|d| f.dim() == d)
                    && f.vertices().into_iter().collect::<BTreeSet<_>>() == wanted
            })
            .ok_or_else(bad)
    }

    pub fn face_name(&self, face: &Polytope) -> String {
        let kind = match face.dim() {
            0 => "vertex",
            1 => "edge",
            _ => "face",
        };
        format!("{kind}:{}", self.letters_of(face))
    }

    /// Comma-separated faces, e.g. `edge:OA,vertex:B`.
    pub fn cover(&self, text: &str) -> Result<CoverSpec, CliError> {
        let faces = text
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| self.face(t))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CoverSpec::new(self.polytope.clone(), faces)?)
    }

    /// Faces listed by dimension, then in vertex-letter order.
    pub fn cover_name(&self, c: &CoverSpec) -> String {
        let mut names: Vec<(usize, String)> = c
            .faces()
            .iter()
            .map(|f| (f.dim(), self.face_name(f)))
            .collect();
        names.sort();
        names
            .into_iter()
            .map(|(_, n)| n)
            .collect::<Vec<_>>()
            .join(",")
    }
}
