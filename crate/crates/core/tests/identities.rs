mod common;

use std::collections::BTreeSet;

use common::{faces as oracle_faces, oracle_member, shape_of, Shape};
use minkring::geometry::{GridSet, Polytope, Scalar};
use minkring::identities::{
    covers_vertices, id_holds, minimal_antichains, minimal_covers, CoverSpec, FacePresentation,
};
use minkring::laurent::LaurentPoly;
use minkring::presentations::coxeter_ring;

fn vertex_shapes(s: &Shape) -> BTreeSet<Shape> {
    oracle_faces(s)
        .into_iter()
        .filter(|(_, d)| *d == 0)
        .map(|(f, _)| f)
        .collect()
}

fn oracle_covers(p: &Polytope, faces: &[Polytope]) -> bool {
    let wanted = vertex_shapes(&shape_of(p));
    let got: BTreeSet<Shape> = faces
        .iter()
        .flat_map(|f| vertex_shapes(&shape_of(f)))
        .collect();
    wanted.is_subset(&got)
}

fn oracle_holds(fp: &FacePresentation, faces: &[Polytope]) -> bool {
    let whole = fp.label(fp.polytope()).unwrap().clone();
    let product = faces.iter().fold(LaurentPoly::one(), |acc, f| {
        &acc * &(&whole - fp.label(f).unwrap())
    });
    oracle_member(fp.presentation(), &product)
}

fn subsets(faces: &[Polytope]) -> impl Iterator<Item = Vec<Polytope>> + '_ {
    (1u32..1 << faces.len()).map(move |mask| {
        faces
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, f)| f.clone())
            .collect()
    })
}

fn iff_law(p: &Polytope, expected_subsets: usize) {
    let fp = FacePresentation::new(p).unwrap();
    let faces = p.faces();
    let mut count = 0;
    for subset in subsets(&faces) {
        let c = CoverSpec::new(p.clone(), subset.clone()).unwrap();
        let holds = id_holds(&c).unwrap();
        let covers = covers_vertices(&c);
        assert_eq!(holds, covers, "{c}");
        assert_eq!(covers, oracle_covers(p, &subset), "{c}");
        assert_eq!(holds, oracle_holds(&fp, &subset), "{c}");
        count += 1;
    }
    assert_eq!(count, expected_subsets);
}

#[test]
fn triangle_iff_law() {
    iff_law(&Polytope::Grid(GridSet::unit_triangle()), 127);
}

#[test]
fn square_iff_law() {
    iff_law(&Polytope::Box(vec![(0, 1), (0, 1)]), 511);
}

#[test]
fn interval_iff_law() {
    iff_law(&Polytope::Interval(Scalar::zero(), Scalar::sqrt2()), 7);
}

/// Inclusion-minimal vertex covers by proper faces, by brute force.
fn brute_minimal_covers(p: &Polytope) -> BTreeSet<BTreeSet<Polytope>> {
    let proper: Vec<Polytope> = p.faces().into_iter().filter(|f| f != p).collect();
    let covers: Vec<BTreeSet<Polytope>> = subsets(&proper)
        .filter(|s| oracle_covers(p, s))
        .map(|s| s.into_iter().collect())
        .collect();
    covers
        .iter()
        .filter(|c| !covers.iter().any(|d| d != *c && d.is_subset(c)))
        .cloned()
        .collect()
}

#[test]
fn minimal_covers_match_brute_force() {
    for p in [
        Polytope::Grid(GridSet::unit_triangle()),
        Polytope::Box(vec![(0, 1), (0, 1)]),
        Polytope::Interval(Scalar::zero(), Scalar::one()),
    ] {
        let lib: BTreeSet<BTreeSet<Polytope>> = minimal_covers(&p)
            .unwrap()
            .into_iter()
            .map(|c| c.faces().clone())
            .collect();
        assert_eq!(lib, brute_minimal_covers(&p), "{p}");
    }
}

#[test]
fn triangle_antichains_are_the_second_generator_family() {
    let triangle = Polytope::Grid(GridSet::unit_triangle());
    let fp = FacePresentation::new(&triangle).unwrap();
    let got: BTreeSet<String> = minimal_antichains(&triangle)
        .unwrap()
        .iter()
        .map(|c| {
            minkring::identities::id_expand_in(&fp, c)
                .unwrap()
                .to_string()
        })
        .collect();
    let g2 = [
        "(z - x1)*(z - y2)",
        "(z - x2)*(z - y1)",
        "(z - 1)*(z - y3)",
        "(z - y1)*(z - y2)",
        "(z - y1)*(z - y3)",
        "(z - y2)*(z - y3)",
    ];
    let expected: BTreeSet<String> = g2
        .iter()
        .map(|t| t.parse::<LaurentPoly>().unwrap().to_string())
        .collect();
    assert_eq!(got, expected);
    let declared: BTreeSet<String> = coxeter_ring()
        .declared()
        .iter()
        .map(ToString::to_string)
        .collect();
    assert!(expected.is_subset(&declared));
}

#[test]
fn interval_antichain_is_the_endpoint_pair() {
    let (lo, hi) = (Scalar::zero(), Scalar::from(3));
    let seg = Polytope::Interval(lo.clone(), hi.clone());
    let got = minimal_antichains(&seg).unwrap();
    assert_eq!(got.len(), 1);
    let endpoints: BTreeSet<Polytope> = [Polytope::Point(lo), Polytope::Point(hi)].into();
    assert_eq!(got[0].faces(), &endpoints);
}
