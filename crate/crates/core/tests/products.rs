mod common;

use common::oracle_member;
use minkring::laurent::LaurentPoly;
use minkring::presentations::{box_ring, coxeter_ring};
use minkring::products::{product_presentation, random_ideal_element};
use minkring::rewriting::{y_tiling, zn_tiling, YAxis};
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn p(text: &str) -> LaurentPoly {
    text.parse().unwrap()
}

#[test]
fn square_from_two_segments() {
    let seg = box_ring(1, false);
    let pp = product_presentation(&seg, &seg).unwrap();
    let combined = pp.combined();
    assert_eq!(combined.declared(), box_ring(2, false).declared());
    for g in combined.declared() {
        assert!(combined.kernel_member(g).unwrap(), "{g}");
        assert!(oracle_member(combined, g), "{g}");
    }
}

#[test]
fn segment_times_triangle() {
    let pp = product_presentation(&box_ring(1, false), &coxeter_ring()).unwrap();
    let combined = pp.combined();
    assert_eq!(
        combined.names(),
        ["x", "y", "x1", "x2", "y1", "y2", "y3", "z"]
    );
    assert_eq!(combined.declared().len(), 10);
    let mut expected: Vec<String> = vec![p("(y - 1)*(y - x)").to_string()];
    expected.extend(coxeter_ring().declared().iter().map(ToString::to_string));
    let got: Vec<String> = combined
        .declared()
        .iter()
        .map(ToString::to_string)
        .collect();
    assert_eq!(got, expected);
    for g in combined.declared() {
        assert!(combined.kernel_member(g).unwrap(), "{g}");
        assert!(oracle_member(combined, g), "{g}");
    }
    assert!(!combined.kernel_member(&p("x1 - x")).unwrap());
    assert!(!oracle_member(combined, &p("x1 - x")));
}

#[test]
fn tensor_identity_at_degree_two() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (l, r) in [
        (box_ring(1, false), box_ring(1, false)),
        (box_ring(1, false), coxeter_ring()),
        (box_ring(1, true), box_ring(2, true)),
    ] {
        let pp = product_presentation(&l, &r).unwrap();
        assert!(pp.verify_tensor_identity(2, 10, &mut rng).unwrap());
    }
}

#[test]
fn split_ideal_elements_land_in_the_factor_kernels() {
    let pp = product_presentation(&box_ring(1, false), &coxeter_ring()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for k in 0..100 {
        let f = random_ideal_element(pp.combined(), &mut rng);
        let (l, r) = pp.psi(&f).unwrap();
        assert!(pp.left().kernel_member(&l).unwrap(), "{f}");
        assert!(pp.right().kernel_member(&r).unwrap(), "{f}");
        assert!(f.at_ones().is_zero(), "{f}");
        if k < 10 {
            assert!(oracle_member(pp.left(), &l), "{f}");
            assert!(oracle_member(pp.right(), &r), "{f}");
            assert!(oracle_member(pp.combined(), &f), "{f}");
        }
    }
}

#[test]
fn tilings_multiply_across_blocks() {
    let pp = product_presentation(&box_ring(1, false), &coxeter_ring()).unwrap();
    let combined = pp.combined();
    for n in 1..=2u32 {
        for k in 1..=2u32 {
            let y = LaurentPoly::var_pow("y", k as i64);
            let z = LaurentPoly::var_pow("z", n as i64);
            let lhs = pp.tau(&y, &z);
            let rhs = pp.tau(&y_tiling(YAxis::Line, k), &zn_tiling(n).to_poly());
            let diff = &lhs - &rhs;
            assert!(combined.kernel_member(&diff).unwrap(), "n={n} k={k}");
            assert!(oracle_member(combined, &diff), "n={n} k={k}");
            let (l, r) = pp.psi(&diff).unwrap();
            assert!(pp.left().kernel_member(&l).unwrap());
            assert!(pp.right().kernel_member(&r).unwrap());
        }
    }
}
