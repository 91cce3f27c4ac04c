mod common;

use common::{oracle_member, rat};
use minkring::geometry::Scalar;
use minkring::laurent::{LaurentPoly, Monomial};
use minkring::presentations::{
    box_ring, coxeter_ring, interval_ring, point_ring, IntervalNaming, Polarity, Presentation,
    RingMode,
};
use minkring::products::random_ideal_element;
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn p(text: &str) -> LaurentPoly {
    text.parse().unwrap()
}

fn catalog() -> Vec<Presentation> {
    let mut out = vec![coxeter_ring(), point_ring()];
    for d in 1..=3 {
        out.push(box_ring(d, false));
        out.push(box_ring(d, true));
    }
    let pairs = [
        (Scalar::zero(), Scalar::from(2)),
        (Scalar::one(), Scalar::sqrt2()),
        (Scalar::one(), Scalar::from(2)),
        (Scalar::from(-1), Scalar::from(2)),
    ];
    for (a, b) in pairs {
        for mode in [RingMode::Polynomial, RingMode::Laurent] {
            for naming in [IntervalNaming::Relabeled, IntervalNaming::Full] {
                out.push(interval_ring(a.clone(), b.clone(), mode, naming).unwrap().0);
            }
        }
    }
    out
}

#[test]
fn oracle_separates_obvious_cases() {
    let cox = coxeter_ring();
    assert!(!oracle_member(&cox, &p("x1")));
    assert!(!oracle_member(&cox, &p("z^-1")));
    assert!(oracle_member(&cox, &p("(y1-1)*(y1-x1)")));
    assert!(oracle_member(&cox, &p("x1*x1^-1 - 1")));
    assert!(!oracle_member(&cox, &p("y1*y2 - z")));
}

#[test]
fn coxeter_generators_pass_both_tests() {
    let cox = coxeter_ring();
    assert_eq!(cox.declared().len(), 9);
    for g in cox.declared() {
        assert!(cox.kernel_member(g).unwrap(), "{g}");
        assert!(oracle_member(&cox, g), "{g}");
    }
}

#[test]
fn catalog_generators_pass_the_oracle() {
    for pres in catalog() {
        for g in pres.declared() {
            assert!(oracle_member(&pres, g), "{} {g}", pres.id());
        }
    }
}

#[test]
fn declared_ideals_are_power_closed() {
    for pres in catalog() {
        let powers: &[i64] = if pres.is_laurent() {
            &[-2, -1, 2, 3]
        } else {
            &[2, 3]
        };
        for g in pres.declared() {
            for &i in powers {
                let h = g.power_map(i);
                assert!(pres.kernel_member(&h).unwrap(), "{} {g} at {i}", pres.id());
                assert!(oracle_member(&pres, &h), "{} {g} at {i}", pres.id());
            }
        }
    }
}

#[test]
fn ideal_elements_vanish_at_all_ones() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for pres in [coxeter_ring(), box_ring(2, true), box_ring(1, false)] {
        for _ in 0..100 {
            let f = random_ideal_element(&pres, &mut rng);
            assert!(f.at_ones().is_zero(), "{f}");
            assert!(pres.kernel_member(&f).unwrap(), "{f}");
        }
        for _ in 0..10 {
            let f = random_ideal_element(&pres, &mut rng);
            assert!(oracle_member(&pres, &f), "{f}");
        }
    }
}

fn arb_poly(pres: Presentation) -> impl Strategy<Value = LaurentPoly> {
    let gens: Vec<(String, i64)> = pres
        .generators()
        .iter()
        .map(|g| {
            let low = if g.polarity == Polarity::Invertible {
                -1
            } else {
                0
            };
            (g.name.clone(), low)
        })
        .collect();
    let n = gens.len();
    let term = (prop::collection::vec((0..n, -1i64..3), 0..3), -2i64..3);
    prop::collection::vec(term, 1..4).prop_map(move |terms| {
        LaurentPoly::from_terms(terms.into_iter().map(|(exps, c)| {
            let m = Monomial::from_exponents(exps.into_iter().map(|(i, e)| {
                let (name, low) = &gens[i];
                (name.clone(), e.max(*low))
            }));
            (m, rat(c))
        }))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn library_agrees_with_oracle_on_the_grid(f in arb_poly(coxeter_ring())) {
        let cox = coxeter_ring();
        prop_assert_eq!(cox.kernel_member(&f).unwrap(), oracle_member(&cox, &f));
    }

    #[test]
    fn library_agrees_with_oracle_on_boxes(f in arb_poly(box_ring(2, true))) {
        let pres = box_ring(2, true);
        prop_assert_eq!(pres.kernel_member(&f).unwrap(), oracle_member(&pres, &f));
    }

    #[test]
    fn library_agrees_with_oracle_on_the_line(f in arb_poly(
        interval_ring(Scalar::one(), Scalar::sqrt2(), RingMode::Laurent, IntervalNaming::Full).unwrap().0
    )) {
        let pres = interval_ring(Scalar::one(), Scalar::sqrt2(), RingMode::Laurent, IntervalNaming::Full).unwrap().0;
        prop_assert_eq!(pres.kernel_member(&f).unwrap(), oracle_member(&pres, &f));
    }

    #[test]
    fn grid_ideal_members_agree(seed in any::<u64>()) {
        let cox = coxeter_ring();
        let f = random_ideal_element(&cox, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(oracle_member(&cox, &f));
    }

    #[test]
    fn membership_witness_is_a_nonzero_value(f in arb_poly(coxeter_ring())) {
        let cox = coxeter_ring();
        let m = cox.membership(&f).unwrap();
        match m.witness {
            None => prop_assert!(m.member),
            Some((point, value)) => {
                prop_assert!(!m.member);
                prop_assert!(!value.is_zero());
                prop_assert_eq!(cox.phi_map(&f).unwrap().evaluate_at(&point), value);
            }
        }
    }
}
