mod common;

use common::*;
use nodecount_core::abelian::abelian_count;
use nodecount_core::enriques::{enumerate_diagrams, invariants, EnriquesDiagram};
use nodecount_core::grass::{fiber_pushforward, BundleFiberClass};
use nodecount_core::nodegen::{node_polynomials, q_transform};
use nodecount_core::surface::{plane_count, plane_validity, severi_degree, ChernNumbers};
use nodecount_core::{CommutativeRing, ExactRational, SparsePolynomial};
use proptest::prelude::*;
use std::sync::OnceLock;

fn diagrams() -> &'static [EnriquesDiagram] {
    static CELL: OnceLock<Vec<EnriquesDiagram>> = OnceLock::new();
    CELL.get_or_init(|| enumerate_diagrams(5, 4).unwrap())
}

fn plane_polys() -> &'static [SparsePolynomial] {
    static CELL: OnceLock<Vec<SparsePolynomial>> = OnceLock::new();
    CELL.get_or_init(|| {
        let plane = ChernNumbers::plane();
        (0..=8).map(|r| severi_degree(r, &plane).unwrap()).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn display_parse_round_trip(p in poly_in(VWWE, 5, 8)) {
        let back: SparsePolynomial = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn q_transform_is_linear(a in node_poly(), b in node_poly(), c in rational(), i in 1u32..=4) {
        let combo = &a.scale_by(&c) + &b;
        let lhs = q_transform(i, &combo).unwrap();
        let rhs = &q_transform(i, &a).unwrap().scale_by(&c) + &q_transform(i, &b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn identity_substitution(p in poly_in(VWWE, 5, 8)) {
        let map: Vec<(&str, SparsePolynomial)> =
            VWWE.iter().map(|v| (*v, SparsePolynomial::var(v))).collect();
        prop_assert_eq!(p.substitute(&map).unwrap(), p);
    }

    #[test]
    fn evaluation_is_a_homomorphism(
        a in node_poly(),
        b in node_poly(),
        point in prop::collection::vec(rational(), 3),
    ) {
        let at: Vec<(&str, ExactRational)> = VWW.iter().copied().zip(point).collect();
        let ev = |p: &SparsePolynomial| p.evaluate(&at).unwrap();
        prop_assert_eq!(ev(&(&a * &b)), &ev(&a) * &ev(&b));
        prop_assert_eq!(ev(&(&a - &b)), &ev(&a) - &ev(&b));
    }

    #[test]
    fn fiber_pushforward_kills_low_powers(x in fiber_class()) {
        let base = x.polynomial().coefficient_of("f", 0);
        let linear = x.polynomial().coefficient_of("f", 1);
        let low = BundleFiberClass::new(&base + &(&linear * &SparsePolynomial::var("f")));
        prop_assert!(fiber_pushforward(&low).is_zero());
    }

    #[test]
    fn plane_counts_are_integers(r in 0usize..=8, m in -30i64..=30) {
        let value = plane_polys()[r].evaluate(&[("m", ExactRational::from(m))]).unwrap();
        prop_assert!(value.is_integer());
        if plane_validity(r as i64, m) {
            prop_assert!(m >= 1);
        }
    }

    #[test]
    fn invariants_are_isomorphism_invariant(i in any::<prop::sample::Index>()) {
        let d = i.get(diagrams());
        let c = d.canonical_form();
        prop_assert!(d.is_isomorphic(&c));
        prop_assert_eq!(invariants(d).unwrap(), invariants(&c).unwrap());
        let inv = invariants(d).unwrap();
        prop_assert!(inv.cod >= inv.roots);
        prop_assert_eq!(inv.milnor, 2 * inv.delta - inv.branches + inv.roots);
    }
}

#[test]
fn node_polynomials_are_cached() {
    let a = node_polynomials().unwrap() as *const _;
    let b = node_polynomials().unwrap() as *const _;
    assert_eq!(a, b);
}

#[test]
fn abelian_counts_vanish_at_genus_zero_and_one() {
    for r in 1..=8 {
        let n = abelian_count(r).unwrap();
        for g in [0, 1] {
            assert!(
                n.evaluate(&[("g", ExactRational::from(g))])
                    .unwrap()
                    .is_zero(),
                "r = {r}"
            );
        }
    }
}

#[test]
fn plane_count_agrees_with_the_polynomial() {
    for r in 0..=8 {
        for m in [-2, 1, 4, 9] {
            let value = plane_polys()[r]
                .evaluate(&[("m", ExactRational::from(m))])
                .unwrap();
            assert_eq!(plane_count(r, m).unwrap(), value.to_integer().unwrap());
        }
    }
}
