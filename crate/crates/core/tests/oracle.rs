//! Kernel dimensions from the brute-force reference, frozen as regression
//! values, and the engine checked against both.

mod common;

use common::*;
use germ_core::text::parse_field;
use germ_core::{ad_kernel, first_integral_kernel, VectorFieldJet};
use proptest::prelude::*;

fn fld(s: &str) -> VectorFieldJet {
    let n = s.split(',').count();
    parse_field(s, n).unwrap()
}

/// (field, N, certified centralizer dimension, first-integral dimension)
const FROZEN: &[(&str, u32, usize, usize)] = &[
    ("x, y", 6, 4, 0),
    ("3*x, 5*y", 6, 2, 0),
    ("x, 5/3*y", 6, 2, 0),
    ("x, -y", 6, 6, 3),
    ("x, 0", 6, 13, 6),
    ("x, 2*y", 6, 3, 0),
    ("x, 2*y", 4, 3, 0),
    ("0, x", 6, 13, 6),
    ("x, y + x", 6, 2, 0),
    ("x^2, y", 6, 2, 0),
    ("x^2*y, x*y^2", 4, 4, 0),
    ("3*y^2, -2*x", 4, 1, 1),
    ("3*y^2, -2*x", 6, 2, 2),
    ("2*x + y^2, y, 3*z + y^3", 5, 4, 0),
];

#[test]
fn reference_matches_frozen_values() {
    for (s, n, cent, fi) in FROZEN {
        let x = qfield_from(&fld(s));
        assert_eq!(centralizer_dim(&x, *n), *cent, "centralizer of {s} at N={n}");
        if x.len() == 2 {
            assert_eq!(first_integral_dim(&x, *n), *fi, "first integrals of {s} at N={n}");
        }
    }
}

#[test]
fn engine_matches_frozen_values() {
    for (s, n, cent, fi) in FROZEN {
        let x = fld(s);
        assert_eq!(ad_kernel(&x, *n).unwrap().certified_dimension(), *cent, "centralizer of {s} at N={n}");
        if x.nvars() == 2 {
            assert_eq!(first_integral_kernel(&x, *n).unwrap().basis.len(), *fi, "first integrals of {s} at N={n}");
        }
    }
}

fn real_coeff() -> impl Strategy<Value = germ_core::GaussianRational> {
    (-3i64..=3, 1i64..=2).prop_map(|(a, d)| germ_core::GaussianRational::ratio(a, d))
}

fn real_field() -> impl Strategy<Value = VectorFieldJet> {
    let monos: Vec<_> = (1..=2).flat_map(|d| germ_core::Monomial::of_degree(2, d)).collect();
    let count = monos.len();
    let comp = move || {
        let monos = monos.clone();
        proptest::collection::vec((0..count, real_coeff()), 1..=3).prop_map(move |picks| {
            germ_core::PolySeries::from_terms(2, picks.into_iter().map(|(k, c)| (c, monos[k])))
        })
    };
    (comp(), comp()).prop_map(|(a, b)| VectorFieldJet::new(vec![a, b]).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn engine_agrees_with_reference_on_random_fields(x in real_field()) {
        let q = qfield_from(&x);
        prop_assert_eq!(ad_kernel(&x, 3).unwrap().certified_dimension(), centralizer_dim(&q, 3));
        prop_assert_eq!(first_integral_kernel(&x, 3).unwrap().basis.len(), first_integral_dim(&q, 3));
    }
}
