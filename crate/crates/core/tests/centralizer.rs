//! Jet-level centralizers, first integrals, ranks and the reference table.

use germ_core::centralizer::{in_span, same_span};
use germ_core::table::default_params;
use germ_core::text::{parse_field, parse_poly};
use germ_core::{
    ad_kernel, first_integral_kernel, generic_rank, hamiltonian, lie_bracket, resonances, table_oracle,
    GaussianRational, Monomial, Resonance, Stabilization, TableParams, VectorFieldJet,
};

fn x(s: &str) -> VectorFieldJet {
    parse_field(s, 2).unwrap()
}

#[test]
fn radial_field_commutes_with_linear_fields_only() {
    let r = ad_kernel(&x("x, y"), 3).unwrap();
    assert_eq!(r.certified_dimension(), 4);
    assert!(same_span(&r.certified_basis(), &[x("x, 0"), x("y, 0"), x("0, x"), x("0, y")]));
    assert!(r.certified_dims.iter().all(|(d, n)| *d == 1 || *n == 0));
}

#[test]
fn resonant_node() {
    let r = ad_kernel(&x("x, 2*y"), 4).unwrap();
    assert_eq!(r.certified_dimension(), 3);
    assert!(same_span(&r.certified_basis(), &[x("x, 0"), x("0, y"), x("0, x^2")]));
    assert_eq!(r.rank_estimate, 2);
}

#[test]
fn saddle_with_first_integral() {
    let r = ad_kernel(&x("x, -y"), 3).unwrap();
    assert_eq!(r.certified_dimension(), 4);
    assert!(same_span(&r.certified_basis(), &[x("x, 0"), x("0, y"), x("x^2*y, 0"), x("0, x*y^2")]));
    let f = first_integral_kernel(&x("x, -y"), 4).unwrap();
    let p = |s| parse_poly(s, 2).unwrap();
    assert_eq!(f.basis.len(), 2);
    assert!(f.basis.contains(&p("x*y")) && f.basis.contains(&p("x^2*y^2")));
}

#[test]
fn no_first_integrals() {
    assert!(first_integral_kernel(&x("x, y"), 6).unwrap().basis.is_empty());
    let sn = first_integral_kernel(&x("x^2, y"), 5).unwrap();
    assert!(sn.basis.is_empty());
}

#[test]
fn every_certified_element_commutes() {
    for s in ["x, y", "x, -y", "x, 0", "0, x", "x^2, y", "x, y + x", "3*y^2, -2*x"] {
        let f = x(s);
        for y in ad_kernel(&f, 5).unwrap().certified_basis() {
            assert!(lie_bracket(&f, &y).unwrap().is_zero(), "{y} does not commute with {s}");
        }
    }
}

#[test]
fn tentative_elements_of_the_saddle_node() {
    let r = ad_kernel(&x("x^2, y"), 6).unwrap();
    assert_eq!(r.certified_dimension(), 2);
    let tentative: Vec<_> = r.tentative_basis().iter().map(|k| k.value.clone().into_exact()).collect();
    assert!(in_span(&tentative, &x("x^6, 0")));
    assert!(in_span(&tentative, &x("0, x^5*y")));
}

#[test]
fn generic_ranks() {
    assert_eq!(generic_rank(&[x("x, 0"), x("0, y")]).unwrap(), 2);
    assert_eq!(generic_rank(&[x("x, y")]).unwrap(), 1);
    let h = hamiltonian(&parse_poly("x^2 + y^3", 2).unwrap()).unwrap();
    let r = ad_kernel(&h, 6).unwrap();
    assert_eq!(generic_rank(&r.certified_basis()).unwrap(), 1);
    assert_eq!(r.rank_estimate, 1);
}

#[test]
fn stabilization_verdicts() {
    assert_eq!(ad_kernel(&x("x, y"), 6).unwrap().stabilization, Stabilization::Stable);
    assert_eq!(ad_kernel(&x("x, 0"), 6).unwrap().stabilization, Stabilization::Growing);
    assert_eq!(ad_kernel(&x("x, -y"), 6).unwrap().stabilization, Stabilization::Undetermined);
}

#[test]
fn resonance_sets() {
    let g = GaussianRational::from;
    assert_eq!(
        resonances(&[g(1), g(2)], 3).entries,
        vec![Resonance { target: 1, exponents: Monomial::new(&[2, 0]) }]
    );
    assert!(resonances(&[g(2), g(5)], 6).is_empty());
    assert_eq!(resonances(&[g(1), g(-1)], 3).len(), 2);
}

#[test]
fn table_rows_at_degree_six() {
    // row 4 is the one row whose printed span misses a commuting field (d/dy)
    for row in [1u8, 2, 3, 5, 6, 7, 8] {
        let entry = table_oracle(row, &default_params(row), 6).unwrap();
        let r = ad_kernel(&entry.field, 6).unwrap();
        assert!(same_span(&r.certified_basis(), &entry.generators), "row {row}");
        assert_eq!(generic_rank(&r.certified_basis()).unwrap(), 2, "row {row}");
    }
    let four = table_oracle(4, &TableParams::None, 6).unwrap();
    let r = ad_kernel(&four.field, 6).unwrap();
    assert_eq!((r.certified_dimension(), four.generators.len()), (13, 12));
    let mut printed = four.generators.clone();
    printed.push(x("0, 1"));
    assert!(same_span(&r.certified_basis(), &printed));
}

#[test]
fn saddle_node_rows_with_complex_residue() {
    let params = TableParams::SaddleNode { p: 2, lambda: GaussianRational::i() };
    let entry = table_oracle(8, &params, 6).unwrap();
    let r = ad_kernel(&entry.field, 6).unwrap();
    assert!(same_span(&r.certified_basis(), &entry.generators));
}

#[test]
fn diagonal_power_fields() {
    // [x^n d/dx, x^2 d/dx] = (2 - n) x^(n+1) d/dx, so x^2 d/dx commutes only when n = 2
    for n in 2..=4u32 {
        let s = format!("x^{n}, y^{n}");
        let r = ad_kernel(&x(&s), 6).unwrap();
        assert!(same_span(&r.certified_basis(), &[x(&format!("x^{n}, 0")), x(&format!("0, y^{n}"))]), "{s}");
        assert_eq!(in_span(&r.certified_basis(), &x("x^2, 0")), n == 2, "{s}");
    }
}
