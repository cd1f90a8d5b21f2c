//! Brackets, wedges, divergences and gradings on the documented examples.

use germ_core::text::{parse_field, parse_one_form, parse_poly};
use germ_core::{
    apply, divergence, dual_form, hamiltonian, lie_bracket, quasi_decompose_field, quasi_decompose_function, wedge,
    weighted_euler, DualForm, PolySeries, VectorFieldJet, Weight,
};

fn x(s: &str) -> VectorFieldJet {
    parse_field(s, 2).unwrap()
}

fn p(s: &str) -> PolySeries {
    parse_poly(s, 2).unwrap()
}

fn plane_dual(f: &VectorFieldJet) -> germ_core::OneFormJet {
    match dual_form(f).unwrap() {
        DualForm::OneForm(w) => w,
        DualForm::TwoForm(_) => unreachable!("plane field"),
    }
}

#[test]
fn brackets() {
    assert!(lie_bracket(&x("x, 0"), &x("0, y")).unwrap().is_zero());
    assert_eq!(lie_bracket(&x("x, y"), &x("0, x^2")).unwrap(), x("0, x^2"));
    assert_eq!(lie_bracket(&x("y, 0"), &x("0, x")).unwrap(), x("-x, y"));
}

#[test]
fn wedges() {
    let f = x("x, 2*y");
    assert!(wedge(&[f.clone(), f.clone()]).unwrap()[0].is_zero());
    assert_eq!(wedge(&[f, x("y, 0")]).unwrap(), vec![p("-2*y^2")]);
    assert_eq!(wedge(&[x("x, 0"), x("0, y")]).unwrap(), vec![p("x*y")]);
    let a = parse_field("y, 0, 0", 3).unwrap();
    let b = parse_field("0, 0, x", 3).unwrap();
    let c = |s| parse_poly(s, 3).unwrap();
    assert_eq!(wedge(&[a, b]).unwrap(), vec![c("0"), c("-x*y"), c("0")]);
}

#[test]
fn divergences() {
    assert_eq!(divergence(&x("x, y")), p("2"));
    assert!(divergence(&x("y, 0")).is_zero());
    assert_eq!(divergence(&x("x^2, x*y")), p("3*x"));
}

#[test]
fn derivations() {
    assert!(apply(&x("x, -y"), &p("x*y")).unwrap().is_zero());
    assert_eq!(apply(&x("x, y"), &p("x^2*y")).unwrap(), p("3*x^2*y"));
    assert_eq!(apply(&x("2*x*y, 2*y^2 - x^3"), &p("x")).unwrap(), p("2*x*y"));
}

#[test]
fn dual_forms() {
    let w = |s: &str| parse_one_form(s, 2).unwrap().0;
    assert_eq!(plane_dual(&x("x, y")), w("x dy - y dx"));
    assert_eq!(plane_dual(&x("x^2, y")), w("x^2 dy - y dx"));
    assert_eq!(plane_dual(&x("2*x*y, 2*y^2 - x^3")), w("2*x*y dy - (2*y^2 - x^3) dx"));
    let three = dual_form(&parse_field("x, y, z", 3).unwrap()).unwrap();
    assert!(matches!(three, DualForm::TwoForm(_)));
}

#[test]
fn hamiltonians() {
    assert_eq!(hamiltonian(&p("x*y")).unwrap(), x("x, -y"));
    assert_eq!(hamiltonian(&p("x^2 + y^2")).unwrap(), x("2*y, -2*x"));
    for f in ["x^3 - y^2 + x*y", "y^2 - x^3", "x^2*y + 7*y^5"] {
        let f = p(f);
        assert!(apply(&hamiltonian(&f).unwrap(), &f).unwrap().is_zero());
    }
}

#[test]
fn quasi_homogeneous_parts() {
    let r = Weight::standard(2);
    let parts = quasi_decompose_function(&p("x + x*y"), &r).unwrap();
    assert_eq!(parts.into_iter().collect::<Vec<_>>(), vec![(1, p("x")), (2, p("x*y"))]);
    let w12 = Weight::new(vec![1, 2]).unwrap();
    let parts = quasi_decompose_function(&p("y - x^2"), &w12).unwrap();
    assert_eq!(parts.into_iter().collect::<Vec<_>>(), vec![(2, p("y - x^2"))]);
    let parts = quasi_decompose_field(&x("y + x^2, x*y"), &r).unwrap();
    assert_eq!(parts.into_iter().collect::<Vec<_>>(), vec![(0, x("y, 0")), (1, x("x^2, x*y"))]);
    assert_eq!(p("y - x^2").order(Some(&w12)), germ_core::Order::Finite(2));
}

#[test]
fn euler_fields() {
    assert_eq!(weighted_euler(&Weight::standard(2)), x("x, y"));
    assert_eq!(weighted_euler(&Weight::new(vec![1, 2]).unwrap()), x("x, 2*y"));
    assert_eq!(weighted_euler(&Weight::new(vec![2, 3]).unwrap()), x("2*x, 3*y"));
    assert!(Weight::new(vec![2, 4]).is_err());
}

#[test]
fn bracket_grading_with_euler_field() {
    // [R, X_k] = (k - 1) X_k for homogeneous X_k of degree k
    let r = x("x, y");
    for (s, k) in [("x^2, x*y", 2i64), ("y^3, x^2*y", 3), ("y, x", 1)] {
        let xk = x(s);
        assert_eq!(lie_bracket(&r, &xk).unwrap(), xk.scale(&germ_core::GaussianRational::from(k - 1)));
    }
}
