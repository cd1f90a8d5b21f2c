//! Structured (JSON) encodings of engine values.
//!
//! Rationals are strings `"p/q"` (or `"p"`), never floats. A polynomial is a
//! list of terms `[re, im, [exponents]]` in ascending graded-lex order.

use std::collections::BTreeMap;

use germ_core::blowup::{ChartStep, DivisorCoordinate, ResolutionNode, SingularPoint};
use germ_core::centralizer::{Certification, KernelElement};
use germ_core::resonance::{LinearClass, RatioRationality};
use germ_core::{GaussianRational, OneFormJet, PolySeries, Precision, UniPoly, VectorFieldJet};
use serde_json::{json, Value};

pub fn scalar(c: &GaussianRational) -> Value {
    json!([c.re().to_string(), c.im().to_string()])
}

pub fn poly(f: &PolySeries) -> Value {
    Value::Array(
        f.terms()
            .map(|(m, c)| json!([c.re().to_string(), c.im().to_string(), m.exponents(f.nvars()).to_vec()]))
            .collect(),
    )
}

pub fn precision(p: Precision) -> Value {
    match p {
        Precision::Exact => json!("exact"),
        Precision::BigO(k) => json!({ "big_o": k }),
    }
}

pub fn field(x: &VectorFieldJet) -> Value {
    json!({
        "components": x.components().iter().map(poly).collect::<Vec<_>>(),
        "precision": precision(x.precision()),
    })
}

pub fn one_form(w: &OneFormJet) -> Value {
    Value::Array(w.coefficients().iter().map(poly).collect())
}

pub fn unipoly(p: &UniPoly) -> Value {
    Value::Array(p.coeffs().iter().map(scalar).collect())
}

pub fn dims(d: &BTreeMap<u32, usize>) -> Value {
    Value::Array(d.iter().map(|(k, v)| json!([k, v])).collect())
}

pub fn certification(c: &Certification) -> Value {
    match c {
        Certification::Exact => json!("exact"),
        Certification::Tentative { vanishes_through } => json!({ "tentative": { "vanishes_through": vanishes_through } }),
    }
}

pub fn kernel_field(k: &KernelElement<VectorFieldJet>) -> Value {
    json!({ "field": field(&k.value), "certification": certification(&k.certification) })
}

pub fn kernel_function(k: &KernelElement<PolySeries>) -> Value {
    json!({
        "function": poly(&k.value),
        "precision": precision(k.value.precision()),
        "certification": certification(&k.certification),
    })
}

pub fn ratio(r: &RatioRationality) -> Value {
    match r {
        RatioRationality::Rational(q) => json!({ "rational": scalar(q) }),
        RatioRationality::Irrational => json!("irrational"),
        RatioRationality::Undefined => json!("undefined"),
    }
}

pub fn linear(l: &LinearClass) -> Value {
    json!({
        "case": l.case.as_str(),
        "trace": scalar(&l.trace),
        "determinant": scalar(&l.determinant),
        "ratio": ratio(&l.ratio),
        "eigenvalues": l.eigenvalues.as_ref().map(|(a, b)| json!([scalar(a), scalar(b)])),
    })
}

pub fn coordinate(c: &DivisorCoordinate) -> Value {
    match c {
        DivisorCoordinate::Rational(q) => json!({ "rational": scalar(q) }),
        DivisorCoordinate::Irrational(p) => json!({ "irrational_factor": unipoly(p) }),
    }
}

pub fn point(p: &SingularPoint) -> Value {
    json!({
        "chart": p.chart.index(),
        "coordinate": coordinate(&p.coordinate),
        "classification": p.classification.as_str(),
        "multiplicity": p.multiplicity,
        "isolated": p.isolated,
        "germ": p.germ.as_ref().map(field),
    })
}

fn step(s: &ChartStep) -> Value {
    json!({ "chart": s.chart.index(), "coordinate": coordinate(&s.coordinate) })
}

pub fn node(n: &ResolutionNode) -> Value {
    json!({
        "history": n.history.iter().map(step).collect::<Vec<_>>(),
        "classification": n.classification.as_str(),
        "status": n.status.as_str(),
        "nu": n.nu,
        "germ": n.germ.as_ref().map(field),
        "linear": n.linear.as_ref().map(linear),
        "next_blowup_dicritical": n.next_blowup_dicritical,
        "blowup": n.blowup.as_ref().map(|b| json!({
            "dicritical": b.dicritical,
            "nu": b.nu,
            "divisor_multiplicity": b.divisor_multiplicity,
            "multiplicity_matches": b.multiplicity_matches,
            "witness": unipoly(&b.witness),
            "strict_chart1": field(&b.strict_chart1),
            "strict_chart2": field(&b.strict_chart2),
        })),
        "children": n.children.iter().map(node).collect::<Vec<_>>(),
    })
}
