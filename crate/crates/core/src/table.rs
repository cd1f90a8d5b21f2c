//! Reference table of centralizers for plane linear fields and the
//! saddle-node normal form, reproduced row by row as printed.
//!
//! Module generators such as `C{x^p y^q} <x d/dx, y d/dy>` are expanded into
//! the monomial multiples of degree at most the requested truncation.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::field::VectorFieldJet;
use crate::gaussian::GaussianRational;
use crate::series::PolySeries;
use crate::text::parse_field;

/// Row parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableParams {
    None,
    /// Row 2: `x d/dx + lambda y d/dy`.
    Lambda(GaussianRational),
    /// Row 3: `lambda = -p/q` with `gcd(p, q) = 1`.
    PQ(u32, u32),
    /// Row 5: `x d/dx + n y d/dy`, `n >= 2`.
    N(u32),
    /// Row 8: `x^(p+1) d/dx + y (1 + lambda x^p) d/dy`, `p >= 1`.
    SaddleNode { p: u32, lambda: GaussianRational },
}

/// `d(X)` as printed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableDimension {
    Finite(usize),
    Infinite,
}

#[derive(Clone, Debug)]
pub struct TableEntry {
    pub row: u8,
    pub field: VectorFieldJet,
    /// Truncated spanning family of the printed centralizer.
    pub generators: Vec<VectorFieldJet>,
    pub rank: usize,
    pub dimension: TableDimension,
}

fn field(s: &str) -> VectorFieldJet {
    parse_field(s, 2).expect("static field text")
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidTableRow(msg.into())
}

/// Multiplies each generator by `h^m` for every `m` keeping the degree `<= n`.
fn module_span(h: &PolySeries, generators: &[VectorFieldJet], n: u32) -> Vec<VectorFieldJet> {
    let mut out = Vec::new();
    let hd = h.degree().expect("nonzero multiplier");
    for g in generators {
        let gd = g.degree().expect("nonzero generator");
        let mut power = PolySeries::one(2);
        let mut deg = gd;
        while deg <= n {
            out.push(g.mul_function(&power).expect("plane field"));
            power = &power * h;
            deg += hd;
            if hd == 0 {
                break;
            }
        }
    }
    out
}

fn excluded_lambda(l: &GaussianRational) -> bool {
    if !l.is_real() {
        return false;
    }
    let r = l.re();
    r.is_zero() || r.is_negative() || r.is_integer() || r.recip().is_integer()
}

/// The printed row, with generators truncated at degree `n`.
pub fn table_oracle(row: u8, params: &TableParams, n: u32) -> Result<TableEntry> {
    let p2 = |s: &str| crate::text::parse_poly(s, 2).expect("static polynomial");
    let entry = |field, generators, rank, dimension| TableEntry { row, field, generators, rank, dimension };
    let expect_none = || match params {
        TableParams::None => Ok(()),
        other => Err(invalid(format!("row {row} takes no parameters, got {other:?}"))),
    };
    match row {
        1 => {
            expect_none()?;
            Ok(entry(
                field("x, y"),
                vec![field("x, 0"), field("y, 0"), field("0, x"), field("0, y")],
                2,
                TableDimension::Finite(4),
            ))
        }
        2 => {
            let TableParams::Lambda(l) = params else {
                return Err(invalid("row 2 needs a lambda"));
            };
            if excluded_lambda(l) {
                return Err(invalid(format!("lambda = {l} is excluded for row 2")));
            }
            let x = VectorFieldJet::new(vec![p2("x"), PolySeries::var(2, 1).scale(l)])?;
            Ok(entry(x, vec![field("x, 0"), field("0, y")], 2, TableDimension::Finite(2)))
        }
        3 => {
            let TableParams::PQ(p, q) = *params else {
                return Err(invalid("row 3 needs p, q"));
            };
            if p == 0 || q == 0 || p.gcd(&q) != 1 {
                return Err(invalid(format!("row 3 needs coprime positive p, q, got {p}, {q}")));
            }
            let lambda = GaussianRational::ratio(-i64::from(p), i64::from(q));
            let x = VectorFieldJet::new(vec![p2("x"), PolySeries::var(2, 1).scale(&lambda)])?;
            let h = &p2("x").pow(p) * &p2("y").pow(q);
            Ok(entry(x, module_span(&h, &[field("x, 0"), field("0, y")], n), 2, TableDimension::Infinite))
        }
        4 => {
            expect_none()?;
            Ok(entry(
                field("x, 0"),
                module_span(&p2("y"), &[field("x, 0"), field("0, y")], n),
                2,
                TableDimension::Infinite,
            ))
        }
        5 => {
            let TableParams::N(k) = *params else {
                return Err(invalid("row 5 needs n"));
            };
            if k < 2 {
                return Err(invalid(format!("row 5 needs n >= 2, got {k}")));
            }
            let x = VectorFieldJet::new(vec![p2("x"), p2("y").scale(&GaussianRational::from(i64::from(k)))])?;
            let xn = VectorFieldJet::new(vec![PolySeries::zero(2), p2("x").pow(k)])?;
            let gens = [field("x, 0"), field("0, y"), xn].into_iter().filter(|g| g.degree().unwrap_or(0) <= n).collect();
            Ok(entry(x, gens, 2, TableDimension::Finite(3)))
        }
        6 => {
            expect_none()?;
            Ok(entry(
                field("0, x"),
                module_span(&p2("x"), &[field("x, y"), field("0, 1")], n),
                2,
                TableDimension::Infinite,
            ))
        }
        7 => {
            expect_none()?;
            Ok(entry(field("x, y + x"), vec![field("x, y"), field("0, x")], 2, TableDimension::Finite(2)))
        }
        8 => {
            let TableParams::SaddleNode { p, lambda } = params else {
                return Err(invalid("row 8 needs p, lambda"));
            };
            if *p < 1 {
                return Err(invalid("row 8 needs p >= 1"));
            }
            let xp = p2("x").pow(*p);
            let x = VectorFieldJet::new(vec![
                p2("x").pow(p + 1),
                &p2("y") * &(&PolySeries::one(2) + &xp.scale(lambda)),
            ])?;
            let g1 = VectorFieldJet::new(vec![p2("x"), p2("y").scale(lambda)])?.mul_function(&xp)?;
            let gens = [g1, field("0, y")].into_iter().filter(|g| g.degree().unwrap_or(0) <= n).collect();
            Ok(entry(x, gens, 2, TableDimension::Finite(2)))
        }
        other => Err(invalid(format!("rows are numbered 1 to 8, got {other}"))),
    }
}

/// Parameters used when a row is requested without explicit ones.
pub fn default_params(row: u8) -> TableParams {
    match row {
        2 => TableParams::Lambda(GaussianRational::ratio(5, 3)),
        3 => TableParams::PQ(1, 1),
        5 => TableParams::N(2),
        8 => TableParams::SaddleNode { p: 1, lambda: GaussianRational::zero() },
        _ => TableParams::None,
    }
}
