//! Brute-force reference computations written independently of the engine.
//!
//! Polynomials are dense maps from exponent vectors to real rationals, and
//! kernels come from plain Gauss-Jordan elimination over `Q`. Nothing here
//! calls engine arithmetic; engine values are only read term by term.

#![allow(dead_code)]

use std::collections::BTreeMap;

use germ_core::{GaussianRational, Monomial, PolySeries, VectorFieldJet};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

pub type Q = BigRational;
pub type QPoly = BTreeMap<Vec<u32>, Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qpoly_from(f: &PolySeries) -> QPoly {
    let n = f.nvars();
    f.terms()
        .map(|(m, c)| {
            assert!(c.is_real(), "the reference only handles real coefficients");
            (m.exponents(n).to_vec(), c.re().clone())
        })
        .collect()
}

pub fn qfield_from(x: &VectorFieldJet) -> Vec<QPoly> {
    x.components().iter().map(qpoly_from).collect()
}

fn add_into(acc: &mut QPoly, e: Vec<u32>, c: Q) {
    let entry = acc.entry(e.clone()).or_insert_with(Q::zero);
    *entry += c;
    if entry.is_zero() {
        acc.remove(&e);
    }
}

pub fn mul(a: &QPoly, b: &QPoly) -> QPoly {
    let mut out = QPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            add_into(&mut out, e, ca * cb);
        }
    }
    out
}

pub fn sub(a: &QPoly, b: &QPoly) -> QPoly {
    let mut out = a.clone();
    for (e, c) in b {
        add_into(&mut out, e.clone(), -c.clone());
    }
    out
}

pub fn deriv(a: &QPoly, i: usize) -> QPoly {
    let mut out = QPoly::new();
    for (e, c) in a {
        if e[i] > 0 {
            let mut e2 = e.clone();
            e2[i] -= 1;
            add_into(&mut out, e2, c * q(i64::from(e[i])));
        }
    }
    out
}

/// `X(f)`
pub fn apply(x: &[QPoly], f: &QPoly) -> QPoly {
    let mut out = QPoly::new();
    for (i, xi) in x.iter().enumerate() {
        for (e, c) in mul(xi, &deriv(f, i)) {
            add_into(&mut out, e, c);
        }
    }
    out
}

/// `[X, Y]_i = X(Y_i) - Y(X_i)`
pub fn bracket(x: &[QPoly], y: &[QPoly]) -> Vec<QPoly> {
    (0..x.len()).map(|i| sub(&apply(x, &y[i]), &apply(y, &x[i]))).collect()
}

/// All exponent vectors in `n` variables with total degree `<= d`.
pub fn exponents_up_to(n: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for e in &out {
            let used: u32 = e.iter().sum();
            for k in 0..=(d - used) {
                let mut e2 = e.clone();
                e2.push(k);
                next.push(e2);
            }
        }
        out = next;
    }
    out
}

/// Nullity of a matrix given as sparse rows over `ncols` columns.
pub fn nullity(rows: Vec<BTreeMap<usize, Q>>, ncols: usize) -> usize {
    let mut dense: Vec<Vec<Q>> = rows
        .into_iter()
        .map(|r| {
            let mut v = vec![Q::zero(); ncols];
            for (c, x) in r {
                v[c] = x;
            }
            v
        })
        .collect();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..dense.len()).find(|&r| !dense[r][col].is_zero()) else {
            continue;
        };
        dense.swap(rank, p);
        let inv = dense[rank][col].recip();
        for v in dense[rank].iter_mut() {
            *v *= &inv;
        }
        let pivot = dense[rank].clone();
        for (r, row) in dense.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (a, b) in row.iter_mut().zip(&pivot) {
                    *a -= &f * b;
                }
            }
        }
        rank += 1;
    }
    ncols - rank
}

/// Dimension of the polynomial fields of degree `<= n_max` commuting exactly with `X`.
pub fn centralizer_dim(x: &[QPoly], n_max: u32) -> usize {
    let n = x.len();
    let monos = exponents_up_to(n, n_max);
    let mut columns: Vec<Vec<QPoly>> = Vec::new();
    for i in 0..n {
        for m in &monos {
            let mut y = vec![QPoly::new(); n];
            y[i].insert(m.clone(), Q::one());
            columns.push(bracket(x, &y));
        }
    }
    let mut slots: BTreeMap<(usize, Vec<u32>), usize> = BTreeMap::new();
    let mut rows: Vec<BTreeMap<usize, Q>> = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        for (i, comp) in col.iter().enumerate() {
            for (e, c) in comp {
                let next = slots.len();
                let s = *slots.entry((i, e.clone())).or_insert(next);
                if s == rows.len() {
                    rows.push(BTreeMap::new());
                }
                rows[s].insert(j, c.clone());
            }
        }
    }
    nullity(rows, columns.len())
}

/// Dimension of the polynomials of degree `1..=n_max` with `X(f) = 0` exactly.
pub fn first_integral_dim(x: &[QPoly], n_max: u32) -> usize {
    let n = x.len();
    let monos: Vec<_> = exponents_up_to(n, n_max).into_iter().filter(|e| e.iter().sum::<u32>() > 0).collect();
    let mut slots: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let mut rows: Vec<BTreeMap<usize, Q>> = Vec::new();
    for (j, m) in monos.iter().enumerate() {
        let f: QPoly = [(m.clone(), Q::one())].into_iter().collect();
        for (e, c) in apply(x, &f) {
            let next = slots.len();
            let s = *slots.entry(e).or_insert(next);
            if s == rows.len() {
                rows.push(BTreeMap::new());
            }
            rows[s].insert(j, c);
        }
    }
    nullity(rows, monos.len())
}

pub fn qp(terms: &[(i64, &[u32])]) -> QPoly {
    let mut out = QPoly::new();
    for (c, e) in terms {
        add_into(&mut out, e.to_vec(), q(*c));
    }
    out
}

// ---- engine-side generators for property tests ----

pub fn gr(a: i64, b: i64) -> GaussianRational {
    GaussianRational::from_parts(a, b)
}

/// Small Gaussian rational `(a + b i) / d`.
pub fn arb_coeff() -> impl Strategy<Value = GaussianRational> {
    (-4i64..=4, -2i64..=2, 1i64..=3).prop_map(|(a, b, d)| {
        let num = gr(a, b);
        &num * &GaussianRational::ratio(1, d)
    })
}

/// Polynomial in `n` variables with degree in `lo..=hi` and up to `terms` terms.
pub fn arb_poly(n: usize, lo: u32, hi: u32, terms: usize) -> impl Strategy<Value = PolySeries> {
    let monos: Vec<Monomial> = (lo..=hi).flat_map(|d| Monomial::of_degree(n, d)).collect();
    let count = monos.len();
    proptest::collection::vec((0..count, arb_coeff()), 0..=terms).prop_map(move |picks| {
        PolySeries::from_terms(n, picks.into_iter().map(|(k, c)| (c, monos[k])))
    })
}

pub fn arb_field(n: usize, lo: u32, hi: u32, terms: usize) -> impl Strategy<Value = VectorFieldJet> {
    proptest::collection::vec(arb_poly(n, lo, hi, terms), n)
        .prop_map(|cs| VectorFieldJet::new(cs).expect("consistent dimensions"))
}
