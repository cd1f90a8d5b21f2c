//! Jet-level centralizers `C(X)` and first-integral rings `I(X)`.
//!
//! Unknowns are the monomial fields (or monomials) of degree `0..=N`. Two
//! subspaces are computed from the same constraint matrix:
//!
//! * the jet kernel, cut out by the coefficients of `[X, Y]` of degree
//!   `<= N + mu - 1` (exactly the coefficients fully determined by the
//!   degree-`N` jet of `Y`), which contains the jet of every true
//!   centralizer element;
//! * the certified kernel, cut out by every coefficient, whose elements are
//!   polynomial fields commuting with `X` exactly.
//!
//! The reported basis lists the certified kernel first and then extends it
//! to the jet kernel with elements tagged as tentative.
//!
//! Columns are ordered by descending degree. Each nullspace vector then has
//! its lowest-degree term in its free column, so counting free columns by
//! degree gives the dimensions of the order filtration.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{apply, lie_bracket, wedge, VectorFieldJet};
use crate::gaussian::GaussianRational;
use crate::linalg::{Echelon, Row};
use crate::monomial::Monomial;
use crate::series::{Order, PolySeries};

/// How far a kernel element is known to solve its equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Certification {
    /// Polynomial solution: the equation holds identically.
    Exact,
    /// Jet solution: the equation holds through this degree only; the
    /// element may not extend to a true solution.
    Tentative { vanishes_through: u32 },
}

impl Certification {
    pub fn is_exact(&self) -> bool {
        matches!(self, Certification::Exact)
    }
}

/// A kernel basis vector with its certification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelElement<T> {
    pub value: T,
    pub certification: Certification,
}

/// Growth verdict for the certified dimension table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stabilization {
    /// No certified element in the top three degrees.
    Stable,
    /// Certified elements in each of the top three degrees and a nontrivial
    /// first integral, the signature of an infinite-dimensional centralizer.
    Growing,
    Undetermined,
}

impl Stabilization {
    pub fn as_str(&self) -> &'static str {
        match self {
            Stabilization::Stable => "stable",
            Stabilization::Growing => "growing",
            Stabilization::Undetermined => "undetermined",
        }
    }
}

/// Result of [`ad_kernel`].
#[derive(Clone, Debug)]
pub struct CentralizerReport {
    pub field: VectorFieldJet,
    pub max_degree: u32,
    /// `mu(X, 0)`.
    pub multiplicity: u32,
    /// Largest degree of `[X, Y]` used by the jet kernel (`N + mu - 1`).
    pub constraint_degree: u32,
    /// Jet-kernel dimension per order (degree of lowest term).
    pub dims: BTreeMap<u32, usize>,
    /// Certified-kernel dimension per order.
    pub certified_dims: BTreeMap<u32, usize>,
    /// Certified elements first, then tentative ones.
    pub basis: Vec<KernelElement<VectorFieldJet>>,
    pub rank_estimate: usize,
    pub stabilization: Stabilization,
}

impl CentralizerReport {
    pub fn certified_dimension(&self) -> usize {
        self.certified_dims.values().sum()
    }

    pub fn jet_dimension(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn certified_basis(&self) -> Vec<VectorFieldJet> {
        self.basis.iter().filter(|e| e.certification.is_exact()).map(|e| e.value.clone()).collect()
    }

    pub fn tentative_basis(&self) -> Vec<&KernelElement<VectorFieldJet>> {
        self.basis.iter().filter(|e| !e.certification.is_exact()).collect()
    }
}

/// Result of [`first_integral_kernel`].
#[derive(Clone, Debug)]
pub struct FirstIntegralReport {
    pub field: VectorFieldJet,
    pub max_degree: u32,
    pub multiplicity: u32,
    pub constraint_degree: u32,
    pub dims: BTreeMap<u32, usize>,
    pub certified_dims: BTreeMap<u32, usize>,
    /// Polynomial first integrals vanishing at the origin.
    pub basis: Vec<PolySeries>,
    /// Jet solutions that are not certified.
    pub tentative: Vec<KernelElement<PolySeries>>,
}

type RowKey = (usize, Monomial);

struct KernelSolution {
    jet: Vec<Row>,
    exact: Vec<Row>,
}

/// Jet and exact nullspaces of the linear map whose column images are given.
fn two_kernels(images: &[Vec<(RowKey, GaussianRational)>], ncols: usize, constraint_degree: u32) -> KernelSolution {
    let mut rows: BTreeMap<RowKey, Row> = BTreeMap::new();
    for (col, image) in images.iter().enumerate() {
        for (key, c) in image {
            rows.entry(*key).or_default().insert(col, c.clone());
        }
    }
    let mut jet = Echelon::new(ncols);
    let mut late = Vec::new();
    for (key, row) in rows {
        if key.1.degree() <= constraint_degree {
            jet.insert(row);
        } else {
            late.push(row);
        }
    }
    let mut exact = jet.clone();
    for row in late {
        exact.insert(row);
    }
    KernelSolution { jet: jet.nullspace(), exact: exact.nullspace() }
}

fn dims_by_order(vectors: &[Row], col_degree: &[u32], max_degree: u32) -> BTreeMap<u32, usize> {
    let mut dims: BTreeMap<u32, usize> = (0..=max_degree).map(|d| (d, 0)).collect();
    for v in vectors {
        // free column = the lowest-degree entry set to 1 by the nullspace routine
        let order = v.keys().map(|c| col_degree[*c]).min().expect("nonzero kernel vector");
        *dims.entry(order).or_default() += 1;
    }
    dims
}

fn multiplicity(x: &VectorFieldJet) -> Result<u32> {
    if !x.is_exact() {
        return Err(Error::NotExact);
    }
    match x.order() {
        Order::Finite(m) => Ok(m as u32),
        _ => Err(Error::ZeroInput("vector field")),
    }
}

/// Monomial fields of degree `0..=n`, descending degree.
fn field_columns(nvars: usize, n: u32) -> Vec<(usize, Monomial)> {
    let mut cols = Vec::new();
    for d in (0..=n).rev() {
        for i in 0..nvars {
            for m in Monomial::of_degree(nvars, d) {
                cols.push((i, m));
            }
        }
    }
    cols
}

fn field_from_row(v: &Row, cols: &[(usize, Monomial)], nvars: usize) -> VectorFieldJet {
    let mut comps = vec![PolySeries::zero(nvars); nvars];
    for (c, value) in v {
        let (i, m) = cols[*c];
        comps[i].add_term(m, value.clone());
    }
    VectorFieldJet::new(comps).expect("consistent dimension")
}

/// Basis of the jets `Y` of degree `<= N` commuting with `X`.
pub fn ad_kernel(x: &VectorFieldJet, n: u32) -> Result<CentralizerReport> {
    let mu = multiplicity(x)?;
    if n < 1 {
        return Err(Error::DegreeTooSmall);
    }
    let nvars = x.nvars();
    let constraint_degree = n + mu - 1;
    let cols = field_columns(nvars, n);
    let col_degree: Vec<u32> = cols.iter().map(|(_, m)| m.degree()).collect();
    let images: Vec<Vec<(RowKey, GaussianRational)>> = cols
        .iter()
        .map(|(i, m)| {
            let f = VectorFieldJet::monomial(nvars, *i, *m, GaussianRational::from(1));
            let b = lie_bracket(x, &f).expect("same dimension");
            b.components()
                .iter()
                .enumerate()
                .flat_map(|(k, comp)| comp.terms().map(move |(mm, c)| ((k, *mm), c.clone())))
                .collect()
        })
        .collect();
    let sol = two_kernels(&images, cols.len(), constraint_degree);

    let dims = dims_by_order(&sol.jet, &col_degree, n);
    let certified_dims = dims_by_order(&sol.exact, &col_degree, n);

    let mut span = Echelon::new(cols.len());
    let mut basis = Vec::new();
    for v in &sol.exact {
        span.insert(v.clone());
        basis.push(KernelElement { value: field_from_row(v, &cols, nvars), certification: Certification::Exact });
    }
    for v in &sol.jet {
        if span.insert(v.clone()) {
            let y = field_from_row(v, &cols, nvars);
            let residual = lie_bracket(x, &y)?;
            let through = match residual.order() {
                Order::Finite(k) => k as u32 - 1,
                _ => unreachable!("an uncertified element has a nonzero bracket"),
            };
            basis.push(KernelElement {
                value: y.truncate(n),
                certification: Certification::Tentative { vanishes_through: through },
            });
        }
    }

    let certified: Vec<VectorFieldJet> = basis.iter().filter(|e| e.certification.is_exact()).map(|e| e.value.clone()).collect();
    let rank_estimate = if certified.is_empty() { 1 } else { generic_rank(&certified)? };

    let top: Vec<usize> = (n.saturating_sub(2)..=n).map(|d| certified_dims[&d]).collect();
    let stabilization = if top.iter().all(|&c| c == 0) {
        Stabilization::Stable
    } else if top.iter().all(|&c| c > 0) && !first_integral_kernel(x, n)?.basis.is_empty() {
        Stabilization::Growing
    } else {
        Stabilization::Undetermined
    };

    Ok(CentralizerReport {
        field: x.clone(),
        max_degree: n,
        multiplicity: mu,
        constraint_degree,
        dims,
        certified_dims,
        basis,
        rank_estimate,
        stabilization,
    })
}

/// Basis of the jets `f` of degree `1..=N` with `X(f) = 0`.
pub fn first_integral_kernel(x: &VectorFieldJet, n: u32) -> Result<FirstIntegralReport> {
    let mu = multiplicity(x)?;
    if n < 1 {
        return Err(Error::DegreeTooSmall);
    }
    let nvars = x.nvars();
    let constraint_degree = n + mu - 1;
    let cols: Vec<Monomial> = (1..=n).rev().flat_map(|d| Monomial::of_degree(nvars, d)).collect();
    let col_degree: Vec<u32> = cols.iter().map(Monomial::degree).collect();
    let images: Vec<Vec<(RowKey, GaussianRational)>> = cols
        .iter()
        .map(|m| {
            let f = PolySeries::monomial(nvars, *m, GaussianRational::from(1));
            apply(x, &f).expect("same dimension").terms().map(|(mm, c)| ((0, *mm), c.clone())).collect()
        })
        .collect();
    let sol = two_kernels(&images, cols.len(), constraint_degree);
    let to_poly = |v: &Row| {
        let mut f = PolySeries::zero(nvars);
        for (c, value) in v {
            f.add_term(cols[*c], value.clone());
        }
        f
    };

    let mut dims = dims_by_order(&sol.jet, &col_degree, n);
    let mut certified_dims = dims_by_order(&sol.exact, &col_degree, n);
    dims.remove(&0);
    certified_dims.remove(&0);

    let mut span = Echelon::new(cols.len());
    let mut basis = Vec::new();
    for v in &sol.exact {
        span.insert(v.clone());
        basis.push(to_poly(v));
    }
    let mut tentative = Vec::new();
    for v in &sol.jet {
        if span.insert(v.clone()) {
            let f = to_poly(v);
            let residual = apply(x, &f)?;
            let through = residual.order(None).finite().map_or(0, |k| k as u32 - 1);
            tentative.push(KernelElement {
                value: f.truncate(n),
                certification: Certification::Tentative { vanishes_through: through },
            });
        }
    }
    Ok(FirstIntegralReport {
        field: x.clone(),
        max_degree: n,
        multiplicity: mu,
        constraint_degree,
        dims,
        certified_dims,
        basis,
        tentative,
    })
}

/// Maximal number of generically linearly independent fields in `basis`.
pub fn generic_rank(basis: &[VectorFieldJet]) -> Result<usize> {
    let first = basis.first().ok_or(Error::EmptyBasis)?;
    let n = first.nvars();
    let nonzero = |w: Vec<PolySeries>| w.iter().any(|c| !c.is_zero());
    let mut best = if basis.iter().any(|f| !f.is_zero()) { 1 } else { 0 };
    for (a, fa) in basis.iter().enumerate() {
        for (b, fb) in basis.iter().enumerate().skip(a + 1) {
            if nonzero(wedge(&[fa.clone(), fb.clone()])?) {
                best = best.max(2);
                if n == 2 {
                    return Ok(2);
                }
                for fc in basis.iter().skip(b + 1) {
                    if nonzero(wedge(&[fa.clone(), fb.clone(), fc.clone()])?) {
                        return Ok(3);
                    }
                }
            }
        }
    }
    Ok(best.max(1).min(n))
}

/// Whether `z` lies in the span of `basis` (coefficientwise, exact).
pub fn in_span(basis: &[VectorFieldJet], z: &VectorFieldJet) -> bool {
    let mut index: BTreeMap<RowKey, usize> = BTreeMap::new();
    let mut key_of = |k: RowKey| {
        let next = index.len();
        *index.entry(k).or_insert(next)
    };
    let to_row = |f: &VectorFieldJet, key_of: &mut dyn FnMut(RowKey) -> usize| -> Row {
        let mut row = Row::new();
        for (i, comp) in f.components().iter().enumerate() {
            for (m, c) in comp.terms() {
                if !c.is_zero() {
                    row.insert(key_of((i, *m)), c.clone());
                }
            }
        }
        row
    };
    let rows: Vec<Row> = basis.iter().map(|f| to_row(f, &mut key_of)).collect();
    let target = to_row(z, &mut key_of);
    let mut e = Echelon::new(index.len());
    for r in rows {
        e.insert(r);
    }
    e.contains(&target)
}

/// Whether two families span the same space.
pub fn same_span(a: &[VectorFieldJet], b: &[VectorFieldJet]) -> bool {
    a.iter().all(|f| in_span(b, f)) && b.iter().all(|f| in_span(a, f))
}
