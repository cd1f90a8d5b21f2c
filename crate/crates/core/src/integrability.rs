//! Exact identities behind meromorphic and Liouvillian integrability.
//!
//! Every check here clears denominators first and compares polynomials, so
//! no rational function is ever normalized.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{apply, divergence, lie_bracket, OneFormJet, VectorFieldJet};
use crate::gaussian::GaussianRational;
use crate::linalg::{Echelon, Row};
use crate::monomial::Monomial;
use crate::series::PolySeries;

fn nonzero(g: &PolySeries, what: &'static str) -> Result<()> {
    if g.is_zero() {
        Err(Error::ZeroInput(what))
    } else {
        Ok(())
    }
}

/// Result of [`closedness_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closedness {
    pub closed: bool,
    /// Coefficient of `dx ^ dy` in `g d(omega) - dg ^ omega`.
    pub residual: PolySeries,
}

/// Whether `omega / g` is closed, via `g d(omega) = dg ^ omega`.
pub fn closedness_check(omega: &OneFormJet, g: &PolySeries) -> Result<Closedness> {
    if omega.nvars() != 2 {
        return Err(Error::UnsupportedDimension(omega.nvars()));
    }
    if g.nvars() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: g.nvars() });
    }
    nonzero(g, "denominator")?;
    let (a, b) = (omega.coefficient(0), omega.coefficient(1));
    let d_omega = omega.exterior_derivative()?;
    let dg_wedge = &(&g.partial(0)? * b) - &(&g.partial(1)? * a);
    let residual = &(g * &d_omega) - &dg_wedge;
    Ok(Closedness { closed: residual.is_zero(), residual })
}

/// `X(g) = div(X) g`, i.e. `g` is an integrating factor of the dual form.
pub fn integrating_factor_check(x: &VectorFieldJet, g: &PolySeries) -> Result<bool> {
    nonzero(g, "integrating factor")?;
    let lhs = apply(x, g)?;
    let rhs = divergence(x).checked_mul(g)?;
    Ok(lhs.checked_sub(&rhs)?.is_zero())
}

/// A quotient of polynomials, compared by cross-multiplication.
#[derive(Clone, Debug)]
pub struct MeromorphicRatio {
    numerator: PolySeries,
    denominator: PolySeries,
}

impl MeromorphicRatio {
    pub fn new(numerator: PolySeries, denominator: PolySeries) -> Result<Self> {
        if numerator.nvars() != denominator.nvars() {
            return Err(Error::DimensionMismatch { expected: numerator.nvars(), found: denominator.nvars() });
        }
        nonzero(&denominator, "denominator")?;
        Ok(Self { numerator, denominator })
    }

    pub fn numerator(&self) -> &PolySeries {
        &self.numerator
    }

    pub fn denominator(&self) -> &PolySeries {
        &self.denominator
    }

    pub fn nvars(&self) -> usize {
        self.numerator.nvars()
    }
}

impl PartialEq for MeromorphicRatio {
    fn eq(&self, other: &Self) -> bool {
        self.nvars() == other.nvars() && &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

impl Eq for MeromorphicRatio {}

/// `X(N/D) = 0`, checked as `D X(N) - N X(D) = 0`.
pub fn meromorphic_first_integral_check(x: &VectorFieldJet, f: &MeromorphicRatio) -> Result<bool> {
    let lhs = f.denominator.checked_mul(&apply(x, &f.numerator)?)?;
    let rhs = f.numerator.checked_mul(&apply(x, &f.denominator)?)?;
    Ok(lhs.checked_sub(&rhs)?.is_zero())
}

/// Forms `alpha = a / g`, `beta = b / g` with `alpha(X_j) = delta_1j` and
/// `beta(X_j) = delta_2j`, where `g = X1 ^ X2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPair {
    pub alpha: OneFormJet,
    pub beta: OneFormJet,
    pub denominator: PolySeries,
}

impl DualPair {
    /// The four duality evaluations, cross-multiplied.
    pub fn duality_holds(&self, x1: &VectorFieldJet, x2: &VectorFieldJet) -> Result<bool> {
        let g = &self.denominator;
        Ok(self.alpha.eval(x1)? == *g
            && self.alpha.eval(x2)?.is_zero()
            && self.beta.eval(x1)?.is_zero()
            && self.beta.eval(x2)? == *g)
    }
}

pub fn dual_pair(x1: &VectorFieldJet, x2: &VectorFieldJet) -> Result<DualPair> {
    for x in [x1, x2] {
        if x.nvars() != 2 {
            return Err(Error::UnsupportedDimension(x.nvars()));
        }
    }
    let g = &(x1.component(0) * x2.component(1)) - &(x1.component(1) * x2.component(0));
    if g.is_zero() {
        return Err(Error::DependentPair);
    }
    let alpha = OneFormJet::new(vec![x2.component(1).clone(), -x2.component(0)])?;
    let beta = OneFormJet::new(vec![-x1.component(1), x1.component(0).clone()])?;
    Ok(DualPair { alpha, beta, denominator: g })
}

/// `omega / g = sum lambda_j df_j / f_j + d(phi / prod f_j^(k_j - 1))`,
/// with `g = unit * prod f_j^k_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogDecomposition {
    pub factors: Vec<PolySeries>,
    pub multiplicities: Vec<u32>,
    pub residues: Vec<GaussianRational>,
    pub phi: PolySeries,
    /// `g / prod f_j^k_j`.
    pub unit: GaussianRational,
}

impl LogDecomposition {
    /// Numerator over `prod f_j^k_j` of the decomposed form.
    pub fn cleared_form(&self) -> Result<OneFormJet> {
        let pieces = LogPieces::new(&self.factors, &self.multiplicities)?;
        let mut acc = pieces.phi_contribution(&self.phi)?;
        for (j, l) in self.residues.iter().enumerate() {
            acc = acc.checked_add(&pieces.residue_contribution(j)?.scale(l))?;
        }
        Ok(acc)
    }

    /// The form `omega` with `omega / g` equal to the decomposition.
    pub fn reconstruct(&self) -> Result<OneFormJet> {
        Ok(self.cleared_form()?.scale(&self.unit))
    }
}

/// Outcome of [`log_decomposition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LogOutcome {
    Found(Box<LogDecomposition>),
    /// No residues and no `phi` within the degree bound. The residual is
    /// the cleared target minus its closest combination after elimination.
    NoSolution { residual: OneFormJet },
}

struct LogPieces {
    factors: Vec<PolySeries>,
    multiplicities: Vec<u32>,
    /// `prod f_j`
    reduced: PolySeries,
    /// `prod f_j^k_j`
    full: PolySeries,
}

impl LogPieces {
    fn new(factors: &[PolySeries], multiplicities: &[u32]) -> Result<Self> {
        if factors.len() != multiplicities.len() {
            return Err(Error::DimensionMismatch { expected: factors.len(), found: multiplicities.len() });
        }
        let mut reduced = PolySeries::one(2);
        let mut full = PolySeries::one(2);
        for (f, k) in factors.iter().zip(multiplicities) {
            if f.nvars() != 2 {
                return Err(Error::DimensionMismatch { expected: 2, found: f.nvars() });
            }
            nonzero(f, "factor")?;
            if *k == 0 {
                return Err(Error::FactorizationMismatch(format!("multiplicity 0 for factor {f}")));
            }
            reduced = &reduced * f;
            full = &full * &f.pow(*k);
        }
        Ok(Self { factors: factors.to_vec(), multiplicities: multiplicities.to_vec(), reduced, full })
    }

    /// `(prod f^k / f_j) df_j`
    fn residue_contribution(&self, j: usize) -> Result<OneFormJet> {
        let cof = self.full.divide_by(&self.factors[j])?.expect("factor divides the product");
        OneFormJet::differential(&self.factors[j])?.scale_by(&cof)
    }

    /// `F dphi - phi sum (k_j - 1)(F / f_j) df_j` with `F = prod f_j`.
    fn phi_contribution(&self, phi: &PolySeries) -> Result<OneFormJet> {
        let mut acc = OneFormJet::differential(phi)?.scale_by(&self.reduced)?;
        for (f, k) in self.factors.iter().zip(&self.multiplicities) {
            if *k > 1 {
                let cof = self.reduced.divide_by(f)?.expect("factor divides the product");
                let term = OneFormJet::differential(f)?.scale_by(&(&cof * phi))?;
                acc = acc.checked_sub(&term.scale(&GaussianRational::from(i64::from(k - 1))))?;
            }
        }
        Ok(acc)
    }
}

fn slot_rows(form: &OneFormJet, slots: &mut BTreeMap<(usize, Monomial), usize>) -> Vec<(usize, GaussianRational)> {
    let mut out = Vec::new();
    for (i, c) in form.coefficients().iter().enumerate() {
        for (m, v) in c.terms() {
            let next = slots.len();
            let idx = *slots.entry((i, *m)).or_insert(next);
            out.push((idx, v.clone()));
        }
    }
    out
}

/// Solves for residues and the polar numerator `phi` by exact linear algebra
/// on the cleared identity. The caller supplies the factorization of `g`,
/// which is verified first. `phi` ranges over monomials of degree at most
/// `phi_degree_bound` (default `deg g`).
pub fn log_decomposition(
    omega: &OneFormJet,
    g: &PolySeries,
    factors: &[(PolySeries, u32)],
    phi_degree_bound: Option<u32>,
) -> Result<LogOutcome> {
    if omega.nvars() != 2 {
        return Err(Error::UnsupportedDimension(omega.nvars()));
    }
    if !omega.is_exact() || !g.is_exact() {
        return Err(Error::NotExact);
    }
    nonzero(g, "denominator")?;
    let fs: Vec<PolySeries> = factors.iter().map(|(f, _)| f.clone()).collect();
    let ks: Vec<u32> = factors.iter().map(|(_, k)| *k).collect();
    let pieces = LogPieces::new(&fs, &ks)?;
    let unit = match g.divide_by(&pieces.full)? {
        Some(q) if q.degree() == Some(0) => q.constant_term(),
        _ => {
            return Err(Error::FactorizationMismatch(format!(
                "{g} is not a constant multiple of {}",
                pieces.full
            )))
        }
    };
    let target = omega.scale(&unit.inv()?);

    let bound = phi_degree_bound.unwrap_or_else(|| g.degree().unwrap_or(0));
    let phi_monomials = Monomial::up_to_degree(2, 0, bound);
    let mut columns = Vec::new();
    for j in 0..fs.len() {
        columns.push(pieces.residue_contribution(j)?);
    }
    for m in &phi_monomials {
        columns.push(pieces.phi_contribution(&PolySeries::monomial(2, *m, GaussianRational::one()))?);
    }

    let mut slots = BTreeMap::new();
    let column_entries: Vec<_> = columns.iter().map(|c| slot_rows(c, &mut slots)).collect();
    let target_entries = slot_rows(&target, &mut slots);
    let nunk = columns.len();

    let mut rows: Vec<Row> = vec![Row::new(); slots.len()];
    for (j, entries) in column_entries.iter().enumerate() {
        for (slot, v) in entries {
            rows[*slot].insert(j, v.clone());
        }
    }
    for (slot, v) in &target_entries {
        rows[*slot].insert(nunk, v.clone());
    }
    let mut system = Echelon::new(nunk + 1);
    for r in rows {
        system.insert(r);
    }

    match system.solve_augmented() {
        Some(sol) => {
            let residues = sol[..fs.len()].to_vec();
            let phi = PolySeries::from_terms(
                2,
                phi_monomials.iter().zip(&sol[fs.len()..]).map(|(m, c)| (c.clone(), *m)),
            );
            let found = LogDecomposition { factors: fs, multiplicities: ks, residues, phi, unit };
            debug_assert_eq!(found.reconstruct().ok().as_ref(), Some(omega));
            Ok(LogOutcome::Found(Box::new(found)))
        }
        None => Ok(LogOutcome::NoSolution { residual: residual(&column_entries, &target_entries, &slots)? }),
    }
}

/// `target - sum u_j column_j` after eliminating every column pivot.
fn residual(
    columns: &[Vec<(usize, GaussianRational)>],
    target: &[(usize, GaussianRational)],
    slots: &BTreeMap<(usize, Monomial), usize>,
) -> Result<OneFormJet> {
    // marker column after every slot tracks the multiple of the target
    let marker = slots.len();
    let mut span = Echelon::new(marker + 1);
    for c in columns {
        span.insert(c.iter().cloned().collect());
    }
    let mut t: Row = target.iter().cloned().collect();
    t.insert(marker, GaussianRational::one());
    let reduced = span.reduce(t);
    let scale = reduced.get(&marker).cloned().expect("marker has no pivot");
    let by_index: BTreeMap<usize, (usize, Monomial)> = slots.iter().map(|(k, v)| (*v, *k)).collect();
    let mut coeffs = vec![PolySeries::zero(2), PolySeries::zero(2)];
    for (idx, v) in reduced.iter().filter(|(i, _)| **i != marker) {
        let (comp, m) = by_index[idx];
        coeffs[comp].add_term(m, v.checked_div(&scale)?);
    }
    OneFormJet::new(coeffs)
}

/// `f | X(f)`: the curve `f = 0` is invariant.
pub fn invariance_check(x: &VectorFieldJet, f: &PolySeries) -> Result<bool> {
    nonzero(f, "curve")?;
    if !f.constant_term().is_zero() {
        return Err(Error::NonVanishingAtOrigin);
    }
    let xf = apply(x, f)?;
    Ok(xf.divide_by(f)?.is_some())
}

/// Commuting pair built from `f(x + i y) = u + i v`: `X = u d/dx + v d/dy`
/// and `Y = v d/dx - u d/dy`, both truncated at degree `n`.
pub fn cr_pair(f: &PolySeries, n: u32) -> Result<(VectorFieldJet, VectorFieldJet)> {
    if f.nvars() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, found: f.nvars() });
    }
    let z = &PolySeries::var(2, 0) + &PolySeries::var(2, 1).scale(&GaussianRational::i());
    let w = f.clone().into_exact().truncate(n).into_exact().substitute(&[z], true)?;
    let u = w.map_coeffs(|c| GaussianRational::from_real(c.re().clone()));
    let v = w.map_coeffs(|c| GaussianRational::from_real(c.im().clone()));
    let p = f.precision().min(crate::series::Precision::truncated_at(n));
    let x = VectorFieldJet::new(vec![u.clone(), v.clone()])?.with_precision(p);
    let y = VectorFieldJet::new(vec![v, -&u])?.with_precision(p);
    debug_assert!(lie_bracket(&x, &y).map(|b| b.components().iter().all(PolySeries::is_zero)).unwrap_or(false));
    Ok((x, y))
}
