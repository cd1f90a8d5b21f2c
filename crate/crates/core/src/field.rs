//! Vector-field jets, differential forms and the calculus between them.
//!
//! A field `X = sum X_i d/dz_i` is stored as its component list. All
//! operations are exact on polynomial inputs and propagate truncation
//! through [`PolySeries`] otherwise.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::gaussian::GaussianRational;
use crate::monomial::{Monomial, MAX_VARS};
use crate::series::{Order, PolySeries, Precision, Weight};

/// A vector-field germ `X_1 d/dz_1 + ... + X_n d/dz_n` at jet level.
///
/// Invariant: every component lives in `n` variables and all components
/// share one precision.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorFieldJet {
    components: Vec<PolySeries>,
}

impl VectorFieldJet {
    pub fn new(components: Vec<PolySeries>) -> Result<Self> {
        let n = components.len();
        if !(1..=MAX_VARS).contains(&n) {
            return Err(Error::UnsupportedDimension(n));
        }
        if let Some(c) = components.iter().find(|c| c.nvars() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: c.nvars() });
        }
        let precision = components.iter().fold(Precision::Exact, |p, c| p.min(c.precision()));
        Ok(Self { components: components.into_iter().map(|c| c.with_precision(precision)).collect() })
    }

    pub fn zero(n: usize) -> Self {
        Self { components: vec![PolySeries::zero(n); n] }
    }

    /// The radial field `R = sum z_i d/dz_i`.
    pub fn radial(n: usize) -> Self {
        Self { components: (0..n).map(|i| PolySeries::var(n, i)).collect() }
    }

    /// The monomial field `c * z^m d/dz_index`.
    pub fn monomial(n: usize, index: usize, m: Monomial, c: GaussianRational) -> Self {
        let mut f = Self::zero(n);
        f.components[index] = PolySeries::monomial(n, m, c);
        f
    }

    pub fn nvars(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[PolySeries] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &PolySeries {
        &self.components[i]
    }

    pub fn into_components(self) -> Vec<PolySeries> {
        self.components
    }

    pub fn precision(&self) -> Precision {
        self.components[0].precision()
    }

    pub fn is_exact(&self) -> bool {
        self.precision().is_exact()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(PolySeries::is_zero)
    }

    /// Algebraic multiplicity `mu(X, 0)`: least order over the components.
    pub fn order(&self) -> Order {
        let finite = self.components.iter().filter_map(|c| c.order(None).finite()).min();
        let bound = self
            .components
            .iter()
            .filter_map(|c| match c.order(None) {
                Order::AtLeast(k) => Some(k),
                _ => None,
            })
            .min();
        match (finite, bound) {
            (Some(f), Some(b)) if f >= b => Order::AtLeast(b),
            (Some(f), _) => Order::Finite(f),
            (None, Some(b)) => Order::AtLeast(b),
            (None, None) => Order::Infinite,
        }
    }

    /// Largest total degree among the components.
    pub fn degree(&self) -> Option<u32> {
        self.components.iter().filter_map(PolySeries::degree).max()
    }

    /// Linear part as a matrix: entry `(i, j)` is the coefficient of `z_j` in `X_i`.
    pub fn linear_part(&self) -> Vec<Vec<GaussianRational>> {
        let n = self.nvars();
        (0..n)
            .map(|i| (0..n).map(|j| self.components[i].coeff(&Monomial::var(j))).collect())
            .collect()
    }

    /// Field made of the degree-`d` parts of the components.
    pub fn homogeneous_part(&self, d: u32) -> VectorFieldJet {
        self.map(|c| c.homogeneous_part(d))
    }

    pub fn with_precision(&self, p: Precision) -> VectorFieldJet {
        self.map(|c| c.clone().with_precision(p))
    }

    pub fn truncate(&self, n: u32) -> VectorFieldJet {
        self.with_precision(Precision::truncated_at(n))
    }

    pub fn into_exact(self) -> VectorFieldJet {
        VectorFieldJet { components: self.components.into_iter().map(PolySeries::into_exact).collect() }
    }

    pub fn scale(&self, c: &GaussianRational) -> VectorFieldJet {
        self.map(|p| p.scale(c))
    }

    /// `f * X`.
    pub fn mul_function(&self, f: &PolySeries) -> Result<VectorFieldJet> {
        let comps = self.components.iter().map(|c| f.checked_mul(c)).collect::<Result<Vec<_>>>()?;
        VectorFieldJet::new(comps)
    }

    pub fn checked_add(&self, other: &VectorFieldJet) -> Result<VectorFieldJet> {
        self.zip(other, PolySeries::checked_add)
    }

    pub fn checked_sub(&self, other: &VectorFieldJet) -> Result<VectorFieldJet> {
        self.zip(other, PolySeries::checked_sub)
    }

    /// Jet equality of all components.
    pub fn jet_eq(&self, other: &VectorFieldJet) -> bool {
        self.nvars() == other.nvars()
            && self.components.iter().zip(&other.components).all(|(a, b)| a.jet_eq(b))
    }

    /// Exchanges two coordinates (components and variables).
    pub fn swap_vars(&self, a: usize, b: usize) -> VectorFieldJet {
        let mut comps: Vec<PolySeries> = self.components.iter().map(|c| c.swap_vars(a, b)).collect();
        comps.swap(a, b);
        VectorFieldJet { components: comps }
    }

    fn map(&self, f: impl FnMut(&PolySeries) -> PolySeries) -> VectorFieldJet {
        VectorFieldJet::new(self.components.iter().map(f).collect()).expect("map preserves dimension")
    }

    fn zip(
        &self,
        other: &VectorFieldJet,
        op: impl Fn(&PolySeries, &PolySeries) -> Result<PolySeries>,
    ) -> Result<VectorFieldJet> {
        check_dims(self, other)?;
        let comps = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| op(a, b))
            .collect::<Result<Vec<_>>>()?;
        VectorFieldJet::new(comps)
    }
}

/// Written in the component-list grammar, e.g. `2*x*y, 2*y^2 - x^3`.
impl fmt::Display for VectorFieldJet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = crate::text::default_names(self.nvars());
        let parts: Vec<String> = self.components.iter().map(|c| crate::text::format_poly(c, &names)).collect();
        write!(f, "{}", parts.join(", "))?;
        if let Precision::BigO(k) = self.precision() {
            write!(f, " + O({k})")?;
        }
        Ok(())
    }
}

/// A differential one-form `a_1 dz_1 + ... + a_n dz_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OneFormJet {
    coefficients: Vec<PolySeries>,
}

impl OneFormJet {
    pub fn new(coefficients: Vec<PolySeries>) -> Result<Self> {
        let n = coefficients.len();
        if !(1..=MAX_VARS).contains(&n) {
            return Err(Error::UnsupportedDimension(n));
        }
        if let Some(c) = coefficients.iter().find(|c| c.nvars() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: c.nvars() });
        }
        let precision = coefficients.iter().fold(Precision::Exact, |p, c| p.min(c.precision()));
        Ok(Self { coefficients: coefficients.into_iter().map(|c| c.with_precision(precision)).collect() })
    }

    pub fn zero(n: usize) -> Self {
        Self { coefficients: vec![PolySeries::zero(n); n] }
    }

    pub fn nvars(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[PolySeries] {
        &self.coefficients
    }

    pub fn coefficient(&self, i: usize) -> &PolySeries {
        &self.coefficients[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(PolySeries::is_zero)
    }

    pub fn is_exact(&self) -> bool {
        self.coefficients.iter().all(PolySeries::is_exact)
    }

    /// The contraction `omega(X) = sum a_i X_i`.
    pub fn eval(&self, x: &VectorFieldJet) -> Result<PolySeries> {
        if self.nvars() != x.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), found: x.nvars() });
        }
        let mut acc = PolySeries::zero(self.nvars());
        for (a, xi) in self.coefficients.iter().zip(x.components()) {
            acc = acc.checked_add(&a.checked_mul(xi)?)?;
        }
        Ok(acc)
    }

    /// Exact differential `df`.
    pub fn differential(f: &PolySeries) -> Result<OneFormJet> {
        OneFormJet::new((0..f.nvars()).map(|i| f.partial(i)).collect::<Result<Vec<_>>>()?)
    }

    pub fn scale_by(&self, f: &PolySeries) -> Result<OneFormJet> {
        OneFormJet::new(self.coefficients.iter().map(|c| f.checked_mul(c)).collect::<Result<Vec<_>>>()?)
    }

    pub fn checked_add(&self, other: &OneFormJet) -> Result<OneFormJet> {
        if self.nvars() != other.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), found: other.nvars() });
        }
        OneFormJet::new(
            self.coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a.checked_add(b))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn checked_sub(&self, other: &OneFormJet) -> Result<OneFormJet> {
        self.checked_add(&other.scale(&-GaussianRational::one()))
    }

    pub fn scale(&self, c: &GaussianRational) -> OneFormJet {
        OneFormJet { coefficients: self.coefficients.iter().map(|a| a.scale(c)).collect() }
    }

    /// Coefficient of `dx ^ dy` in `d(omega)` (plane forms only).
    pub fn exterior_derivative(&self) -> Result<PolySeries> {
        if self.nvars() != 2 {
            return Err(Error::UnsupportedDimension(self.nvars()));
        }
        self.coefficients[1].partial(0)?.checked_sub(&self.coefficients[0].partial(1)?)
    }
}

/// Written as `(a_1)*dx + (a_2)*dy`, omitting zero coefficients.
impl fmt::Display for OneFormJet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::text::format_one_form(self, &crate::text::default_names(self.nvars())))
    }
}

/// Coefficients of a two-form in three variables, in the fixed order
/// `(dy ^ dz, dz ^ dx, dx ^ dy)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoFormJet {
    pub coefficients: [PolySeries; 3],
}

/// Contraction of the standard volume form with a field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DualForm {
    /// Plane case: `X_1 dy - X_2 dx`.
    OneForm(OneFormJet),
    /// Three-space case.
    TwoForm(TwoFormJet),
}

fn check_dims(a: &VectorFieldJet, b: &VectorFieldJet) -> Result<()> {
    if a.nvars() == b.nvars() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected: a.nvars(), found: b.nvars() })
    }
}

/// Directional derivative `X(f) = sum X_i df/dz_i`.
pub fn apply(x: &VectorFieldJet, f: &PolySeries) -> Result<PolySeries> {
    if x.nvars() != f.nvars() {
        return Err(Error::DimensionMismatch { expected: x.nvars(), found: f.nvars() });
    }
    let mut acc = PolySeries::zero(f.nvars());
    for (i, xi) in x.components().iter().enumerate() {
        acc = acc.checked_add(&xi.checked_mul(&f.partial(i)?)?)?;
    }
    Ok(acc)
}

/// `[X, Y]_i = X(Y_i) - Y(X_i)`.
pub fn lie_bracket(x: &VectorFieldJet, y: &VectorFieldJet) -> Result<VectorFieldJet> {
    check_dims(x, y)?;
    let comps = (0..x.nvars())
        .map(|i| apply(x, y.component(i))?.checked_sub(&apply(y, x.component(i))?))
        .collect::<Result<Vec<_>>>()?;
    VectorFieldJet::new(comps)
}

/// `sum d X_i / d z_i`.
pub fn divergence(x: &VectorFieldJet) -> PolySeries {
    let mut acc = PolySeries::zero(x.nvars());
    for (i, xi) in x.components().iter().enumerate() {
        acc = &acc + &xi.partial(i).expect("index within dimension");
    }
    acc
}

/// Coefficients of `Y_1 ^ ... ^ Y_m`.
///
/// For `m = n` this is the single determinant. In three variables with two
/// fields it is the list `(dy^dz, dz^dx, dx^dy)`; a single field returns its
/// components.
pub fn wedge(fields: &[VectorFieldJet]) -> Result<Vec<PolySeries>> {
    let first = fields.first().ok_or(Error::EmptyBasis)?;
    let n = first.nvars();
    for f in fields {
        check_dims(first, f)?;
    }
    let m = fields.len();
    if m > n {
        return Err(Error::TooManyFields { fields: m, dimension: n });
    }
    let minor = |a: &VectorFieldJet, b: &VectorFieldJet, i: usize, j: usize| -> Result<PolySeries> {
        a.component(i).checked_mul(b.component(j))?.checked_sub(&a.component(j).checked_mul(b.component(i))?)
    };
    match (n, m) {
        (_, 1) => Ok(first.components().to_vec()),
        (2, 2) => Ok(vec![minor(&fields[0], &fields[1], 0, 1)?]),
        (3, 2) => Ok(vec![
            minor(&fields[0], &fields[1], 1, 2)?,
            minor(&fields[0], &fields[1], 2, 0)?,
            minor(&fields[0], &fields[1], 0, 1)?,
        ]),
        (3, 3) => {
            let (a, b, c) = (&fields[0], &fields[1], &fields[2]);
            let mut det = PolySeries::zero(3);
            for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
                det = det.checked_add(&a.component(i).checked_mul(&minor(b, c, j, k)?)?)?;
            }
            Ok(vec![det])
        }
        _ => Err(Error::UnsupportedDimension(n)),
    }
}

/// `i_X` of the standard volume form.
pub fn dual_form(x: &VectorFieldJet) -> Result<DualForm> {
    match x.nvars() {
        2 => Ok(DualForm::OneForm(OneFormJet::new(vec![-x.component(1), x.component(0).clone()])?)),
        3 => Ok(DualForm::TwoForm(TwoFormJet {
            coefficients: [x.component(0).clone(), x.component(1).clone(), x.component(2).clone()],
        })),
        n => Err(Error::UnsupportedDimension(n)),
    }
}

/// `H_f = f_y d/dx - f_x d/dy`.
pub fn hamiltonian(f: &PolySeries) -> Result<VectorFieldJet> {
    if f.nvars() != 2 {
        return Err(Error::UnsupportedDimension(f.nvars()));
    }
    VectorFieldJet::new(vec![f.partial(1)?, -&f.partial(0)?])
}

/// `S = sum p_j z_j d/dz_j`.
pub fn weighted_euler(weight: &Weight) -> VectorFieldJet {
    let n = weight.len();
    VectorFieldJet {
        components: weight
            .entries()
            .iter()
            .enumerate()
            .map(|(j, &p)| PolySeries::monomial(n, Monomial::var(j), GaussianRational::from(i64::from(p))))
            .collect(),
    }
}

/// Splits `f` into `S`-eigencomponents: `S(f_k) = k f_k`.
pub fn quasi_decompose_function(f: &PolySeries, weight: &Weight) -> Result<BTreeMap<i64, PolySeries>> {
    if weight.len() != f.nvars() {
        return Err(Error::DimensionMismatch { expected: f.nvars(), found: weight.len() });
    }
    let mut out: BTreeMap<i64, PolySeries> = BTreeMap::new();
    for (m, c) in f.terms() {
        let k = m.weighted_degree(weight.entries()) as i64;
        out.entry(k)
            .or_insert_with(|| PolySeries::zero(f.nvars()))
            .add_term(*m, c.clone());
    }
    Ok(out)
}

/// Splits `X` into `S`-eigencomponents: `[S, X_k] = k X_k`.
///
/// The monomial field `z^m d/dz_i` has weight `<p, m> - p_i`.
pub fn quasi_decompose_field(x: &VectorFieldJet, weight: &Weight) -> Result<BTreeMap<i64, VectorFieldJet>> {
    let n = x.nvars();
    if weight.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: weight.len() });
    }
    let mut out: BTreeMap<i64, VectorFieldJet> = BTreeMap::new();
    for (i, comp) in x.components().iter().enumerate() {
        for (m, c) in comp.terms() {
            let k = m.weighted_degree(weight.entries()) as i64 - i64::from(weight.entries()[i]);
            out.entry(k).or_insert_with(|| VectorFieldJet::zero(n)).components[i].add_term(*m, c.clone());
        }
    }
    Ok(out)
}
