//! Sparse truncated multivariate power series over `Q(i)`.
//!
//! A [`PolySeries`] is either an exact polynomial or a jet `f + O(k)`,
//! where every coefficient of total degree `< k` is known and nothing is
//! known beyond. The truncation is tracked through every operation and is
//! never over-claimed: products are certified to the smaller of the two
//! input precisions, derivatives lose one degree.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gaussian::GaussianRational;
use crate::monomial::{Monomial, MAX_VARS};

/// How much of a series is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Precision {
    /// An exact polynomial (the "total" flag).
    Exact,
    /// Terms of total degree `< k` are known; degree `>= k` is unknown.
    BigO(u32),
}

impl Precision {
    /// Precision of a series truncated at degree `n` (terms of degree > n discarded).
    pub fn truncated_at(n: u32) -> Self {
        Precision::BigO(n + 1)
    }

    pub fn min(self, other: Precision) -> Precision {
        match (self, other) {
            (Precision::Exact, p) | (p, Precision::Exact) => p,
            (Precision::BigO(a), Precision::BigO(b)) => Precision::BigO(a.min(b)),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Precision::Exact)
    }

    /// Whether a term of total degree `d` may be stored.
    pub fn admits(&self, d: u32) -> bool {
        match self {
            Precision::Exact => true,
            Precision::BigO(k) => d < *k,
        }
    }

    /// Largest certified degree, `None` for exact values and for jets that
    /// certify nothing.
    pub fn truncation_degree(&self) -> Option<u32> {
        match self {
            Precision::Exact => None,
            Precision::BigO(k) => k.checked_sub(1),
        }
    }

    fn lower(self, by: u32) -> Precision {
        match self {
            Precision::Exact => Precision::Exact,
            Precision::BigO(k) => Precision::BigO(k.saturating_sub(by)),
        }
    }
}

/// Multiplicity (lowest-degree nonzero term) of a series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    /// The least degree of a nonzero term, certified.
    Finite(u64),
    /// No nonzero term is certified below this degree; the jet may still be
    /// the jet of a nonzero germ.
    AtLeast(u64),
    /// The exact zero polynomial.
    Infinite,
}

impl Order {
    pub fn finite(&self) -> Option<u64> {
        match self {
            Order::Finite(k) => Some(*k),
            _ => None,
        }
    }

    /// A lower bound usable in inequalities (`u64::MAX` for the zero polynomial).
    pub fn lower_bound(&self) -> u64 {
        match self {
            Order::Finite(k) | Order::AtLeast(k) => *k,
            Order::Infinite => u64::MAX,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::AtLeast(k) => write!(f, ">= {k}"),
            Order::Infinite => write!(f, "infinity"),
        }
    }
}

/// Positive integer weights `(p_1, ..., p_n)` with `gcd = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight(Vec<u32>);

impl Weight {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let valid = !entries.is_empty()
            && entries.len() <= MAX_VARS
            && entries.iter().all(|&p| p >= 1)
            && entries.iter().fold(0u32, |g, &p| g.gcd(&p)) == 1;
        if valid {
            Ok(Weight(entries))
        } else {
            Err(Error::InvalidWeight(entries))
        }
    }

    /// The standard grading `(1, ..., 1)`.
    pub fn standard(nvars: usize) -> Self {
        Weight(vec![1; nvars])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(1)
    }

    pub fn min(&self) -> u32 {
        self.0.iter().copied().min().unwrap_or(1)
    }

    pub fn trace(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }
}

/// Sparse truncated power series in `nvars` variables.
///
/// Invariants: no stored coefficient is zero and no stored term lies beyond
/// the precision.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolySeries {
    nvars: usize,
    terms: BTreeMap<Monomial, GaussianRational>,
    precision: Precision,
}

impl PolySeries {
    /// The exact zero polynomial.
    pub fn zero(nvars: usize) -> Self {
        assert!((1..=MAX_VARS).contains(&nvars), "unsupported dimension {nvars}");
        Self { nvars, terms: BTreeMap::new(), precision: Precision::Exact }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, GaussianRational::one())
    }

    pub fn constant(nvars: usize, c: GaussianRational) -> Self {
        Self::monomial(nvars, Monomial::ONE, c)
    }

    /// The coordinate function `z_index`.
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable {index} out of range");
        Self::monomial(nvars, Monomial::var(index), GaussianRational::one())
    }

    pub fn monomial(nvars: usize, m: Monomial, c: GaussianRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(m, c);
        p
    }

    /// Builds an exact polynomial from `(coefficient, exponents)` pairs.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (GaussianRational, Monomial)>,
    {
        let mut p = Self::zero(nvars);
        for (c, m) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Zero jet known up to (and including) degree `n`.
    pub fn zero_jet(nvars: usize, n: u32) -> Self {
        Self::zero(nvars).with_precision(Precision::truncated_at(n))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    pub fn is_exact(&self) -> bool {
        self.precision.is_exact()
    }

    /// True when no nonzero term is stored. For a jet this only says the
    /// known part vanishes.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn constant_term(&self) -> GaussianRational {
        self.coeff(&Monomial::ONE)
    }

    /// Largest total degree of a stored term.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    /// Adds `c * m`, dropping it if it lies beyond the precision.
    pub fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        if c.is_zero() || !self.precision.admits(m.degree()) {
            return;
        }
        debug_assert!(m.exponents(MAX_VARS)[self.nvars..].iter().all(|&e| e == 0));
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Lowers the precision, discarding terms that are no longer certified.
    /// Never raises precision.
    pub fn with_precision(mut self, p: Precision) -> Self {
        self.precision = self.precision.min(p);
        let prec = self.precision;
        self.terms.retain(|m, _| prec.admits(m.degree()));
        self
    }

    /// Jet of degree `n`: terms of degree `> n` are discarded and marked unknown.
    pub fn truncate(self, n: u32) -> Self {
        self.with_precision(Precision::truncated_at(n))
    }

    /// Forgets the truncation and treats the stored terms as an exact polynomial.
    pub fn into_exact(mut self) -> Self {
        self.precision = Precision::Exact;
        self
    }

    /// Jet equality: the term collections agree up to the smaller precision.
    pub fn jet_eq(&self, other: &PolySeries) -> bool {
        if self.nvars != other.nvars {
            return false;
        }
        let p = self.precision.min(other.precision);
        let a = self.clone().with_precision(p);
        let b = other.clone().with_precision(p);
        a.terms == b.terms
    }

    pub fn scale(&self, c: &GaussianRational) -> PolySeries {
        let mut out = PolySeries { nvars: self.nvars, terms: BTreeMap::new(), precision: self.precision };
        if c.is_zero() {
            return out;
        }
        for (m, a) in &self.terms {
            out.terms.insert(*m, a * c);
        }
        out
    }

    pub fn checked_add(&self, other: &PolySeries) -> Result<PolySeries> {
        self.check_dim(other)?;
        let mut out = self.clone().with_precision(other.precision);
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &PolySeries) -> Result<PolySeries> {
        self.check_dim(other)?;
        let mut out = self.clone().with_precision(other.precision);
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        Ok(out)
    }

    /// Truncated product, certified to the smaller of the two precisions.
    pub fn checked_mul(&self, other: &PolySeries) -> Result<PolySeries> {
        self.check_dim(other)?;
        let precision = self.precision.min(other.precision);
        let mut out = PolySeries { nvars: self.nvars, terms: BTreeMap::new(), precision };
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> PolySeries {
        let mut acc = PolySeries::one(self.nvars);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplies by a monomial (shifts every exponent).
    pub fn mul_monomial(&self, m: &Monomial) -> PolySeries {
        let precision = match self.precision {
            Precision::Exact => Precision::Exact,
            Precision::BigO(k) => Precision::BigO(k + m.degree()),
        };
        PolySeries {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect(),
            precision,
        }
    }

    /// Formal partial derivative in `z_index`; precision drops by one.
    pub fn partial(&self, index: usize) -> Result<PolySeries> {
        if index >= self.nvars {
            return Err(Error::VariableOutOfRange { index, dimension: self.nvars });
        }
        let mut out = PolySeries {
            nvars: self.nvars,
            terms: BTreeMap::new(),
            precision: self.precision.lower(1),
        };
        for (m, c) in &self.terms {
            let e = m.exp(index);
            if let Some(lowered) = m.lower(index) {
                out.add_term(lowered, c * &GaussianRational::from(i64::from(e)));
            }
        }
        Ok(out)
    }

    /// Algebraic multiplicity, optionally with respect to a weighted grading.
    pub fn order(&self, weight: Option<&Weight>) -> Order {
        let wmin = weight.map_or(1, |w| u64::from(w.min()));
        let known = self
            .terms
            .keys()
            .map(|m| match weight {
                Some(w) => m.weighted_degree(w.entries()),
                None => u64::from(m.degree()),
            })
            .min();
        match (self.precision, known) {
            (Precision::Exact, None) => Order::Infinite,
            (Precision::Exact, Some(d)) => Order::Finite(d),
            (Precision::BigO(k), None) => Order::AtLeast(u64::from(k) * wmin),
            (Precision::BigO(k), Some(d)) => {
                // Unknown terms have weighted degree at least k * min(weight).
                let unknown_floor = u64::from(k) * wmin;
                if d < unknown_floor {
                    Order::Finite(d)
                } else {
                    Order::AtLeast(unknown_floor)
                }
            }
        }
    }

    /// Sum of the terms of total degree exactly `d`, as an exact polynomial.
    pub fn homogeneous_part(&self, d: u32) -> PolySeries {
        let mut out = PolySeries::zero(self.nvars);
        for (m, c) in self.terms.iter().filter(|(m, _)| m.degree() == d) {
            out.terms.insert(*m, c.clone());
        }
        out
    }

    /// Sum of the terms of weighted degree exactly `k`, as an exact polynomial.
    pub fn weighted_part(&self, weight: &Weight, k: u64) -> PolySeries {
        let mut out = PolySeries::zero(self.nvars);
        for (m, c) in self.terms.iter() {
            if m.weighted_degree(weight.entries()) == k {
                out.terms.insert(*m, c.clone());
            }
        }
        out
    }

    /// Exact division test under graded-lex leading-term elimination.
    ///
    /// Returns `Ok(Some(q))` with `self = d * q`, `Ok(None)` if `d` does not
    /// divide `self`. Both inputs must be exact polynomials.
    pub fn divide_by(&self, d: &PolySeries) -> Result<Option<PolySeries>> {
        self.check_dim(d)?;
        if !self.is_exact() || !d.is_exact() {
            return Err(Error::NotExact);
        }
        let (lm, lc) = match d.leading_term() {
            Some((m, c)) => (*m, c.clone()),
            None => return Err(Error::ZeroInput("divisor")),
        };
        let mut rem = self.clone();
        let mut quot = PolySeries::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term().map(|(m, c)| (*m, c.clone())) {
            let Some(shift) = m.div(&lm) else {
                return Ok(None);
            };
            let factor = c.checked_div(&lc)?;
            quot.add_term(shift, factor.clone());
            for (dm, dc) in &d.terms {
                rem.add_term(dm.mul(&shift), -(dc * &factor));
            }
        }
        Ok(Some(quot))
    }

    /// Composition `f(map_1, ..., map_n)`.
    ///
    /// The images must share a dimension `m` (the result lives in `m`
    /// variables). Images with a nonzero constant term are rejected unless
    /// `allow_shift` is set; a truncated series composed with a shifting map
    /// certifies nothing.
    pub fn substitute(&self, map: &[PolySeries], allow_shift: bool) -> Result<PolySeries> {
        if map.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: map.len() });
        }
        let target = map[0].nvars;
        if let Some(bad) = map.iter().find(|g| g.nvars != target) {
            return Err(Error::DimensionMismatch { expected: target, found: bad.nvars });
        }
        let used: Vec<usize> = (0..self.nvars)
            .filter(|&i| self.terms.keys().any(|m| m.exp(i) > 0))
            .collect();
        let shifts = used.iter().any(|&i| {
            !map[i].constant_term().is_zero() || matches!(map[i].precision, Precision::BigO(0))
        });
        if shifts && !allow_shift {
            return Err(Error::ConstantTermInMap);
        }

        let images_precision = used
            .iter()
            .fold(Precision::Exact, |p, &i| p.min(map[i].precision));
        let precision = match self.precision {
            Precision::Exact => images_precision,
            Precision::BigO(_) if shifts => Precision::BigO(0),
            Precision::BigO(k) => {
                let omin = used
                    .iter()
                    .map(|&i| map[i].order(None).lower_bound())
                    .min()
                    .unwrap_or(1)
                    .max(1);
                let bound = u64::from(k).saturating_mul(omin).min(u64::from(u32::MAX)) as u32;
                images_precision.min(Precision::BigO(bound))
            }
        };

        let mut powers: Vec<Vec<PolySeries>> = map
            .iter()
            .map(|g| vec![PolySeries::one(target), g.clone().with_precision(precision)])
            .collect();
        let mut out = PolySeries { nvars: target, terms: BTreeMap::new(), precision };
        for (m, c) in &self.terms {
            let mut term = PolySeries::constant(target, c.clone()).with_precision(precision);
            for (i, pw) in powers.iter_mut().enumerate().take(self.nvars) {
                let e = m.exp(i) as usize;
                while pw.len() <= e {
                    let next = &pw[pw.len() - 1] * &pw[1];
                    pw.push(next);
                }
                if e > 0 {
                    term = &term * &pw[e];
                }
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Evaluates an exact polynomial at a point of `Q(i)^n`.
    pub fn eval(&self, point: &[GaussianRational]) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, p) in point.iter().enumerate().take(self.nvars) {
                let e = m.exp(i);
                if e > 0 {
                    t *= &p.pow(e);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Reinterprets the series in `nvars` variables (padding with unused
    /// variables or dropping ones the series does not involve).
    pub fn with_nvars(&self, nvars: usize) -> Result<PolySeries> {
        if !(1..=MAX_VARS).contains(&nvars) {
            return Err(Error::UnsupportedDimension(nvars));
        }
        if let Some(m) = self.terms.keys().find(|m| (nvars..MAX_VARS).any(|i| m.exp(i) > 0)) {
            let _ = m;
            return Err(Error::DimensionMismatch { expected: self.nvars, found: nvars });
        }
        Ok(PolySeries { nvars, terms: self.terms.clone(), precision: self.precision })
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: usize, b: usize) -> PolySeries {
        PolySeries {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.swap(a, b), c.clone())).collect(),
            precision: self.precision,
        }
    }

    /// Largest power of `z_index` dividing every stored term.
    pub fn var_valuation(&self, index: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(index)).min()
    }

    /// Divides by `z_index^k`; the caller guarantees divisibility.
    pub fn div_var_power(&self, index: usize, k: u32) -> PolySeries {
        let precision = self.precision.lower(k);
        let mut out = PolySeries { nvars: self.nvars, terms: BTreeMap::new(), precision };
        for (m, c) in &self.terms {
            let mut e = *m;
            for _ in 0..k {
                e = e.lower(index).expect("monomial not divisible by variable power");
            }
            out.add_term(e, c.clone());
        }
        out
    }

    /// Keeps the terms for which `keep` holds.
    pub fn filter_terms(&self, mut keep: impl FnMut(&Monomial) -> bool) -> PolySeries {
        PolySeries {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (*m, c.clone())).collect(),
            precision: self.precision,
        }
    }

    /// Maps every coefficient, dropping the ones that become zero.
    pub fn map_coeffs(&self, mut f: impl FnMut(&GaussianRational) -> GaussianRational) -> PolySeries {
        let mut out = PolySeries { nvars: self.nvars, terms: BTreeMap::new(), precision: self.precision };
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }

    fn check_dim(&self, other: &PolySeries) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.nvars, found: other.nvars })
        }
    }
}

/// Operator forms panic on a dimension mismatch; use the `checked_*`
/// methods where mismatched inputs are possible.
impl<'a> Add<&'a PolySeries> for &'a PolySeries {
    type Output = PolySeries;
    fn add(self, rhs: &PolySeries) -> PolySeries {
        self.checked_add(rhs).expect("dimension mismatch in PolySeries addition")
    }
}

impl<'a> Sub<&'a PolySeries> for &'a PolySeries {
    type Output = PolySeries;
    fn sub(self, rhs: &PolySeries) -> PolySeries {
        self.checked_sub(rhs).expect("dimension mismatch in PolySeries subtraction")
    }
}

impl<'a> Mul<&'a PolySeries> for &'a PolySeries {
    type Output = PolySeries;
    fn mul(self, rhs: &PolySeries) -> PolySeries {
        self.checked_mul(rhs).expect("dimension mismatch in PolySeries product")
    }
}

impl Neg for &PolySeries {
    type Output = PolySeries;
    fn neg(self) -> PolySeries {
        self.scale(&-GaussianRational::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for PolySeries {
            type Output = PolySeries;
            fn $m(self, rhs: PolySeries) -> PolySeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for PolySeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = crate::text::default_names(self.nvars);
        write!(f, "{}", crate::text::format_poly(self, &names))?;
        if let Precision::BigO(k) = self.precision {
            write!(f, " + O({k})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;

    fn p(s: &str) -> PolySeries {
        parse_poly(s, 2).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("x + y") * &p("x - y"), p("x^2 - y^2"));
        assert_eq!(&p("x + y") * &PolySeries::one(2), p("x + y"));
    }

    #[test]
    fn geometric_series_jet() {
        let a = p("1 + x").truncate(2);
        let b = p("1 - x + x^2").truncate(2);
        let prod = &a * &b;
        assert_eq!(prod.precision(), Precision::BigO(3));
        assert!(prod.jet_eq(&PolySeries::one(2)));
        assert_eq!(prod, PolySeries::one(2).truncate(2));
    }

    #[test]
    fn partials() {
        assert_eq!(p("x^2*y").partial(0).unwrap(), p("2*x*y"));
        assert_eq!(p("x^2").partial(1).unwrap(), PolySeries::zero(2));
        assert_eq!(p("y^2 + x^3").partial(0).unwrap(), p("3*x^2"));
        let jet = p("x^3 + y").truncate(4);
        assert_eq!(jet.partial(0).unwrap().precision(), Precision::BigO(4));
        assert!(p("x").partial(2).is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(p("y^2 + x^3").order(None), Order::Finite(2));
        assert_eq!(PolySeries::zero_jet(2, 5).order(None), Order::AtLeast(6));
        assert_eq!(PolySeries::zero(2).order(None), Order::Infinite);
        let w = Weight::new(vec![1, 2]).unwrap();
        assert_eq!(p("y - x^2").order(Some(&w)), Order::Finite(2));
    }

    #[test]
    fn weights_validated() {
        assert!(Weight::new(vec![2, 4]).is_err());
        assert!(Weight::new(vec![0, 1]).is_err());
        assert!(Weight::new(vec![2, 3]).is_ok());
    }

    #[test]
    fn divisibility() {
        assert_eq!(p("2*x*y").divide_by(&p("x")).unwrap(), Some(p("2*y")));
        assert_eq!(p("x + y").divide_by(&p("x")).unwrap(), None);
        // H_f(f) = 0 for f = y^2 - x^3
        let zero = p("2*y*(-3*x^2) + 3*x^2*2*y");
        assert_eq!(zero.divide_by(&p("y^2 - x^3")).unwrap(), Some(PolySeries::zero(2)));
        assert!(matches!(p("x").truncate(3).divide_by(&p("x")), Err(Error::NotExact)));
        assert!(p("x").divide_by(&PolySeries::zero(2)).is_err());
    }

    #[test]
    fn blowup_substitution() {
        // map (x, y) -> (x, t*x) written in variables (x, t)
        let chart = [p("x"), p("x*y")];
        assert_eq!(p("y").substitute(&chart, false).unwrap(), p("x*y"));
        assert_eq!(p("y^2 + x^3").substitute(&chart, false).unwrap(), p("x^2*y^2 + x^3"));
        let id = [p("x"), p("y")];
        assert_eq!(p("x^2 + y^2").substitute(&id, false).unwrap(), p("x^2 + y^2"));
    }

    #[test]
    fn shift_requires_flag() {
        let shift = [p("x"), p("y + 1")];
        assert!(matches!(p("y").substitute(&shift, false), Err(Error::ConstantTermInMap)));
        assert_eq!(p("y^2").substitute(&shift, true).unwrap(), p("y^2 + 2*y + 1"));
        let jet = p("y").truncate(3);
        assert_eq!(jet.substitute(&shift, true).unwrap().precision(), Precision::BigO(0));
    }

    #[test]
    fn truncated_substitution_precision() {
        let f = p("x + y^2").truncate(2);
        let map = [p("x^2"), p("y")];
        let g = f.substitute(&map, false).unwrap();
        assert_eq!(g.precision(), Precision::BigO(3));
        assert_eq!(g, p("x^2 + y^2").truncate(2));
    }
}
