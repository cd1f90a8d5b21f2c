//! Dense univariate polynomials over `Q(i)` and their roots in `Q(i)`.
//!
//! Root finding uses the rational root test in the Gaussian integers: after
//! clearing denominators, a root `u/v` in lowest terms has `u | a_0` and
//! `v | a_n`. Divisors are enumerated from the norm factorization, under a
//! fixed work budget.

use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gaussian::GaussianRational;
use crate::monomial::Monomial;
use crate::series::PolySeries;

/// Largest Gaussian-integer norm whose divisors are enumerated.
const NORM_BUDGET: u64 = 1_000_000_000_000;
/// Largest number of candidate roots tried.
const CANDIDATE_BUDGET: usize = 200_000;

/// `c_0 + c_1 t + ... + c_d t^d`; no trailing zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<GaussianRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::new(vec![c])
    }

    /// `t - r`.
    pub fn linear_root(r: &GaussianRational) -> Self {
        Self::new(vec![-r, GaussianRational::one()])
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> GaussianRational {
        self.coeffs.last().cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// Restriction of a bivariate polynomial to the line where variable
    /// `fixed` is 0, as a polynomial in the other variable.
    pub fn restrict(f: &PolySeries, fixed: usize) -> Self {
        let free = 1 - fixed;
        let mut coeffs = Vec::new();
        for (m, c) in f.terms() {
            if m.exp(fixed) == 0 {
                let e = m.exp(free) as usize;
                if coeffs.len() <= e {
                    coeffs.resize(e + 1, GaussianRational::zero());
                }
                coeffs[e] = c.clone();
            }
        }
        Self::new(coeffs)
    }

    /// The bivariate polynomial `p(z_var)` in `nvars` variables.
    pub fn to_series(&self, nvars: usize, var: usize) -> PolySeries {
        PolySeries::from_terms(
            nvars,
            self.coeffs.iter().enumerate().map(|(e, c)| {
                let mut exps = [0u32; 3];
                exps[var] = e as u32;
                (c.clone(), Monomial::new(&exps[..nvars]))
            }),
        )
    }

    pub fn eval(&self, t: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * t) + c;
        }
        acc
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &UniPoly, k: usize| p.coeffs.get(k).cloned().unwrap_or_else(GaussianRational::zero);
        UniPoly::new((0..n).map(|k| &get(self, k) + &get(other, k)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.scale(&-GaussianRational::one()))
    }

    pub fn scale(&self, c: &GaussianRational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::new(out)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &GaussianRational::from(k as i64))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![GaussianRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let factor = &rem[k] / &lead;
            for (j, c) in d.coeffs.iter().enumerate() {
                let delta = c * &factor;
                rem[k - dd + j] -= &delta;
            }
            quot[k - dd] = factor;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        self.scale(&self.leading().inv().expect("nonzero leading coefficient"))
    }

    /// Monic greatest common divisor (`0` only when both inputs are `0`).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors, monic.
    pub fn squarefree(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Roots in `Q(i)` of a nonzero polynomial, without multiplicity, and the
    /// monic cofactor carrying the remaining (non-`Q(i)`) roots.
    pub fn gaussian_roots(&self) -> Result<(Vec<GaussianRational>, UniPoly)> {
        if self.is_zero() {
            return Err(Error::ZeroInput("polynomial"));
        }
        let mut rest = self.squarefree();
        let mut roots = Vec::new();
        while let Some(d) = rest.degree() {
            if d == 0 {
                break;
            }
            let found = match d {
                1 => Some(-(&rest.coeffs[0] / &rest.coeffs[1])),
                2 => quadratic_root(&rest),
                _ => rest.candidate_root(&self.to_string())?,
            };
            let Some(r) = found else { break };
            rest = rest.div_rem(&UniPoly::linear_root(&r)).0;
            roots.push(r);
        }
        roots.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        Ok((roots, rest.monic()))
    }

    /// Some `Q(i)` root by the Gaussian rational root test.
    fn candidate_root(&self, label: &str) -> Result<Option<GaussianRational>> {
        if self.coeffs[0].is_zero() {
            return Ok(Some(GaussianRational::zero()));
        }
        let ints = gaussian_integer_coeffs(&self.coeffs);
        let budget = || Error::RootBudgetExceeded(label.to_string());
        let numerators = gaussian_divisors(&ints[0]).ok_or_else(budget)?;
        let denominators = gaussian_divisors(ints.last().expect("nonempty")).ok_or_else(budget)?;
        // one denominator per associate class
        let denominators: Vec<_> = denominators.into_iter().filter(|(a, b)| a.is_positive() && !b.is_negative()).collect();
        if numerators.len().saturating_mul(denominators.len()) > CANDIDATE_BUDGET {
            return Err(budget());
        }
        for (vr, vi) in &denominators {
            let v = GaussianRational::new(BigRational::from_integer(vr.clone()), BigRational::from_integer(vi.clone()));
            for (ur, ui) in &numerators {
                let u = GaussianRational::new(BigRational::from_integer(ur.clone()), BigRational::from_integer(ui.clone()));
                let r = &u / &v;
                if self.eval(&r).is_zero() {
                    return Ok(Some(r));
                }
            }
        }
        Ok(None)
    }
}

fn quadratic_root(p: &UniPoly) -> Option<GaussianRational> {
    let [c, b, a] = [&p.coeffs[0], &p.coeffs[1], &p.coeffs[2]];
    let disc = &(b * b) - &(&(a * c) * &GaussianRational::from(4));
    let s = disc.sqrt()?;
    Some(&(&-b + &s) / &(a * &GaussianRational::from(2)))
}

type GaussInt = (BigInt, BigInt);

fn gaussian_integer_coeffs(coeffs: &[GaussianRational]) -> Vec<GaussInt> {
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denominator_lcm()));
    let l = BigRational::from_integer(lcm);
    coeffs
        .iter()
        .map(|c| ((c.re() * &l).to_integer(), (c.im() * &l).to_integer()))
        .collect()
}

/// All Gaussian integers dividing `z`, all four associates included.
/// `None` when the norm exceeds the work budget.
fn gaussian_divisors(z: &GaussInt) -> Option<Vec<GaussInt>> {
    let norm = &z.0 * &z.0 + &z.1 * &z.1;
    let norm = norm.to_u64().filter(|n| *n <= NORM_BUDGET)?;
    let mut out = Vec::new();
    for k in integer_divisors(norm) {
        let kr = BigInt::from(k);
        let root = k.sqrt();
        for a in 0..=root {
            let b2 = k - a * a;
            let b = b2.sqrt();
            if b * b != b2 {
                continue;
            }
            for (sa, sb) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
                let d = (BigInt::from(a as i64 * sa), BigInt::from(b as i64 * sb));
                if out.contains(&d) {
                    continue;
                }
                // d | z  <=>  z * conj(d) has both parts divisible by N(d)
                let re = &z.0 * &d.0 + &z.1 * &d.1;
                let im = &z.1 * &d.0 - &z.0 * &d.1;
                if re.is_multiple_of(&kr) && im.is_multiple_of(&kr) {
                    out.push(d);
                }
            }
        }
    }
    Some(out)
}

fn integer_divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1u64;
    while k * k <= n {
        if n.is_multiple_of(k) {
            small.push(k);
            if k * k != n {
                large.push(n / k);
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::text::format_poly(&self.to_series(1, 0), &["t"]))
    }
}
