//! Resonances of a spectrum and exact classification of 2x2 linear parts.

use std::fmt;

use num_traits::{One, Zero};

use crate::gaussian::GaussianRational;
use crate::monomial::Monomial;

/// A relation `lambda_target = sum k_j lambda_j` with `|k| >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Resonance {
    /// 0-based index of the target eigenvalue.
    pub target: usize,
    pub exponents: Monomial,
}

/// Resonant monomial fields `z^k d/dz_target`, sorted by degree, then
/// target, then monomial.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ResonanceSet {
    pub entries: Vec<Resonance>,
}

impl ResonanceSet {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, target: usize, exponents: &Monomial) -> bool {
        self.entries.iter().any(|r| r.target == target && &r.exponents == exponents)
    }
}

/// Exhaustive search over `2 <= |k| <= bound`.
pub fn resonances(lambda: &[GaussianRational], bound: u32) -> ResonanceSet {
    let n = lambda.len();
    let mut entries = Vec::new();
    for d in 2..=bound {
        for target in 0..n {
            for m in Monomial::of_degree(n, d) {
                let mut s = GaussianRational::zero();
                for (j, l) in lambda.iter().enumerate() {
                    s += &(l * &GaussianRational::from(i64::from(m.exp(j))));
                }
                if s == lambda[target] {
                    entries.push(Resonance { target, exponents: m });
                }
            }
        }
    }
    ResonanceSet { entries }
}

/// Jordan-type case of a 2x2 linear part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LinearCase {
    Zero,
    /// Nonzero with both eigenvalues 0.
    NilpotentNonzero,
    /// Exactly one eigenvalue is 0.
    OneZeroEigenvalue,
    /// Equal nonzero eigenvalues with a nontrivial Jordan block.
    NondiagonalResonant,
    /// Diagonalizable with both eigenvalues nonzero.
    Semisimple,
}

impl LinearCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            LinearCase::Zero => "zero",
            LinearCase::NilpotentNonzero => "nilpotent_nonzero",
            LinearCase::OneZeroEigenvalue => "one_zero_eigenvalue",
            LinearCase::NondiagonalResonant => "nondiagonal_resonant",
            LinearCase::Semisimple => "semisimple",
        }
    }
}

/// Rationality of the eigenvalue ratio `lambda_2 / lambda_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RatioRationality {
    /// The ratio is this rational number (the root of modulus `>= 1` of the
    /// ratio quadratic; the other root is its inverse).
    Rational(GaussianRational),
    /// The ratio is not a rational number.
    Irrational,
    /// Some eigenvalue is zero.
    Undefined,
}

impl fmt::Display for RatioRationality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RatioRationality::Rational(r) => write!(f, "rational({r})"),
            RatioRationality::Irrational => write!(f, "irrational"),
            RatioRationality::Undefined => write!(f, "undefined"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearClass {
    pub case: LinearCase,
    pub ratio: RatioRationality,
    pub trace: GaussianRational,
    pub determinant: GaussianRational,
    /// Present only when the characteristic discriminant is a square in `Q(i)`.
    pub eigenvalues: Option<(GaussianRational, GaussianRational)>,
}

impl LinearClass {
    /// Whether the ratio is a positive rational number.
    pub fn ratio_in_positive_rationals(&self) -> bool {
        matches!(&self.ratio, RatioRationality::Rational(r) if r.is_positive_rational())
    }
}

/// Classifies `M = [[a, b], [c, d]]`, where row `i` holds the coefficients
/// of `(x, y)` in the `i`-th component.
pub fn classify_linear(m: &[[GaussianRational; 2]; 2]) -> LinearClass {
    let [[a, b], [c, d]] = m;
    let trace = a + d;
    let det = &(a * d) - &(b * c);
    let disc = &(&trace * &trace) - &(&det * &GaussianRational::from(4));
    let half = GaussianRational::ratio(1, 2);
    let eigenvalues = disc.sqrt().map(|s| {
        let l1 = &(&trace - &s) * &half;
        let l2 = &(&trace + &s) * &half;
        if l1.sort_key() <= l2.sort_key() {
            (l1, l2)
        } else {
            (l2, l1)
        }
    });
    let is_zero = [a, b, c, d].iter().all(|v| v.is_zero());
    let (case, ratio) = if is_zero {
        (LinearCase::Zero, RatioRationality::Undefined)
    } else if det.is_zero() {
        let case = if trace.is_zero() { LinearCase::NilpotentNonzero } else { LinearCase::OneZeroEigenvalue };
        (case, RatioRationality::Undefined)
    } else if disc.is_zero() {
        let scalar = b.is_zero() && c.is_zero() && a == d;
        let case = if scalar { LinearCase::Semisimple } else { LinearCase::NondiagonalResonant };
        (case, RatioRationality::Rational(GaussianRational::one()))
    } else {
        (LinearCase::Semisimple, ratio_rationality(&trace, &det))
    };
    LinearClass { case, ratio, trace, determinant: det, eigenvalues }
}

/// Decides the ratio from `D r^2 + (2D - T^2) r + D = 0`.
fn ratio_rationality(trace: &GaussianRational, det: &GaussianRational) -> RatioRationality {
    let two = GaussianRational::from(2);
    let t2 = trace * trace;
    let b = &(&two * det) - &t2;
    let disc = &(&b * &b) - &(&(det * det) * &GaussianRational::from(4));
    let Some(s) = disc.sqrt() else {
        return RatioRationality::Irrational;
    };
    let denom = &two * det;
    let r1 = &(&-&b + &s) / &denom;
    let r2 = &(&-&b - &s) / &denom;
    let pick = if r1.norm() >= r2.norm() { r1 } else { r2 };
    if pick.is_real() {
        RatioRationality::Rational(pick)
    } else {
        RatioRationality::Irrational
    }
}
