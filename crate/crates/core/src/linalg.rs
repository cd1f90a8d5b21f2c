//! Exact sparse linear algebra over `Q(i)`.
//!
//! Rows are kept fraction-free: every stored row has Gaussian-integer
//! entries whose rational-integer content is 1. Pivot choice is
//! deterministic (the first nonzero column), so bases come out identical on
//! every run.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::gaussian::GaussianRational;

/// Sparse row: column index to nonzero entry.
pub type Row = BTreeMap<usize, GaussianRational>;

/// Row echelon form built by incremental insertion.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    ncols: usize,
    // leading column -> row whose first nonzero entry sits in that column
    pivots: BTreeMap<usize, Row>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, pivots: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduces `row` against every stored pivot. The result has no entry in
    /// a pivot column.
    pub fn reduce(&self, row: Row) -> Row {
        let mut row = primitive(row);
        let mut from = 0usize;
        loop {
            let next = row
                .range(from..)
                .map(|(c, _)| *c)
                .find(|c| self.pivots.contains_key(c));
            let Some(col) = next else { break };
            let pivot = &self.pivots[&col];
            row = eliminate(&row, pivot, col);
            from = col + 1;
        }
        row
    }

    /// Inserts a row; returns `false` if it was already in the span.
    pub fn insert(&mut self, row: Row) -> bool {
        let reduced = self.reduce(row);
        match reduced.keys().next().copied() {
            None => false,
            Some(lead) => {
                debug_assert!(lead < self.ncols);
                self.pivots.insert(lead, reduced);
                true
            }
        }
    }

    pub fn contains(&self, row: &Row) -> bool {
        self.reduce(row.clone()).is_empty()
    }

    /// Reduced form: every pivot row is cleared in all other pivot columns.
    pub fn back_reduce(&mut self) {
        let leads: Vec<usize> = self.pivots.keys().rev().copied().collect();
        for lead in leads {
            let row = self.pivots.remove(&lead).expect("pivot present");
            let mut row = row;
            let others: Vec<usize> = row
                .keys()
                .copied()
                .filter(|c| *c != lead && self.pivots.contains_key(c))
                .collect();
            for c in others {
                if row.contains_key(&c) {
                    row = eliminate(&row, &self.pivots[&c], c);
                }
            }
            self.pivots.insert(lead, primitive(row));
        }
    }

    /// Basis of the right nullspace. Vector `v_f` has entry 1 at the free
    /// column `f` and 0 at every other free column; vectors are returned in
    /// ascending order of their free column.
    pub fn nullspace(&self) -> Vec<Row> {
        let mut reduced = self.clone();
        reduced.back_reduce();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !reduced.pivots.contains_key(c)).collect();
        free.into_iter()
            .map(|f| {
                let mut v = Row::new();
                v.insert(f, GaussianRational::one());
                for (lead, row) in &reduced.pivots {
                    if let Some(entry) = row.get(&f) {
                        let value = -(entry / &row[lead]);
                        v.insert(*lead, value);
                    }
                }
                v
            })
            .collect()
    }

    /// Solution of `A x = b` whose rows were inserted as `[A | b]`, with the
    /// right-hand side stored in column `ncols - 1`. Free unknowns are set to
    /// zero. `None` when the system is inconsistent.
    pub fn solve_augmented(&self) -> Option<Vec<GaussianRational>> {
        let rhs = self.ncols - 1;
        if self.pivots.contains_key(&rhs) {
            return None;
        }
        let mut reduced = self.clone();
        reduced.back_reduce();
        let mut x = vec![GaussianRational::zero(); rhs];
        for (lead, row) in &reduced.pivots {
            if let Some(b) = row.get(&rhs) {
                x[*lead] = b / &row[lead];
            }
        }
        Some(x)
    }
}

/// `pivot[col] * row - row[col] * pivot`, made primitive.
fn eliminate(row: &Row, pivot: &Row, col: usize) -> Row {
    let a = &pivot[&col];
    let b = &row[&col];
    let mut out = Row::new();
    for (c, v) in row {
        out.insert(*c, v * a);
    }
    for (c, v) in pivot {
        let delta = v * b;
        let entry = out.entry(*c).or_insert_with(GaussianRational::zero);
        *entry -= &delta;
    }
    out.retain(|_, v| !v.is_zero());
    debug_assert!(!out.contains_key(&col));
    primitive(out)
}

/// Scales a row to Gaussian integers with content 1 in `Z[i]` and a leading
/// entry in the half-open first quadrant (`re > 0`, `im >= 0`).
pub fn primitive(row: Row) -> Row {
    let mut row: Row = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    if row.is_empty() {
        return row;
    }
    let lcm = row
        .values()
        .fold(BigInt::one(), |acc, v| acc.lcm(&v.denominator_lcm()));
    let scale = GaussianRational::from_real(BigRational::from_integer(lcm.clone()));
    let mut content = (BigInt::zero(), BigInt::zero());
    for v in row.values_mut() {
        *v *= &scale;
        content = gaussian_gcd(content, (v.re().to_integer(), v.im().to_integer()));
    }
    let g = GaussianRational::new(BigRational::from_integer(content.0), BigRational::from_integer(content.1));
    let lead = row.values().next().expect("nonempty").checked_div(&g).expect("nonzero content");
    let unit = first_quadrant_unit(&lead);
    let factor = &unit / &g;
    for v in row.values_mut() {
        *v *= &factor;
    }
    row
}

/// Unit `u` with `u * z` in the half-open first quadrant.
fn first_quadrant_unit(z: &GaussianRational) -> GaussianRational {
    let (re, im) = (z.re(), z.im());
    if re.is_positive() && !im.is_negative() {
        GaussianRational::one()
    } else if !re.is_positive() && im.is_positive() {
        -GaussianRational::i()
    } else if re.is_negative() && !im.is_positive() {
        -GaussianRational::one()
    } else {
        GaussianRational::i()
    }
}

type GaussInt = (BigInt, BigInt);

/// `round(n / d)` for `d > 0`.
fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    (n * BigInt::from(2) + d).div_floor(&(d * BigInt::from(2)))
}

/// Euclidean gcd in `Z[i]`, up to a unit.
fn gaussian_gcd(mut a: GaussInt, mut b: GaussInt) -> GaussInt {
    while !(b.0.is_zero() && b.1.is_zero()) {
        let norm = &b.0 * &b.0 + &b.1 * &b.1;
        // a * conj(b)
        let nr = &a.0 * &b.0 + &a.1 * &b.1;
        let ni = &a.1 * &b.0 - &a.0 * &b.1;
        let (qr, qi) = (round_div(&nr, &norm), round_div(&ni, &norm));
        let r = (&a.0 - (&qr * &b.0 - &qi * &b.1), &a.1 - (&qr * &b.1 + &qi * &b.0));
        a = b;
        b = r;
    }
    a
}
