//! Exponent vectors and the graded-lexicographic monomial order.

use std::cmp::Ordering;

/// Largest supported ambient dimension.
pub const MAX_VARS: usize = 3;

/// Exponent vector `(k_1, ..., k_n)` of a monomial `z_1^k_1 ... z_n^k_n`.
///
/// Unused trailing slots are always zero, so a `Monomial` does not know its
/// own dimension; the owning [`PolySeries`](crate::PolySeries) does.
///
/// Ordering is graded lexicographic with `x < y < z`: total degree first,
/// then the exponent of the last variable, then the previous one, and so on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u32; MAX_VARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; MAX_VARS]);

    /// Panics when more than [`MAX_VARS`] exponents are given.
    pub fn new(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut e = [0; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        Monomial(e)
    }

    pub fn var(index: usize) -> Self {
        let mut e = [0; MAX_VARS];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exp(&self, index: usize) -> u32 {
        self.0[index]
    }

    pub fn exponents(&self, nvars: usize) -> &[u32] {
        &self.0[..nvars]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Weighted degree `sum p_j k_j`.
    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&k, &p)| u64::from(k) * u64::from(p))
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; MAX_VARS]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a = a.checked_sub(b)?;
        }
        Some(Monomial(e))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0).all(|(a, b)| *a <= b)
    }

    /// Lowers the exponent of `index` by one.
    pub fn lower(&self, index: usize) -> Option<Monomial> {
        let mut e = self.0;
        e[index] = e[index].checked_sub(1)?;
        Some(Monomial(e))
    }

    pub fn raise(&self, index: usize) -> Monomial {
        let mut e = self.0;
        e[index] += 1;
        Monomial(e)
    }

    /// Exchanges two variables.
    pub fn swap(&self, a: usize, b: usize) -> Monomial {
        let mut e = self.0;
        e.swap(a, b);
        Monomial(e)
    }

    /// All monomials in `nvars` variables of exactly total degree `d`,
    /// ascending in the monomial order.
    pub fn of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = [0u32; MAX_VARS];
        fill(nvars, 0, d, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All monomials of total degree `lo..=hi`, ascending.
    pub fn up_to_degree(nvars: usize, lo: u32, hi: u32) -> Vec<Monomial> {
        (lo..=hi).flat_map(|d| Monomial::of_degree(nvars, d)).collect()
    }
}

fn fill(nvars: usize, idx: usize, remaining: u32, cur: &mut [u32; MAX_VARS], out: &mut Vec<Monomial>) {
    if idx + 1 == nvars {
        cur[idx] = remaining;
        out.push(Monomial(*cur));
        cur[idx] = 0;
        return;
    }
    for k in 0..=remaining {
        cur[idx] = k;
        fill(nvars, idx + 1, remaining - k, cur, out);
    }
    cur[idx] = 0;
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_with_x_smallest() {
        let x2 = Monomial::new(&[2, 0]);
        let xy = Monomial::new(&[1, 1]);
        let y2 = Monomial::new(&[0, 2]);
        let x3 = Monomial::new(&[3, 0]);
        assert!(x2 < xy && xy < y2 && y2 < x3);
        let z = Monomial::new(&[0, 0, 1]);
        let y = Monomial::new(&[0, 1, 0]);
        assert!(y < z);
    }

    #[test]
    fn enumerate_degree() {
        assert_eq!(Monomial::of_degree(2, 3).len(), 4);
        assert_eq!(Monomial::of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::up_to_degree(2, 0, 6).len(), 28);
    }
}
