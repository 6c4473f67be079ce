//! Multi-index combinatorics.
//!
//! A [`MultiIndex`] `p = (p_1, ..., p_n)` carries the total degree `|p|`, the
//! multi-factorial `p! = p_1! ... p_n!` (exact, arbitrary width) and the
//! monomial `z^p`. Indices are ordered *graded*: first by total degree, then
//! lexicographically descending on the parts. [`enumerate_indices`] produces
//! one degree shell in that same order, so every sum in the crate that walks
//! multi-indices does so in a single reproducible order.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive};

use crate::compensated::ComplexSum;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParameter(
                "a multi-index needs at least one part".into(),
            ));
        }
        Ok(MultiIndex(parts))
    }

    /// The zero index of length `n`.
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "dimension must be at least 1");
        MultiIndex(vec![0; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `|p| = p_1 + ... + p_n`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `p! = p_1! ... p_n!`, exact.
    pub fn factorial(&self) -> BigUint {
        self.0.iter().map(|&k| factorial(k)).product()
    }

    /// `p!` rounded once to the nearest double.
    pub fn factorial_f64(&self) -> f64 {
        self.factorial().to_f64().unwrap_or(f64::INFINITY)
    }

    /// `p - q` if `q <= p` componentwise, `None` otherwise.
    pub fn checked_sub(&self, q: &MultiIndex) -> Option<MultiIndex> {
        if self.len() != q.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&q.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }

    pub fn checked_add(&self, q: &MultiIndex) -> Option<MultiIndex> {
        if self.len() != q.len() {
            return None;
        }
        Some(MultiIndex(
            self.0.iter().zip(&q.0).map(|(&a, &b)| a + b).collect(),
        ))
    }

    /// `p! / (p - q)!` as an exact integer; zero when some `q_i > p_i`.
    pub fn falling_ratio(&self, q: &MultiIndex) -> BigUint {
        match self.checked_sub(q) {
            None => BigUint::from(0u32),
            Some(_) => self
                .0
                .iter()
                .zip(&q.0)
                .map(|(&a, &b)| ((a - b + 1)..=a).map(BigUint::from).product::<BigUint>())
                .product(),
        }
    }

    /// `z^p = z_1^{p_1} ... z_n^{p_n}`.
    pub fn monomial(&self, z: &[Complex64]) -> Complex64 {
        debug_assert_eq!(z.len(), self.len());
        self.0
            .iter()
            .zip(z)
            .fold(Complex64::new(1.0, 0.0), |acc, (&k, zi)| acc * zi.powu(k))
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<u32>> for MultiIndex {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        MultiIndex::new(parts)
    }
}

pub fn factorial(k: u32) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, j| acc * j)
}

/// `k!` rounded once to the nearest double (infinite beyond 170).
pub fn factorial_f64(k: u32) -> f64 {
    factorial(k).to_f64().unwrap_or(f64::INFINITY)
}

/// All indices of length `n` and total degree `k`, lexicographically descending.
///
/// The list has `C(k+n-1, n-1)` entries.
pub fn enumerate_indices(n: usize, k: u32) -> Vec<MultiIndex> {
    assert!(n >= 1, "dimension must be at least 1");
    let mut out = Vec::new();
    let mut buf = vec![0u32; n];
    fill(&mut buf, 0, k, &mut out);
    out
}

fn fill(buf: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<MultiIndex>) {
    if pos + 1 == buf.len() {
        buf[pos] = remaining;
        out.push(MultiIndex(buf.to_vec()));
        return;
    }
    for first in (0..=remaining).rev() {
        buf[pos] = first;
        fill(buf, pos + 1, remaining - first, out);
    }
}

/// All indices of length `n` with `|p| <= max_degree`, in graded order.
pub fn indices_up_to(n: usize, max_degree: u32) -> Vec<MultiIndex> {
    (0..=max_degree)
        .flat_map(|k| enumerate_indices(n, k))
        .collect()
}

/// `x (x-1) ... (x-m+1)`; one for `m = 0`.
pub fn falling_factorial(x: f64, m: u32) -> f64 {
    (0..m).map(|j| x - j as f64).product()
}

/// Residual of the two-variable multi-monomial identity
/// `prod_{j<k} (z1+z2-j) = k! sum_{|p|=k} [z1]_{p1} [z2]_{p2} / p!`,
/// where `[x]_j` is the falling factorial.
pub fn snomial_identity_residual(z1: f64, z2: f64, k: u32) -> f64 {
    let lhs = falling_factorial(z1 + z2, k);
    let kf = factorial(k);
    let rhs: f64 = enumerate_indices(2, k)
        .iter()
        .map(|p| {
            let (p1, p2) = (p.parts()[0], p.parts()[1]);
            let multinomial = (&kf / p.factorial()).to_f64().unwrap_or(f64::INFINITY);
            multinomial * falling_factorial(z1, p1) * falling_factorial(z2, p2)
        })
        .sum();
    (lhs - rhs).abs()
}

/// Residual of `sum_{|p|=k} z^p conj(w)^p / p! = <z,w>^k / k!`.
pub fn power_sum_residual(z: &[Complex64], w: &[Complex64], k: u32) -> Result<f64> {
    if z.len() != w.len() {
        return Err(Error::DimensionMismatch {
            expected: z.len(),
            found: w.len(),
        });
    }
    if z.is_empty() {
        return Err(Error::InvalidParameter("empty point".into()));
    }
    let wbar: Vec<Complex64> = w.iter().map(|x| x.conj()).collect();
    let lhs: ComplexSum = enumerate_indices(z.len(), k)
        .iter()
        .map(|p| p.monomial(z) * p.monomial(&wbar) / p.factorial_f64())
        .collect();
    let inner: Complex64 = z.iter().zip(w).map(|(a, b)| a * b.conj()).sum();
    let rhs = inner.powu(k) / factorial_f64(k);
    Ok((lhs.value() - rhs).norm())
}
