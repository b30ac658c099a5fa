//! Exponent-vector monomials and multidegree arithmetic.
//!
//! A monomial lives in a fixed ambient ring `K[x1..xn]`; the ambient variable
//! count is the length of its exponent vector. All comparisons use the
//! lexicographic order on exponent vectors, which is the fixed total order
//! used everywhere for deterministic output.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Set of variable indices (0-based). Displayed as `x1`, `x2`, ... externally.
pub type VarSet = BTreeSet<usize>;

/// Printable name of variable `i` (0-based index).
pub fn var_name(i: usize) -> String {
    format!("x{}", i + 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("ambient variable counts differ: {left} vs {right}")]
pub struct AmbientMismatch {
    pub left: usize,
    pub right: usize,
}

/// A monomial `x1^a1 * ... * xn^an`, stored as its exponent vector.
///
/// The derived `Ord` is lexicographic on exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    /// The unit monomial `1` in `n` variables.
    pub fn unit(n: usize) -> Self {
        Self { exps: vec![0; n] }
    }

    /// The variable `x_{i+1}` (0-based index `i`) in `n` variables.
    pub fn var(n: usize, i: usize) -> Self {
        assert!(i < n, "variable index {i} out of range for {n} variables");
        let mut exps = vec![0; n];
        exps[i] = 1;
        Self { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Sum of exponents.
    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> VarSet {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    fn check_ambient(&self, other: &Self) {
        assert_eq!(
            self.exps.len(),
            other.exps.len(),
            "ambient variable counts differ"
        );
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ambient(other);
        Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// True iff `self` divides `other` componentwise.
    pub fn divides(&self, other: &Self) -> bool {
        self.check_ambient(other);
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other` when the quotient is a monomial.
    pub fn try_div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        Some(Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Componentwise max — the least common multiple `[a, b]`.
    pub fn lcm(&self, other: &Self) -> Self {
        self.check_ambient(other);
        Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// Componentwise min — the greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        self.check_ambient(other);
        Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }
}

/// Least common multiple and greatest common divisor of a pair, with an
/// ambient-dimension check suitable for user-facing inputs.
pub fn lcm_gcd(a: &Monomial, b: &Monomial) -> Result<(Monomial, Monomial), AmbientMismatch> {
    if a.nvars() != b.nvars() {
        return Err(AmbientMismatch {
            left: a.nvars(),
            right: b.nvars(),
        });
    }
    Ok((a.lcm(b), a.gcd(b)))
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", var_name(i))?;
            } else {
                write!(f, "{}^{}", var_name(i), e)?;
            }
        }
        Ok(())
    }
}
