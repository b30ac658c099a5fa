//! Betti tables: multigraded homology dimensions, regularity, projective
//! dimension, and the JSON emission format.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::json;

use crate::complex::{acyclic_witness, ChainComplex, ComplexError};
use crate::field::Field;
use crate::matrix::DenseMatrix;
use crate::monomial::Monomial;

/// Mapping `(homological index, multidegree) -> dimension`, zeros omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    field_name: String,
    entries: BTreeMap<(usize, Monomial), usize>,
}

impl BettiTable {
    pub fn new(field_name: String) -> Self {
        Self {
            field_name,
            entries: BTreeMap::new(),
        }
    }

    pub fn field_name(&self) -> &str {
        &self.field_name
    }

    pub fn add(&mut self, i: usize, degree: Monomial, dim: usize) {
        if dim == 0 {
            return;
        }
        *self.entries.entry((i, degree)).or_insert(0) += dim;
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, Monomial), &usize)> {
        self.entries.iter()
    }

    pub fn get(&self, i: usize, degree: &Monomial) -> usize {
        self.entries.get(&(i, degree.clone())).copied().unwrap_or(0)
    }

    /// Total dimension at homological index `i` (sum over multidegrees).
    pub fn rank_at(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((j, _), _)| *j == i)
            .map(|(_, d)| d)
            .sum()
    }

    /// Aggregate to (index, total degree) -> dimension.
    pub fn by_total_degree(&self) -> BTreeMap<(usize, u32), usize> {
        let mut out = BTreeMap::new();
        for ((i, b), d) in &self.entries {
            *out.entry((*i, b.total_degree())).or_insert(0) += d;
        }
        out
    }

    /// Projective dimension: largest homological index present.
    pub fn pd(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// Castelnuovo-Mumford regularity: max of (total degree - index) over
    /// the table, using total degrees of the multigraded shifts.
    pub fn reg(&self) -> Option<i64> {
        self.entries
            .keys()
            .map(|(i, b)| b.total_degree() as i64 - *i as i64)
            .max()
    }

    /// Shift every homological index up by `k` (quotient bookkeeping).
    pub fn shifted(&self, k: usize) -> BettiTable {
        let mut out = BettiTable::new(self.field_name.clone());
        for ((i, b), d) in &self.entries {
            out.add(i + k, b.clone(), *d);
        }
        out
    }

    /// Table of `S/I` from the table of the ideal `I`: β_0 = 1 in degree
    /// zero and β_{i+1}(S/I) = β_i(I).
    pub fn quotient_from_ideal(&self, nvars: usize) -> BettiTable {
        let mut out = self.shifted(1);
        out.add(0, Monomial::unit(nvars), 1);
        out
    }

    /// JSON per the fixed schema: entries sorted by (i, total, multidegree).
    pub fn to_json(&self) -> serde_json::Value {
        let mut rows: Vec<(&usize, &Monomial, &usize)> = self
            .entries
            .iter()
            .map(|((i, b), d)| (i, b, d))
            .collect();
        rows.sort_by_key(|(i, b, _)| (**i, b.total_degree(), (*b).clone()));
        json!({
            "field": self.field_name,
            "entries": rows
                .iter()
                .map(|(i, b, d)| {
                    json!({
                        "i": i,
                        "multidegree": b.exps(),
                        "total": b.total_degree(),
                        "dim": d,
                    })
                })
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field: {}", self.field_name)?;
        writeln!(f, "{:>3} {:>6} {:<16} {:>4}", "i", "total", "multidegree", "dim")?;
        let mut rows: Vec<(&usize, &Monomial, &usize)> = self
            .entries
            .iter()
            .map(|((i, b), d)| (i, b, d))
            .collect();
        rows.sort_by_key(|(i, b, _)| (**i, b.total_degree(), (*b).clone()));
        for (i, b, d) in rows {
            writeln!(f, "{:>3} {:>6} {:<16} {:>4}", i, b.total_degree(), b.to_string(), d)?;
        }
        Ok(())
    }
}

/// Regularity and projective dimension of a nonempty table. The
/// `reg_shift` adjusts between module conventions at the call site
/// (`Reg(I) = Reg(S/I) + 1`); pass 0 when the table already belongs to the
/// module in question.
pub fn reg_pd(table: &BettiTable, reg_shift: i64) -> Option<(i64, usize)> {
    Some((table.reg()? + reg_shift, table.pd()?))
}

/// Betti numbers of the module resolved by an acyclic complex `c`, computed
/// as degreewise homology of `c ⊗ K`: only unit-monomial entries survive,
/// basis elements are grouped by exact shift, and homology is taken per
/// (index, shift) block.
///
/// Errors if `c` is not acyclic — the table would be meaningless.
pub fn betti_numbers<F: Field>(c: &ChainComplex<F>) -> Result<BettiTable, ComplexError> {
    if let Some(w) = acyclic_witness(c)? {
        return Err(ComplexError::NotAcyclic(w));
    }
    Ok(betti_numbers_unchecked(c))
}

/// The `c ⊗ K` computation without the acyclicity gate; callers must know
/// `c` resolves its `H_0` (Taylor complexes do by construction).
pub fn betti_numbers_unchecked<F: Field>(c: &ChainComplex<F>) -> BettiTable {
    let field = c.field();
    let mut table = BettiTable::new(field.name());
    // indices of basis elements per (term, shift)
    let groups: Vec<BTreeMap<&Monomial, Vec<usize>>> = c
        .terms()
        .iter()
        .map(|t| {
            let mut g: BTreeMap<&Monomial, Vec<usize>> = BTreeMap::new();
            for (idx, b) in t.basis().iter().enumerate() {
                g.entry(&b.shift).or_default().push(idx);
            }
            g
        })
        .collect();

    // unit-entry block between (i, b) groups of adjacent terms
    let unit_block = |i: usize, b: &Monomial| -> DenseMatrix<F> {
        let rows = groups[i - 1].get(b).map(Vec::as_slice).unwrap_or(&[]);
        let cols = groups[i].get(b).map(Vec::as_slice).unwrap_or(&[]);
        let mut m = DenseMatrix::zeros(field, rows.len(), cols.len());
        let row_pos: BTreeMap<usize, usize> =
            rows.iter().enumerate().map(|(p, &x)| (x, p)).collect();
        for (cpos, &s) in cols.iter().enumerate() {
            for (&(t, s2), e) in c.diff(i).entries() {
                if s2 == s && e.mono.is_unit() {
                    if let Some(&rpos) = row_pos.get(&t) {
                        m.set(rpos, cpos, e.coeff.clone());
                    }
                }
            }
        }
        m
    };

    for (i, group) in groups.iter().enumerate() {
        for (b, indices) in group {
            let m = indices.len();
            let r_out = if i >= 1 {
                unit_block(i, b).rank(field)
            } else {
                0
            };
            let r_in = if i < c.length() {
                unit_block(i + 1, b).rank(field)
            } else {
                0
            };
            table.add(i, (*b).clone(), m - r_out - r_in);
        }
    }
    table
}
