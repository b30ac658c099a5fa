//! Taylor resolutions of monomial ideals.
//!
//! The term of homological index `i` has one basis element per `i`-subset of
//! the (sorted) minimal generators, with shift the lcm of the subset. The
//! differential is the simplicial boundary weighted by lcm quotients; the
//! square is zero by construction and the complex resolves `S/I` (or `I`
//! itself in ideal mode, where the rank-one tail is dropped and indices
//! shift down by one).

use thiserror::Error;

use crate::betti::BettiTable;
use crate::complex::{ChainComplex, ComplexError};
use crate::field::Field;
use crate::free_module::{BasisElt, FreeModule, MonomialMatrix};
use crate::ideal::MonomialIdeal;
use crate::minimize::minimalize;
use crate::monomial::Monomial;

/// Default cap on generator counts: `2^16` basis elements.
pub const DEFAULT_MAX_GENS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error(
    "ideal has {gens} generators; the Taylor complex would have 2^{gens} basis elements, \
     exceeding the cap of {cap} generators"
)]
pub struct TaylorCapExceeded {
    pub gens: usize,
    pub cap: usize,
}

/// Whether to resolve the quotient `S/I` or the ideal `I` itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TaylorMode {
    Quotient,
    Ideal,
}

/// All `k`-subsets of `0..m` in colexicographic order.
pub(crate) fn subsets_colex(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, k: usize, out: &mut Vec<Vec<usize>>, acc: &mut Vec<usize>) {
        if k == 0 {
            out.push(acc.clone());
            return;
        }
        // colex: the largest element varies slowest
        for top in (k - 1)..m {
            acc.push(top);
            rec(top, k - 1, out, acc);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    let mut acc = Vec::new();
    rec(m, k, &mut out, &mut acc);
    for s in &mut out {
        s.reverse();
    }
    out
}

fn subset_label(subset: &[usize]) -> String {
    let parts: Vec<String> = subset.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn subset_lcm(nvars: usize, gens: &[Monomial], subset: &[usize]) -> Monomial {
    subset
        .iter()
        .fold(Monomial::unit(nvars), |acc, &i| acc.lcm(&gens[i]))
}

/// Construct the Taylor complex of `ideal`.
pub fn taylor_complex<F: Field>(
    field: &F,
    ideal: &MonomialIdeal,
    mode: TaylorMode,
    max_gens: usize,
) -> Result<ChainComplex<F>, TaylorCapExceeded> {
    let m = ideal.num_gens();
    if m > max_gens {
        return Err(TaylorCapExceeded {
            gens: m,
            cap: max_gens,
        });
    }
    let n = ideal.nvars();
    let gens = ideal.gens();

    // cardinalities of subsets per homological index
    let cards: Vec<usize> = match mode {
        TaylorMode::Quotient => (0..=m).collect(),
        TaylorMode::Ideal => (1..=m).collect(),
    };
    let subset_lists: Vec<Vec<Vec<usize>>> =
        cards.iter().map(|&k| subsets_colex(m, k)).collect();
    let terms: Vec<FreeModule> = subset_lists
        .iter()
        .map(|subsets| {
            FreeModule::new(
                n,
                subsets
                    .iter()
                    .map(|s| BasisElt::new(subset_label(s), subset_lcm(n, gens, s)))
                    .collect(),
            )
        })
        .collect();

    let mut diffs = Vec::new();
    for i in 1..terms.len() {
        let source = terms[i].clone();
        let target = terms[i - 1].clone();
        let target_index: std::collections::HashMap<&[usize], usize> = subset_lists[i - 1]
            .iter()
            .enumerate()
            .map(|(idx, s)| (s.as_slice(), idx))
            .collect();
        let mut d = MonomialMatrix::zero(source, target);
        for (s_idx, subset) in subset_lists[i].iter().enumerate() {
            let u_t = subset_lcm(n, gens, subset);
            for (pos, &j) in subset.iter().enumerate() {
                let reduced: Vec<usize> = subset
                    .iter()
                    .copied()
                    .filter(|&x| x != j)
                    .collect();
                let t_idx = target_index[reduced.as_slice()];
                let u_r = subset_lcm(n, gens, &reduced);
                let mono = u_t.try_div(&u_r).expect("subset lcm divides superset lcm");
                let coeff = if pos % 2 == 0 {
                    field.one()
                } else {
                    field.neg(&field.one())
                };
                d.add_entry(field, t_idx, s_idx, coeff, mono);
            }
        }
        diffs.push(d);
    }

    Ok(ChainComplex::new(field.clone(), n, terms, diffs)
        .expect("construction produces consistent endpoints"))
}

/// Minimal free resolution: the Taylor complex with all unit entries
/// cancelled. Basis counts per (index, shift) are the Betti numbers.
pub fn resolve<F: Field>(
    field: &F,
    ideal: &MonomialIdeal,
    mode: TaylorMode,
    max_gens: usize,
) -> Result<ChainComplex<F>, TaylorCapExceeded> {
    Ok(minimalize(&taylor_complex(field, ideal, mode, max_gens)?))
}

/// Betti table of the module resolved by a minimal complex: plain basis
/// counts per (homological index, shift).
pub fn betti_of_minimal<F: Field>(c: &ChainComplex<F>) -> BettiTable {
    let mut table = BettiTable::new(c.field().name());
    for (i, t) in c.terms().iter().enumerate() {
        for b in t.basis() {
            table.add(i, b.shift.clone(), 1);
        }
    }
    table
}

/// Convenience: Betti table of `ideal` (or its quotient) from the minimal
/// resolution obtained by cancelling the Taylor complex.
pub fn minimal_betti<F: Field>(
    field: &F,
    ideal: &MonomialIdeal,
    mode: TaylorMode,
    max_gens: usize,
) -> Result<BettiTable, TaylorCapExceeded> {
    Ok(betti_of_minimal(&resolve(field, ideal, mode, max_gens)?))
}

/// Validate-and-scan helper used in tests.
pub fn taylor_is_resolution<F: Field>(c: &ChainComplex<F>) -> Result<bool, ComplexError> {
    Ok(crate::complex::acyclic_witness(c)?.is_none())
}
