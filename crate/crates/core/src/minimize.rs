//! Minimalization of chain complexes by unit-entry cancellation.
//!
//! Repeatedly pick a differential entry with unit monomial (hence an
//! invertible coefficient times a degree-zero map), and cancel its
//! row/column pair by the two-term Gaussian reduction: for a unit entry
//! `a : <s> -> <t>` of `d_i`, the surviving block of `d_i` is updated by
//! `delta - gamma a^{-1} beta`, the `s`-row of `d_{i+1}` and the `t`-column
//! of `d_{i-1}` are dropped, and everything else is unchanged. The result is
//! homotopy equivalent to the input and has no unit entries left.
//!
//! Cancellation order: lowest homological index first, then ascending
//! (target, source) entry order; output bases keep their original relative
//! order, so the result is canonical.

use std::collections::BTreeMap;

use crate::complex::ChainComplex;
use crate::field::Field;
use crate::free_module::{BasisElt, FreeModule, MonomialMatrix};
use crate::monomial::Monomial;

struct Work<F: Field> {
    field: F,
    nvars: usize,
    alive: Vec<Vec<bool>>,
    basis: Vec<Vec<BasisElt>>,
    // diffs[k]: entries of d_{k+1} keyed by (target, source) original indices
    diffs: Vec<BTreeMap<(usize, usize), (F::Elem, Monomial)>>,
}

impl<F: Field> Work<F> {
    fn next_unit(&self) -> Option<(usize, usize, usize)> {
        for (k, d) in self.diffs.iter().enumerate() {
            for (&(t, s), (_, mono)) in d {
                if mono.is_unit() {
                    return Some((k, t, s));
                }
            }
        }
        None
    }

    fn cancel(&mut self, k: usize, t: usize, s: usize) {
        let field = self.field.clone();
        let (a, _) = self.diffs[k].remove(&(t, s)).expect("entry exists");
        let a_inv = field.inv(&a).expect("stored coefficients are nonzero");

        // row t (other sources hitting t) and column s (other targets of s)
        let row: Vec<(usize, (F::Elem, Monomial))> = self.diffs[k]
            .range((t, 0)..(t + 1, 0))
            .map(|(&(_, s2), e)| (s2, e.clone()))
            .collect();
        let col: Vec<(usize, (F::Elem, Monomial))> = self.diffs[k]
            .iter()
            .filter(|(&(_, s2), _)| s2 == s)
            .map(|(&(t2, _), e)| (t2, e.clone()))
            .collect();

        for (t2, (gc, gm)) in &col {
            for (s2, (bc, bm)) in &row {
                let upd = field.neg(&field.mul(&field.mul(gc, bc), &a_inv));
                let mono = gm.mul(bm);
                let entry = self.diffs[k].entry((*t2, *s2));
                match entry {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        if !field.is_zero(&upd) {
                            v.insert((upd, mono));
                        }
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        debug_assert_eq!(o.get().1, mono, "homogeneity fixes the fill-in monomial");
                        let sum = field.add(&o.get().0, &upd);
                        if field.is_zero(&sum) {
                            o.remove();
                        } else {
                            o.get_mut().0 = sum;
                        }
                    }
                }
            }
        }

        // drop the cancelled row and column of d_{k+1}
        self.diffs[k].retain(|&(t2, s2), _| t2 != t && s2 != s);
        // drop the s-row of d_{k+2} and the t-column of d_k
        if k + 1 < self.diffs.len() {
            self.diffs[k + 1].retain(|&(t2, _), _| t2 != s);
        }
        if k > 0 {
            self.diffs[k - 1].retain(|&(_, s2), _| s2 != t);
        }
        self.alive[k][t] = false;
        self.alive[k + 1][s] = false;
    }

    fn into_complex(self) -> ChainComplex<F> {
        let field = self.field;
        // reindex surviving basis elements
        let mut new_index: Vec<BTreeMap<usize, usize>> = Vec::new();
        let mut terms: Vec<FreeModule> = Vec::new();
        for (alive, basis) in self.alive.iter().zip(&self.basis) {
            let mut map = BTreeMap::new();
            let mut kept = Vec::new();
            for (old, b) in basis.iter().enumerate() {
                if alive[old] {
                    map.insert(old, kept.len());
                    kept.push(b.clone());
                }
            }
            new_index.push(map);
            terms.push(FreeModule::new(self.nvars, kept));
        }
        // trim trailing zero terms (keep index 0 when anything is alive)
        let mut top = terms.len();
        while top > 0 && terms[top - 1].rank() == 0 {
            top -= 1;
        }
        terms.truncate(top);
        let mut diffs = Vec::new();
        for k in 0..terms.len().saturating_sub(1) {
            let mut d = MonomialMatrix::zero(terms[k + 1].clone(), terms[k].clone());
            for (&(t, s), (coeff, mono)) in &self.diffs[k] {
                let nt = new_index[k][&t];
                let ns = new_index[k + 1][&s];
                d.add_entry(&field, nt, ns, coeff.clone(), mono.clone());
            }
            diffs.push(d);
        }
        ChainComplex::new(field, self.nvars, terms, diffs)
            .expect("reindexed endpoints are consistent")
    }
}

/// A homotopy-equivalent complex with no unit-monomial entries. For an
/// acyclic input this is the minimal free resolution of its `H_0`, and basis
/// counts per (index, shift) equal the Betti numbers.
pub fn minimalize<F: Field>(c: &ChainComplex<F>) -> ChainComplex<F> {
    let mut work = Work {
        field: c.field().clone(),
        nvars: c.nvars(),
        alive: c.terms().iter().map(|t| vec![true; t.rank()]).collect(),
        basis: c.terms().iter().map(|t| t.basis().to_vec()).collect(),
        diffs: (1..=c.length())
            .map(|i| {
                c.diff(i)
                    .entries()
                    .map(|(&(t, s), e)| ((t, s), (e.coeff.clone(), e.mono.clone())))
                    .collect()
            })
            .collect(),
    };
    while let Some((k, t, s)) = work.next_unit() {
        work.cancel(k, t, s);
    }
    work.into_complex()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::betti_numbers;
    use crate::complex::acyclic_witness;
    use crate::field::PrimeField;
    use crate::parse::parse_ideal_str;
    use crate::taylor::{betti_of_minimal, taylor_complex, TaylorMode};

    fn gf() -> PrimeField {
        PrimeField::default_prime()
    }

    #[test]
    fn already_minimal_is_fixpoint() {
        let i = parse_ideal_str("x1, x2", 2).unwrap();
        let t = taylor_complex(&gf(), &i, TaylorMode::Quotient, 16).unwrap();
        let m = minimalize(&t);
        assert_eq!(m, t);
    }

    #[test]
    fn collapses_unit_pair_to_zero_complex() {
        // 0 -> S -> S -> 0 with the identity differential
        use crate::free_module::{FreeModule, MonomialMatrix};
        let f = gf();
        let c0 = FreeModule::ring(1);
        let c1 = FreeModule::ring(1);
        let mut d = MonomialMatrix::zero(c1.clone(), c0.clone());
        d.add_entry(&f, 0, 0, 1, Monomial::unit(1));
        let c = ChainComplex::new(f, 1, vec![c0, c1], vec![d]).unwrap();
        let m = minimalize(&c);
        assert!(m.terms().is_empty());
    }

    #[test]
    fn taylor_of_power_square_collapses() {
        let i = parse_ideal_str("x1^2, x1*x2, x2^2", 2).unwrap();
        let t = taylor_complex(&gf(), &i, TaylorMode::Quotient, 16).unwrap();
        let m = minimalize(&t);
        assert_eq!(m.ranks(), vec![1, 3, 2]);
        assert!(m.validate().is_ok());
        assert_eq!(acyclic_witness(&m).unwrap(), None);
        // no unit entries remain
        for k in 1..=m.length() {
            assert!(m.diff(k).entries().all(|(_, e)| !e.mono.is_unit()));
        }
        assert_eq!(betti_of_minimal(&m), betti_numbers(&t).unwrap());
    }

    #[test]
    fn minimalization_preserves_betti_numbers() {
        for src in ["x1^2, x1*x2", "x1*x2, x2*x3, x1*x3", "x1^3, x1^2*x2, x2^2"] {
            let i = parse_ideal_str(src, 3).unwrap();
            let t = taylor_complex(&gf(), &i, TaylorMode::Quotient, 16).unwrap();
            let m = minimalize(&t);
            assert!(m.validate().is_ok());
            assert_eq!(
                betti_numbers(&t).unwrap(),
                betti_numbers(&m).unwrap(),
                "ideal {src}"
            );
        }
    }
}
