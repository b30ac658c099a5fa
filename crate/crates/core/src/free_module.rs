//! Multigraded free modules and homogeneous monomial matrices between them.

use std::collections::BTreeMap;

use crate::field::Field;
use crate::monomial::Monomial;

/// One basis element: an opaque label plus a multidegree shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElt {
    pub label: String,
    pub shift: Monomial,
}

impl BasisElt {
    pub fn new(label: impl Into<String>, shift: Monomial) -> Self {
        Self {
            label: label.into(),
            shift,
        }
    }
}

/// A free module with an ordered homogeneous basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModule {
    nvars: usize,
    basis: Vec<BasisElt>,
}

impl FreeModule {
    pub fn new(nvars: usize, basis: Vec<BasisElt>) -> Self {
        for b in &basis {
            assert_eq!(b.shift.nvars(), nvars, "shift in wrong ambient ring");
        }
        debug_assert!(
            {
                let mut labels: Vec<&str> = basis.iter().map(|b| b.label.as_str()).collect();
                labels.sort_unstable();
                labels.windows(2).all(|w| w[0] != w[1])
            },
            "basis labels must be unique within a module"
        );
        Self { nvars, basis }
    }

    /// Rank-one free module `S` with basis label `"1"`.
    pub fn ring(nvars: usize) -> Self {
        Self::new(nvars, vec![BasisElt::new("1", Monomial::unit(nvars))])
    }

    pub fn empty(nvars: usize) -> Self {
        Self {
            nvars,
            basis: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElt] {
        &self.basis
    }

    pub fn shift(&self, i: usize) -> &Monomial {
        &self.basis[i].shift
    }

    pub fn shifts(&self) -> impl Iterator<Item = &Monomial> {
        self.basis.iter().map(|b| &b.shift)
    }
}

/// One sparse entry of a monomial matrix: `coeff * x^mono`.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixEntry<F: Field> {
    pub coeff: F::Elem,
    pub mono: Monomial,
}

/// A homogeneous multigraded map between free modules, stored sparsely as
/// `(target index, source index) -> coeff * x^mono`.
///
/// Homogeneity requires `shift(source) = shift(target) * mono` for every
/// entry; this is checked by `ChainComplex::validate`, not at construction,
/// so that invalid maps can be built and reported.
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialMatrix<F: Field> {
    source: FreeModule,
    target: FreeModule,
    entries: BTreeMap<(usize, usize), MatrixEntry<F>>,
}

impl<F: Field> MonomialMatrix<F> {
    pub fn zero(source: FreeModule, target: FreeModule) -> Self {
        assert_eq!(source.nvars(), target.nvars());
        Self {
            source,
            target,
            entries: BTreeMap::new(),
        }
    }

    pub fn new(
        field: &F,
        source: FreeModule,
        target: FreeModule,
        entries: impl IntoIterator<Item = ((usize, usize), MatrixEntry<F>)>,
    ) -> Self {
        let mut m = Self::zero(source, target);
        for ((t, s), e) in entries {
            m.add_entry(field, t, s, e.coeff, e.mono);
        }
        m
    }

    pub fn source(&self) -> &FreeModule {
        &self.source
    }

    pub fn target(&self) -> &FreeModule {
        &self.target
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &MatrixEntry<F>)> {
        self.entries.iter()
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, target: usize, source: usize) -> Option<&MatrixEntry<F>> {
        self.entries.get(&(target, source))
    }

    /// Accumulate `coeff * x^mono` into entry `(target, source)`, dropping
    /// the entry if the coefficient cancels to zero.
    pub fn add_entry(&mut self, field: &F, target: usize, source: usize, coeff: F::Elem, mono: Monomial) {
        assert!(target < self.target.rank(), "target index out of range");
        assert!(source < self.source.rank(), "source index out of range");
        if field.is_zero(&coeff) {
            return;
        }
        match self.entries.entry((target, source)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(MatrixEntry { coeff, mono });
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                debug_assert_eq!(
                    o.get().mono,
                    mono,
                    "homogeneity forces a unique monomial per entry"
                );
                let sum = field.add(&o.get().coeff, &coeff);
                if field.is_zero(&sum) {
                    o.remove();
                } else {
                    o.get_mut().coeff = sum;
                }
            }
        }
    }

    /// First entry violating `shift(source) = shift(target) * mono`, if any.
    pub fn homogeneity_violation(&self) -> Option<(usize, usize)> {
        for (&(t, s), e) in &self.entries {
            let expected = self.target.shift(t).mul(&e.mono);
            if &expected != self.source.shift(s) {
                return Some((t, s));
            }
        }
        None
    }

    /// Symbolic composition `self . other` (apply `other` first).
    ///
    /// Coefficient-monomial products are accumulated exactly; for
    /// homogeneous factors every contribution to a fixed entry carries the
    /// same monomial, so cancellation is detected by coefficient sums.
    pub fn compose(&self, field: &F, other: &MonomialMatrix<F>) -> MonomialMatrix<F> {
        assert_eq!(self.source.rank(), other.target.rank(), "maps not composable");
        let mut out = MonomialMatrix::zero(other.source.clone(), self.target.clone());
        for (&(mid, s), e1) in &other.entries {
            for (&(t, mid2), e2) in self.entries.range((mid, 0)..(mid + 1, 0)) {
                debug_assert_eq!(mid2, mid);
                out.add_entry(
                    field,
                    t,
                    s,
                    field.mul(&e2.coeff, &e1.coeff),
                    e2.mono.mul(&e1.mono),
                );
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Render entries as `(target_label, source_label, coeff?, mono)` for
    /// diagnostics and tests.
    pub fn entry_monomials(&self) -> Vec<(String, String, Monomial)> {
        self.entries
            .iter()
            .map(|(&(t, s), e)| {
                (
                    self.target.basis()[t].label.clone(),
                    self.source.basis()[s].label.clone(),
                    e.mono.clone(),
                )
            })
            .collect()
    }
}

// Entries indexed by (target, source) are grouped by target row; this range
// helper is the row accessor used by compose and the minimizer.
pub(crate) fn row_range(t: usize) -> std::ops::Range<(usize, usize)> {
    (t, 0)..(t + 1, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn entry_accumulation_cancels() {
        let f = PrimeField::default_prime();
        let src = FreeModule::new(2, vec![BasisElt::new("a", mono(&[1, 0]))]);
        let tgt = FreeModule::ring(2);
        let mut m = MonomialMatrix::zero(src, tgt);
        m.add_entry(&f, 0, 0, 1, mono(&[1, 0]));
        m.add_entry(&f, 0, 0, f.neg(&1), mono(&[1, 0]));
        assert!(m.is_zero());
    }

    #[test]
    fn homogeneity_violation_detected() {
        let f = PrimeField::default_prime();
        let src = FreeModule::new(2, vec![BasisElt::new("a", mono(&[1, 0]))]);
        let tgt = FreeModule::ring(2);
        let mut m = MonomialMatrix::zero(src.clone(), tgt.clone());
        m.add_entry(&f, 0, 0, 1, mono(&[0, 1])); // wrong: shift quotient is x1
        assert_eq!(m.homogeneity_violation(), Some((0, 0)));
        let mut ok = MonomialMatrix::zero(src, tgt);
        ok.add_entry(&f, 0, 0, 1, mono(&[1, 0]));
        assert_eq!(ok.homogeneity_violation(), None);
    }

    #[test]
    fn compose_tracks_monomials() {
        let f = PrimeField::default_prime();
        let a = FreeModule::new(1, vec![BasisElt::new("a", mono(&[2]))]);
        let b = FreeModule::new(1, vec![BasisElt::new("b", mono(&[1]))]);
        let c = FreeModule::ring(1);
        let mut d1 = MonomialMatrix::zero(b.clone(), c);
        d1.add_entry(&f, 0, 0, 1, mono(&[1]));
        let mut d2 = MonomialMatrix::zero(a, b);
        d2.add_entry(&f, 0, 0, 1, mono(&[1]));
        let comp = d1.compose(&f, &d2);
        assert_eq!(comp.num_entries(), 1);
        assert_eq!(comp.get(0, 0).unwrap().mono, mono(&[2]));
    }
}
