//! Monomial ideals represented by their minimal generating set.
//!
//! Every constructor minimalizes: no generator divides another, no
//! duplicates, and generators are kept sorted in lexicographic order so all
//! downstream output is deterministic. The zero ideal is the empty generator
//! set; the unit ideal is generated by `1`.

use std::fmt;

use crate::monomial::{AmbientMismatch, Monomial, VarSet};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// Inclusion-minimal subset of `ms` under divisibility, sorted and deduped.
pub fn minimal_generators(nvars: usize, ms: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
    let mut gens: Vec<Monomial> = ms.into_iter().collect();
    for g in &gens {
        assert_eq!(g.nvars(), nvars, "generator in wrong ambient ring");
    }
    gens.sort();
    gens.dedup();
    let mut keep: Vec<Monomial> = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        let redundant = gens
            .iter()
            .enumerate()
            .any(|(j, h)| j != i && h.divides(g) && (h != g || j < i));
        if !redundant {
            keep.push(g.clone());
        }
    }
    MonomialIdeal { nvars, gens: keep }
}

/// Variable indices dividing some member of `shifts`; empty when all members
/// are the unit monomial (elements of degree zero).
pub fn gens_set(shifts: &[Monomial]) -> VarSet {
    let mut vars = VarSet::new();
    for m in shifts {
        vars.extend(m.support());
    }
    vars
}

impl MonomialIdeal {
    /// Build from an arbitrary generating set; minimalizes.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        minimal_generators(nvars, gens)
    }

    /// The zero ideal (no generators).
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            gens: Vec::new(),
        }
    }

    /// The unit ideal `(1)`.
    pub fn unit(nvars: usize) -> Self {
        Self {
            nvars,
            gens: vec![Monomial::unit(nvars)],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    fn check_ambient(&self, other: &Self) -> Result<(), AmbientMismatch> {
        if self.nvars != other.nvars {
            return Err(AmbientMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    /// True iff some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        assert_eq!(m.nvars(), self.nvars, "monomial in wrong ambient ring");
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Variables appearing in the minimal generating set.
    pub fn gens_vars(&self) -> VarSet {
        gens_set(&self.gens)
    }

    pub fn sum(&self, other: &Self) -> Result<Self, AmbientMismatch> {
        self.check_ambient(other)?;
        Ok(minimal_generators(
            self.nvars,
            self.gens.iter().chain(&other.gens).cloned(),
        ))
    }

    pub fn product(&self, other: &Self) -> Result<Self, AmbientMismatch> {
        self.check_ambient(other)?;
        let prods = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.mul(b)));
        Ok(minimal_generators(self.nvars, prods))
    }

    /// Intersection via pairwise lcms. Valid for monomial ideals only.
    pub fn intersection(&self, other: &Self) -> Result<Self, AmbientMismatch> {
        self.check_ambient(other)?;
        let lcms = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)));
        Ok(minimal_generators(self.nvars, lcms))
    }

    /// The restriction ideal generated by `[u, g]/g` over generators `u`.
    pub fn restriction(&self, g_shift: &Monomial) -> Self {
        assert_eq!(g_shift.nvars(), self.nvars);
        let quots = self.gens.iter().map(|u| {
            u.lcm(g_shift)
                .try_div(g_shift)
                .expect("lcm is divisible by its argument")
        });
        minimal_generators(self.nvars, quots)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal_str;

    fn ideal(n: usize, s: &str) -> MonomialIdeal {
        parse_ideal_str(s, n).unwrap()
    }

    #[test]
    fn minimalization_drops_multiples() {
        // {x1^2, x1^2*x2, x3} -> {x1^2, x3}
        let i = ideal(3, "x1^2, x1^2*x2, x3");
        assert_eq!(i, ideal(3, "x1^2, x3"));
        assert_eq!(i.num_gens(), 2);
    }

    #[test]
    fn minimalization_singleton_and_idempotent() {
        let i = ideal(2, "x1*x2");
        assert_eq!(i.num_gens(), 1);
        let again = MonomialIdeal::new(2, i.gens().to_vec());
        assert_eq!(again, i);
    }

    #[test]
    fn unit_monomial_absorbs() {
        let i = MonomialIdeal::new(2, vec![Monomial::unit(2), Monomial::var(2, 0)]);
        assert!(i.is_unit());
    }

    #[test]
    fn counterexample_product_has_eight_degree_four_generators() {
        let i = ideal(4, "x2, x3");
        let j = ideal(4, "x1^2*x2, x1*x2*x3, x2*x3*x4, x3*x4^2");
        let ij = i.product(&j).unwrap();
        assert_eq!(ij.num_gens(), 8);
        assert!(ij.gens().iter().all(|g| g.total_degree() == 4));
    }

    #[test]
    fn intersection_disjoint_variables() {
        let a = ideal(2, "x1");
        let b = ideal(2, "x2");
        let cap = a.intersection(&b).unwrap();
        assert_eq!(cap, ideal(2, "x1*x2"));
        assert_eq!(cap, a.product(&b).unwrap());
    }

    #[test]
    fn intersection_overlapping() {
        let a = ideal(4, "x2, x3");
        let b = ideal(4, "x3, x4");
        assert_eq!(a.intersection(&b).unwrap(), ideal(4, "x3, x2*x4"));
    }

    #[test]
    fn contains_examples() {
        let i = ideal(3, "x1^2, x3");
        assert!(i.contains(&ideal(3, "x1^2*x2").gens()[0]));
        assert!(!i.contains(&ideal(3, "x1*x2").gens()[0]));
        let zero = MonomialIdeal::zero(3);
        assert!(!zero.contains(&Monomial::var(3, 0)));
    }

    #[test]
    fn gens_set_examples() {
        let i = ideal(4, "x2, x3");
        assert_eq!(i.gens_vars(), VarSet::from([1, 2]));
        let j = ideal(4, "x1^2*x2, x1*x2*x3, x2*x3*x4, x3*x4^2");
        assert_eq!(j.gens_vars(), VarSet::from([0, 1, 2, 3]));
        assert_eq!(gens_set(&[Monomial::unit(4)]), VarSet::new());
    }

    #[test]
    fn restriction_examples() {
        // ((x1^2), g = x1*x2) -> (x1)
        let i = ideal(2, "x1^2");
        let g = ideal(2, "x1*x2").gens()[0].clone();
        assert_eq!(i.restriction(&g), ideal(2, "x1"));
        // identity shift
        let j = ideal(2, "x1^2, x1*x2");
        assert_eq!(j.restriction(&Monomial::unit(2)), j);
        // ((x1*x2), g = x1*x2) -> (1)
        let k = ideal(2, "x1*x2");
        let g = k.gens()[0].clone();
        assert!(k.restriction(&g).is_unit());
    }

    #[test]
    fn product_inside_intersection() {
        let a = ideal(3, "x1*x2, x2^2");
        let b = ideal(3, "x2*x3, x1^2");
        let prod = a.product(&b).unwrap();
        let cap = a.intersection(&b).unwrap();
        for g in prod.gens() {
            assert!(cap.contains(g));
        }
    }

    #[test]
    fn zero_ideal_arithmetic() {
        let z = MonomialIdeal::zero(2);
        let a = ideal(2, "x1");
        assert_eq!(z.sum(&a).unwrap(), a);
        assert!(z.product(&a).unwrap().is_zero());
        assert!(z.intersection(&a).unwrap().is_zero());
        assert_eq!(format!("{z}"), "0");
    }
}
