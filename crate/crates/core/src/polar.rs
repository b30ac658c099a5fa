//! Standard polarization of monomial ideals.
//!
//! Each power `x_i^e` in a generator is replaced by a product of `e` fresh
//! variables `x_{i,1} ... x_{i,e}`; the result is squarefree and has the same
//! graded Betti numbers in total degree. The map back records which new
//! variable specializes to which original one.

use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Describes the variable layout of a polarized ring.
///
/// New variable `k` (0-based) specializes to original variable
/// `origin[k]`. Slots for each original variable are contiguous: variable
/// `i` with maximal exponent `e_i` across the generators owns
/// `max(e_i, 1)` consecutive slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarizationMap {
    nvars_original: usize,
    origin: Vec<usize>,
    first_slot: Vec<usize>,
}

impl PolarizationMap {
    pub fn nvars_original(&self) -> usize {
        self.nvars_original
    }

    pub fn nvars_polarized(&self) -> usize {
        self.origin.len()
    }

    /// Original variable index for polarized variable `k`.
    pub fn origin_of(&self, k: usize) -> usize {
        self.origin[k]
    }

    /// Substitute `x_{i,j} -> x_i`, mapping a polarized monomial back.
    pub fn specialize(&self, m: &Monomial) -> Monomial {
        assert_eq!(m.nvars(), self.origin.len());
        let mut exps = vec![0u32; self.nvars_original];
        for (k, &e) in m.exps().iter().enumerate() {
            exps[self.origin[k]] += e;
        }
        Monomial::new(exps)
    }
}

/// Polarize `ideal`: returns the squarefree ideal in the enlarged ring and
/// the descriptor mapping new variables back to old ones.
pub fn polarize(ideal: &MonomialIdeal) -> (MonomialIdeal, PolarizationMap) {
    let n = ideal.nvars();
    let mut max_exp = vec![0u32; n];
    for g in ideal.gens() {
        for (i, &e) in g.exps().iter().enumerate() {
            max_exp[i] = max_exp[i].max(e);
        }
    }
    let mut origin = Vec::new();
    let mut first_slot = Vec::with_capacity(n);
    for (i, &e) in max_exp.iter().enumerate() {
        first_slot.push(origin.len());
        for _ in 0..e.max(1) {
            origin.push(i);
        }
    }
    let map = PolarizationMap {
        nvars_original: n,
        origin,
        first_slot,
    };
    let np = map.nvars_polarized();
    let gens = ideal.gens().iter().map(|g| {
        let mut exps = vec![0u32; np];
        for (i, &e) in g.exps().iter().enumerate() {
            for j in 0..e {
                exps[map.first_slot[i] + j as usize] = 1;
            }
        }
        Monomial::new(exps)
    });
    (MonomialIdeal::new(np, gens), map)
}

/// Substitute all polarized variables back; regenerates the original ideal.
pub fn depolarize(ideal: &MonomialIdeal, map: &PolarizationMap) -> MonomialIdeal {
    MonomialIdeal::new(
        map.nvars_original(),
        ideal.gens().iter().map(|g| map.specialize(g)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal_str;

    fn ideal(n: usize, s: &str) -> MonomialIdeal {
        parse_ideal_str(s, n).unwrap()
    }

    #[test]
    fn single_power() {
        // (x1^2) -> (x_{1,1} x_{1,2})
        let (p, map) = polarize(&ideal(1, "x1^2"));
        assert_eq!(p.nvars(), 2);
        assert_eq!(p.gens(), &[Monomial::new(vec![1, 1])]);
        assert_eq!(map.origin_of(0), 0);
        assert_eq!(map.origin_of(1), 0);
    }

    #[test]
    fn mixed_powers() {
        // (x1^2, x1*x2) -> (x_{1,1}x_{1,2}, x_{1,1}x_{2,1})
        let (p, _) = polarize(&ideal(2, "x1^2, x1*x2"));
        assert_eq!(p.nvars(), 3);
        let gens: Vec<_> = p.gens().to_vec();
        assert!(gens.contains(&Monomial::new(vec![1, 1, 0])));
        assert!(gens.contains(&Monomial::new(vec![1, 0, 1])));
    }

    #[test]
    fn squarefree_fixpoint() {
        let i = ideal(3, "x1*x2, x2*x3");
        let (p, map) = polarize(&i);
        assert_eq!(p.nvars(), 3);
        assert_eq!(depolarize(&p, &map), i);
    }

    #[test]
    fn round_trip() {
        let i = ideal(3, "x1^3*x2, x2^2*x3, x3^2");
        let (p, map) = polarize(&i);
        assert!(p.gens().iter().all(|g| g.exps().iter().all(|&e| e <= 1)));
        assert_eq!(depolarize(&p, &map), i);
    }
}
