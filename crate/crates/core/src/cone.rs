//! Resolutions of quotient modules `U/V` of monomial ideals via mapping
//! cones.
//!
//! For nested monomial ideals `V ⊆ U` there is a comparison chain map
//! between their Taylor complexes: send each generator `w` of `V` to
//! `(w / u) e_u` for the first generator `u` of `U` dividing it, and extend
//! over subsets simplicially (repeated images die, injective ones pick up
//! the sorting sign and the lcm quotient). The mapping cone of that lift of
//! the inclusion is a free resolution of `U/V`; minimalizing it yields the
//! Betti table, regularity, and projective dimension of the quotient
//! module. The chain-map identity is verified symbolically at construction.

use thiserror::Error;

use crate::betti::BettiTable;
use crate::complex::ChainComplex;
use crate::field::Field;
use crate::free_module::{BasisElt, FreeModule, MonomialMatrix};
use crate::ideal::MonomialIdeal;
use crate::minimize::minimalize;
use crate::monomial::Monomial;
use crate::taylor::{betti_of_minimal, taylor_complex, TaylorCapExceeded, TaylorMode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error("{0}")]
    Cap(#[from] TaylorCapExceeded),
    #[error("inner ideal is not contained in the outer ideal (generator {0})")]
    NotContained(String),
}

fn subset_lcm(nvars: usize, gens: &[Monomial], subset: &[usize]) -> Monomial {
    subset
        .iter()
        .fold(Monomial::unit(nvars), |acc, &i| acc.lcm(&gens[i]))
}

/// Sign of the permutation sorting `xs`, or `None` on repeats.
fn sort_sign(xs: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = xs.to_vec();
    let mut swaps = 0usize;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, swaps % 2 == 1))
}

/// Comparison chain map `T(V) -> T(U)` (ideal-mode Taylor complexes)
/// lifting the inclusion `V ⊆ U`.
fn taylor_comparison<F: Field>(
    field: &F,
    v: &MonomialIdeal,
    u: &MonomialIdeal,
    tv: &ChainComplex<F>,
    tu: &ChainComplex<F>,
) -> Result<Vec<MonomialMatrix<F>>, ConeError> {
    let n = v.nvars();
    // generator map: first generator of U dividing each generator of V
    let assign: Vec<usize> = v
        .gens()
        .iter()
        .map(|w| {
            u.gens()
                .iter()
                .position(|g| g.divides(w))
                .ok_or_else(|| ConeError::NotContained(w.to_string()))
        })
        .collect::<Result<_, _>>()?;

    let vsubs: Vec<Vec<Vec<usize>>> = (1..=v.num_gens())
        .map(|k| crate::taylor::subsets_colex(v.num_gens(), k))
        .collect();
    let usubs: Vec<Vec<Vec<usize>>> = (1..=u.num_gens())
        .map(|k| crate::taylor::subsets_colex(u.num_gens(), k))
        .collect();
    let uindex: Vec<std::collections::HashMap<Vec<usize>, usize>> = usubs
        .iter()
        .map(|subs| {
            subs.iter()
                .enumerate()
                .map(|(i, s)| (s.clone(), i))
                .collect()
        })
        .collect();

    let mut maps = Vec::new();
    for level in 0..tv.terms().len() {
        // Past the length of T(U) every image set has a repeat (pigeonhole),
        // so the comparison map is zero into an empty target.
        let target = if level < tu.terms().len() {
            tu.term(level).clone()
        } else {
            FreeModule::empty(n)
        };
        let mut m = MonomialMatrix::zero(tv.term(level).clone(), target);
        for (s_idx, subset) in vsubs[level].iter().enumerate() {
            let images: Vec<usize> = subset.iter().map(|&i| assign[i]).collect();
            let Some((sorted, odd)) = sort_sign(&images) else {
                continue;
            };
            let t_idx = uindex[level][&sorted];
            let num = subset_lcm(n, v.gens(), subset);
            let den = subset_lcm(n, u.gens(), &sorted);
            let mono = num
                .try_div(&den)
                .expect("image lcm divides preimage lcm");
            let coeff = if odd {
                field.neg(&field.one())
            } else {
                field.one()
            };
            m.add_entry(field, t_idx, s_idx, coeff, mono);
        }
        maps.push(m);
    }

    // chain-map identity: d_U . alpha = alpha . d_V, checked symbolically
    for k in 1..tv.terms().len() {
        let right = maps[k - 1].compose(field, tv.diff(k));
        let holds = if k <= tu.length() {
            let left = tu.diff(k).compose(field, &maps[k]);
            let mut diff = left;
            for (&(t, s), e) in right.entries() {
                diff.add_entry(field, t, s, field.neg(&e.coeff), e.mono.clone());
            }
            diff.is_zero()
        } else {
            right.is_zero()
        };
        assert!(holds, "comparison map must commute with the differentials");
    }
    Ok(maps)
}

/// Mapping cone of a chain map `alpha : A -> B`:
/// `cone_i = B_i ⊕ A_{i-1}` with differential `(b, a) -> (d_B b + alpha a, -d_A a)`.
pub fn mapping_cone<F: Field>(
    a: &ChainComplex<F>,
    b: &ChainComplex<F>,
    alpha: &[MonomialMatrix<F>],
) -> ChainComplex<F> {
    let field = b.field().clone();
    let n = b.nvars();
    let len = b.terms().len().max(a.terms().len() + 1);
    let a_term = |i: usize| -> Option<&FreeModule> {
        if i >= 1 && i - 1 < a.terms().len() {
            Some(a.term(i - 1))
        } else {
            None
        }
    };
    let b_term = |i: usize| -> Option<&FreeModule> {
        if i < b.terms().len() {
            Some(b.term(i))
        } else {
            None
        }
    };
    let terms: Vec<FreeModule> = (0..len)
        .map(|i| {
            let mut basis: Vec<BasisElt> = Vec::new();
            if let Some(t) = b_term(i) {
                basis.extend(t.basis().to_vec());
            }
            if let Some(t) = a_term(i) {
                basis.extend(t.basis().to_vec());
            }
            FreeModule::new(n, basis)
        })
        .collect();

    let mut diffs = Vec::new();
    for i in 1..len {
        let mut d = MonomialMatrix::zero(terms[i].clone(), terms[i - 1].clone());
        let b_src = b_term(i).map_or(0, FreeModule::rank);
        let b_tgt = b_term(i - 1).map_or(0, FreeModule::rank);
        if i < b.terms().len() {
            for (&(t, s), e) in b.diff(i).entries() {
                d.add_entry(&field, t, s, e.coeff.clone(), e.mono.clone());
            }
        }
        if i >= 1 && i - 1 < alpha.len() {
            for (&(t, s), e) in alpha[i - 1].entries() {
                d.add_entry(&field, t, b_src + s, e.coeff.clone(), e.mono.clone());
            }
        }
        if i >= 2 && i - 1 < a.terms().len() {
            for (&(t, s), e) in a.diff(i - 1).entries() {
                d.add_entry(&field, b_tgt + t, b_src + s, field.neg(&e.coeff), e.mono.clone());
            }
        }
        diffs.push(d);
    }
    ChainComplex::new(field, n, terms, diffs).expect("cone endpoints are consistent")
}

/// Minimal free resolution of the quotient module `U/V` (for `V ⊆ U`), as a
/// minimalized mapping cone. `V` may be zero, in which case this is the
/// minimal resolution of `U` itself.
pub fn resolve_quotient_module<F: Field>(
    field: &F,
    u: &MonomialIdeal,
    v: &MonomialIdeal,
    max_gens: usize,
) -> Result<ChainComplex<F>, ConeError> {
    let tu = taylor_complex(field, u, TaylorMode::Ideal, max_gens)?;
    if v.is_zero() {
        return Ok(minimalize(&tu));
    }
    let tv = taylor_complex(field, v, TaylorMode::Ideal, max_gens)?;
    let alpha = taylor_comparison(field, v, u, &tv, &tu)?;
    Ok(minimalize(&mapping_cone(&tv, &tu, &alpha)))
}

/// Betti table of `U/V` from the minimalized cone.
pub fn quotient_module_betti<F: Field>(
    field: &F,
    u: &MonomialIdeal,
    v: &MonomialIdeal,
    max_gens: usize,
) -> Result<BettiTable, ConeError> {
    Ok(betti_of_minimal(&resolve_quotient_module(
        field, u, v, max_gens,
    )?))
}
