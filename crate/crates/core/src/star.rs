//! The *-product of multigraded free modules, maps, and complexes.
//!
//! The basis element `f*g` carries the lcm multidegree `[u_f, u_g]`, in
//! contrast to the tensor product's `u_f u_g`. For a homogeneous map
//! `phi : F -> F'` with entries `a * (u_f / u_{f'})`, the induced map
//! `phi * Id(H)` has entries `a * [u_h, u_f] / [u_h, u_{f'}]`, and likewise
//! on the right. The product of two complexes carries the differential
//! `sum phi_j * Id(G_k) + (-1)^j Id(F_j) * psi_k`, whose square vanishes for
//! arbitrary valid inputs.

use crate::complex::ChainComplex;
use crate::field::Field;
use crate::free_module::{BasisElt, FreeModule, MonomialMatrix};

fn pair_label(left: &BasisElt, right: &BasisElt) -> String {
    format!("{}*{}", left.label, right.label)
}

/// The free module `F*G`: all pairs in (F-order, G-order) lexicographic
/// product order, each with the lcm shift.
pub fn star_module(f: &FreeModule, g: &FreeModule) -> FreeModule {
    assert_eq!(f.nvars(), g.nvars());
    let basis = f
        .basis()
        .iter()
        .flat_map(|bf| {
            g.basis()
                .iter()
                .map(move |bg| BasisElt::new(pair_label(bf, bg), bf.shift.lcm(&bg.shift)))
        })
        .collect();
    FreeModule::new(f.nvars(), basis)
}

/// The ordinary tensor product module, with product shifts. Serves as the
/// source of the comparison map `j`.
pub fn tensor_module(f: &FreeModule, g: &FreeModule) -> FreeModule {
    assert_eq!(f.nvars(), g.nvars());
    let basis = f
        .basis()
        .iter()
        .flat_map(|bf| {
            g.basis().iter().map(move |bg| {
                BasisElt::new(
                    format!("{}(x){}", bf.label, bg.label),
                    bf.shift.mul(&bg.shift),
                )
            })
        })
        .collect();
    FreeModule::new(f.nvars(), basis)
}

/// The monomorphism `j : F ⊗ G -> F*G`, diagonal with entry
/// `gcd(u_f, u_g)` at each basis pair. When the supports of the shifts are
/// disjoint for every pair, every entry is 1 and `j` is an isomorphism.
pub fn j_map<F: Field>(field: &F, f: &FreeModule, g: &FreeModule) -> MonomialMatrix<F> {
    let source = tensor_module(f, g);
    let target = star_module(f, g);
    let mut m = MonomialMatrix::zero(source, target);
    let mut idx = 0;
    for bf in f.basis() {
        for bg in g.basis() {
            m.add_entry(field, idx, idx, field.one(), bf.shift.gcd(&bg.shift));
            idx += 1;
        }
    }
    m
}

/// `phi * Id(H) : F*H -> F'*H` for a homogeneous `phi : F -> F'`.
///
/// The entry from `f*h` to `f'*h` is `a * [u_h, u_f] / [u_h, u_{f'}]`; the
/// quotient is a monomial because `u_{f'}` divides `u_f` whenever `phi` has
/// a nonzero entry there.
pub fn star_map_left<F: Field>(
    field: &F,
    phi: &MonomialMatrix<F>,
    h: &FreeModule,
) -> MonomialMatrix<F> {
    let source = star_module(phi.source(), h);
    let target = star_module(phi.target(), h);
    let hr = h.rank();
    let mut m = MonomialMatrix::zero(source, target);
    for (&(fp, f), e) in phi.entries() {
        let u_f = phi.source().shift(f);
        let u_fp = phi.target().shift(fp);
        for (hi, bh) in h.basis().iter().enumerate() {
            let num = bh.shift.lcm(u_f);
            let den = bh.shift.lcm(u_fp);
            let mono = num
                .try_div(&den)
                .expect("target shift divides source shift");
            m.add_entry(field, fp * hr + hi, f * hr + hi, e.coeff.clone(), mono);
        }
    }
    m
}

/// `Id(H) * psi : H*G -> H*G'` for a homogeneous `psi : G -> G'`.
pub fn star_map_right<F: Field>(
    field: &F,
    h: &FreeModule,
    psi: &MonomialMatrix<F>,
) -> MonomialMatrix<F> {
    let source = star_module(h, psi.source());
    let target = star_module(h, psi.target());
    let gr = psi.source().rank();
    let gr_t = psi.target().rank();
    let mut m = MonomialMatrix::zero(source, target);
    for (&(gp, g), e) in psi.entries() {
        let u_g = psi.source().shift(g);
        let u_gp = psi.target().shift(gp);
        for (hi, bh) in h.basis().iter().enumerate() {
            let num = bh.shift.lcm(u_g);
            let den = bh.shift.lcm(u_gp);
            let mono = num
                .try_div(&den)
                .expect("target shift divides source shift");
            m.add_entry(field, hi * gr_t + gp, hi * gr + g, e.coeff.clone(), mono);
        }
    }
    m
}

/// The *-product complex `(F*G)_i = ⊕_{j+k=i} F_j * G_k` (blocks in
/// ascending `j`), with differential
/// `phi_j * Id(G_k) + (-1)^j Id(F_j) * psi_k` on each block.
pub fn star_complex<F: Field>(fc: &ChainComplex<F>, gc: &ChainComplex<F>) -> ChainComplex<F> {
    let field = fc.field().clone();
    assert_eq!(fc.nvars(), gc.nvars());
    let n = fc.nvars();
    let p = fc.length();
    let q = gc.length();
    assert!(
        !fc.terms().is_empty() && !gc.terms().is_empty(),
        "star product of empty complexes"
    );

    // blocks[i] = list of (j, k) with j + k = i, ascending j
    let blocks: Vec<Vec<(usize, usize)>> = (0..=p + q)
        .map(|i| {
            (0..=i)
                .filter(|&j| j <= p && i - j <= q)
                .map(|j| (j, i - j))
                .collect()
        })
        .collect();

    let terms: Vec<FreeModule> = blocks
        .iter()
        .map(|bs| {
            let mut basis = Vec::new();
            for &(j, k) in bs {
                basis.extend(star_module(fc.term(j), gc.term(k)).basis().to_vec());
            }
            FreeModule::new(n, basis)
        })
        .collect();

    // offset of block (j, k) within term i = j + k
    let offset = |i: usize, j: usize| -> usize {
        blocks[i]
            .iter()
            .take_while(|&&(j2, _)| j2 < j)
            .map(|&(j2, k2)| fc.term(j2).rank() * gc.term(k2).rank())
            .sum()
    };

    let mut diffs = Vec::new();
    for i in 1..=p + q {
        let mut d = MonomialMatrix::zero(terms[i].clone(), terms[i - 1].clone());
        for &(j, k) in &blocks[i] {
            let src_off = offset(i, j);
            if j >= 1 {
                // phi_j * Id(G_k) : F_j*G_k -> F_{j-1}*G_k
                let block = star_map_left(&field, fc.diff(j), gc.term(k));
                let tgt_off = offset(i - 1, j - 1);
                for (&(t, s), e) in block.entries() {
                    d.add_entry(
                        &field,
                        tgt_off + t,
                        src_off + s,
                        e.coeff.clone(),
                        e.mono.clone(),
                    );
                }
            }
            if k >= 1 {
                // (-1)^j Id(F_j) * psi_k : F_j*G_k -> F_j*G_{k-1}
                let block = star_map_right(&field, fc.term(j), gc.diff(k));
                let tgt_off = offset(i - 1, j);
                let sign_neg = j % 2 == 1;
                for (&(t, s), e) in block.entries() {
                    let coeff = if sign_neg {
                        field.neg(&e.coeff)
                    } else {
                        e.coeff.clone()
                    };
                    d.add_entry(&field, tgt_off + t, src_off + s, coeff, e.mono.clone());
                }
            }
        }
        diffs.push(d);
    }

    ChainComplex::new(field, n, terms, diffs).expect("block offsets are consistent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::acyclic_witness;
    use crate::field::{Field, PrimeField};
    use crate::monomial::Monomial;
    use crate::parse::parse_ideal_str;
    use crate::taylor::{taylor_complex, TaylorMode};

    fn gf() -> PrimeField {
        PrimeField::default_prime()
    }

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn module(n: usize, shifts: &[&[u32]]) -> FreeModule {
        FreeModule::new(
            n,
            shifts
                .iter()
                .enumerate()
                .map(|(i, s)| BasisElt::new(format!("e{i}"), mono(s)))
                .collect(),
        )
    }

    #[test]
    fn star_module_shifts() {
        // {x1^2} x {x2}: disjoint supports, lcm = product
        let f = module(2, &[&[2, 0]]);
        let g = module(2, &[&[0, 1]]);
        let s = star_module(&f, &g);
        assert_eq!(s.rank(), 1);
        assert_eq!(s.shift(0), &mono(&[2, 1]));
        // {x1x2} x {x2x3}: overlap
        let f = module(3, &[&[1, 1, 0]]);
        let g = module(3, &[&[0, 1, 1]]);
        assert_eq!(star_module(&f, &g).shift(0), &mono(&[1, 1, 1]));
    }

    #[test]
    fn star_module_rank_product() {
        let f = module(1, &[&[0], &[1]]);
        let g = module(1, &[&[0], &[1], &[2]]);
        assert_eq!(star_module(&f, &g).rank(), 6);
    }

    #[test]
    fn j_map_entries() {
        let f = gf();
        // coprime shifts -> unit entry
        let a = module(2, &[&[2, 0]]);
        let b = module(2, &[&[0, 1]]);
        let j = j_map(&f, &a, &b);
        assert_eq!(j.get(0, 0).unwrap().mono, mono(&[0, 0]));
        // overlapping shifts -> gcd entry
        let a = module(3, &[&[1, 1, 0]]);
        let b = module(3, &[&[0, 1, 1]]);
        let j = j_map(&f, &a, &b);
        assert_eq!(j.get(0, 0).unwrap().mono, mono(&[0, 1, 0]));
        assert_eq!(j.homogeneity_violation(), None);
    }

    #[test]
    fn j_map_from_ring_is_identity_shaped() {
        let f = gf();
        let s = FreeModule::ring(2);
        let g = module(2, &[&[1, 0], &[0, 1]]);
        let j = j_map(&f, &s, &g);
        assert_eq!(j.num_entries(), 2);
        for (&(t, srcidx), e) in j.entries() {
            assert_eq!(t, srcidx);
            assert!(e.mono.is_unit());
        }
    }

    #[test]
    fn star_map_formula() {
        let f = gf();
        // phi: F1 -> S with phi(f) = x1^2, u_h = x2
        let f1 = module(2, &[&[2, 0]]);
        let s = FreeModule::ring(2);
        let mut phi = MonomialMatrix::zero(f1.clone(), s.clone());
        phi.add_entry(&f, 0, 0, 1, mono(&[2, 0]));
        let h = module(2, &[&[0, 1]]);
        let m = star_map_left(&f, &phi, &h);
        assert_eq!(m.get(0, 0).unwrap().mono, mono(&[2, 0]));

        // u_h = 1 degenerates to phi itself
        let unit = FreeModule::ring(2);
        let m = star_map_left(&f, &phi, &unit);
        assert_eq!(m.get(0, 0).unwrap().mono, mono(&[2, 0]));

        // u_f = x1x2, u_g = x2, a = 1, u_h = x2x3:
        // [x2x3, x1x2]/[x2x3, x2] = x1
        let src = module(3, &[&[1, 1, 0]]);
        let tgt = module(3, &[&[0, 1, 0]]);
        let mut psi = MonomialMatrix::zero(src, tgt);
        psi.add_entry(&f, 0, 0, 1, mono(&[1, 0, 0]));
        let h = module(3, &[&[0, 1, 1]]);
        let m = star_map_left(&f, &psi, &h);
        assert_eq!(m.get(0, 0).unwrap().mono, mono(&[1, 0, 0]));
        assert_eq!(m.homogeneity_violation(), None);
    }

    #[test]
    fn star_of_koszul_resolutions_is_koszul() {
        let f = gf();
        let i1 = parse_ideal_str("x1^2", 2).unwrap();
        let i2 = parse_ideal_str("x2", 2).unwrap();
        let fc = taylor_complex(&f, &i1, TaylorMode::Quotient, 16).unwrap();
        let gc = taylor_complex(&f, &i2, TaylorMode::Quotient, 16).unwrap();
        let star = star_complex(&fc, &gc);
        assert_eq!(star.ranks(), vec![1, 2, 1]);
        assert!(star.validate().is_ok());
        assert_eq!(acyclic_witness(&star).unwrap(), None);

        // same shifts and entry monomials as the Koszul complex on (x1^2, x2),
        // up to basis sign
        let k = taylor_complex(&f, &parse_ideal_str("x1^2, x2", 2).unwrap(), TaylorMode::Quotient, 16)
            .unwrap();
        for i in 0..=2 {
            let mut a: Vec<_> = star.term(i).shifts().cloned().collect();
            let mut b: Vec<_> = k.term(i).shifts().cloned().collect();
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
        for i in 1..=2 {
            let mut a: Vec<(Monomial, Monomial, Monomial)> = star
                .diff(i)
                .entries()
                .map(|(&(t, s), e)| {
                    (
                        star.term(i - 1).shift(t).clone(),
                        star.term(i).shift(s).clone(),
                        e.mono.clone(),
                    )
                })
                .collect();
            let mut b: Vec<(Monomial, Monomial, Monomial)> = k
                .diff(i)
                .entries()
                .map(|(&(t, s), e)| {
                    (
                        k.term(i - 1).shift(t).clone(),
                        k.term(i).shift(s).clone(),
                        e.mono.clone(),
                    )
                })
                .collect();
            a.sort();
            b.sort();
            assert_eq!(a, b, "differential {i}");
        }
    }

    #[test]
    fn identity_factor_reproduces_g() {
        let f = gf();
        let ring = ChainComplex::new(f, 2, vec![FreeModule::ring(2)], vec![]).unwrap();
        let j = parse_ideal_str("x1*x2, x2^2", 2).unwrap();
        let gc = taylor_complex(&gf(), &j, TaylorMode::Quotient, 16).unwrap();
        let star = star_complex(&ring, &gc);
        assert_eq!(star.ranks(), gc.ranks());
        for i in 0..=star.length() {
            let a: Vec<_> = star.term(i).shifts().cloned().collect();
            let b: Vec<_> = gc.term(i).shifts().cloned().collect();
            assert_eq!(a, b);
        }
        for i in 1..=star.length() {
            let a: Vec<_> = star
                .diff(i)
                .entries()
                .map(|(&(t, s), e)| (t, s, e.coeff.clone(), e.mono.clone()))
                .collect::<Vec<_>>();
            let b: Vec<_> = gc
                .diff(i)
                .entries()
                .map(|(&(t, s), e)| (t, s, e.coeff.clone(), e.mono.clone()))
                .collect::<Vec<_>>();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn rank_identity() {
        let f = gf();
        let i1 = parse_ideal_str("x1^2, x1*x2", 2).unwrap();
        let i2 = parse_ideal_str("x2^3, x1*x2^2", 2).unwrap();
        let fc = taylor_complex(&f, &i1, TaylorMode::Quotient, 16).unwrap();
        let gc = taylor_complex(&f, &i2, TaylorMode::Quotient, 16).unwrap();
        let star = star_complex(&fc, &gc);
        for i in 0..=star.length() {
            let expected: usize = (0..=i)
                .filter(|&j| j <= fc.length() && i - j <= gc.length())
                .map(|j| fc.term(j).rank() * gc.term(i - j).rank())
                .sum();
            assert_eq!(star.term(i).rank(), expected);
        }
    }

    #[test]
    fn square_zero_for_overlapping_inputs() {
        // d^2 = 0 holds for arbitrary valid inputs, not only disjoint ones
        let f = gf();
        let i1 = parse_ideal_str("x1*x2, x2^2", 2).unwrap();
        let i2 = parse_ideal_str("x2*x1, x1^3", 2).unwrap();
        let fc = taylor_complex(&f, &i1, TaylorMode::Quotient, 16).unwrap();
        let gc = taylor_complex(&f, &i2, TaylorMode::Quotient, 16).unwrap();
        let star = star_complex(&fc, &gc);
        assert!(star.validate().is_ok());
    }
}
