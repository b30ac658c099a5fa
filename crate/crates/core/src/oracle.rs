//! Independent Betti-number oracle via upper Koszul simplicial complexes.
//!
//! For a monomial ideal `I` and a multidegree `b`, let `K^b(I)` be the
//! simplicial complex of squarefree variable sets `t` with `x^b / x^t` in
//! `I`. Then `β_{i,b}(I)` equals the reduced homology dimension
//! `H~_{i-1}(K^b(I))` over the chosen field, and all Betti degrees lie in
//! the lcm lattice of the minimal generators. This route never builds a
//! free resolution, so it stays fast for large generator counts and serves
//! as the cross-check for the Taylor/minimalization pipeline.

use crate::betti::BettiTable;
use crate::complex::scan_degrees;
use crate::exec;
use crate::field::Field;
use crate::ideal::MonomialIdeal;
use crate::matrix::DenseMatrix;
use crate::monomial::Monomial;

/// Faces of `K^b(I)` grouped by cardinality: `faces[c]` holds the sets of
/// size `c` as sorted variable lists.
fn upper_koszul_faces(ideal: &MonomialIdeal, b: &Monomial) -> Vec<Vec<Vec<usize>>> {
    let support: Vec<usize> = b.support().into_iter().collect();
    let n = b.nvars();
    let mut faces: Vec<Vec<Vec<usize>>> = Vec::new();
    for mask in 0u64..(1u64 << support.len()) {
        let mut exps = b.exps().to_vec();
        let mut members = Vec::new();
        for (pos, &v) in support.iter().enumerate() {
            if mask >> pos & 1 == 1 {
                exps[v] -= 1;
                members.push(v);
            }
        }
        if ideal.contains(&Monomial::new(exps)) {
            let c = members.len();
            if faces.len() <= c {
                faces.resize(c + 1, Vec::new());
            }
            faces[c].push(members);
        }
        let _ = n;
    }
    for level in &mut faces {
        level.sort();
    }
    faces
}

/// Reduced homology dimensions of the face list, indexed so that entry `c`
/// is `dim H~_{c-1}` (the Betti contribution at homological index `c`).
fn reduced_homology_dims<F: Field>(field: &F, faces: &[Vec<Vec<usize>>]) -> Vec<usize> {
    if faces.is_empty() {
        return Vec::new();
    }
    // boundary from cardinality c to c-1
    let boundary = |c: usize| -> DenseMatrix<F> {
        if c == 0 || c >= faces.len() {
            let rows = if c >= 1 && c - 1 < faces.len() {
                faces[c - 1].len()
            } else {
                0
            };
            return DenseMatrix::zeros(field, rows, 0);
        }
        let rows = faces[c - 1].len();
        let cols = faces[c].len();
        let index: std::collections::HashMap<&[usize], usize> = faces[c - 1]
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i))
            .collect();
        let mut m = DenseMatrix::zeros(field, rows, cols);
        for (j, face) in faces[c].iter().enumerate() {
            for (pos, &v) in face.iter().enumerate() {
                let reduced: Vec<usize> = face.iter().copied().filter(|&x| x != v).collect();
                let i = index[reduced.as_slice()];
                let sign = if pos % 2 == 0 {
                    field.one()
                } else {
                    field.neg(&field.one())
                };
                m.set(i, j, sign);
            }
        }
        m
    };

    let ranks: Vec<usize> = (0..=faces.len())
        .map(|c| boundary(c).rank(field))
        .collect();
    (0..faces.len())
        .map(|c| faces[c].len() - ranks[c] - ranks[c + 1])
        .collect()
}

/// Betti table of the ideal `I` (ideal shift convention) computed from
/// reduced simplicial homology over `field`, scanning the lcm lattice of
/// the minimal generators.
pub fn upper_koszul_betti<F: Field>(field: &F, ideal: &MonomialIdeal) -> BettiTable {
    let degrees = scan_degrees(ideal.nvars(), ideal.gens(), &[]);
    let per_degree: Vec<Vec<usize>> = exec::map_collect(&degrees, |b| {
        reduced_homology_dims(field, &upper_koszul_faces(ideal, b))
    });
    let mut table = BettiTable::new(field.name());
    for (b, dims) in degrees.iter().zip(per_degree) {
        for (i, d) in dims.into_iter().enumerate() {
            table.add(i, b.clone(), d);
        }
    }
    table
}

/// Sequential reference version of [`upper_koszul_betti`] for the benchmark
/// suite and determinism cross-checks.
pub fn upper_koszul_betti_seq<F: Field>(field: &F, ideal: &MonomialIdeal) -> BettiTable {
    let degrees = scan_degrees(ideal.nvars(), ideal.gens(), &[]);
    let mut table = BettiTable::new(field.name());
    for b in &degrees {
        let dims = reduced_homology_dims(field, &upper_koszul_faces(ideal, b));
        for (i, d) in dims.into_iter().enumerate() {
            table.add(i, b.clone(), d);
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::{betti_numbers, reg_pd};
    use crate::field::PrimeField;
    use crate::parse::parse_ideal_str;
    use crate::taylor::{taylor_complex, TaylorMode};

    fn gf() -> PrimeField {
        PrimeField::default_prime()
    }

    #[test]
    fn two_variables() {
        let i = parse_ideal_str("x1, x2", 2).unwrap();
        let b = upper_koszul_betti(&gf(), &i);
        assert_eq!(b.rank_at(0), 2);
        assert_eq!(b.get(1, &Monomial::new(vec![1, 1])), 1);
        assert_eq!(b.pd(), Some(1));
    }

    #[test]
    fn counterexample_first_factor() {
        let i = parse_ideal_str("x2, x3", 4).unwrap();
        let b = upper_koszul_betti(&gf(), &i);
        let by_total = b.by_total_degree();
        assert_eq!(by_total.get(&(0, 1)), Some(&2));
        assert_eq!(by_total.get(&(1, 2)), Some(&1));
        assert_eq!(reg_pd(&b, 0), Some((1, 1)));
    }

    #[test]
    fn agrees_with_taylor_route() {
        for src in ["x1^2, x1*x2, x2^2", "x1*x2, x2*x3, x1*x3", "x1^3, x2^2"] {
            let i = parse_ideal_str(src, 3).unwrap();
            let oracle = upper_koszul_betti(&gf(), &i);
            let t = taylor_complex(&gf(), &i, TaylorMode::Ideal, 16).unwrap();
            let direct = betti_numbers(&t).unwrap();
            assert_eq!(oracle, direct, "ideal {src}");
        }
    }

    #[test]
    fn seq_matches_parallel() {
        let i = parse_ideal_str("x1^2, x1*x2, x2^2, x3^2", 3).unwrap();
        assert_eq!(
            upper_koszul_betti(&gf(), &i),
            upper_koszul_betti_seq(&gf(), &i)
        );
    }

    #[test]
    fn zero_and_principal() {
        let z = MonomialIdeal::zero(2);
        assert!(upper_koszul_betti(&gf(), &z).is_empty());
        let p = parse_ideal_str("x1^2*x2", 2).unwrap();
        let b = upper_koszul_betti(&gf(), &p);
        assert_eq!(b.rank_at(0), 1);
        assert_eq!(b.pd(), Some(0));
    }
}
