//! Multigraded free chain complexes with monomial-matrix differentials.
//!
//! A complex is a list of terms `C_0, ..., C_p` and differentials
//! `d_i : C_i -> C_{i-1}`. Exactness questions are answered degreewise: the
//! degree-`b` strand keeps exactly the basis elements whose shift divides
//! `b`, and the strand of a homogeneous map is the plain coefficient matrix.
//!
//! The strand at `b` depends only on the set of basis shifts dividing `b`,
//! so it is isomorphic to the strand at the join of those shifts. Vanishing
//! of homology on the finite lcm lattice of the shifts therefore implies
//! vanishing everywhere; `acyclic_witness` scans exactly that lattice, and
//! `acyclic_box_scan` provides the exhaustive cross-check.

use serde::Serialize;
use thiserror::Error;

use crate::exec;
use crate::field::Field;
use crate::free_module::{FreeModule, MonomialMatrix};
use crate::matrix::{homology_dim, CompositionNonzero, DenseMatrix};
use crate::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("differential {index} endpoints do not match the terms of the complex")]
    EndpointMismatch { index: usize },
    #[error(
        "homogeneity violated in differential {index} at entry ({target_label}, {source_label})"
    )]
    Homogeneity {
        index: usize,
        target_label: String,
        source_label: String,
    },
    #[error(
        "d_{index} . d_{} is nonzero at entry ({target_label}, {source_label})", index + 1
    )]
    Composition {
        index: usize,
        target_label: String,
        source_label: String,
    },
    #[error("complex is not acyclic: H_{} at degree {} has dimension {}", .0.slot, .0.degree_monomial, .0.dim)]
    NotAcyclic(Witness),
    #[error("degreewise strand is not a complex: {0}")]
    InvalidStrand(#[from] CompositionNonzero),
}

/// A failing slot of an acyclicity scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub slot: usize,
    pub degree: Vec<u32>,
    pub degree_monomial: String,
    pub dim: usize,
}

impl Witness {
    fn new(slot: usize, degree: &Monomial, dim: usize) -> Self {
        Self {
            slot,
            degree: degree.exps().to_vec(),
            degree_monomial: degree.to_string(),
            dim,
        }
    }
}

/// Sequence of free modules `terms[0..=p]` with differentials
/// `diffs[k] : terms[k+1] -> terms[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainComplex<F: Field> {
    field: F,
    nvars: usize,
    terms: Vec<FreeModule>,
    diffs: Vec<MonomialMatrix<F>>,
}

impl<F: Field> ChainComplex<F> {
    pub fn new(
        field: F,
        nvars: usize,
        terms: Vec<FreeModule>,
        diffs: Vec<MonomialMatrix<F>>,
    ) -> Result<Self, ComplexError> {
        if !terms.is_empty() {
            assert_eq!(diffs.len() + 1, terms.len(), "one differential per adjacent pair");
        } else {
            assert!(diffs.is_empty());
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.source() != &terms[k + 1] || d.target() != &terms[k] {
                return Err(ComplexError::EndpointMismatch { index: k + 1 });
            }
        }
        for t in &terms {
            assert_eq!(t.nvars(), nvars);
        }
        Ok(Self {
            field,
            nvars,
            terms,
            diffs,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of differentials; the top homological index.
    pub fn length(&self) -> usize {
        self.diffs.len()
    }

    pub fn terms(&self) -> &[FreeModule] {
        &self.terms
    }

    pub fn term(&self, i: usize) -> &FreeModule {
        &self.terms[i]
    }

    /// The differential `d_i : C_i -> C_{i-1}` for `1 <= i <= length`.
    pub fn diff(&self, i: usize) -> &MonomialMatrix<F> {
        &self.diffs[i - 1]
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.rank()).collect()
    }

    /// All basis shifts across all terms, deduplicated.
    pub fn all_shifts(&self) -> Vec<Monomial> {
        let mut shifts: Vec<Monomial> = self
            .terms
            .iter()
            .flat_map(|t| t.shifts().cloned())
            .collect();
        shifts.sort();
        shifts.dedup();
        shifts
    }

    /// Check both structural invariants: homogeneity of every entry and
    /// `d . d = 0`, symbolically. Reports the first violating entry.
    pub fn validate(&self) -> Result<(), ComplexError> {
        for (k, d) in self.diffs.iter().enumerate() {
            if let Some((t, s)) = d.homogeneity_violation() {
                return Err(ComplexError::Homogeneity {
                    index: k + 1,
                    target_label: d.target().basis()[t].label.clone(),
                    source_label: d.source().basis()[s].label.clone(),
                });
            }
        }
        for k in 0..self.diffs.len().saturating_sub(1) {
            let comp = self.diffs[k].compose(&self.field, &self.diffs[k + 1]);
            if let Some((&(t, s), _)) = comp.entries().next() {
                return Err(ComplexError::Composition {
                    index: k + 1,
                    target_label: self.terms[k].basis()[t].label.clone(),
                    source_label: self.terms[k + 2].basis()[s].label.clone(),
                });
            }
        }
        Ok(())
    }
}

/// The degree-`b` strand of a complex: per-term surviving dimensions and the
/// coefficient matrix of each differential restricted to the strand.
#[derive(Debug, Clone)]
pub struct Strand<F: Field> {
    pub term_dims: Vec<usize>,
    pub matrices: Vec<DenseMatrix<F>>,
}

/// Evaluate the complex at multidegree `b`. A basis element `(l, u)`
/// contributes iff `u` divides `b`; entries become bare coefficients.
pub fn evaluate_at_degree<F: Field>(c: &ChainComplex<F>, b: &Monomial) -> Strand<F> {
    let field = c.field();
    let survivors: Vec<Vec<usize>> = c
        .terms()
        .iter()
        .map(|t| {
            t.basis()
                .iter()
                .enumerate()
                .filter(|(_, e)| e.shift.divides(b))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let mut matrices = Vec::with_capacity(c.length());
    for k in 0..c.length() {
        let rows = &survivors[k];
        let cols = &survivors[k + 1];
        let mut m = DenseMatrix::zeros(field, rows.len(), cols.len());
        // Surviving sources always have surviving targets (the target shift
        // divides the source shift), so iterating columns is exhaustive.
        let row_pos: std::collections::HashMap<usize, usize> =
            rows.iter().enumerate().map(|(pos, &i)| (i, pos)).collect();
        for (cpos, &s) in cols.iter().enumerate() {
            for (&(t, s2), e) in c.diff(k + 1).entries() {
                if s2 != s {
                    continue;
                }
                if let Some(&rpos) = row_pos.get(&t) {
                    m.set(rpos, cpos, e.coeff.clone());
                }
            }
        }
        matrices.push(m);
    }
    Strand {
        term_dims: survivors.iter().map(|v| v.len()).collect(),
        matrices,
    }
}

impl<F: Field> Strand<F> {
    /// Homology dimension at slot `i`, checking that the strand composes to
    /// zero around that slot.
    pub fn homology_at(&self, field: &F, i: usize) -> Result<usize, ComplexError> {
        if i >= self.term_dims.len() {
            return Ok(0);
        }
        let m = self.term_dims[i];
        let d_out = if i >= 1 {
            self.matrices[i - 1].clone()
        } else {
            DenseMatrix::zeros(field, 0, m)
        };
        let d_in = if i < self.matrices.len() {
            self.matrices[i].clone()
        } else {
            DenseMatrix::zeros(field, m, 0)
        };
        Ok(homology_dim(&d_in, &d_out, field)?)
    }
}

/// Dimension of degree-`b` homology at slot `i`.
pub fn homology_at<F: Field>(
    c: &ChainComplex<F>,
    i: usize,
    b: &Monomial,
) -> Result<usize, ComplexError> {
    evaluate_at_degree(c, b).homology_at(c.field(), i)
}

/// Dimension of the degree-`b` slice of `coker(d_1)`.
pub fn h0_hilbert_at<F: Field>(c: &ChainComplex<F>, b: &Monomial) -> usize {
    if c.terms().is_empty() {
        return 0;
    }
    let strand = evaluate_at_degree(c, b);
    let m = strand.term_dims[0];
    if strand.matrices.is_empty() {
        m
    } else {
        m - strand.matrices[0].rank(c.field())
    }
}

/// Closure of `shifts ∪ extra ∪ {1}` under pairwise lcm — the finite join
/// lattice of evaluation degrees, sorted by (total degree, lex).
pub fn scan_degrees(nvars: usize, shifts: &[Monomial], extra: &[Monomial]) -> Vec<Monomial> {
    let mut seen: std::collections::BTreeSet<Monomial> = std::collections::BTreeSet::new();
    seen.insert(Monomial::unit(nvars));
    let mut queue: Vec<Monomial> = Vec::new();
    for m in shifts.iter().chain(extra) {
        assert_eq!(m.nvars(), nvars);
        if seen.insert(m.clone()) {
            queue.push(m.clone());
        }
    }
    while let Some(m) = queue.pop() {
        let joins: Vec<Monomial> = seen
            .iter()
            .map(|other| m.lcm(other))
            .filter(|j| !seen.contains(j))
            .collect();
        for j in joins {
            if seen.insert(j.clone()) {
                queue.push(j);
            }
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_by_key(|m| (m.total_degree(), m.clone()));
    out
}

fn strand_failure<F: Field>(
    c: &ChainComplex<F>,
    b: &Monomial,
) -> Result<Option<Witness>, ComplexError> {
    let field = c.field();
    let strand = evaluate_at_degree(c, b);
    let ranks: Vec<usize> = strand.matrices.iter().map(|m| m.rank(field)).collect();
    for i in 1..=c.length() {
        let m = strand.term_dims[i];
        let r_out = ranks[i - 1];
        let r_in = if i < ranks.len() { ranks[i] } else { 0 };
        let h = m - r_out - r_in;
        if h != 0 {
            return Ok(Some(Witness::new(i, b, h)));
        }
    }
    Ok(None)
}

/// Scan the lcm lattice of the complex's shifts for nonvanishing homology in
/// slots `i >= 1`. Returns the first witness in (total degree, lex) order,
/// or `None` when the complex is a resolution of its `H_0`.
///
/// Validates the complex first; the scan itself then reuses strand ranks
/// across adjacent slots.
pub fn acyclic_witness<F: Field>(c: &ChainComplex<F>) -> Result<Option<Witness>, ComplexError> {
    c.validate()?;
    let degrees = scan_degrees(c.nvars(), &c.all_shifts(), &[]);
    Ok(exec::find_map_first(&degrees, |b| {
        strand_failure(c, b).expect("validated complex has composable strands")
    }))
}

/// Sequential reference version of [`acyclic_witness`]; used by the
/// benchmark suite and by determinism cross-checks.
pub fn acyclic_witness_seq<F: Field>(c: &ChainComplex<F>) -> Result<Option<Witness>, ComplexError> {
    c.validate()?;
    let degrees = scan_degrees(c.nvars(), &c.all_shifts(), &[]);
    for b in &degrees {
        if let Some(w) = strand_failure(c, b)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// True iff all higher homology vanishes.
pub fn is_acyclic<F: Field>(c: &ChainComplex<F>) -> Result<bool, ComplexError> {
    Ok(acyclic_witness(c)?.is_none())
}

/// Componentwise join of all shifts of the complex.
pub fn shift_join<F: Field>(c: &ChainComplex<F>) -> Monomial {
    c.all_shifts()
        .into_iter()
        .fold(Monomial::unit(c.nvars()), |a, b| a.lcm(&b))
}

/// Number of multidegrees `b <= join(shifts)` componentwise.
pub fn box_volume<F: Field>(c: &ChainComplex<F>) -> u128 {
    shift_join(c)
        .exps()
        .iter()
        .map(|&e| e as u128 + 1)
        .product()
}

/// Exhaustive acyclicity scan over every multidegree below the join of the
/// shifts. Exponential in principle; gated by `box_volume`.
pub fn acyclic_box_scan<F: Field>(c: &ChainComplex<F>) -> Result<Option<Witness>, ComplexError> {
    c.validate()?;
    let join = shift_join(c);
    let mut degrees = Vec::new();
    let mut cur = vec![0u32; c.nvars()];
    loop {
        degrees.push(Monomial::new(cur.clone()));
        let mut pos = 0;
        loop {
            if pos == cur.len() {
                degrees.sort_by_key(|m: &Monomial| (m.total_degree(), m.clone()));
                let hit = exec::find_map_first(&degrees, |b| {
                    strand_failure(c, b).expect("validated complex has composable strands")
                });
                return Ok(hit);
            }
            if cur[pos] < join.exp(pos) {
                cur[pos] += 1;
                break;
            }
            cur[pos] = 0;
            pos += 1;
        }
    }
}
