//! Star-product resolution pipeline and regularity/projective-dimension
//! bound checking.
//!
//! `resolve_product` builds minimal resolutions of `S/I` and of the module
//! `M` (a monomial ideal `J` or a quotient `S/J`), forms their star product,
//! and certifies that it resolves `M/IM`: structural validation, an
//! acyclicity scan over the lcm lattice, and multigraded Hilbert agreement
//! of `H_0` with direct ideal-membership counts.
//!
//! `check_bounds` computes regularity and projective dimension of `I`, `M`,
//! `IM`, and `M/IM` from resolutions independent of the star construction
//! (lattice-homology tables for monomial ideals, minimalized mapping cones
//! for quotient modules) and evaluates the two bounds
//! `pd(M/IM) <= pd(M) + pd(I) + 1` and `reg(IM) <= reg(I) + reg(M)`.

use serde::Serialize;
use thiserror::Error;

use crate::betti::BettiTable;
use crate::complex::{acyclic_witness, h0_hilbert_at, scan_degrees, ChainComplex, ComplexError, Witness};
use crate::cone::{quotient_module_betti, ConeError};
use crate::exec;
use crate::field::Field;
use crate::ideal::MonomialIdeal;
use crate::minimize::minimalize;
use crate::monomial::{var_name, AmbientMismatch, Monomial};
use crate::oracle::upper_koszul_betti;
use crate::star::star_complex;
use crate::taylor::{betti_of_minimal, resolve, TaylorCapExceeded, TaylorMode};

/// The module `M`: a monomial ideal `J` or the quotient `S/J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleSpec {
    Quotient(MonomialIdeal),
    Ideal(MonomialIdeal),
}

impl ModuleSpec {
    pub fn ideal(&self) -> &MonomialIdeal {
        match self {
            ModuleSpec::Quotient(j) | ModuleSpec::Ideal(j) => j,
        }
    }

    pub fn kind_str(&self) -> &'static str {
        match self {
            ModuleSpec::Quotient(_) => "quotient",
            ModuleSpec::Ideal(_) => "ideal",
        }
    }

    pub fn taylor_mode(&self) -> TaylorMode {
        match self {
            ModuleSpec::Quotient(_) => TaylorMode::Quotient,
            ModuleSpec::Ideal(_) => TaylorMode::Ideal,
        }
    }

    /// Variables in the degrees of the minimal generating set of `M`.
    /// A quotient `S/J` is generated by `1`, so its set is empty.
    pub fn module_gens_vars(&self) -> std::collections::BTreeSet<usize> {
        match self {
            ModuleSpec::Quotient(_) => Default::default(),
            ModuleSpec::Ideal(j) => j.gens_vars(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("generator supports overlap in {}; the star construction is not certified here", .shared.join(", "))]
    Hypothesis { shared: Vec<String> },
    #[error("{0}")]
    Cap(#[from] TaylorCapExceeded),
    #[error("{0}")]
    Cone(#[from] ConeError),
    #[error("{0}")]
    Ambient(#[from] AmbientMismatch),
    #[error("{0}")]
    Complex(#[from] ComplexError),
    #[error("{0} is the zero module; regularity is undefined")]
    ZeroModule(String),
}

/// Degree at which the `H_0` Hilbert comparison failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct H0Witness {
    pub degree: Vec<u32>,
    pub degree_monomial: String,
    pub expected: usize,
    pub actual: usize,
}

/// Outcome of certifying a star-product resolution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub ideal_i: String,
    pub module_kind: String,
    pub ideal_j: String,
    pub field: String,
    pub star_ranks: Vec<usize>,
    pub star_length: usize,
    pub validate_ok: bool,
    pub acyclic: bool,
    pub witness: Option<Witness>,
    pub h0_agrees: bool,
    pub h0_witness: Option<H0Witness>,
    pub degrees_checked: usize,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.validate_ok && self.acyclic && self.h0_agrees
    }
}

/// Build the star-product complex resolving `M/IM` and certify it.
///
/// Refuses when a variable divides degrees of minimal generators on both
/// sides (the construction is only certified under disjoint generator
/// supports; for `M = S/J` the module is generated in degree zero and the
/// condition is vacuous).
pub fn resolve_product<F: Field>(
    field: &F,
    ideal_i: &MonomialIdeal,
    module: &ModuleSpec,
    max_gens: usize,
) -> Result<(ChainComplex<F>, VerificationReport), PipelineError> {
    let shared: Vec<usize> = ideal_i
        .gens_vars()
        .intersection(&module.module_gens_vars())
        .copied()
        .collect();
    if !shared.is_empty() {
        return Err(PipelineError::Hypothesis {
            shared: shared.into_iter().map(var_name).collect(),
        });
    }
    let j = module.ideal();
    let f_res = resolve(field, ideal_i, TaylorMode::Quotient, max_gens)?;
    let g_res = resolve(field, j, module.taylor_mode(), max_gens)?;
    let star = star_complex(&f_res, &g_res);

    let validate_ok = star.validate().is_ok();
    let witness = if validate_ok {
        acyclic_witness(&star)?
    } else {
        None
    };
    let acyclic = validate_ok && witness.is_none();

    let sum = ideal_i.sum(j)?;
    let ij = ideal_i.product(j)?;
    let mut extra: Vec<Monomial> = sum.gens().to_vec();
    extra.extend(ij.gens().iter().cloned());
    let degrees = scan_degrees(star.nvars(), &star.all_shifts(), &extra);
    let direct = |b: &Monomial| -> usize {
        match module {
            ModuleSpec::Quotient(_) => 1 - sum.contains(b) as usize,
            ModuleSpec::Ideal(j) => j.contains(b) as usize - ij.contains(b) as usize,
        }
    };
    let h0_witness = if acyclic {
        exec::find_map_first(&degrees, |b| {
            let actual = h0_hilbert_at(&star, b);
            let expected = direct(b);
            (actual != expected).then(|| H0Witness {
                degree: b.exps().to_vec(),
                degree_monomial: b.to_string(),
                expected,
                actual,
            })
        })
    } else {
        None
    };
    let h0_agrees = acyclic && h0_witness.is_none();

    let report = VerificationReport {
        ideal_i: ideal_i.to_string(),
        module_kind: module.kind_str().to_string(),
        ideal_j: j.to_string(),
        field: field.name(),
        star_ranks: star.ranks(),
        star_length: star.length(),
        validate_ok,
        acyclic,
        witness,
        h0_agrees,
        h0_witness,
        degrees_checked: degrees.len(),
    };
    Ok((star, report))
}

/// Regularity and projective-dimension data for one pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub ideal_i: String,
    pub module_kind: String,
    pub ideal_j: String,
    pub field: String,
    pub pd_i: usize,
    pub pd_m: usize,
    pub pd_m_over_im: usize,
    pub reg_i: i64,
    pub reg_m: i64,
    pub reg_im: i64,
    pub reg_m_over_im: i64,
    /// (a): pd(M/IM) <= pd(M) + pd(I) + 1
    pub pd_bound_holds: bool,
    /// (b): reg(IM) <= reg(I) + reg(M)
    pub reg_bound_holds: bool,
    pub gens_overlap: Vec<String>,
    pub overlap_size: usize,
    pub intersection_equals_product: bool,
}

fn table_invariants(table: &BettiTable, what: &str) -> Result<(i64, usize), PipelineError> {
    match (table.reg(), table.pd()) {
        (Some(r), Some(p)) => Ok((r, p)),
        _ => Err(PipelineError::ZeroModule(what.to_string())),
    }
}

/// Compute all bound data for the pair `(I, M)`.
///
/// Monomial ideals (`I`, `J`, `IJ`, `I+J`) get lattice-homology tables;
/// quotient modules get minimalized mapping cones. For `M = J` with
/// disjoint generator supports the caller may pass the certified star
/// complex, whose minimalization is the minimal resolution of `J/IJ`;
/// otherwise the cone over `T(IJ) -> T(J)` is used.
pub fn check_bounds<F: Field>(
    field: &F,
    ideal_i: &MonomialIdeal,
    module: &ModuleSpec,
    max_gens: usize,
    star: Option<&ChainComplex<F>>,
) -> Result<BoundsReport, PipelineError> {
    let j = module.ideal();
    let overlap: Vec<usize> = ideal_i
        .gens_vars()
        .intersection(&j.gens_vars())
        .copied()
        .collect();
    let ij = ideal_i.product(j)?;
    let intersection_equals_product = ij == ideal_i.intersection(j)?;

    let (reg_i, pd_i) = table_invariants(&upper_koszul_betti(field, ideal_i), "I")?;
    let table_j = upper_koszul_betti(field, j);

    let (reg_m, pd_m, reg_im, pd_m_over_im, reg_m_over_im) = match module {
        ModuleSpec::Quotient(_) => {
            // M = S/J, IM = (I+J)/J, M/IM = S/(I+J)
            let (reg_m, pd_m) = if j.is_zero() {
                (0, 0)
            } else {
                let (r, p) = table_invariants(&table_j, "J")?;
                (r - 1, p + 1)
            };
            let sum = ideal_i.sum(j)?;
            let (reg_sum, pd_sum) = table_invariants(&upper_koszul_betti(field, &sum), "I+J")?;
            let im_table = quotient_module_betti(field, &sum, j, max_gens)?;
            let (reg_im, _) = table_invariants(&im_table, "I*M")?;
            (reg_m, pd_m, reg_im, pd_sum + 1, reg_sum - 1)
        }
        ModuleSpec::Ideal(_) => {
            // M = J, IM = IJ, M/IM = J/IJ
            let (reg_m, pd_m) = table_invariants(&table_j, "J")?;
            let (reg_im, _) = table_invariants(&upper_koszul_betti(field, &ij), "IJ")?;
            let mim_table = match star {
                Some(c) => betti_of_minimal(&minimalize(c)),
                None => quotient_module_betti(field, j, &ij, max_gens)?,
            };
            let (reg_mim, pd_mim) = table_invariants(&mim_table, "M/IM")?;
            (reg_m, pd_m, reg_im, pd_mim, reg_mim)
        }
    };

    Ok(BoundsReport {
        ideal_i: ideal_i.to_string(),
        module_kind: module.kind_str().to_string(),
        ideal_j: j.to_string(),
        field: field.name(),
        pd_i,
        pd_m,
        pd_m_over_im,
        reg_i,
        reg_m,
        reg_im,
        reg_m_over_im,
        pd_bound_holds: pd_m_over_im <= pd_m + pd_i + 1,
        reg_bound_holds: reg_im <= reg_i + reg_m,
        gens_overlap: overlap.iter().copied().map(var_name).collect(),
        overlap_size: overlap.len(),
        intersection_equals_product,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::parse::parse_ideals;

    fn gf() -> PrimeField {
        PrimeField::default_prime()
    }

    fn pair(i: &str, j: &str) -> (MonomialIdeal, MonomialIdeal) {
        let v = parse_ideals(&[i, j]).unwrap();
        (v[0].clone(), v[1].clone())
    }

    #[test]
    fn principal_times_quotient() {
        // I = (x1^2), M = S/(x2): acyclic, H0 = S/(x1^2, x2),
        // checked at the 4 lattice points.
        let (i, j) = pair("x1^2", "x2");
        let (star, report) =
            resolve_product(&gf(), &i, &ModuleSpec::Quotient(j), 16).unwrap();
        assert!(report.all_pass());
        assert_eq!(star.ranks(), vec![1, 2, 1]);
        assert_eq!(report.degrees_checked, 4);
    }

    #[test]
    fn disjoint_quotient_pipeline_and_bounds() {
        let (i, j) = pair("x2, x3", "x1^2, x4^3");
        let m = ModuleSpec::Quotient(j);
        let (_, report) = resolve_product(&gf(), &i, &m, 16).unwrap();
        assert!(report.all_pass(), "{report:?}");
        let bounds = check_bounds(&gf(), &i, &m, 16, None).unwrap();
        assert!(bounds.pd_bound_holds);
        assert!(bounds.reg_bound_holds);
        assert!(bounds.intersection_equals_product);
        assert_eq!(bounds.overlap_size, 0);
    }

    #[test]
    fn hypothesis_gate_refuses_shared_variable() {
        let (i, j) = pair("x2", "x2*x3");
        let err = resolve_product(&gf(), &i, &ModuleSpec::Ideal(j), 16).unwrap_err();
        match err {
            PipelineError::Hypothesis { shared } => assert_eq!(shared, vec!["x2"]),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn quotient_mode_accepts_any_overlap() {
        // S/J is generated in degree zero, so the gate is vacuous.
        let (i, j) = pair("x1*x2", "x2*x3");
        let m = ModuleSpec::Quotient(j);
        let (_, report) = resolve_product(&gf(), &i, &m, 16).unwrap();
        assert!(report.all_pass());
    }

    #[test]
    fn counterexample_bounds() {
        let (i, j) = pair("x2, x3", "x1^2*x2, x1*x2*x3, x2*x3*x4, x3*x4^2");
        let bounds = check_bounds(&gf(), &i, &ModuleSpec::Ideal(j), 16, None).unwrap();
        assert_eq!(bounds.reg_i, 1);
        assert_eq!(bounds.reg_m, 3);
        assert_eq!(bounds.reg_im, 5);
        assert!(!bounds.reg_bound_holds);
        assert_eq!(bounds.gens_overlap, vec!["x2", "x3"]);
        assert_eq!(bounds.overlap_size, 2);
    }

    #[test]
    fn coprime_principal_bounds() {
        let (i, j) = pair("x1", "x2");
        let bounds = check_bounds(&gf(), &i, &ModuleSpec::Ideal(j), 16, None).unwrap();
        assert_eq!(bounds.reg_im, 2);
        assert!(bounds.pd_bound_holds);
        assert!(bounds.reg_bound_holds);
        assert!(bounds.intersection_equals_product);
    }

    #[test]
    fn single_overlap_principal_bounds() {
        // I = (x1x2), J = (x2x3): IJ = (x1 x2^2 x3), reg 4 <= 2 + 2
        let (i, j) = pair("x1*x2", "x2*x3");
        let bounds = check_bounds(&gf(), &i, &ModuleSpec::Ideal(j), 16, None).unwrap();
        assert_eq!(bounds.reg_im, 4);
        assert_eq!(bounds.overlap_size, 1);
        assert!(bounds.reg_bound_holds);
        assert!(bounds.pd_bound_holds);
    }

    #[test]
    fn ideal_mode_star_and_bounds_agree_with_cone_route() {
        let (i, j) = pair("x1^2, x1*x2", "x3*x4, x4^2");
        let m = ModuleSpec::Ideal(j);
        let (star, report) = resolve_product(&gf(), &i, &m, 16).unwrap();
        assert!(report.all_pass());
        let with_star = check_bounds(&gf(), &i, &m, 16, Some(&star)).unwrap();
        let with_cone = check_bounds(&gf(), &i, &m, 16, None).unwrap();
        assert_eq!(with_star, with_cone);
    }
}
