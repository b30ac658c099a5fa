//! Multigraded free resolutions of monomial ideals and their products.
//!
//! The crate builds Taylor resolutions, star products of resolutions, and
//! mapping cones over an exact coefficient field (GF(p) or the rationals),
//! evaluates complexes degreewise on lcm lattices, extracts Betti tables,
//! Castelnuovo-Mumford regularity, and projective dimension, and runs
//! seeded experiment suites over random ideal pairs. Degreewise scans and
//! experiment trials are data-parallel via rayon (`parallel` feature,
//! enabled by default) with an identical sequential fallback.

pub mod betti;
pub mod complex;
pub mod cone;
pub mod exec;
pub mod experiments;
pub mod field;
pub mod free_module;
pub mod ideal;
pub mod matrix;
pub mod minimize;
pub mod monomial;
pub mod oracle;
pub mod parse;
pub mod pipeline;
pub mod polar;
pub mod star;
pub mod taylor;

pub use betti::{betti_numbers, reg_pd, BettiTable};
pub use complex::{
    acyclic_witness, evaluate_at_degree, h0_hilbert_at, homology_at, is_acyclic, scan_degrees,
    ChainComplex, ComplexError, Witness,
};
pub use cone::{mapping_cone, quotient_module_betti, resolve_quotient_module};
pub use experiments::{
    counterexample_report, random_ideal, run_scenario, ExperimentReport, GeneratorSpec, Scenario,
};
pub use field::{Field, FieldConfig, PrimeField, Rationals, DEFAULT_PRIME};
pub use free_module::{BasisElt, FreeModule, MonomialMatrix};
pub use ideal::{gens_set, minimal_generators, MonomialIdeal};
pub use matrix::{homology_dim, DenseMatrix};
pub use minimize::minimalize;
pub use monomial::{lcm_gcd, var_name, Monomial, VarSet};
pub use oracle::upper_koszul_betti;
pub use parse::{parse_ideal, parse_ideal_str, parse_ideals, ParseError};
pub use pipeline::{check_bounds, resolve_product, BoundsReport, ModuleSpec, VerificationReport};
pub use polar::{depolarize, polarize, PolarizationMap};
pub use star::{j_map, star_complex, star_map_left, star_map_right, star_module, tensor_module};
pub use taylor::{
    betti_of_minimal, minimal_betti, resolve, taylor_complex, TaylorMode, DEFAULT_MAX_GENS,
};
