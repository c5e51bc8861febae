//! Depth and Stanley depth of quotients `I/J` of square-free monomial ideals.
//!
//! The crate enumerates the poset `P_{I\J}` of square-free monomials in
//! `I \ J`, derives the degree counts `ρ_t` and alternating sums `α_j`,
//! evaluates upper-bound certificates for `depth I/J` from those counts,
//! computes the exact depth from the square-free strands of the Koszul
//! complex, and computes the Stanley depth by interval-partition search.
//!
//! ```
//! use sqdepth_core::{exact_depth, stanley_depth, FieldSpec, QuotientInstance};
//!
//! // I = (x1, x3), J = (x1 x4) in K[x1, ..., x4].
//! let inst = QuotientInstance::from_supports(4, &[vec![1], vec![3]], &[vec![1, 4]]).unwrap();
//! assert_eq!(exact_depth(&inst, FieldSpec::Rationals).unwrap(), 3);
//! assert_eq!(stanley_depth(&inst).0, 3);
//! ```

pub mod analysis;
pub mod certificates;
pub mod error;
pub mod format;
pub mod generate;
pub mod ideal;
pub mod koszul;
pub mod linalg;
pub mod monomial;
pub mod poset;
pub mod scan;
pub mod stanley;

pub use analysis::{analyze, bound_certificates, AnalysisOptions, AnalysisReport, IntervalRecord};
pub use certificates::{Certificate, CertificateKind, Conclusion};
pub use error::{Error, Result};
pub use format::{parse_instance, serialize_instance, InstanceFile};
pub use generate::{generate_instance, GeneratorParams};
pub use ideal::{ideal_contains, minimalize, validate_pair, MonomialIdeal, QuotientInstance};
pub use koszul::{
    boundary_sign, build_strand, exact_depth, homology_profile, strand_homology, HomologyProfile,
    StrandComplex,
};
pub use linalg::{compose_is_zero, rank, rank_pair_check, FieldSpec, SignMatrix};
pub use monomial::SquareFreeMonomial;
pub use poset::{alpha_table, enumerate_quotient, rho, PosetLayers, RhoTable};
pub use scan::{conjecture_scan, ScanReport};
pub use stanley::{
    partition_exists, stanley_depth, verify_partition, Interval, IntervalPartition,
    PartitionDefect,
};
