//! Full analysis of one instance, with every fired certificate cross-checked
//! against the exact depth.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::certificates::{
    check_corollary_c, check_lemma_key, check_lower_bound, check_proposition_el, check_theorem_m,
    check_theorem_m0, Certificate,
};
use crate::error::Result;
use crate::format::InstanceFile;
use crate::ideal::QuotientInstance;
use crate::koszul::{build_strand, exact_depth};
use crate::linalg::{compose_is_zero, rank_pair_check, FieldSpec};
use crate::monomial::SquareFreeMonomial;
use crate::poset::{enumerate_quotient, PosetLayers, RhoTable};
use crate::stanley::{stanley_depth_of, verify_partition, IntervalPartition};

/// Interval in report form: 1-based supports of bottom and top.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalRecord {
    pub bottom: Vec<usize>,
    pub top: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub instance: InstanceFile,
    pub d: usize,
    pub hypothesis_flag: bool,
    pub rho: BTreeMap<usize, usize>,
    pub alpha: BTreeMap<usize, i64>,
    pub certificates: Vec<Certificate>,
    /// Exact depth keyed by field name (`Q`, `GF(2)`, ...).
    pub depth: BTreeMap<String, usize>,
    pub sdepth: Option<usize>,
    pub witness: Option<Vec<IntervalRecord>>,
    pub consistent: bool,
    #[serde(default)]
    pub inconsistencies: Vec<String>,
    #[serde(default)]
    pub warnings: Vec<String>,
}

impl AnalysisReport {
    /// Smallest upper bound from fired Theorem m certificates.
    pub fn theorem_m_bound(&self) -> Option<usize> {
        self.certificates
            .iter()
            .filter(|c| c.kind == crate::certificates::CertificateKind::TheoremM)
            .filter_map(Certificate::upper_bound)
            .min()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}

#[derive(Clone, Debug)]
pub struct AnalysisOptions {
    pub fields: Vec<FieldSpec>,
    /// Skip the Stanley depth search when `|P|` exceeds this.
    pub max_sdepth_poset: Option<usize>,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            fields: vec![FieldSpec::Rationals, FieldSpec::PrimeField(2)],
            max_sdepth_poset: Some(40),
        }
    }
}

/// Certificates that need neither homology nor depth.
pub fn bound_certificates(inst: &QuotientInstance, table: &RhoTable) -> Vec<Certificate> {
    let mut certs = vec![check_lower_bound(inst), check_theorem_m0(inst, table)];
    certs.extend(check_theorem_m(inst, table));
    certs.push(check_proposition_el(inst, table));
    certs
}

pub(crate) fn interval_records(p: &IntervalPartition) -> Vec<IntervalRecord> {
    p.intervals
        .iter()
        .map(|iv| IntervalRecord {
            bottom: iv.bottom.support(),
            top: iv.top.support(),
        })
        .collect()
}

/// Integer and cross-field sanity checks on the full-multidegree strand.
fn strand_sanity(inst: &QuotientInstance, fields: &[FieldSpec]) -> Vec<String> {
    let strand = build_strand(inst, &SquareFreeMonomial::full(inst.n()));
    let mut out = Vec::new();
    let maps: Vec<_> = strand.boundaries().collect();
    for pair in maps.windows(2) {
        let ((_, lower), (i, upper)) = (pair[0], pair[1]);
        if !compose_is_zero(lower, upper).unwrap_or(false) {
            out.push(format!("∂∘∂ ≠ 0 at chain degree {i}"));
        }
    }
    for (i, m) in &maps {
        for f in fields.iter().filter(|f| **f != FieldSpec::Rationals) {
            if let Err(e) = rank_pair_check(m, FieldSpec::Rationals, *f) {
                out.push(format!("boundary {i}: {e}"));
            }
        }
    }
    out
}

pub fn analyze(inst: &QuotientInstance, options: &AnalysisOptions) -> Result<AnalysisReport> {
    let layers = enumerate_quotient(inst);
    analyze_with_layers(inst, &layers, options)
}

pub(crate) fn analyze_with_layers(
    inst: &QuotientInstance,
    layers: &PosetLayers,
    options: &AnalysisOptions,
) -> Result<AnalysisReport> {
    let table = RhoTable::from_layers(layers, inst.n());
    let mut certificates = bound_certificates(inst, &table);
    let mut depth = BTreeMap::new();
    let mut inconsistencies = Vec::new();
    let mut warnings = Vec::new();
    if !inst.hypothesis_flag() {
        warnings.push(format!(
            "J has a minimal generator of degree ≤ d = {}; the standing degree hypothesis fails",
            inst.d()
        ));
    }

    let field_free = certificates.len();
    for &field in &options.fields {
        let dep = exact_depth(inst, field)?;
        depth.insert(field.to_string(), dep);
        certificates.push(check_corollary_c(inst, &table, dep, field));
        certificates.extend(check_lemma_key(inst, field, dep));
    }
    for (k, cert) in certificates.iter().enumerate() {
        let fields: Vec<FieldSpec> = match cert.field {
            Some(f) => vec![f],
            None if k < field_free => options.fields.clone(),
            None => Vec::new(),
        };
        for f in fields {
            let dep = depth[&f.to_string()];
            for v in cert.violations(dep) {
                inconsistencies.push(format!("{f}: {v}"));
            }
        }
    }
    inconsistencies.extend(strand_sanity(inst, &options.fields));

    let (sdepth, witness) = match options.max_sdepth_poset {
        Some(cap) if layers.len() > cap => {
            warnings.push(format!(
                "sdepth skipped: |P| = {} exceeds cap {cap}",
                layers.len()
            ));
            (None, None)
        }
        _ => {
            let (s, p) = stanley_depth_of(layers);
            if let Err(defect) = verify_partition(inst, &p) {
                inconsistencies.push(format!("sdepth witness invalid: {defect}"));
            }
            (Some(s), Some(interval_records(&p)))
        }
    };

    Ok(AnalysisReport {
        instance: InstanceFile::from_instance(inst),
        d: inst.d(),
        hypothesis_flag: inst.hypothesis_flag(),
        rho: table.rho.clone(),
        alpha: table.alpha.clone(),
        certificates,
        depth,
        sdepth,
        witness,
        consistent: inconsistencies.is_empty(),
        inconsistencies,
        warnings,
    })
}
