//! Seeded sweeps: exact depth, Stanley depth and certificates over many
//! generated instances.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{analyze_with_layers, AnalysisOptions};
use crate::error::Result;
use crate::format::InstanceFile;
use crate::generate::{generate_instance, GeneratorParams};
use crate::linalg::FieldSpec;
use crate::poset::enumerate_quotient;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanEntry {
    pub index: u64,
    pub instance: InstanceFile,
    pub d: usize,
    pub depth: BTreeMap<String, usize>,
    pub sdepth: Option<usize>,
    pub theorem_m_bound: Option<usize>,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanFinding {
    pub index: u64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub params: GeneratorParams,
    pub count: u64,
    pub fields: Vec<FieldSpec>,
    pub entries: Vec<ScanEntry>,
    /// Instances with `sdepth < depth` over some field.
    pub conjecture_violations: Vec<ScanFinding>,
    /// Instances whose sdepth lies below the best fired Theorem m bound.
    pub sdepth_below_theorem_m: Vec<ScanFinding>,
    /// Fired certificates contradicted by exact depth.
    pub theorem_violations: Vec<ScanFinding>,
    pub sdepth_skipped: u64,
}

impl ScanReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scan serialization")
    }
}

/// Generate `count` instances from `params` and analyze each one.
///
/// Output depends only on the arguments; instances are processed in
/// parallel but collected by index.
pub fn conjecture_scan(
    params: &GeneratorParams,
    count: u64,
    options: &AnalysisOptions,
) -> Result<ScanReport> {
    let analyzed: Vec<_> = (0..count)
        .into_par_iter()
        .map(|index| {
            let inst = generate_instance(params, index);
            let layers = enumerate_quotient(&inst);
            analyze_with_layers(&inst, &layers, options).map(|r| (index, r))
        })
        .collect::<Result<_>>()?;

    let mut report = ScanReport {
        params: params.clone(),
        count,
        fields: options.fields.clone(),
        entries: Vec::with_capacity(analyzed.len()),
        conjecture_violations: Vec::new(),
        sdepth_below_theorem_m: Vec::new(),
        theorem_violations: Vec::new(),
        sdepth_skipped: 0,
    };
    for (index, r) in analyzed {
        let bound = r.theorem_m_bound();
        match r.sdepth {
            Some(s) => {
                for (field, &dep) in &r.depth {
                    if s < dep {
                        report.conjecture_violations.push(ScanFinding {
                            index,
                            detail: format!("sdepth {s} < depth {dep} over {field}"),
                        });
                    }
                }
                if let Some(b) = bound.filter(|&b| s < b) {
                    report.sdepth_below_theorem_m.push(ScanFinding {
                        index,
                        detail: format!("sdepth {s} < Theorem m bound {b}"),
                    });
                }
            }
            None => report.sdepth_skipped += 1,
        }
        for detail in &r.inconsistencies {
            report.theorem_violations.push(ScanFinding {
                index,
                detail: detail.clone(),
            });
        }
        report.entries.push(ScanEntry {
            index,
            instance: r.instance,
            d: r.d,
            depth: r.depth,
            sdepth: r.sdepth,
            theorem_m_bound: bound,
            consistent: r.consistent,
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_scan() {
        let r = conjecture_scan(&GeneratorParams::desk(4, 1), 0, &AnalysisOptions::default()).unwrap();
        assert!(r.entries.is_empty());
        assert!(r.conjecture_violations.is_empty());
        assert_eq!(r.sdepth_skipped, 0);
    }

    #[test]
    fn scan_is_reproducible() {
        let params = GeneratorParams::desk(5, 7);
        let a = conjecture_scan(&params, 40, &AnalysisOptions::default()).unwrap();
        let b = conjecture_scan(&params, 40, &AnalysisOptions::default()).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert!(a.theorem_violations.is_empty(), "{:?}", a.theorem_violations);
    }
}
