//! Depth certificates: each statement evaluated on the numbers of one instance.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ideal::QuotientInstance;
use crate::koszul::build_strand;
use crate::linalg::{rank, FieldSpec};
use crate::monomial::SquareFreeMonomial;
use crate::poset::RhoTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    /// `depth ≥ d` under the standing degree hypothesis.
    LowerBoundD,
    /// `ρ_d > ρ_{d+1}` forces `depth = d`.
    TheoremM0,
    /// `ρ_{t+1} < α_t` forces `depth ≤ t`, with equality once `depth ≥ t`.
    TheoremM,
    /// Principal `I` with `ρ_{d+1} > ρ_{d+2} + 1` has `depth = d + 1`.
    PropositionEl,
    /// `depth ≥ d + 2` forces `ρ_d ≤ ρ_{d+1} ≤ ρ_d + ρ_{d+2}`.
    CorollaryC,
    /// Rank identity of the full-multidegree strand maps.
    LemmaKey,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CertificateKind::LowerBoundD => "lower_bound_d",
            CertificateKind::TheoremM0 => "theorem_m0",
            CertificateKind::TheoremM => "theorem_m",
            CertificateKind::PropositionEl => "proposition_el",
            CertificateKind::CorollaryC => "corollary_c",
            CertificateKind::LemmaKey => "lemma_key",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    DepthEquals(usize),
    DepthAtMost(usize),
    DepthAtLeast(usize),
    /// `depth = v` provided `depth ≥ v` is known independently.
    DepthEqualsIfAtLeast(usize),
    InequalityHolds,
    RankIdentityHolds,
}

impl Conclusion {
    /// Whether an exact depth value contradicts this conclusion.
    pub fn contradicts(&self, depth: usize) -> bool {
        match *self {
            Conclusion::DepthEquals(v) => depth != v,
            Conclusion::DepthAtMost(v) => depth > v,
            Conclusion::DepthAtLeast(v) => depth < v,
            Conclusion::DepthEqualsIfAtLeast(v) => depth > v,
            Conclusion::InequalityHolds | Conclusion::RankIdentityHolds => false,
        }
    }
}

/// One statement evaluated on one instance.
///
/// `numbers` records every quantity the hypothesis consumed so a failed
/// cross-check can be diagnosed from the report alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    /// Set for certificates that depend on ranks or depth over one field.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    pub numbers: BTreeMap<String, i64>,
    pub conclusions: Vec<Conclusion>,
    pub fired: bool,
    /// Set when the certificate fired but its own arithmetic check failed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl Certificate {
    fn new(kind: CertificateKind) -> Self {
        Certificate {
            kind,
            t: None,
            field: None,
            numbers: BTreeMap::new(),
            conclusions: Vec::new(),
            fired: false,
            violation: None,
            warnings: Vec::new(),
        }
    }

    fn number(mut self, key: &str, value: impl TryInto<i64>) -> Self {
        let v = value.try_into().unwrap_or(i64::MAX);
        self.numbers.insert(key.to_string(), v);
        self
    }

    fn hypothesis_warning(mut self, inst: &QuotientInstance) -> Self {
        if !inst.hypothesis_flag() {
            self.warnings.push(format!(
                "J has a minimal generator of degree ≤ d = {}; evaluated with ρ_d(I\\J)",
                inst.d()
            ));
        }
        self
    }

    /// Problems with this certificate given the exact depth over its field.
    pub fn violations(&self, depth: usize) -> Vec<String> {
        if !self.fired {
            return Vec::new();
        }
        let mut out: Vec<String> = self.violation.iter().cloned().collect();
        for c in &self.conclusions {
            if c.contradicts(depth) {
                out.push(format!(
                    "{}{} concluded {:?} but exact depth is {}",
                    self.kind,
                    self.t.map(|t| format!(" (t = {t})")).unwrap_or_default(),
                    c,
                    depth
                ));
            }
        }
        out
    }

    /// Tightest upper bound on depth carried by a fired certificate.
    pub fn upper_bound(&self) -> Option<usize> {
        if !self.fired {
            return None;
        }
        self.conclusions
            .iter()
            .filter_map(|c| match *c {
                Conclusion::DepthEquals(v) | Conclusion::DepthAtMost(v) => Some(v),
                _ => None,
            })
            .min()
    }
}

/// `depth ≥ d` when every generator of `J` has degree `> d`.
pub fn check_lower_bound(inst: &QuotientInstance) -> Certificate {
    let mut c = Certificate::new(CertificateKind::LowerBoundD)
        .number("d", inst.d())
        .number("min_deg_j", min_degree(inst.ideal_j().generators()));
    c.fired = inst.hypothesis_flag();
    c.conclusions.push(Conclusion::DepthAtLeast(inst.d()));
    if !c.fired {
        c.warnings
            .push("standing hypothesis fails: J has a generator of degree ≤ d".into());
    }
    c
}

fn min_degree(gens: &[SquareFreeMonomial]) -> i64 {
    gens.iter().map(|g| g.degree() as i64).min().unwrap_or(-1)
}

/// `ρ_d > ρ_{d+1} ⇒ depth = d`.
pub fn check_theorem_m0(inst: &QuotientInstance, table: &RhoTable) -> Certificate {
    let d = inst.d();
    let (rd, rd1) = (table.rho(d), table.rho(d + 1));
    let mut c = Certificate::new(CertificateKind::TheoremM0)
        .number("rho_d", rd)
        .number("rho_d+1", rd1)
        .hypothesis_warning(inst);
    c.t = Some(d);
    c.fired = rd > rd1;
    c.conclusions.push(Conclusion::DepthEquals(d));
    c
}

/// One certificate per `t ∈ [d, n]`: fired iff `ρ_{t+1} < α_t`.
///
/// `table` must cover `α_t` up to `t = n`.
pub fn check_theorem_m(inst: &QuotientInstance, table: &RhoTable) -> Vec<Certificate> {
    (inst.d()..=inst.n())
        .map(|t| {
            let alpha = table.alpha(t).expect("alpha table shorter than n");
            let next = table.rho(t + 1);
            let mut c = Certificate::new(CertificateKind::TheoremM)
                .number("rho_t+1", next)
                .number("alpha_t", alpha)
                .hypothesis_warning(inst);
            c.t = Some(t);
            c.fired = (next as i64) < alpha;
            // Either depth < t already, or depth ≥ t and equality is forced.
            c.conclusions = vec![
                Conclusion::DepthAtMost(t),
                Conclusion::DepthEqualsIfAtLeast(t),
            ];
            c
        })
        .collect()
}

/// Principal `I = (f)` with `s = ρ_{d+1} > ρ_{d+2} + 1 ⇒ depth = d + 1`.
pub fn check_proposition_el(inst: &QuotientInstance, table: &RhoTable) -> Certificate {
    let d = inst.d();
    let principal = inst.ideal_i().generators().len() == 1;
    let (s, q) = (table.rho(d + 1), table.rho(d + 2));
    let mut c = Certificate::new(CertificateKind::PropositionEl)
        .number("generators_i", inst.ideal_i().generators().len())
        .number("s", s)
        .number("q", q);
    c.fired = principal && s > q + 1;
    c.conclusions.push(Conclusion::DepthEquals(d + 1));
    c
}

/// Inequalities forced by `depth ≥ d + 2`, checked against the exact depth.
pub fn check_corollary_c(
    inst: &QuotientInstance,
    table: &RhoTable,
    depth: usize,
    field: FieldSpec,
) -> Certificate {
    let d = inst.d();
    let (r0, r1, r2) = (table.rho(d), table.rho(d + 1), table.rho(d + 2));
    let mut c = Certificate::new(CertificateKind::CorollaryC)
        .number("depth", depth)
        .number("rho_d", r0)
        .number("rho_d+1", r1)
        .number("rho_d+2", r2)
        .hypothesis_warning(inst);
    c.field = Some(field);
    c.fired = depth >= d + 2;
    if c.fired {
        let mut broken = Vec::new();
        if r0 > r1 {
            broken.push(format!("ρ_d = {r0} > ρ_(d+1) = {r1}"));
        }
        if r1 > r0 + r2 {
            broken.push(format!("ρ_(d+1) = {r1} > ρ_d + ρ_(d+2) = {}", r0 + r2));
        }
        if r2 == 0 && r0 != r1 {
            broken.push(format!("ρ_(d+2) = 0 but ρ_d = {r0} ≠ ρ_(d+1) = {r1}"));
        }
        if broken.is_empty() {
            c.conclusions.push(Conclusion::InequalityHolds);
        } else {
            c.violation = Some(format!("corollary_c: {}", broken.join("; ")));
        }
    }
    c
}

/// Rank data of `h_{n-d-i+1}` and `h_{n-d-i}` at the full multidegree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StrandRanks {
    pub i: usize,
    /// `ρ_{d+i}`, the size of the middle basis.
    pub r: usize,
    pub rank_in: usize,
    pub rank_out: usize,
}

impl StrandRanks {
    pub fn kernel_dim(&self) -> usize {
        self.r - self.rank_out
    }
}

/// Ranks of the consecutive maps around each layer `d + i`, `0 ≤ i < n - d`.
pub fn full_strand_ranks(inst: &QuotientInstance, field: FieldSpec) -> Vec<StrandRanks> {
    let (n, d) = (inst.n(), inst.d());
    let strand = build_strand(inst, &SquareFreeMonomial::full(n));
    let rank_of = |chain: usize| strand.boundary(chain).map_or(0, |m| rank(m, field));
    (0..n - d)
        .map(|i| {
            let chain = n - d - i;
            StrandRanks {
                i,
                r: strand.basis(chain).len(),
                rank_in: rank_of(chain + 1),
                rank_out: rank_of(chain),
            }
        })
        .collect()
}

/// Two certificates per `i ∈ [0, n - d)`.
///
/// Clause 2 fires when `depth > d + i` and checks
/// `ρ_{d+i} = rank h_{n-d-i+1} + rank h_{n-d-i}`; clause 3 fires when the
/// rank sum falls short of `ρ_{d+i}` and concludes `depth ≤ d + i`.
pub fn check_lemma_key(inst: &QuotientInstance, field: FieldSpec, depth: usize) -> Vec<Certificate> {
    let d = inst.d();
    let mut out = Vec::new();
    for sr in full_strand_ranks(inst, field) {
        let sum = sr.rank_in + sr.rank_out;
        let base = Certificate::new(CertificateKind::LemmaKey)
            .number("i", sr.i)
            .number("r", sr.r)
            .number("rank_in", sr.rank_in)
            .number("rank_out", sr.rank_out)
            .number("kernel_dim", sr.kernel_dim());

        let mut identity = base.clone().number("clause", 2).number("depth", depth);
        identity.t = Some(d + sr.i);
        identity.field = Some(field);
        identity.fired = depth > d + sr.i;
        if identity.fired {
            if sr.r == sum {
                identity.conclusions.push(Conclusion::RankIdentityHolds);
            } else {
                identity.violation = Some(format!(
                    "lemma_key (i = {}): ρ = {} but rank sum = {} with depth {} > {}",
                    sr.i,
                    sr.r,
                    sum,
                    depth,
                    d + sr.i
                ));
            }
        }
        out.push(identity);

        let mut bound = base.number("clause", 3);
        bound.t = Some(d + sr.i);
        bound.field = Some(field);
        bound.fired = sr.r > sum;
        bound.conclusions.push(Conclusion::DepthAtMost(d + sr.i));
        out.push(bound);
    }
    out
}
