//! The poset of square-free monomials of `I\J`, stratified by degree.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::ideal::QuotientInstance;
use crate::monomial::{canonical_cmp, full_mask, SquareFreeMonomial};

/// Square-free monomials of `I\J` grouped by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetLayers {
    n: usize,
    d: usize,
    /// `layers[t]` for `t` in `0..=n`; layers below `d` are empty.
    layers: Vec<Vec<SquareFreeMonomial>>,
}

impl PosetLayers {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Layer of degree `t`; empty outside `d..=n`.
    pub fn layer(&self, t: usize) -> &[SquareFreeMonomial] {
        self.layers.get(t).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn rho(&self, t: usize) -> usize {
        self.layer(t).len()
    }

    pub fn len(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Largest degree with a nonempty layer.
    pub fn max_degree(&self) -> usize {
        (0..self.layers.len())
            .rev()
            .find(|&t| !self.layers[t].is_empty())
            .unwrap_or(self.d)
    }

    /// All elements in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = &SquareFreeMonomial> {
        self.layers.iter().flatten()
    }
}

/// Enumerate `I\J` by walking all subsets of `{1..n}`.
pub fn enumerate_quotient(inst: &QuotientInstance) -> PosetLayers {
    let n = inst.n();
    let mut layers = vec![Vec::new(); n + 1];
    for bits in 0..=full_mask(n) {
        if inst.in_quotient_bits(bits) {
            layers[bits.count_ones() as usize].push(bits);
        }
    }
    let layers = layers
        .into_iter()
        .map(|mut layer| {
            layer.sort_by(|a, b| canonical_cmp(*a, *b));
            layer
                .into_iter()
                .map(|b| SquareFreeMonomial::from_bits_unchecked(n, b))
                .collect()
        })
        .collect();
    PosetLayers {
        n,
        d: inst.d(),
        layers,
    }
}

/// Number of square-free monomials of degree `t` in `I\J` (0 outside `d..=n`).
pub fn rho(inst: &QuotientInstance, t: usize) -> usize {
    let n = inst.n();
    if t < inst.d() || t > n {
        return 0;
    }
    (0..=full_mask(n))
        .filter(|b| b.count_ones() as usize == t && inst.in_quotient_bits(*b))
        .count()
}

/// Degree counts `ρ_t` and alternating sums `α_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoTable {
    pub d: usize,
    pub rho: BTreeMap<usize, usize>,
    pub alpha: BTreeMap<usize, i64>,
}

impl RhoTable {
    pub fn from_layers(layers: &PosetLayers, t: usize) -> Self {
        let d = layers.d();
        let rho: BTreeMap<usize, usize> = (d..=t.max(d)).map(|j| (j, layers.rho(j))).collect();
        let alpha = (d..=t)
            .map(|j| {
                // α_j = Σ_{i=0}^{j-d} (-1)^{j-d+i} ρ_{d+i}
                let sum: i64 = (0..=j - d)
                    .map(|i| {
                        let sign = if (j - d + i).is_multiple_of(2) { 1 } else { -1 };
                        sign * layers.rho(d + i) as i64
                    })
                    .sum();
                (j, sum)
            })
            .collect();
        RhoTable { d, rho, alpha }
    }

    pub fn rho(&self, t: usize) -> usize {
        self.rho.get(&t).copied().unwrap_or(0)
    }

    pub fn alpha(&self, j: usize) -> Option<i64> {
        self.alpha.get(&j).copied()
    }
}

/// `α_j` for `d ≤ j ≤ t` via the closed-form alternating sum.
pub fn alpha_table(inst: &QuotientInstance, t: usize) -> RhoTable {
    RhoTable::from_layers(&enumerate_quotient(inst), t.min(inst.n()))
}
