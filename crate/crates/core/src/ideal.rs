//! Square-free monomial ideals and validated quotient pairs `J ⊊ I`.

use crate::error::{Error, Result};
use crate::monomial::{SquareFreeMonomial, MAX_VARS};

/// A square-free monomial ideal given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<SquareFreeMonomial>,
}

impl MonomialIdeal {
    /// The ideal `(0)`.
    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            generators: Vec::new(),
        }
    }

    /// Minimal generators in canonical order.
    pub fn generators(&self) -> &[SquareFreeMonomial] {
        &self.generators
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, m: &SquareFreeMonomial) -> Result<bool> {
        ideal_contains(self, m)
    }

    #[inline]
    pub(crate) fn contains_bits(&self, bits: u32) -> bool {
        self.generators.iter().any(|g| g.bits() & !bits == 0)
    }
}

/// Keep only the divisibility-minimal generators, deduplicated and sorted.
pub fn minimalize(n: usize, gens: &[SquareFreeMonomial]) -> Result<MonomialIdeal> {
    if n == 0 || n > MAX_VARS {
        return Err(Error::VariableCount { n, max: MAX_VARS });
    }
    for g in gens {
        if g.n() != n {
            return Err(Error::AmbientMismatch {
                left: n,
                right: g.n(),
            });
        }
    }
    let mut sorted = gens.to_vec();
    sorted.sort();
    sorted.dedup();
    // In canonical order every proper divisor of g precedes g.
    let mut minimal: Vec<SquareFreeMonomial> = Vec::with_capacity(sorted.len());
    for g in sorted {
        if !minimal.iter().any(|h| h.divides_unchecked(&g)) {
            minimal.push(g);
        }
    }
    Ok(MonomialIdeal {
        n,
        generators: minimal,
    })
}

/// Some generator divides `m`.
pub fn ideal_contains(ideal: &MonomialIdeal, m: &SquareFreeMonomial) -> Result<bool> {
    if m.n() != ideal.n {
        return Err(Error::AmbientMismatch {
            left: ideal.n,
            right: m.n(),
        });
    }
    Ok(ideal.contains_bits(m.bits()))
}

/// A validated pair `J ⊊ I` of square-free monomial ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientInstance {
    n: usize,
    ideal_i: MonomialIdeal,
    ideal_j: MonomialIdeal,
    d: usize,
    hypothesis_flag: bool,
}

impl QuotientInstance {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ideal_i(&self) -> &MonomialIdeal {
        &self.ideal_i
    }

    pub fn ideal_j(&self) -> &MonomialIdeal {
        &self.ideal_j
    }

    /// Minimal degree of a square-free monomial of `I\J`.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Every minimal generator of `J` has degree at least `d + 1`.
    pub fn hypothesis_flag(&self) -> bool {
        self.hypothesis_flag
    }

    /// `m ∈ I` and `m ∉ J`.
    pub fn in_quotient(&self, m: &SquareFreeMonomial) -> bool {
        m.n() == self.n && self.in_quotient_bits(m.bits())
    }

    #[inline]
    pub(crate) fn in_quotient_bits(&self, bits: u32) -> bool {
        self.ideal_i.contains_bits(bits) && !self.ideal_j.contains_bits(bits)
    }

    /// Convenience constructor from 1-based supports.
    pub fn from_supports(n: usize, gens_i: &[Vec<usize>], gens_j: &[Vec<usize>]) -> Result<Self> {
        let to_monomials = |gens: &[Vec<usize>]| -> Result<Vec<SquareFreeMonomial>> {
            gens.iter()
                .map(|s| SquareFreeMonomial::from_support(n, s))
                .collect()
        };
        validate_pair(n, &to_monomials(gens_i)?, &to_monomials(gens_j)?)
    }
}

/// Minimalize both generator lists and check `J ⊊ I`.
pub fn validate_pair(
    n: usize,
    gens_i: &[SquareFreeMonomial],
    gens_j: &[SquareFreeMonomial],
) -> Result<QuotientInstance> {
    let ideal_i = minimalize(n, gens_i)?;
    let ideal_j = minimalize(n, gens_j)?;
    if ideal_i.generators.iter().any(|g| g.degree() == 0) {
        return Err(Error::UnitIdeal);
    }
    if let Some(g) = ideal_j
        .generators
        .iter()
        .find(|g| !ideal_i.contains_bits(g.bits()))
    {
        return Err(Error::not_contained(g));
    }
    // A degree-minimal monomial of I\J is a minimal generator of I.
    let d = ideal_i
        .generators
        .iter()
        .filter(|g| !ideal_j.contains_bits(g.bits()))
        .map(|g| g.degree())
        .min()
        .ok_or(Error::EmptyQuotient)?;
    let hypothesis_flag = ideal_j.generators.iter().all(|g| g.degree() > d);
    Ok(QuotientInstance {
        n,
        ideal_i,
        ideal_j,
        d,
        hypothesis_flag,
    })
}
