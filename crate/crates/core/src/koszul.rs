//! Multidegree strands of the Koszul complex `K(x; I/J)`.
//!
//! At a square-free multidegree `a` the strand has, in chain degree `i`, the
//! basis `m · e_F` where `m` runs over monomials of `I\J` dividing `a` with
//! `deg m = |a| - i`, and `F = supp(a) \ supp(m)`. The wedge `e_F` is taken
//! in increasing variable order, so the Koszul differential
//! `∂(e_{j_1} ∧ … ∧ e_{j_i}) = Σ (-1)^{k+1} x_{j_k} e_{…ĵ_k…}` becomes a
//! `{-1, 0, 1}` matrix between consecutive monomial layers.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::QuotientInstance;
use crate::linalg::{rank, FieldSpec, SignMatrix};
use crate::monomial::{canonical_cmp, full_mask, submasks, SquareFreeMonomial};

/// Coefficient of `b · e_{F \ j}` in `∂(f · e_F)`, `F = supp(ambient) \ supp(f)`.
///
/// Zero unless `b = f · x_j` for a variable `x_j` of `ambient` outside `f`;
/// otherwise `(-1)^{p+1}` where `p` is the 1-based position of `j` in `F`.
pub fn boundary_sign(
    f: &SquareFreeMonomial,
    b: &SquareFreeMonomial,
    ambient: &SquareFreeMonomial,
) -> i8 {
    sign_bits(f.bits(), b.bits(), ambient.bits())
}

#[inline]
fn sign_bits(f: u32, b: u32, ambient: u32) -> i8 {
    let extra = b & !f;
    if f & !b != 0 || extra.count_ones() != 1 || b & !ambient != 0 {
        return 0;
    }
    let complement = ambient & !f;
    let before = (complement & (extra - 1)).count_ones();
    if before.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The strand of `K(x; I/J)` at one square-free multidegree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrandComplex {
    multidegree: SquareFreeMonomial,
    /// `bases[i]`: monomials of degree `|a| - i` in `I\J` dividing `a`.
    bases: Vec<Vec<SquareFreeMonomial>>,
    /// `boundaries[i - 1]` maps chain degree `i` to `i - 1`, for `1 ≤ i ≤ |a|`.
    boundaries: Vec<SignMatrix>,
}

impl StrandComplex {
    pub fn multidegree(&self) -> SquareFreeMonomial {
        self.multidegree
    }

    /// Top chain degree `|a|`.
    pub fn length(&self) -> usize {
        self.multidegree.degree()
    }

    pub fn basis(&self, chain_degree: usize) -> &[SquareFreeMonomial] {
        self.bases
            .get(chain_degree)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Boundary from chain degree `i` to `i - 1`; `None` for `i = 0` or `i > |a|`.
    pub fn boundary(&self, chain_degree: usize) -> Option<&SignMatrix> {
        chain_degree
            .checked_sub(1)
            .and_then(|k| self.boundaries.get(k))
    }

    pub fn boundaries(&self) -> impl Iterator<Item = (usize, &SignMatrix)> {
        self.boundaries.iter().enumerate().map(|(k, m)| (k + 1, m))
    }

    pub fn is_empty(&self) -> bool {
        self.bases.iter().all(Vec::is_empty)
    }

    fn boundary_rank(&self, chain_degree: usize, field: FieldSpec) -> usize {
        self.boundary(chain_degree).map_or(0, |m| rank(m, field))
    }

    /// `dim H_i` for every chain degree with a nonempty basis.
    pub fn homology(&self, field: FieldSpec) -> Result<BTreeMap<usize, usize>> {
        let mut out = BTreeMap::new();
        let mut rank_in = self.boundary_rank(self.length() + 1, field);
        for i in (0..=self.length()).rev() {
            let r = self.basis(i).len();
            let rank_out = self.boundary_rank(i, field);
            if r > 0 {
                let dim = r
                    .checked_sub(rank_out + rank_in)
                    .ok_or_else(|| Error::NegativeHomology {
                        multidegree: self.multidegree.to_string(),
                        degree: i,
                    })?;
                out.insert(i, dim);
            }
            rank_in = rank_out;
        }
        Ok(out)
    }
}

/// Build the strand of `inst` at multidegree `a`.
pub fn build_strand(inst: &QuotientInstance, a: &SquareFreeMonomial) -> StrandComplex {
    let n = inst.n();
    let len = a.degree();
    let mut bases: Vec<Vec<u32>> = vec![Vec::new(); len + 1];
    for m in submasks(a.bits()) {
        if inst.in_quotient_bits(m) {
            bases[len - m.count_ones() as usize].push(m);
        }
    }
    for basis in &mut bases {
        basis.sort_by(|x, y| canonical_cmp(*x, *y));
    }
    let boundaries = (1..=len)
        .map(|i| {
            let cols = &bases[i];
            let rows = &bases[i - 1];
            let label = |v: &[u32]| {
                v.iter()
                    .map(|&b| SquareFreeMonomial::from_bits_unchecked(n, b))
                    .collect()
            };
            let mut mat = SignMatrix::labelled(label(rows), label(cols));
            for (k, &b) in rows.iter().enumerate() {
                for (q, &f) in cols.iter().enumerate() {
                    let s = sign_bits(f, b, a.bits());
                    if s != 0 {
                        mat.set(k, q, s);
                    }
                }
            }
            mat
        })
        .collect();
    StrandComplex {
        multidegree: *a,
        bases: bases
            .into_iter()
            .map(|v| {
                v.into_iter()
                    .map(|b| SquareFreeMonomial::from_bits_unchecked(n, b))
                    .collect()
            })
            .collect(),
        boundaries,
    }
}

/// `dim H_i` of the strand at `a`, for each chain degree with a nonempty basis.
pub fn strand_homology(
    inst: &QuotientInstance,
    a: &SquareFreeMonomial,
    field: FieldSpec,
) -> Result<BTreeMap<usize, usize>> {
    build_strand(inst, a).homology(field)
}

/// One nonvanishing Koszul homology group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyEntry {
    pub multidegree: SquareFreeMonomial,
    pub chain_degree: usize,
    pub dimension: usize,
}

/// Nonzero Koszul homology over all square-free multidegrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub field: FieldSpec,
    pub entries: Vec<HomologyEntry>,
    pub max_nonzero: Option<usize>,
}

pub fn homology_profile(inst: &QuotientInstance, field: FieldSpec) -> Result<HomologyProfile> {
    let n = inst.n();
    let per_strand: Vec<Vec<HomologyEntry>> = (0..=full_mask(n))
        .into_par_iter()
        .map(|bits| {
            let a = SquareFreeMonomial::from_bits_unchecked(n, bits);
            let strand = build_strand(inst, &a);
            if strand.is_empty() {
                return Ok(Vec::new());
            }
            Ok(strand
                .homology(field)?
                .into_iter()
                .filter(|&(_, dim)| dim > 0)
                .map(|(chain_degree, dimension)| HomologyEntry {
                    multidegree: a,
                    chain_degree,
                    dimension,
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    let mut entries: Vec<HomologyEntry> = per_strand.into_iter().flatten().collect();
    entries.sort_by(|x, y| {
        x.multidegree
            .cmp(&y.multidegree)
            .then(x.chain_degree.cmp(&y.chain_degree))
    });
    let max_nonzero = entries.iter().map(|e| e.chain_degree).max();
    Ok(HomologyProfile {
        field,
        entries,
        max_nonzero,
    })
}

/// `depth I/J = n - max{ i : H_i(x; I/J)_a ≠ 0 }` over square-free `a`.
pub fn exact_depth(inst: &QuotientInstance, field: FieldSpec) -> Result<usize> {
    let profile = homology_profile(inst, field)?;
    // I ≠ J forces some nonzero homology; fall back to n defensively.
    Ok(inst.n() - profile.max_nonzero.unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::compose_is_zero;

    fn m(n: usize, s: &[usize]) -> SquareFreeMonomial {
        SquareFreeMonomial::from_support(n, s).unwrap()
    }

    fn example() -> QuotientInstance {
        QuotientInstance::from_supports(4, &[vec![1], vec![3]], &[vec![1, 4]]).unwrap()
    }

    #[test]
    fn boundary_sign_examples() {
        let full = SquareFreeMonomial::full(4);
        assert_eq!(boundary_sign(&m(4, &[1]), &m(4, &[1, 2]), &full), 1);
        assert_eq!(boundary_sign(&m(4, &[1]), &m(4, &[1, 3]), &full), -1);
        assert_eq!(boundary_sign(&m(4, &[1]), &m(4, &[1, 4]), &full), 1);
        assert_eq!(boundary_sign(&m(4, &[1]), &m(4, &[2, 3]), &full), 0);
        assert_eq!(boundary_sign(&m(4, &[1]), &m(4, &[1, 2, 3]), &full), 0);
        // Relative to ambient x1x3x4 the complement of x1 is {3, 4}.
        assert_eq!(boundary_sign(&m(4, &[1]), &m(4, &[1, 3]), &m(4, &[1, 3, 4])), 1);
    }

    #[test]
    fn example_full_strand() {
        let inst = example();
        let strand = build_strand(&inst, &SquareFreeMonomial::full(4));
        let names = |i| -> Vec<String> { strand.basis(i).iter().map(|x| x.to_string()).collect() };
        assert_eq!(names(3), ["x1", "x3"]);
        assert_eq!(names(2), ["x1x2", "x1x3", "x2x3", "x3x4"]);
        assert_eq!(names(1), ["x1x2x3", "x2x3x4"]);
        assert!(strand.basis(0).is_empty());
        assert!(strand.basis(4).is_empty());

        // h_3: the degree-1 → degree-2 map.
        let h3 = strand.boundary(3).unwrap();
        assert_eq!(
            h3.to_rows(),
            vec![vec![1, 0], vec![-1, 1], vec![0, -1], vec![0, 1]]
        );
        assert_eq!(rank(h3, FieldSpec::Rationals), 2);
        let h2 = strand.boundary(2).unwrap();
        assert_eq!(h2.to_rows(), vec![vec![1, 1, 1, 0], vec![0, 0, -1, -1]]);
        assert!(compose_is_zero(h2, h3).unwrap());
        // h_{n-d+1} at i = 0 is the r × 0 map.
        let h4 = strand.boundary(4).unwrap();
        assert_eq!((h4.rows(), h4.cols()), (2, 0));
    }

    #[test]
    fn example_homology() {
        let inst = example();
        let full = strand_homology(&inst, &SquareFreeMonomial::full(4), FieldSpec::Rationals).unwrap();
        assert!(full.values().all(|&d| d == 0), "{full:?}");

        let a = m(4, &[1, 4]);
        let strand = build_strand(&inst, &a);
        assert_eq!(strand.basis(1), &[m(4, &[1])]);
        assert!(strand.basis(0).is_empty());
        let b = strand.boundary(1).unwrap();
        assert_eq!((b.rows(), b.cols()), (0, 1));
        let h = strand.homology(FieldSpec::Rationals).unwrap();
        assert_eq!(h.get(&1), Some(&1));

        assert_eq!(exact_depth(&inst, FieldSpec::Rationals).unwrap(), 3);
        assert_eq!(exact_depth(&inst, FieldSpec::PrimeField(2)).unwrap(), 3);
    }

    #[test]
    fn unit_multidegree_strand_is_empty() {
        let strand = build_strand(&example(), &SquareFreeMonomial::one(4));
        assert!(strand.is_empty());
        assert!(strand.homology(FieldSpec::Rationals).unwrap().is_empty());
    }

    #[test]
    fn free_module_homology() {
        let inst = QuotientInstance::from_supports(2, &[vec![1, 2]], &[]).unwrap();
        let h = strand_homology(&inst, &m(2, &[1, 2]), FieldSpec::Rationals).unwrap();
        assert_eq!(h, BTreeMap::from([(0, 1)]));
        assert_eq!(exact_depth(&inst, FieldSpec::Rationals).unwrap(), 2);
    }

    #[test]
    fn depth_examples() {
        let jp = QuotientInstance::from_supports(4, &[vec![1], vec![3]], &[vec![1, 4], vec![2, 3, 4]])
            .unwrap();
        assert_eq!(exact_depth(&jp, FieldSpec::Rationals).unwrap(), 2);
        assert_eq!(exact_depth(&jp, FieldSpec::PrimeField(2)).unwrap(), 2);

        let m0 = QuotientInstance::from_supports(
            3,
            &[vec![1], vec![2], vec![3]],
            &[vec![1, 2], vec![1, 3], vec![2, 3]],
        )
        .unwrap();
        assert_eq!(exact_depth(&m0, FieldSpec::Rationals).unwrap(), 1);
    }

    #[test]
    fn profile_is_sorted_and_deterministic() {
        let inst = example();
        let p1 = homology_profile(&inst, FieldSpec::Rationals).unwrap();
        let p2 = homology_profile(&inst, FieldSpec::Rationals).unwrap();
        assert_eq!(p1, p2);
        assert_eq!(p1.max_nonzero, Some(1));
        assert!(p1.entries.windows(2).all(|w| w[0].multidegree <= w[1].multidegree));
    }
}
