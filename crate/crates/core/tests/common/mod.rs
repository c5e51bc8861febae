//! Brute-force oracles shared by the integration tests.
//!
//! Nothing here calls the strand builder, the poset enumerator or the
//! partition search of the library; only instance construction and the
//! fraction-based rank route are reused.

#![allow(dead_code)]

use sqdepth_core::linalg::rank_rational_fractions;
use sqdepth_core::{QuotientInstance, SignMatrix, SquareFreeMonomial};

/// Membership of an arbitrary monomial (exponent vector) in `I\J`; for
/// square-free ideals it only depends on the support.
pub fn in_quotient_exponents(inst: &QuotientInstance, exps: &[u8]) -> bool {
    let support: Vec<usize> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(j, _)| j + 1)
        .collect();
    let divides = |g: &SquareFreeMonomial| g.support().iter().all(|j| support.contains(j));
    inst.ideal_i().generators().iter().any(divides) && !inst.ideal_j().generators().iter().any(divides)
}

/// All exponent vectors in `{0, ..., max}^n`.
pub fn multidegrees(n: usize, max: u8) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

/// Koszul strand of `I/J` at an arbitrary multidegree `a`, built from the
/// definition: basis `m · e_F` with `m · x_F = x^a`, `m ∈ I\J`.
///
/// Returns `dim H_i` for `i = 0..=n` over `Q`.
pub fn brute_strand_homology(inst: &QuotientInstance, a: &[u8]) -> Vec<usize> {
    let n = inst.n();
    let support: Vec<usize> = (0..n).filter(|&j| a[j] > 0).collect();
    // chain degree i: subsets F of supp(a) with |F| = i and a - 1_F ∈ I\J.
    let mut bases: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n + 1];
    for mask in 0u32..(1 << support.len()) {
        let f: Vec<usize> = (0..support.len())
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| support[k])
            .collect();
        let mut m = a.to_vec();
        for &j in &f {
            m[j] -= 1;
        }
        if in_quotient_exponents(inst, &m) {
            bases[f.len()].push(f);
        }
    }
    let ranks: Vec<usize> = (0..=n + 1)
        .map(|i| {
            if i == 0 || i > n || bases[i].is_empty() || bases[i - 1].is_empty() {
                return 0;
            }
            let mut rows = vec![vec![0i8; bases[i].len()]; bases[i - 1].len()];
            for (q, f) in bases[i].iter().enumerate() {
                for (k, &j) in f.iter().enumerate() {
                    let face: Vec<usize> = f.iter().copied().filter(|&x| x != j).collect();
                    if let Some(row) = bases[i - 1].iter().position(|g| *g == face) {
                        rows[row][q] = if k % 2 == 0 { 1 } else { -1 };
                    }
                }
            }
            rank_rational_fractions(&SignMatrix::from_rows(&rows))
        })
        .collect();
    (0..=n)
        .map(|i| bases[i].len() - ranks[i] - ranks[i + 1])
        .collect()
}

/// Depth from the brute-force strands over all multidegrees with entries ≤ `max`.
pub fn brute_depth(inst: &QuotientInstance, max: u8) -> usize {
    let top = multidegrees(inst.n(), max)
        .iter()
        .flat_map(|a| {
            brute_strand_homology(inst, a)
                .into_iter()
                .enumerate()
                .filter(|&(_, h)| h > 0)
                .map(|(i, _)| i)
        })
        .max()
        .unwrap_or(0);
    inst.n() - top
}

/// Square-free monomials of `I\J` as sorted supports, found by testing each
/// subset against the generator lists.
pub fn brute_poset(inst: &QuotientInstance) -> Vec<Vec<usize>> {
    let n = inst.n();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let s: Vec<usize> = (1..=n).filter(|j| mask >> (j - 1) & 1 == 1).collect();
        let divides = |g: &SquareFreeMonomial| g.support().iter().all(|j| s.contains(j));
        if inst.ideal_i().generators().iter().any(divides)
            && !inst.ideal_j().generators().iter().any(divides)
        {
            out.push(s);
        }
    }
    out
}

/// Stanley depth by enumerating every partition of `P` into intervals.
///
/// Branches on the highest-index uncovered element and any interval that
/// contains it (not only as bottom), unlike the library search.
pub fn brute_sdepth(inst: &QuotientInstance) -> Option<usize> {
    let poset = brute_poset(inst);
    let p = poset.len();
    if p == 0 || p > 16 {
        return None;
    }
    let subset = |a: &Vec<usize>, b: &Vec<usize>| a.iter().all(|x| b.contains(x));
    let mut intervals: Vec<(u32, usize)> = Vec::new();
    for u in &poset {
        for v in &poset {
            if !subset(u, v) {
                continue;
            }
            let mut members = 0u32;
            for (idx, w) in poset.iter().enumerate() {
                if subset(u, w) && subset(w, v) {
                    members |= 1 << idx;
                }
            }
            intervals.push((members, v.len()));
        }
    }
    fn go(intervals: &[(u32, usize)], covered: u32, full: u32, best_here: usize) -> Option<usize> {
        if covered == full {
            return Some(best_here);
        }
        let e = 31 - (full & !covered).leading_zeros();
        let mut best = None;
        for &(members, top) in intervals {
            if members >> e & 1 == 1 && members & covered == 0 {
                if let Some(v) = go(intervals, covered | members, full, best_here.min(top)) {
                    best = Some(best.map_or(v, |b: usize| b.max(v)));
                }
            }
        }
        best
    }
    let full = if p == 32 { u32::MAX } else { (1u32 << p) - 1 };
    go(&intervals, 0, full, usize::MAX)
}
