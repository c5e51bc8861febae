//! Stanley depth of `I/J` through interval partitions of the poset `P_{I\J}`.
//!
//! A partition of `P` into intervals `[u, v] = {w ∈ P : u | w | v}` has
//! Stanley depth `min deg v`; `sdepth I/J` is the maximum over all
//! partitions. Feasibility for a target `k` is an exact-cover search.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::ideal::QuotientInstance;
use crate::monomial::{full_mask, submasks, SquareFreeMonomial};
use crate::poset::{enumerate_quotient, PosetLayers};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Interval {
    pub bottom: SquareFreeMonomial,
    pub top: SquareFreeMonomial,
}

impl Interval {
    pub fn new(bottom: SquareFreeMonomial, top: SquareFreeMonomial) -> Self {
        Interval { bottom, top }
    }

    /// Every `w` with `bottom | w | top`; empty if `bottom ∤ top`.
    pub fn members(&self) -> Vec<SquareFreeMonomial> {
        if !self.bottom.divides_unchecked(&self.top) {
            return Vec::new();
        }
        let free = self.top.bits() & !self.bottom.bits();
        submasks(free)
            .map(|s| SquareFreeMonomial::from_bits_unchecked(self.top.n(), self.bottom.bits() | s))
            .collect()
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.bottom, self.top)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalPartition {
    pub intervals: Vec<Interval>,
    pub sdepth_value: usize,
}

impl IntervalPartition {
    /// Compute `sdepth_value` from the tops.
    pub fn new(intervals: Vec<Interval>) -> Self {
        let sdepth_value = intervals
            .iter()
            .map(|iv| iv.top.degree())
            .min()
            .unwrap_or(0);
        IntervalPartition {
            intervals,
            sdepth_value,
        }
    }
}

/// Why a proposed partition is not a valid interval partition of `P_{I\J}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionDefect {
    WrongRing(Interval),
    NotAnInterval(Interval),
    OutsidePoset(SquareFreeMonomial),
    Overlap(SquareFreeMonomial),
    Uncovered(SquareFreeMonomial),
    WrongSdepth { claimed: usize, actual: usize },
}

impl fmt::Display for PartitionDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionDefect::WrongRing(iv) => write!(f, "{iv} lives in a different ring"),
            PartitionDefect::NotAnInterval(iv) => write!(f, "{iv}: bottom does not divide top"),
            PartitionDefect::OutsidePoset(m) => write!(f, "{m} is not in I\\J"),
            PartitionDefect::Overlap(m) => write!(f, "{m} is covered twice"),
            PartitionDefect::Uncovered(m) => write!(f, "{m} is not covered"),
            PartitionDefect::WrongSdepth { claimed, actual } => {
                write!(f, "sdepth value {claimed} recorded, tops give {actual}")
            }
        }
    }
}

/// Re-check disjointness, coverage and interval validity from scratch.
pub fn verify_partition(
    inst: &QuotientInstance,
    p: &IntervalPartition,
) -> Result<(), PartitionDefect> {
    let n = inst.n();
    let mut covered = vec![false; full_mask(n) as usize + 1];
    for iv in &p.intervals {
        if iv.bottom.n() != n || iv.top.n() != n {
            return Err(PartitionDefect::WrongRing(*iv));
        }
        if !iv.bottom.divides_unchecked(&iv.top) {
            return Err(PartitionDefect::NotAnInterval(*iv));
        }
        for w in iv.members() {
            if !inst.in_quotient(&w) {
                return Err(PartitionDefect::OutsidePoset(w));
            }
            let slot = &mut covered[w.bits() as usize];
            if *slot {
                return Err(PartitionDefect::Overlap(w));
            }
            *slot = true;
        }
    }
    for bits in 0..=full_mask(n) {
        if inst.in_quotient_bits(bits) && !covered[bits as usize] {
            return Err(PartitionDefect::Uncovered(
                SquareFreeMonomial::from_bits_unchecked(n, bits),
            ));
        }
    }
    let actual = IntervalPartition::new(p.intervals.clone()).sdepth_value;
    if actual != p.sdepth_value {
        return Err(PartitionDefect::WrongSdepth {
            claimed: p.sdepth_value,
            actual,
        });
    }
    Ok(())
}

type Bitset = Vec<u64>;

/// Exact-cover search for partitions whose tops all have degree `≥ k`.
struct Search {
    /// Elements of `P` in canonical order.
    elements: Vec<u32>,
    /// `tops[u]`: candidate `(v, members of [u, v])`, degree-descending then canonical.
    tops: Vec<Vec<(usize, Bitset)>>,
    covered: Bitset,
    chosen: Vec<(usize, usize)>,
    dead: HashSet<Bitset>,
}

impl Search {
    fn new(layers: &PosetLayers, k: usize) -> Self {
        let elements: Vec<u32> = layers.iter().map(|m| m.bits()).collect();
        let words = elements.len().div_ceil(64).max(1);
        let index: std::collections::HashMap<u32, usize> =
            elements.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let tops = elements
            .iter()
            .map(|&u| {
                let mut cands: Vec<usize> = (0..elements.len())
                    .filter(|&v| {
                        let vb = elements[v];
                        u & !vb == 0 && vb.count_ones() as usize >= k
                    })
                    .collect();
                // Canonical order ascends; reverse layers for degree-descending.
                cands.sort_by(|&a, &b| {
                    elements[b]
                        .count_ones()
                        .cmp(&elements[a].count_ones())
                        .then(a.cmp(&b))
                });
                cands
                    .into_iter()
                    .map(|v| {
                        let mut set = vec![0u64; words];
                        for s in submasks(elements[v] & !u) {
                            let w = index[&(u | s)];
                            set[w / 64] |= 1 << (w % 64);
                        }
                        (v, set)
                    })
                    .collect()
            })
            .collect();
        Search {
            elements,
            tops,
            covered: vec![0; words],
            chosen: Vec::new(),
            dead: HashSet::new(),
        }
    }

    fn is_covered(&self, i: usize) -> bool {
        self.covered[i / 64] >> (i % 64) & 1 == 1
    }

    fn disjoint(&self, set: &Bitset) -> bool {
        self.covered.iter().zip(set).all(|(a, b)| a & b == 0)
    }

    fn toggle(&mut self, set: &Bitset) {
        for (a, b) in self.covered.iter_mut().zip(set) {
            *a ^= b;
        }
    }

    /// Every uncovered element needs an uncovered top above it.
    fn viable(&self) -> bool {
        (0..self.elements.len()).all(|w| {
            self.is_covered(w) || self.tops[w].iter().any(|(v, _)| !self.is_covered(*v))
        })
    }

    fn run(&mut self) -> bool {
        // In canonical order the first uncovered element has no uncovered
        // proper divisor in P, so it must be the bottom of its interval.
        let Some(u) = (0..self.elements.len()).find(|&i| !self.is_covered(i)) else {
            return true;
        };
        if self.dead.contains(&self.covered) || !self.viable() {
            return false;
        }
        for c in 0..self.tops[u].len() {
            let (v, set) = &self.tops[u][c];
            if !self.disjoint(set) {
                continue;
            }
            let (v, set) = (*v, set.clone());
            self.toggle(&set);
            self.chosen.push((u, v));
            if self.run() {
                return true;
            }
            self.chosen.pop();
            self.toggle(&set);
        }
        self.dead.insert(self.covered.clone());
        false
    }
}

fn partition_with_layers(layers: &PosetLayers, k: usize) -> Option<IntervalPartition> {
    let mut search = Search::new(layers, k);
    if !search.run() {
        return None;
    }
    let n = layers.n();
    let intervals = search
        .chosen
        .iter()
        .map(|&(u, v)| {
            Interval::new(
                SquareFreeMonomial::from_bits_unchecked(n, search.elements[u]),
                SquareFreeMonomial::from_bits_unchecked(n, search.elements[v]),
            )
        })
        .collect();
    Some(IntervalPartition::new(intervals))
}

/// A partition of `P_{I\J}` with every top of degree `≥ k`, if one exists.
pub fn partition_exists(inst: &QuotientInstance, k: usize) -> Option<IntervalPartition> {
    partition_with_layers(&enumerate_quotient(inst), k)
}

/// Largest `k` admitting a partition, with a witness.
pub fn stanley_depth(inst: &QuotientInstance) -> (usize, IntervalPartition) {
    stanley_depth_of(&enumerate_quotient(inst))
}

pub(crate) fn stanley_depth_of(layers: &PosetLayers) -> (usize, IntervalPartition) {
    for k in (layers.d()..=layers.max_degree()).rev() {
        if let Some(p) = partition_with_layers(layers, k) {
            return (p.sdepth_value, p);
        }
    }
    unreachable!("singleton intervals always partition P at k = d")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &[usize]) -> SquareFreeMonomial {
        SquareFreeMonomial::from_support(4, s).unwrap()
    }

    fn example() -> QuotientInstance {
        QuotientInstance::from_supports(4, &[vec![1], vec![3]], &[vec![1, 4]]).unwrap()
    }

    #[test]
    fn verify_examples() {
        let inst = example();
        let good = IntervalPartition::new(vec![
            Interval::new(m(&[1]), m(&[1, 2, 3])),
            Interval::new(m(&[3]), m(&[2, 3, 4])),
        ]);
        assert_eq!(good.sdepth_value, 3);
        assert_eq!(verify_partition(&inst, &good), Ok(()));

        let partial = IntervalPartition::new(vec![Interval::new(m(&[1]), m(&[1, 2, 3]))]);
        assert_eq!(
            verify_partition(&inst, &partial),
            Err(PartitionDefect::Uncovered(m(&[3])))
        );

        let outside = IntervalPartition::new(vec![
            Interval::new(m(&[1]), m(&[1, 2, 3])),
            Interval::new(m(&[1, 3]), m(&[1, 2, 3, 4])),
        ]);
        assert!(verify_partition(&inst, &outside).is_err());

        let overlap = IntervalPartition::new(vec![
            Interval::new(m(&[1]), m(&[1, 2, 3])),
            Interval::new(m(&[1, 3]), m(&[1, 3])),
        ]);
        assert_eq!(
            verify_partition(&inst, &overlap),
            Err(PartitionDefect::Overlap(m(&[1, 3])))
        );

        let mut lying = good.clone();
        lying.sdepth_value = 4;
        assert!(matches!(
            verify_partition(&inst, &lying),
            Err(PartitionDefect::WrongSdepth { .. })
        ));
    }

    #[test]
    fn partition_exists_examples() {
        let inst = example();
        let p = partition_exists(&inst, 3).expect("k = 3 feasible");
        assert_eq!(verify_partition(&inst, &p), Ok(()));
        assert!(partition_exists(&inst, 4).is_none());
        let singles = partition_exists(&inst, 1).unwrap();
        assert_eq!(verify_partition(&inst, &singles), Ok(()));
    }

    #[test]
    fn stanley_depth_examples() {
        let (s, w) = stanley_depth(&example());
        assert_eq!(s, 3);
        assert_eq!(verify_partition(&example(), &w), Ok(()));

        let all = QuotientInstance::from_supports(
            3,
            &[vec![1], vec![2], vec![3]],
            &[vec![1, 2], vec![1, 3], vec![2, 3]],
        )
        .unwrap();
        assert_eq!(stanley_depth(&all).0, 1);

        let cone = QuotientInstance::from_supports(2, &[vec![1]], &[]).unwrap();
        let (s, w) = stanley_depth(&cone);
        assert_eq!(s, 2);
        assert_eq!(w.intervals.len(), 1);
        assert_eq!(w.intervals[0].to_string(), "[x1, x1x2]");
    }

    #[test]
    fn witness_is_deterministic() {
        assert_eq!(stanley_depth(&example()), stanley_depth(&example()));
    }
}
