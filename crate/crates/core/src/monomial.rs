//! Square-free monomials stored as variable bitmasks.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest ring handled by the subset scans.
pub const MAX_VARS: usize = 20;

/// A square-free monomial `x_{j_1} ... x_{j_k}` in `K[x_1, ..., x_n]`.
///
/// Bit `j - 1` of the mask is set iff `x_j` divides the monomial. The empty
/// mask is the monomial `1`.
///
/// Ordering is canonical: by degree, then lexicographically on the sorted
/// support, so `x1 < x2 < x1x2 < x1x3 < x2x3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SquareFreeMonomial {
    n: u8,
    bits: u32,
}

impl SquareFreeMonomial {
    pub fn one(n: usize) -> Self {
        debug_assert!(n <= MAX_VARS);
        SquareFreeMonomial { n: n as u8, bits: 0 }
    }

    /// Build from 1-based variable indices. Repeated indices are rejected.
    pub fn from_support(n: usize, support: &[usize]) -> Result<Self> {
        check_n(n)?;
        let mut bits = 0u32;
        for &j in support {
            if j == 0 || j > n {
                return Err(Error::IndexOutOfRange { index: j, n });
            }
            let bit = 1u32 << (j - 1);
            if bits & bit != 0 {
                return Err(Error::DuplicateIndex { index: j });
            }
            bits |= bit;
        }
        Ok(SquareFreeMonomial { n: n as u8, bits })
    }

    pub fn from_bits(n: usize, bits: u32) -> Result<Self> {
        check_n(n)?;
        if (bits >> n) != 0 {
            let index = 32 - bits.leading_zeros() as usize;
            return Err(Error::IndexOutOfRange { index, n });
        }
        Ok(SquareFreeMonomial { n: n as u8, bits })
    }

    /// The product of all variables.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VARS);
        SquareFreeMonomial {
            n: n as u8,
            bits: full_mask(n),
        }
    }

    pub(crate) fn from_bits_unchecked(n: usize, bits: u32) -> Self {
        SquareFreeMonomial { n: n as u8, bits }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn degree(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Sorted 1-based support.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|j| self.bits >> j & 1 == 1)
            .map(|j| j + 1)
            .collect()
    }

    pub fn contains_var(&self, j: usize) -> bool {
        j >= 1 && j <= self.n() && self.bits >> (j - 1) & 1 == 1
    }

    /// `self | other`, i.e. support inclusion.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.divides_unchecked(other))
    }

    #[inline]
    pub(crate) fn divides_unchecked(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    /// Least common multiple (support union).
    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(SquareFreeMonomial {
            n: self.n,
            bits: self.bits | other.bits,
        })
    }

    /// Multiply by `x_j`, returning `None` if `x_j` already divides `self`.
    pub fn times_var(&self, j: usize) -> Option<Self> {
        if j == 0 || j > self.n() || self.contains_var(j) {
            return None;
        }
        Some(SquareFreeMonomial {
            n: self.n,
            bits: self.bits | 1 << (j - 1),
        })
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(())
    }
}

pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        return Err(Error::VariableCount { n, max: MAX_VARS });
    }
    Ok(())
}

/// Iterate over all submasks of `mask`, including `0` and `mask` itself.
pub(crate) fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

/// Compare two masks in canonical order.
#[inline]
pub(crate) fn canonical_cmp(a: u32, b: u32) -> Ordering {
    a.count_ones().cmp(&b.count_ones()).then_with(|| {
        let diff = a ^ b;
        if diff == 0 {
            Ordering::Equal
        } else if a & diff & diff.wrapping_neg() != 0 {
            // a owns the smallest index where they differ.
            Ordering::Less
        } else {
            Ordering::Greater
        }
    })
}

impl Ord for SquareFreeMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| canonical_cmp(self.bits, other.bits))
    }
}

impl PartialOrd for SquareFreeMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Serialized as the sorted 1-based support, e.g. `[1, 3]`.
impl Serialize for SquareFreeMonomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.support())
    }
}

impl fmt::Display for SquareFreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits == 0 {
            return f.write_str("1");
        }
        for j in self.support() {
            write!(f, "x{j}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SquareFreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
