//! Exact rank of `{-1, 0, 1}` matrices over `Q` and over prime fields.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::SquareFreeMonomial;

/// Coefficient field `K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<Self> {
        if is_prime(p as u64) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::NotPrime(p as u64))
        }
    }

    /// `Q`, `GF(2)` and `GF(3)`, the fields the soundness checks sweep.
    pub fn sweep() -> [FieldSpec; 3] {
        [
            FieldSpec::Rationals,
            FieldSpec::PrimeField(2),
            FieldSpec::PrimeField(3),
        ]
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|k| k * k <= p).all(|k| !p.is_multiple_of(k))
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

/// Accepts `q`/`Q`, `gf:<p>` and the display form `GF(<p>)`.
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "q" || lower == "rationals" {
            return Ok(FieldSpec::Rationals);
        }
        let digits = lower
            .strip_prefix("gf:")
            .or_else(|| lower.strip_prefix("gf(").and_then(|r| r.strip_suffix(')')))
            .ok_or_else(|| Error::UnknownField(s.to_string()))?;
        let p: u32 = digits
            .parse()
            .map_err(|_| Error::UnknownField(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Dense matrix with entries in `{-1, 0, 1}`.
///
/// Row and column labels record the monomial bases of a strand boundary;
/// they are empty for unlabelled matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i8>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    row_labels: Vec<SquareFreeMonomial>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    col_labels: Vec<SquareFreeMonomial>,
}

impl SignMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SignMatrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
            row_labels: Vec::new(),
            col_labels: Vec::new(),
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = SignMatrix::zeros(size, size);
        for i in 0..size {
            m.set(i, i, 1);
        }
        m
    }

    /// Panics on ragged input or entries outside `{-1, 0, 1}`.
    pub fn from_rows(rows: &[Vec<i8>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = SignMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub(crate) fn labelled(
        row_labels: Vec<SquareFreeMonomial>,
        col_labels: Vec<SquareFreeMonomial>,
    ) -> Self {
        let mut m = SignMatrix::zeros(row_labels.len(), col_labels.len());
        m.row_labels = row_labels;
        m.col_labels = col_labels;
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_labels(&self) -> &[SquareFreeMonomial] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[SquareFreeMonomial] {
        &self.col_labels
    }

    pub fn get(&self, row: usize, col: usize) -> i8 {
        self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: i8) {
        assert!((-1..=1).contains(&value), "sign matrix entry {value}");
        self.entries[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[i8] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i8>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = SignMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j);
            }
        }
        t.row_labels = self.col_labels.clone();
        t.col_labels = self.row_labels.clone();
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    /// Flip the sign of one row.
    pub fn negate_row(&mut self, row: usize) {
        for v in &mut self.entries[row * self.cols..(row + 1) * self.cols] {
            *v = -*v;
        }
    }

    /// Flip the sign of one column.
    pub fn negate_col(&mut self, col: usize) {
        for i in 0..self.rows {
            let v = &mut self.entries[i * self.cols + col];
            *v = -*v;
        }
    }
}

/// Rank over `field`.
///
/// Over `Q` this runs fraction-free (Bareiss) elimination on big integers;
/// over `GF(p)` it runs ordinary elimination modulo `p`.
pub fn rank(m: &SignMatrix, field: FieldSpec) -> usize {
    match field {
        FieldSpec::Rationals => rank_fraction_free(m),
        FieldSpec::PrimeField(p) => rank_mod_p(m, p),
    }
}

/// Rank over `Q` by Bareiss elimination.
///
/// After each pivot step every active entry is a minor of the input, so the
/// division by the previous pivot is exact.
pub fn rank_fraction_free(m: &SignMatrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|i| m.row(i).iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            for j in col + 1..m.cols {
                let v = &pivot_row[col] * &row[j] - &row[col] * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot_row[col].clone();
        r += 1;
    }
    r
}

/// Rank over `Q` by Gauss-Jordan elimination on exact fractions.
///
/// Independent of [`rank_fraction_free`]; used to cross-check it.
pub fn rank_rational_fractions(m: &SignMatrix) -> usize {
    let mut a: Vec<Vec<BigRational>> = (0..m.rows)
        .map(|i| {
            m.row(i)
                .iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect()
        })
        .collect();
    let mut r = 0;
    for col in 0..m.cols {
        // Smallest nonzero magnitude as pivot, purely to differ from the Bareiss path.
        let Some(p) = (r..m.rows)
            .filter(|&i| !a[i][col].is_zero())
            .min_by(|&x, &y| a[x][col].abs().cmp(&a[y][col].abs()))
        else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][col].recip();
        for x in &mut a[r][col..] {
            *x = &*x * &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &factor * p;
            }
        }
        r += 1;
        if r == m.rows {
            break;
        }
    }
    r
}

/// Rank over `GF(p)`.
pub fn rank_mod_p(m: &SignMatrix, p: u32) -> usize {
    let p = p as u64;
    let mut a: Vec<Vec<u64>> = (0..m.rows)
        .map(|i| {
            m.row(i)
                .iter()
                .map(|&v| (v as i64).rem_euclid(p as i64) as u64)
                .collect()
        })
        .collect();
    let mut r = 0;
    for col in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(piv) = (r..m.rows).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = mod_pow(a[r][col], p - 2, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            if row[col] == 0 {
                continue;
            }
            let factor = row[col] * inv % p;
            for j in col..m.cols {
                row[j] = (row[j] + p * p - factor * pivot_row[j] % p) % p;
            }
        }
        r += 1;
    }
    r
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Ranks over `field_a = Q` and `field_b = GF(p)`.
///
/// Fails if the modular rank exceeds the rational one, which can only
/// happen through an elimination bug.
pub fn rank_pair_check(
    m: &SignMatrix,
    field_a: FieldSpec,
    field_b: FieldSpec,
) -> Result<(usize, usize)> {
    let ra = rank(m, field_a);
    let rb = rank(m, field_b);
    if field_a == FieldSpec::Rationals && rb > ra {
        return Err(Error::RankInconsistency {
            field: field_b.to_string(),
            modular: rb,
            rational: ra,
        });
    }
    Ok((ra, rb))
}

/// Whether the integer product `a · b` vanishes.
pub fn compose_is_zero(a: &SignMatrix, b: &SignMatrix) -> Result<bool> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch {
            left_cols: a.cols,
            right_rows: b.rows,
        });
    }
    for i in 0..a.rows {
        let row = a.row(i);
        for j in 0..b.cols {
            let s: i64 = row
                .iter()
                .enumerate()
                .map(|(k, &v)| v as i64 * b.get(k, j) as i64)
                .sum();
            if s != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
