//! Integer partitions and Young diagram statistics.
//!
//! A [`Partition`] stores its nonzero parts in weakly decreasing order. Row
//! indices are 1-based throughout, matching the usual diagram conventions,
//! and [`Partition::part`] pads with zeros past the last row so that
//! formulas may index up to any common length.

use std::cmp::{max, min};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A cell `(row, col)` of a Young diagram, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl Partition {
    /// Builds a partition from positive, weakly decreasing parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts not weakly decreasing: {parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Like [`Partition::new`] but drops trailing zeros first, so a
    /// zero-padded vector is accepted.
    pub fn from_padded(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts)
    }

    /// Internal constructor for vectors already known to be weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `(n)`; empty when `n == 0`.
    pub fn row(n: usize) -> Self {
        Partition::from_sorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition::from_sorted(vec![1; n])
    }

    /// The rectangle `(width^height)`.
    pub fn rectangle(width: usize, height: usize) -> Self {
        if width == 0 {
            return Partition::empty();
        }
        Partition::from_sorted(vec![width; height])
    }

    /// The two-row partition `(n - k, k)`.
    pub fn two_row(n: usize, k: usize) -> Result<Self> {
        if 2 * k > n {
            return Err(Error::Domain(format!("(n-k, k) needs k <= n/2, got n={n}, k={k}")));
        }
        Ok(Partition::from_sorted(vec![n - k, k]))
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// The number being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 1-based; zero for `i == 0` or past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// First part, or zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(1)
    }

    /// Parts from the second row on, i.e. the partition with its first row removed.
    pub fn tail(&self) -> Partition {
        Partition::from_sorted(self.parts.iter().skip(1).copied().collect())
    }

    /// Prepends a new first row; fails if `first` is shorter than the current first row.
    pub fn with_first_row(&self, first: usize) -> Result<Partition> {
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(first);
        parts.extend_from_slice(&self.parts);
        Partition::from_padded(parts)
    }

    /// Parts padded with zeros to exactly `len` entries. Panics if `len < self.len()`.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        assert!(len >= self.len(), "cannot pad {self} to length {len}");
        let mut v = self.parts.clone();
        v.resize(len, 0);
        v
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// Whether the diagram of `self` contains the diagram of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
    }

    /// The transposed diagram: `result_j = #{i : λ_i >= j}`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Hook length and content of a cell of the diagram.
    pub fn hook_and_content(&self, cell: Cell) -> Result<(usize, isize)> {
        if !self.contains_cell(cell) {
            return Err(Error::Domain(format!(
                "cell ({}, {}) lies outside the diagram of {self}",
                cell.row, cell.col
            )));
        }
        let conj = self.conjugate();
        Ok(hook_content_with(self, &conj, cell))
    }

    /// Hook lengths of all cells, row by row.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells().map(|u| hook_content_with(self, &conj, u).0).collect()
    }

    /// Size of the Durfee square: the largest `r` with `λ_r >= r`.
    pub fn durfee(&self) -> usize {
        self.parts.iter().enumerate().take_while(|&(i, &p)| p > i).count()
    }

    /// Componentwise sum with zero padding.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = max(self.len(), other.len());
        let parts = (1..=len).map(|i| self.part(i) + other.part(i)).collect();
        Partition { parts }
    }

    /// Diagram union: `ω_i = max(λ_i, μ_i)`.
    pub fn union(&self, other: &Partition) -> Partition {
        let len = max(self.len(), other.len());
        Partition {
            parts: (1..=len).map(|i| max(self.part(i), other.part(i))).collect(),
        }
    }

    /// Diagram intersection: `ρ_i = min(λ_i, μ_i)`.
    pub fn intersection(&self, other: &Partition) -> Partition {
        let len = min(self.len(), other.len());
        Partition {
            parts: (1..=len).map(|i| min(self.part(i), other.part(i))).collect(),
        }
    }

    pub fn union_intersection(&self, other: &Partition) -> (Partition, Partition) {
        (self.union(other), self.intersection(other))
    }

    /// Principal hook lengths `h(i,i)` for `i <= d(λ)`. For a self-conjugate
    /// partition these are `2λ_i - (2i - 1)`, distinct odd numbers summing to `|λ|`.
    pub fn principal_hooks(&self) -> Partition {
        let conj = self.conjugate();
        let parts = (1..=self.durfee())
            .map(|i| self.part(i) + conj.part(i) + 1 - 2 * i)
            .collect();
        Partition::from_sorted(parts)
    }

    /// The staircase `(m, m-1, ..., 1)`.
    pub fn staircase(m: usize) -> Partition {
        Partition {
            parts: (1..=m).rev().collect(),
        }
    }

    /// `(m_1, m_2, ...)` where `m_j` is the multiplicity of part `j`, indexed from `j = 1`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.first()];
        for &p in &self.parts {
            m[p - 1] += 1;
        }
        m
    }
}

fn hook_content_with(shape: &Partition, conj: &Partition, cell: Cell) -> (usize, isize) {
    let arm = shape.part(cell.row) - cell.col;
    let leg = conj.part(cell.col) - cell.row;
    (arm + leg + 1, cell.col as isize - cell.row as isize)
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition prints as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Partition::empty());
        }
        let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
        let parts = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` with at most `max_length` parts, each at most
/// `max_part`, in reverse lexicographic order (`(n)` first, `(1^n)` last).
pub fn enumerate_partitions(n: usize, max_length: Option<usize>, max_part: Option<usize>) -> Vec<Partition> {
    fn rec(remaining: usize, cap: usize, slots: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=min(cap, remaining)).rev() {
            // the remaining slots must be able to absorb what is left
            if p * slots < remaining {
                break;
            }
            prefix.push(p);
            rec(remaining - p, p, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(
        n,
        max_part.unwrap_or(n),
        max_length.unwrap_or(n),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Shorthand for the unrestricted enumeration of partitions of `n`.
pub fn partitions(n: usize) -> Vec<Partition> {
    enumerate_partitions(n, None, None)
}

/// The number of partitions `P(n)`.
pub fn count_partitions(n: usize) -> BigUint {
    count_parts_in_set(n, &(1..=n.max(1)).collect())
}

/// `P'(n)`: partitions of `n` with every part at least 2, equal to
/// `P(n) - P(n-1)` for `n >= 1`.
pub fn count_partitions_minpart2(n: usize) -> BigUint {
    count_parts_in_set(n, &(2..=n.max(2)).collect())
}

/// Number of multisets drawn from `allowed` summing to `k`.
pub fn count_parts_in_set(k: usize, allowed: &BTreeSet<usize>) -> BigUint {
    let mut ways = vec![BigUint::zero(); k + 1];
    ways[0] = BigUint::one();
    for &r in allowed.iter().filter(|&&r| r >= 1 && r <= k) {
        for total in r..=k {
            let prev = ways[total - r].clone();
            ways[total] += prev;
        }
    }
    ways.swap_remove(k)
}

/// Number of subsets of `allowed` summing to `k` (partitions of `k` into
/// distinct parts from `allowed`).
pub fn count_distinct_parts_in_set(k: usize, allowed: &BTreeSet<usize>) -> BigUint {
    let mut ways = vec![BigUint::zero(); k + 1];
    ways[0] = BigUint::one();
    for &r in allowed.iter().filter(|&&r| r >= 1 && r <= k) {
        for total in (r..=k).rev() {
            let prev = ways[total - r].clone();
            ways[total] += prev;
        }
    }
    ways.swap_remove(k)
}
