//! Counting 3-dimensional contingency arrays with prescribed slice sums.
//!
//! `CA(α, β, γ)` is the number of `ℓ(α) × ℓ(β) × ℓ(γ)` arrays of nonnegative
//! integers whose sums over the slices orthogonal to the three axes are
//! `α`, `β` and `γ`. `CA*` restricts entries to `{0, 1}`.
//!
//! The count is invariant under reordering each margin vector, under
//! permuting the three axes, and under dropping zero margins, so every
//! query is reduced to a canonical key first. The first slice of the longest
//! axis is then enumerated cell by cell, and the residual problem is counted
//! recursively through the same canonical memo.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::partition::Partition;

/// Margins of a 3-dimensional array. Components may be unsorted or
/// negative; a negative component makes the count zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContingencySpec {
    pub margins: [Vec<i64>; 3],
    /// Restrict entries to `{0, 1}`.
    pub binary: bool,
}

impl ContingencySpec {
    pub fn new(a: Vec<i64>, b: Vec<i64>, c: Vec<i64>) -> Self {
        ContingencySpec {
            margins: [a, b, c],
            binary: false,
        }
    }

    pub fn binary(a: Vec<i64>, b: Vec<i64>, c: Vec<i64>) -> Self {
        ContingencySpec {
            margins: [a, b, c],
            binary: true,
        }
    }

    pub fn from_partitions(a: &Partition, b: &Partition, c: &Partition, binary: bool) -> Self {
        let v = |p: &Partition| p.parts().iter().map(|&x| x as i64).collect();
        ContingencySpec {
            margins: [v(a), v(b), v(c)],
            binary,
        }
    }

    /// Canonical key, or `None` when no array can exist.
    fn canonical(&self) -> Option<Canon> {
        let mut vs = Vec::with_capacity(3);
        let mut total = None;
        for m in &self.margins {
            if m.iter().any(|&x| x < 0) {
                return None;
            }
            let sum: i64 = m.iter().sum();
            if *total.get_or_insert(sum) != sum {
                return None;
            }
            let mut v: Vec<usize> = m.iter().filter(|&&x| x > 0).map(|&x| x as usize).collect();
            v.sort_unstable_by(|x, y| y.cmp(x));
            vs.push(v);
        }
        Some(Canon::new(vs, self.binary))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Canon {
    axes: [Vec<usize>; 3],
    binary: bool,
}

impl Canon {
    /// Sorts the axes so the longest comes first; that axis is sliced, which
    /// keeps each slice (a matrix over the two shorter axes) small.
    fn new(mut vs: Vec<Vec<usize>>, binary: bool) -> Self {
        vs.sort_unstable_by(|x, y| y.len().cmp(&x.len()).then_with(|| y.cmp(x)));
        let c = vs.pop().unwrap();
        let b = vs.pop().unwrap();
        let a = vs.pop().unwrap();
        Canon {
            axes: [a, b, c],
            binary,
        }
    }
}

/// Memoized contingency-array counter, shareable between threads.
#[derive(Default)]
pub struct ArrayCounter {
    memo: RwLock<HashMap<Canon, BigUint>>,
}

impl ArrayCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn count(&self, spec: &ContingencySpec) -> BigUint {
        match spec.canonical() {
            Some(key) => self.count_canonical(&key),
            None => BigUint::zero(),
        }
    }

    /// `CA(α, β, γ)` for partitions (or `CA*` with `binary`).
    pub fn count_partitions(&self, a: &Partition, b: &Partition, c: &Partition, binary: bool) -> BigUint {
        self.count(&ContingencySpec::from_partitions(a, b, c, binary))
    }

    fn count_canonical(&self, key: &Canon) -> BigUint {
        let [a, b, c] = &key.axes;
        if a.is_empty() {
            // equal totals, so all three are empty
            return BigUint::one();
        }
        if let Some(v) = self.memo.read().unwrap().get(key) {
            return v.clone();
        }
        let mut slice = SliceFill {
            counter: self,
            rest: &a[1..],
            rows: b.clone(),
            cols: c.clone(),
            width: c.len(),
            binary: key.binary,
            total: BigUint::zero(),
        };
        slice.fill(0, a[0]);
        let total = slice.total;
        self.memo.write().unwrap().insert(key.clone(), total.clone());
        total
    }
}

/// Enumerates the first slice as a `|b| × |c|` matrix with entry sum `a[0]`,
/// bounded by the residual margins, and recurses on what is left.
struct SliceFill<'a> {
    counter: &'a ArrayCounter,
    rest: &'a [usize],
    rows: Vec<usize>,
    cols: Vec<usize>,
    width: usize,
    binary: bool,
    total: BigUint,
}

impl SliceFill<'_> {
    fn fill(&mut self, cell: usize, left: usize) {
        if left == 0 {
            let axes = [self.rest, &self.rows[..], &self.cols[..]]
                .iter()
                .map(|v| sorted_positive(v))
                .collect();
            let key = Canon::new(axes, self.binary);
            self.total += self.counter.count_canonical(&key);
            return;
        }
        if cell == self.rows.len() * self.width {
            return;
        }
        let (j, k) = (cell / self.width, cell % self.width);
        // capacity left in this row and all later rows
        let row_capacity: usize = self.rows[j..].iter().sum();
        if row_capacity < left {
            return;
        }
        let mut hi = left.min(self.rows[j]).min(self.cols[k]);
        if self.binary {
            hi = hi.min(1);
        }
        for x in (0..=hi).rev() {
            self.rows[j] -= x;
            self.cols[k] -= x;
            self.fill(cell + 1, left - x);
            self.rows[j] += x;
            self.cols[k] += x;
        }
    }
}

fn sorted_positive(v: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = v.iter().copied().filter(|&x| x > 0).collect();
    out.sort_unstable_by(|x, y| y.cmp(x));
    out
}

/// One-shot count without a shared memo.
pub fn count_contingency(spec: &ContingencySpec) -> BigUint {
    ArrayCounter::new().count(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct enumeration of all arrays with entries up to the total.
    fn brute(a: &[i64], b: &[i64], c: &[i64], binary: bool) -> u64 {
        if a.iter().chain(b).chain(c).any(|&x| x < 0) {
            return 0;
        }
        let (la, lb, lc) = (a.len(), b.len(), c.len());
        let cells = la * lb * lc;
        // an entry never exceeds any of the three margins through it
        let cap: Vec<i64> = (0..cells)
            .map(|idx| {
                let (i, j, k) = (idx / (lb * lc), (idx / lc) % lb, idx % lc);
                let m = a[i].min(b[j]).min(c[k]);
                if binary {
                    m.min(1)
                } else {
                    m
                }
            })
            .collect();
        let mut x = vec![0i64; cells];
        let mut count = 0;
        loop {
            let ok = (0..la).all(|i| (0..lb * lc).map(|r| x[i * lb * lc + r]).sum::<i64>() == a[i])
                && (0..lb).all(|j| {
                    (0..la)
                        .flat_map(|i| (0..lc).map(move |k| (i, k)))
                        .map(|(i, k)| x[(i * lb + j) * lc + k])
                        .sum::<i64>()
                        == b[j]
                })
                && (0..lc).all(|k| {
                    (0..la)
                        .flat_map(|i| (0..lb).map(move |j| (i, j)))
                        .map(|(i, j)| x[(i * lb + j) * lc + k])
                        .sum::<i64>()
                        == c[k]
                });
            if ok {
                count += 1;
            }
            let mut pos = 0;
            loop {
                if pos == cells {
                    return count;
                }
                if x[pos] < cap[pos] {
                    x[pos] += 1;
                    break;
                }
                x[pos] = 0;
                pos += 1;
            }
        }
    }

    #[test]
    fn examples() {
        assert_eq!(
            count_contingency(&ContingencySpec::new(vec![2], vec![2], vec![2])),
            BigUint::one()
        );
        assert_eq!(
            count_contingency(&ContingencySpec::new(vec![1, 1], vec![1, 1], vec![2])),
            BigUint::from(2u32)
        );
        assert_eq!(
            count_contingency(&ContingencySpec::binary(vec![1], vec![1], vec![1])),
            BigUint::one()
        );
        assert_eq!(
            count_contingency(&ContingencySpec::binary(vec![2], vec![2], vec![2])),
            BigUint::zero()
        );
    }

    #[test]
    fn negative_or_unbalanced_margins_give_zero() {
        assert!(count_contingency(&ContingencySpec::new(vec![3, -1], vec![2], vec![2])).is_zero());
        assert!(count_contingency(&ContingencySpec::new(vec![3], vec![2], vec![2])).is_zero());
        assert_eq!(
            count_contingency(&ContingencySpec::new(vec![], vec![], vec![])),
            BigUint::one()
        );
        assert_eq!(
            count_contingency(&ContingencySpec::new(vec![0, 2], vec![2, 0], vec![1, 1])),
            BigUint::one()
        );
    }

    #[test]
    fn two_rows_cube() {
        // 2x2x2 arrays with every slice sum m
        let counts: Vec<_> = [2i64, 4, 6, 8]
            .iter()
            .map(|&m| count_contingency(&ContingencySpec::new(vec![m, m], vec![m, m], vec![m, m])))
            .collect();
        assert_eq!(counts, [12u32, 57, 176, 425].map(BigUint::from));
    }

    #[test]
    fn matches_brute_force() {
        let cases: &[(&[i64], &[i64], &[i64])] = &[
            (&[2, 1], &[1, 1, 1], &[3]),
            (&[2, 1], &[2, 1], &[2, 1]),
            (&[1, 2], &[1, 1, 1], &[2, 1]),
            (&[3, 1], &[2, 2], &[2, 1, 1]),
            (&[2, 2], &[3, 1], &[1, 3]),
            (&[1, 1, 1, 1], &[2, 2], &[2, 1, 1]),
            (&[2, 0, 2], &[1, 2, 1], &[4]),
        ];
        let counter = ArrayCounter::new();
        for &(a, b, c) in cases {
            for binary in [false, true] {
                let spec = ContingencySpec {
                    margins: [a.to_vec(), b.to_vec(), c.to_vec()],
                    binary,
                };
                assert_eq!(counter.count(&spec), BigUint::from(brute(a, b, c, binary)), "{spec:?}");
            }
        }
    }
}
