//! Irreducible characters of the symmetric group and the dimension formulas.
//!
//! Character values are computed with the Murnaghan–Nakayama rule: the
//! cycle type is consumed part by part (largest first) and every border
//! strip of matching length is stripped from the shape, contributing
//! `(-1)^(height - 1)`. Border strips are found on the beta-set (abacus)
//! encoding of the shape, where removing a strip of length `r` moves one
//! bead `r` places down into an empty slot.
//!
//! Worst-case cost is exponential; computing characters of `S_n` is #P-hard.
//! In practice single values are cheap up to `n ≈ 40`.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of standard Young tableaux of shape `λ`, by the hook length formula.
pub fn dimension(shape: &Partition) -> BigUint {
    let hooks: BigUint = shape.hooks().into_iter().map(BigUint::from).product();
    let (q, r) = factorial(shape.size()).div_rem(&hooks);
    debug_assert!(r.is_zero());
    q
}

/// Dimension of the irreducible `GL_m` module of highest weight `λ`, by the
/// hook content formula. Zero when `λ` has more than `m` rows.
pub fn gl_dimension(shape: &Partition, m: usize) -> BigUint {
    if shape.len() > m {
        return BigUint::zero();
    }
    let conj = shape.conjugate();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for cell in shape.cells() {
        let hook = shape.part(cell.row) - cell.col + conj.part(cell.col) - cell.row + 1;
        // m + c(u) = m + col - row > 0 since row <= m
        num *= m + cell.col - cell.row;
        den *= hook;
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// Size of the conjugacy class of cycle type `α`: `n! / z_α`.
pub fn class_size(cycle_type: &Partition) -> BigUint {
    factorial(cycle_type.size()) / centralizer_order(cycle_type)
}

/// `z_α = Π_j j^{m_j} m_j!`.
pub fn centralizer_order(cycle_type: &Partition) -> BigUint {
    cycle_type
        .multiplicities()
        .iter()
        .enumerate()
        .fold(BigUint::one(), |acc, (j, &m)| {
            acc * BigUint::from(j + 1).pow(m as u32) * factorial(m)
        })
}

/// `(-1)^(n - ℓ(α))`, the sign character.
pub fn sign(cycle_type: &Partition) -> i32 {
    if (cycle_type.size() - cycle_type.len()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Result of stripping one border strip: the remaining shape and whether the
/// strip has even height (which makes its sign negative).
struct Strip {
    rest: Vec<usize>,
    negative: bool,
}

/// All border strips of length `r` in `shape`.
fn border_strips(shape: &[usize], r: usize) -> Vec<Strip> {
    let len = shape.len();
    let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        // beads jumped over = height - 1
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let mut rest: Vec<usize> = next.iter().enumerate().map(|(k, &x)| x + k + 1 - len).collect();
        while rest.last() == Some(&0) {
            rest.pop();
        }
        out.push(Strip {
            rest,
            negative: jumped % 2 == 1,
        });
    }
    out
}

type Key = (Vec<usize>, Vec<usize>);

/// Memoized character values `χ^λ[α]`.
///
/// Safe to share between threads. Entries are only ever inserted with the
/// value the rule computes, so concurrent callers may duplicate work but
/// always read correct values. Once `limit` entries are stored new results
/// are returned without being cached.
pub struct CharacterStore {
    memo: RwLock<HashMap<Key, BigInt>>,
    limit: usize,
}

impl Default for CharacterStore {
    fn default() -> Self {
        CharacterStore::with_limit(4_000_000)
    }
}

impl CharacterStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_limit(limit: usize) -> Self {
        CharacterStore {
            memo: RwLock::new(HashMap::new()),
            limit,
        }
    }

    pub fn len(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.memo.write().unwrap().clear();
    }

    /// Cached value for `(shape, cycle_type)`, if present.
    pub fn cached(&self, shape: &Partition, cycle_type: &Partition) -> Option<BigInt> {
        let key = (shape.parts().to_vec(), cycle_type.parts().to_vec());
        self.memo.read().unwrap().get(&key).cloned()
    }

    /// `χ^λ[α]` for `|λ| = |α|`.
    pub fn character(&self, shape: &Partition, cycle_type: &Partition) -> Result<BigInt> {
        if shape.size() != cycle_type.size() {
            return Err(Error::SizeMismatch(format!(
                "shape {shape:?} has size {}, cycle type {cycle_type:?} has size {}",
                shape.size(),
                cycle_type.size()
            )));
        }
        Ok(self.eval(shape.parts(), cycle_type.parts()))
    }

    /// The full column `χ^λ[α]` for every `α ⊢ n`, in the order of `classes`.
    pub fn column(&self, shape: &Partition, classes: &[Partition]) -> Result<Vec<BigInt>> {
        classes.iter().map(|a| self.character(shape, a)).collect()
    }

    fn eval(&self, shape: &[usize], cycles: &[usize]) -> BigInt {
        if cycles.is_empty() {
            return BigInt::one();
        }
        if shape.len() == 1 {
            return BigInt::one();
        }
        if shape.iter().all(|&p| p == 1) {
            let odd = (cycles.iter().sum::<usize>() - cycles.len()) % 2 == 1;
            return if odd { -BigInt::one() } else { BigInt::one() };
        }
        if cycles[0] == 1 {
            return BigInt::from(dimension(&Partition::from_sorted(shape.to_vec())));
        }
        let key = (shape.to_vec(), cycles.to_vec());
        if let Some(v) = self.memo.read().unwrap().get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for strip in border_strips(shape, cycles[0]) {
            let v = self.eval(&strip.rest, &cycles[1..]);
            if strip.negative {
                total -= v;
            } else {
                total += v;
            }
        }
        let mut memo = self.memo.write().unwrap();
        if memo.len() < self.limit {
            memo.insert(key, total.clone());
        }
        total
    }
}
