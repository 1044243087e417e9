//! Kronecker coefficients `g(λ, μ, ν)`.
//!
//! Two independent routes:
//!
//! * [`kronecker`] averages the triple product of characters over `S_n`,
//!   grouped by conjugacy class.
//! * [`kronecker_alternating`] expands the generalized Cauchy product: a
//!   signed sum over `σ ∈ S_a, ω ∈ S_b, π ∈ S_c` of contingency-array counts
//!   with margins `λ + δ_a − σ·δ_a` (and likewise for `μ`, `ν`), where
//!   `δ_k = (k−1, …, 1, 0)`.
//!
//! The alternating sum factors per axis: a shifted margin only matters
//! through its sorted form, so the signs for each axis are accumulated into
//! a weight per sorted margin and the triple sum runs over those weights.
//! Permutations that would produce a negative margin contribute zero and
//! are pruned while they are generated.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::character::{class_size, factorial, CharacterStore};
use crate::contingency::ArrayCounter;
use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};

pub(crate) fn check_sizes(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<usize> {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return Err(Error::SizeMismatch(format!(
            "partitions {lambda:?}, {mu:?}, {nu:?} have sizes {}, {}, {}",
            n,
            mu.size(),
            nu.size()
        )));
    }
    Ok(n)
}

/// `g(λ, μ, ν) = (1/n!) Σ_α |C_α| χ^λ[α] χ^μ[α] χ^ν[α]`.
///
/// `g((), (), ()) = 1`. A nonzero remainder in the final division means a
/// character value is wrong and is reported as [`Error::Internal`].
pub fn kronecker(store: &CharacterStore, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
    let n = check_sizes(lambda, mu, nu)?;
    let mut total = BigInt::zero();
    for alpha in partitions(n) {
        let a = store.character(lambda, &alpha)?;
        if a.is_zero() {
            continue;
        }
        let b = store.character(mu, &alpha)?;
        if b.is_zero() {
            continue;
        }
        let c = store.character(nu, &alpha)?;
        total += a * b * c * BigInt::from(class_size(&alpha));
    }
    let (q, r) = total.div_rem(&BigInt::from(factorial(n)));
    if !r.is_zero() || q.is_negative() {
        return Err(Error::Internal(format!(
            "character sum for {lambda:?}, {mu:?}, {nu:?} is not a nonnegative multiple of {n}!"
        )));
    }
    Ok(q.magnitude().clone())
}

/// Work ceiling for [`kronecker_alternating`].
#[derive(Debug, Clone, Copy)]
pub struct AlternatingGuard {
    /// Upper bound on `a! + b! + c!`, the permutations enumerated per axis.
    pub max_axis_permutations: u128,
}

impl Default for AlternatingGuard {
    fn default() -> Self {
        // every length up to 10
        AlternatingGuard {
            max_axis_permutations: 3 * 3_628_800,
        }
    }
}

fn small_factorial(n: usize) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

/// Signed weight of each sorted margin `λ + δ_a − σ·δ_a` over `σ ∈ S_a`,
/// skipping permutations that produce a negative component.
fn axis_weights(shape: &Partition) -> BTreeMap<Vec<usize>, i64> {
    fn rec(
        parts: &[usize],
        i: usize,
        used: &mut [bool],
        current: &mut Vec<usize>,
        inversions: usize,
        out: &mut BTreeMap<Vec<usize>, i64>,
    ) {
        let a = parts.len();
        if i == a {
            let mut key: Vec<usize> = current.iter().copied().filter(|&x| x > 0).collect();
            key.sort_unstable_by(|x, y| y.cmp(x));
            let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
            *out.entry(key).or_insert(0) += sign;
            return;
        }
        // 0-based: component i becomes λ_i + σ(i) − i, which must stay >= 0
        for target in 0..a {
            if used[target] || parts[i] + target < i {
                continue;
            }
            let earlier_larger = used[target + 1..].iter().filter(|&&u| u).count();
            used[target] = true;
            current.push(parts[i] + target - i);
            rec(parts, i + 1, used, current, inversions + earlier_larger, out);
            current.pop();
            used[target] = false;
        }
    }
    let mut out = BTreeMap::new();
    let parts = shape.parts();
    rec(parts, 0, &mut vec![false; parts.len()], &mut Vec::new(), 0, &mut out);
    out.retain(|_, w| *w != 0);
    out
}

/// `g(λ, μ, ν)` from the alternating sum of contingency-array counts.
///
/// Fails with [`Error::Resource`] when `ℓ(λ)! + ℓ(μ)! + ℓ(ν)!` exceeds the
/// guard; the message carries the nominal `a!·b!·c!` term count.
pub fn kronecker_alternating(
    counter: &ArrayCounter,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    guard: AlternatingGuard,
) -> Result<BigInt> {
    check_sizes(lambda, mu, nu)?;
    let facts: Vec<Option<u128>> = [lambda, mu, nu].iter().map(|p| small_factorial(p.len())).collect();
    let work = facts
        .iter()
        .try_fold(0u128, |acc, f| f.and_then(|f| acc.checked_add(f)));
    if work.is_none_or(|w| w > guard.max_axis_permutations) {
        let nominal = [lambda, mu, nu]
            .iter()
            .fold(BigUint::from(1u32), |acc, p| acc * factorial(p.len()));
        return Err(Error::Resource {
            what: format!("alternating sum for {lambda:?}, {mu:?}, {nu:?} ({nominal} permutation triples)"),
            estimate: work.map_or_else(|| "overflow".to_string(), |w| w.to_string()),
            ceiling: guard.max_axis_permutations.to_string(),
        });
    }
    let wa = axis_weights(lambda);
    let wb = axis_weights(mu);
    let wc = axis_weights(nu);
    let mut total = BigInt::zero();
    for (ka, &a) in &wa {
        for (kb, &b) in &wb {
            for (kc, &c) in &wc {
                let count = counter.count_partitions(
                    &Partition::from_sorted(ka.clone()),
                    &Partition::from_sorted(kb.clone()),
                    &Partition::from_sorted(kc.clone()),
                    false,
                );
                if !count.is_zero() {
                    total += BigInt::from(a * b * c) * BigInt::from_biguint(Sign::Plus, count);
                }
            }
        }
    }
    Ok(total)
}

/// The nine arrangements that must share one Kronecker coefficient: the six
/// orderings of the triple and the three ways of conjugating two of them.
pub fn symmetry_variants(lambda: &Partition, mu: &Partition, nu: &Partition) -> Vec<[Partition; 3]> {
    let (l, m, n) = (lambda.clone(), mu.clone(), nu.clone());
    vec![
        [l.clone(), m.clone(), n.clone()],
        [l.clone(), n.clone(), m.clone()],
        [m.clone(), l.clone(), n.clone()],
        [m.clone(), n.clone(), l.clone()],
        [n.clone(), l.clone(), m.clone()],
        [n.clone(), m.clone(), l.clone()],
        [l.conjugate(), m.conjugate(), n.clone()],
        [l.conjugate(), m.clone(), n.conjugate()],
        [l, m.conjugate(), n.conjugate()],
    ]
}

/// Whether all [`symmetry_variants`] give the same coefficient.
pub fn symmetry_check(store: &CharacterStore, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<bool> {
    check_sizes(lambda, mu, nu)?;
    let mut values = symmetry_variants(lambda, mu, nu)
        .into_iter()
        .map(|[a, b, c]| kronecker(store, &a, &b, &c));
    let first = values.next().unwrap()?;
    for v in values {
        if v? != first {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn g(l: &[usize], m: &[usize], n: &[usize]) -> BigUint {
        kronecker(&CharacterStore::new(), &p(l), &p(m), &p(n)).unwrap()
    }

    #[test]
    fn worked_values() {
        assert_eq!(g(&[2, 2], &[2, 2], &[3, 1]), BigUint::zero());
        assert_eq!(g(&[3, 2], &[3, 2], &[4, 1]), BigUint::from(1u32));
        for k in 1..=6 {
            let col = Partition::column(k);
            let row = Partition::row(k);
            assert_eq!(
                kronecker(&CharacterStore::new(), &col, &col, &row).unwrap(),
                BigUint::from(1u32)
            );
        }
        assert_eq!(g(&[3, 3], &[3, 3], &[3, 3]), BigUint::zero());
        assert_eq!(g(&[2, 2], &[2, 2], &[2, 2]), BigUint::from(1u32));
        assert_eq!(g(&[], &[], &[]), BigUint::from(1u32));
    }

    #[test]
    fn size_mismatch_is_rejected() {
        let err = kronecker(&CharacterStore::new(), &p(&[2, 2]), &p(&[2, 2]), &p(&[3])).unwrap_err();
        assert!(matches!(err, Error::SizeMismatch(_)));
    }

    #[test]
    fn alternating_examples() {
        let counter = ArrayCounter::new();
        let alt = |l: &[usize], m: &[usize], n: &[usize]| {
            kronecker_alternating(&counter, &p(l), &p(m), &p(n), AlternatingGuard::default()).unwrap()
        };
        assert_eq!(alt(&[2, 2], &[2, 2], &[3, 1]), BigInt::zero());
        assert_eq!(alt(&[2], &[2], &[2]), BigInt::from(1));
        assert_eq!(alt(&[], &[], &[]), BigInt::from(1));
        assert_eq!(alt(&[3, 2], &[3, 2], &[4, 1]), BigInt::from(1));
    }

    #[test]
    fn alternating_guard_reports_estimate() {
        let guard = AlternatingGuard {
            max_axis_permutations: 10,
        };
        let col = Partition::column(4);
        let err = kronecker_alternating(&ArrayCounter::new(), &col, &col, &col, guard).unwrap_err();
        match err {
            Error::Resource { what, estimate, .. } => {
                assert!(what.contains("13824"), "{what}");
                assert_eq!(estimate, "72");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn axis_weights_of_single_row() {
        // one row: only the identity
        let w = axis_weights(&p(&[5]));
        assert_eq!(w.len(), 1);
        assert_eq!(w[&vec![5]], 1);
        // (1,1): identity gives (1,1); the swap gives (1+1, 1-1) = (2,0) with sign -1
        let w = axis_weights(&p(&[1, 1]));
        assert_eq!(w[&vec![1, 1]], 1);
        assert_eq!(w[&vec![2]], -1);
    }

    #[test]
    fn symmetry_examples() {
        let store = CharacterStore::new();
        assert!(symmetry_check(&store, &p(&[3, 1]), &p(&[2, 2]), &p(&[2, 1, 1])).unwrap());
        assert!(symmetry_check(&store, &p(&[5]), &p(&[5]), &p(&[5])).unwrap());
        assert!(symmetry_check(&store, &p(&[4]), &p(&[2, 2]), &p(&[4])).unwrap());
        assert_eq!(g(&[4], &[2, 2], &[4]), BigUint::zero());
    }
}
