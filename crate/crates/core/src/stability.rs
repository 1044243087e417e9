//! The reduction map, k-stability and stable Kronecker coefficients.
//!
//! Notation: for a triple `λ, μ, ν ⊢ n`, `s = n − ν₁`, `ω = λ ∪ μ`,
//! `ρ = λ ∩ μ`, and `ℓ` bounds all three lengths.

use std::cmp::Ordering;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::character::{dimension, CharacterStore};
use crate::error::{Error, Result};
use crate::kronecker::{check_sizes, kronecker};
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    /// Common size of the reduced triple.
    pub r: usize,
    pub s: usize,
    pub length: usize,
    pub omega: Partition,
    pub rho: Partition,
    /// `I = {i : ρ_i ≥ ω_{i+1} + s}`, 1-based, ascending.
    pub index_set: Vec<usize>,
    /// `i_j` for `j = 1..=ℓ`; `ℓ + 1` when no element of `I` is `≥ j`.
    pub assignment: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionOutcome {
    /// `|λ_i − μ_i| > s` at `index` (1-based), so `g = 0`.
    ZeroCertificate {
        index: usize,
        s: usize,
    },
    Reduced(Reduction),
}

/// Applies the reduction map with length bound `length` (default: the
/// largest of the three lengths).
///
/// When `ℓ ∉ I` the rows past the last element of `I` have no `i_j`; they
/// are assigned `i_j = ℓ + 1` with `ρ_{ℓ+1} = 0`, which leaves them
/// unchanged.
pub fn reduce(lambda: &Partition, mu: &Partition, nu: &Partition, length: Option<usize>) -> Result<ReductionOutcome> {
    let n = check_sizes(lambda, mu, nu)?;
    let longest = lambda.len().max(mu.len()).max(nu.len());
    let l = length.unwrap_or(longest);
    if l < longest {
        return Err(Error::Domain(format!(
            "length bound {l} is below the longest length {longest}"
        )));
    }
    let s = n - nu.first();
    if let Some(index) = (1..=l).find(|&i| lambda.part(i).abs_diff(mu.part(i)) > s) {
        return Ok(ReductionOutcome::ZeroCertificate { index, s });
    }
    let (omega, rho) = lambda.union_intersection(mu);
    let index_set: Vec<usize> = (1..=l).filter(|&i| rho.part(i) >= omega.part(i + 1) + s).collect();
    let assignment: Vec<usize> = (1..=l)
        .map(|j| index_set.iter().copied().find(|&i| i >= j).unwrap_or(l + 1))
        .collect();
    let image = |p: &Partition| -> Vec<usize> {
        (1..=l)
            .map(|j| {
                let i = assignment[j - 1];
                p.part(j) - rho.part(i) + s * (l + 1 - i)
            })
            .collect()
    };
    let (pl, pm) = (image(lambda), image(mu));
    let r: usize = pl.iter().sum();
    let fault = |what: &str, v: &[usize]| {
        Error::Internal(format!(
            "reduction of {lambda:?}, {mu:?}, {nu:?} (l = {l}) gave {what} {v:?}"
        ))
    };
    if pm.iter().sum::<usize>() != r {
        return Err(fault("unequal sizes, second image", &pm));
    }
    let phi_lambda = Partition::from_padded(pl.clone()).map_err(|_| fault("non-partition", &pl))?;
    let phi_mu = Partition::from_padded(pm.clone()).map_err(|_| fault("non-partition", &pm))?;
    let first = r.checked_sub(s).ok_or_else(|| fault("r below s", &[r, s]))?;
    let phi_nu = nu
        .tail()
        .with_first_row(first)
        .map_err(|_| fault("non-partition third image", &[first]))?;
    Ok(ReductionOutcome::Reduced(Reduction {
        lambda: phi_lambda,
        mu: phi_mu,
        nu: phi_nu,
        r,
        s,
        length: l,
        omega,
        rho,
        index_set,
        assignment,
    }))
}

/// `λ + (t^k)`: adds `t` to each of the first `k` rows.
pub fn shift_rows(p: &Partition, t: usize, k: usize) -> Partition {
    let mut v = p.padded(p.len().max(k));
    for x in v.iter_mut().take(k) {
        *x += t;
    }
    Partition::from_sorted(v)
}

/// The min-max condition at row `k`, `min(λ_k, μ_k) ≥ max(λ_{k+1}, μ_{k+1}) + s`,
/// together with the hypothesis that `ν` carries the largest first part.
///
/// `ν` is the partition that receives `(tk)` in `G_k`, so the triple is not
/// reordered; when `ν₁ < max(λ₁, μ₁)` the condition is false.
pub fn kstab_condition(lambda: &Partition, mu: &Partition, nu: &Partition, k: usize) -> bool {
    let n = lambda.size();
    if k == 0 || mu.size() != n || nu.size() != n {
        return false;
    }
    if nu.first() < lambda.first().max(mu.first()) {
        return false;
    }
    let s = n - nu.first();
    lambda.part(k).min(mu.part(k)) >= lambda.part(k + 1).max(mu.part(k + 1)) + s
}

/// Least `t ≥ 0` such that the shifted triple satisfies [`kstab_condition`];
/// `None` when no shift does (only possible for `k = 1`, where the
/// first-part hypothesis does not move).
pub fn stability_onset(lambda: &Partition, mu: &Partition, nu: &Partition, k: usize) -> Option<usize> {
    let n = lambda.size();
    if k == 0 || mu.size() != n || nu.size() != n {
        return None;
    }
    let s = n - nu.first();
    let widest = lambda.first().max(mu.first());
    // ν₁ + tk ≥ max(λ₁, μ₁) + t
    let hypothesis = if nu.first() >= widest {
        0
    } else if k == 1 {
        return None;
    } else {
        (widest - nu.first()).div_ceil(k - 1)
    };
    // min(λ_k, μ_k) + t ≥ max(λ_{k+1}, μ_{k+1}) + s
    let minmax = (lambda.part(k + 1).max(mu.part(k + 1)) + s).saturating_sub(lambda.part(k).min(mu.part(k)));
    Some(hypothesis.max(minmax))
}

/// The shifted triple `(λ + (t^k), μ + (t^k), ν + (tk))`.
pub fn shifted_triple(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    k: usize,
    t: usize,
) -> (Partition, Partition, Partition) {
    (shift_rows(lambda, t, k), shift_rows(mu, t, k), shift_rows(nu, t * k, 1))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilitySequence {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    #[serde(with = "crate::decimal::text")]
    pub k: usize,
    /// `G_k(0), …, G_k(t_max)`.
    #[serde(with = "crate::decimal::biguint_vec")]
    pub values: Vec<BigUint>,
    #[serde(with = "crate::decimal::option_text")]
    pub onset: Option<usize>,
    /// Whether the onset lies within the computed range.
    pub stabilized: bool,
}

impl StabilitySequence {
    /// The k-stable coefficient, once the onset has been reached.
    pub fn stable_value(&self) -> Option<&BigUint> {
        if self.stabilized {
            self.values.last()
        } else {
            None
        }
    }

    /// Start of the final run of equal values.
    pub fn plateau_start(&self) -> usize {
        let mut start = self.values.len().saturating_sub(1);
        while start > 0 && self.values[start - 1] == self.values[start] {
            start -= 1;
        }
        start
    }

    pub fn is_monotone(&self) -> bool {
        self.values.windows(2).all(|w| w[0] <= w[1])
    }
}

/// `G_k(t) = g(λ + (t^k), μ + (t^k), ν + (tk))` for `t = 0..=t_max`.
pub fn stability_sequence(
    store: &CharacterStore,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    k: usize,
    t_max: usize,
) -> Result<StabilitySequence> {
    check_sizes(lambda, mu, nu)?;
    if k == 0 {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    let values = (0..=t_max)
        .map(|t| {
            let (a, b, c) = shifted_triple(lambda, mu, nu, k, t);
            kronecker(store, &a, &b, &c)
        })
        .collect::<Result<Vec<_>>>()?;
    let onset = stability_onset(lambda, mu, nu, k);
    Ok(StabilitySequence {
        lambda: lambda.clone(),
        mu: mu.clone(),
        nu: nu.clone(),
        k,
        values,
        onset,
        stabilized: onset.is_some_and(|t0| t0 <= t_max),
    })
}

/// Orders a triple by first part, ties broken by length and then
/// lexicographically, so the last entry can play the role of `ν`.
pub fn sort_by_first_part(mut triple: [Partition; 3]) -> [Partition; 3] {
    triple.sort_by(|a, b| match a.first().cmp(&b.first()) {
        Ordering::Equal => a.len().cmp(&b.len()).then_with(|| a.parts().cmp(b.parts())),
        o => o,
    });
    triple
}

/// `ḡ₁(α, β, γ)`: the value of `g((t−|α|, α), (t−|β|, β), (t−|γ|, γ))` for
/// large `t`.
///
/// The onset `t₀` is the least `t` at which all three are partitions and
/// the triple, sorted by first part, satisfies the min-max condition with
/// `k = 1`. The coefficient is evaluated at `t₀ + 1` and `t₀ + 2`; a
/// disagreement is reported as [`Error::Internal`].
pub fn stable_kronecker(
    store: &CharacterStore,
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
) -> Result<BigUint> {
    let t0 = stable_onset(alpha, beta, gamma);
    let at = |t: usize| -> Result<BigUint> {
        let [a, b, c] = padded_triple(alpha, beta, gamma, t)?;
        kronecker(store, &a, &b, &c)
    };
    let (x, y) = (at(t0 + 1)?, at(t0 + 2)?);
    if x != y {
        return Err(Error::Internal(format!(
            "stable coefficient of {alpha:?}, {beta:?}, {gamma:?} moved from {x} to {y} past onset {t0}"
        )));
    }
    Ok(y)
}

fn padded_triple(alpha: &Partition, beta: &Partition, gamma: &Partition, t: usize) -> Result<[Partition; 3]> {
    let pad = |x: &Partition| {
        t.checked_sub(x.size())
            .ok_or_else(|| Error::Domain(format!("t = {t} is below |{x:?}|")))
            .and_then(|first| x.with_first_row(first))
    };
    Ok([pad(alpha)?, pad(beta)?, pad(gamma)?])
}

/// Least `t` from which the padded triple provably no longer changes.
pub fn stable_onset(alpha: &Partition, beta: &Partition, gamma: &Partition) -> usize {
    let start = [alpha, beta, gamma]
        .iter()
        .map(|x| x.size() + x.first())
        .max()
        .unwrap_or(0);
    (start..)
        .find(|&t| {
            let Ok(triple) = padded_triple(alpha, beta, gamma, t) else {
                return false;
            };
            let [a, b, c] = sort_by_first_part(triple);
            kstab_condition(&a, &b, &c, 1)
        })
        .expect("the min-max condition holds for large t")
}

/// Which hypothesis fixes the size threshold `u` in the tail bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailMode {
    /// `ℓ(λ), ℓ(μ) ≤ ℓ`: `u = (ℓ+1)ℓs`.
    Length(usize),
    /// `d(λ), d(μ) ≤ h`: `u = 2(h+1)²s`.
    Durfee(usize),
}

/// Threshold `u` for a fixed tail `ν ⊢ s`.
pub fn tail_bound_u(tail: &Partition, mode: TailMode) -> usize {
    let s = tail.size();
    match mode {
        TailMode::Length(l) => (l + 1) * l * s,
        TailMode::Durfee(h) => 2 * (h + 1) * (h + 1) * s,
    }
}

/// `f^{(u−s, ν)}`, the bound on `g(λ, μ, (n−s, ν))` for every admissible
/// `λ, μ ⊢ n ≥ u`.
pub fn tail_bound_value(tail: &Partition, mode: TailMode) -> Result<BigUint> {
    let u = tail_bound_u(tail, mode);
    let shape = tail.with_first_row(u - tail.size())?;
    Ok(dimension(&shape))
}

/// Whether the tail bound applies to `g(λ, μ, (n−s, ν))`.
pub fn tail_bound_applies(lambda: &Partition, mu: &Partition, tail: &Partition, mode: TailMode) -> bool {
    let n = lambda.size();
    let s = tail.size();
    if mu.size() != n || n < s || n - s < tail.first() || n < tail_bound_u(tail, mode) {
        return false;
    }
    match mode {
        TailMode::Length(l) => tail.len() <= l && lambda.len() <= l && mu.len() <= l,
        TailMode::Durfee(h) => lambda.durfee() <= h && mu.durfee() <= h,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn zero_certificate() {
        let out = reduce(&p(&[4]), &p(&[2, 2]), &p(&[4]), None).unwrap();
        assert_eq!(out, ReductionOutcome::ZeroCertificate { index: 1, s: 0 });
    }

    #[test]
    fn reduction_example() {
        let t = p(&[3, 1]);
        let ReductionOutcome::Reduced(r) = reduce(&t, &t, &t, Some(2)).unwrap() else {
            panic!()
        };
        assert_eq!(r.s, 1);
        assert_eq!(r.index_set, vec![1, 2]);
        assert_eq!(
            (r.lambda.clone(), r.mu.clone(), r.nu.clone()),
            (p(&[2, 1]), p(&[2, 1]), p(&[2, 1]))
        );
        assert_eq!(r.r, 3);
        // ℓ = 3 is not in I here, so row 3 keeps i_3 = 4
        let ReductionOutcome::Reduced(r) = reduce(&t, &t, &t, Some(3)).unwrap() else {
            panic!()
        };
        assert_eq!(r.assignment, vec![1, 2, 4]);
        assert_eq!((r.lambda, r.nu, r.r), (p(&[3, 2]), p(&[4, 1]), 5));
    }

    #[test]
    fn reduction_rejects_short_length() {
        assert!(matches!(
            reduce(&p(&[1, 1]), &p(&[2]), &p(&[2]), Some(1)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn kstab_examples() {
        assert!(!kstab_condition(&p(&[2, 2]), &p(&[2, 2]), &p(&[3, 1]), 1));
        for k in 1..=5 {
            let col = Partition::column(k);
            assert!(kstab_condition(&col, &col, &Partition::row(k), k));
        }
        let t = p(&[5, 1]);
        assert!(kstab_condition(&t, &t, &t, 1));
    }

    #[test]
    fn onset_matches_scan() {
        let store_free = [
            (p(&[2, 2]), p(&[2, 2]), p(&[3, 1])),
            (p(&[3, 1]), p(&[2, 1, 1]), p(&[2, 2])),
            (p(&[1, 1, 1]), p(&[2, 1]), p(&[3])),
            (p(&[4]), p(&[3, 1]), p(&[2, 2])),
        ];
        for (a, b, c) in store_free {
            for k in 1..=3 {
                let scan = (0..40).find(|&t| {
                    let (x, y, z) = shifted_triple(&a, &b, &c, k, t);
                    kstab_condition(&x, &y, &z, k)
                });
                assert_eq!(stability_onset(&a, &b, &c, k), scan, "{a:?} {b:?} {c:?} k={k}");
            }
        }
    }

    #[test]
    fn sequences() {
        let store = CharacterStore::new();
        let seq = stability_sequence(&store, &p(&[2, 2]), &p(&[2, 2]), &p(&[3, 1]), 1, 4).unwrap();
        assert_eq!(seq.values, [0u32, 1, 1, 1, 1].map(BigUint::from));
        assert_eq!(seq.onset, Some(1));
        assert_eq!(seq.stable_value(), Some(&BigUint::from(1u32)));
        assert_eq!(seq.plateau_start(), 1);
        let e = Partition::empty();
        let seq = stability_sequence(&store, &e, &e, &e, 1, 5).unwrap();
        assert!(seq.values.iter().all(|v| *v == BigUint::from(1u32)));
        let t = p(&[3, 1]);
        let seq = stability_sequence(&store, &t, &t, &t, 1, 3).unwrap();
        assert_eq!(seq.onset, Some(0));
        assert!(seq.values.iter().all(|v| *v == seq.values[0]));
        let short = stability_sequence(&store, &p(&[2, 2]), &p(&[2, 2]), &p(&[3, 1]), 1, 0).unwrap();
        assert!(!short.stabilized);
        assert_eq!(short.stable_value(), None);
    }

    #[test]
    fn stable_values() {
        let store = CharacterStore::new();
        let e = Partition::empty();
        assert_eq!(stable_kronecker(&store, &e, &e, &e).unwrap(), BigUint::from(1u32));
        let two = p(&[2]);
        let v = stable_kronecker(&store, &two, &two, &two).unwrap();
        let t0 = stable_onset(&two, &two, &two);
        for t in [t0 + 3, t0 + 5] {
            let [a, b, c] = padded_triple(&two, &two, &two, t).unwrap();
            assert_eq!(kronecker(&store, &a, &b, &c).unwrap(), v);
        }
    }

    #[test]
    fn tail_bounds() {
        assert_eq!(tail_bound_u(&p(&[1]), TailMode::Length(2)), 6);
        assert_eq!(tail_bound_u(&p(&[1]), TailMode::Durfee(1)), 8);
        assert_eq!(
            tail_bound_value(&p(&[1]), TailMode::Length(2)).unwrap(),
            BigUint::from(5u32)
        );
        let lam = p(&[6, 2]);
        assert!(tail_bound_applies(&lam, &lam, &p(&[1]), TailMode::Length(2)));
        let g = kronecker(&CharacterStore::new(), &lam, &lam, &p(&[7, 1])).unwrap();
        assert!(g <= BigUint::from(5u32));
        assert!(!tail_bound_applies(
            &p(&[2, 2]),
            &p(&[2, 2]),
            &p(&[1]),
            TailMode::Length(2)
        ));
    }
}
