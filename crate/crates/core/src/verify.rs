//! Exhaustive and sampled verification suites.
//!
//! Every check runs its instances in parallel and reports all failures,
//! sorted by instance size and then lexicographically, so the first one is
//! the minimal witness.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    check_manivel, lower_character, upper_binomial_product, upper_contingency, upper_dimension, upper_min, upper_schur,
};
use crate::error::{Error, Result};
use crate::kronecker::{kronecker, kronecker_alternating, symmetry_check};
use crate::lr::{lr_coefficient, lr_upper_bound};
use crate::partition::{count_distinct_parts_in_set, partitions, Partition};
use crate::precision::Real;
use crate::qbinomial::{
    almkvist_gap_bound, almkvist_recurrence_check_with, almkvist_window, delta_of, distinct_odd_poly,
    effective_gap_bound, gaussian_binomial, is_symmetric_unimodal, rectangle_gap_bound, sequence_is_symmetric,
    sequence_is_unimodal, stanley_difference, strictly_increasing,
};
use crate::stability::{kstab_condition, reduce, shifted_triple, stability_onset, stable_kronecker, ReductionOutcome};
use crate::{Engine, IntPolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Symmetry,
    Values,
    Reduction,
    Kstab,
    Bounds,
    Qbin,
    Almkvist,
    Stanley,
    #[serde(rename = "lemma14")]
    TwoCoefficients,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Symmetry,
        Suite::Values,
        Suite::Reduction,
        Suite::Kstab,
        Suite::Bounds,
        Suite::Qbin,
        Suite::Almkvist,
        Suite::Stanley,
        Suite::TwoCoefficients,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Symmetry => "symmetry",
            Suite::Values => "values",
            Suite::Reduction => "reduction",
            Suite::Kstab => "kstab",
            Suite::Bounds => "bounds",
            Suite::Qbin => "qbin",
            Suite::Almkvist => "almkvist",
            Suite::Stanley => "stanley",
            Suite::TwoCoefficients => "lemma14",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Ranges for the suites. Each suite reads the fields it needs; `None`
/// selects the suite's default range.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct VerifyConfig {
    /// Largest `n` for exhaustive triple checks, or the largest `n` of the
    /// polynomial suites.
    pub n: Option<usize>,
    /// Largest rectangle side for the two-coefficient check and Sylvester.
    pub lmax: Option<usize>,
    /// Seed for the sampled checks.
    pub seed: u64,
    /// Sample count for the sampled checks.
    pub samples: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    #[serde(with = "crate::decimal::text")]
    pub size: usize,
    pub instance: String,
    pub detail: String,
    #[serde(skip)]
    key: Vec<Vec<usize>>,
}

impl Failure {
    pub fn new(size: usize, key: Vec<Vec<usize>>, instance: impl Into<String>, detail: impl Into<String>) -> Self {
        Failure {
            size,
            instance: instance.into(),
            detail: detail.into(),
            key,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    #[serde(with = "crate::decimal::biguint")]
    pub instances: BigUint,
    pub failures: Vec<Failure>,
}

impl Check {
    fn new(name: &str, instances: usize, mut failures: Vec<Failure>) -> Check {
        failures.sort_by(|a, b| (a.size, &a.key, &a.instance).cmp(&(b.size, &b.key, &b.instance)));
        Check {
            name: name.into(),
            instances: BigUint::from(instances),
            failures,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn witness(&self) -> Option<&Failure> {
        self.failures.first()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

fn key(ps: &[&Partition]) -> Vec<Vec<usize>> {
    ps.iter().map(|p| p.parts().to_vec()).collect()
}

fn show(ps: &[&Partition]) -> String {
    ps.iter().map(|p| format!("{p:?}")).collect::<Vec<_>>().join(" ")
}

/// All ordered triples of partitions of each `n ≤ n_max`.
pub fn all_triples(n_max: usize) -> Vec<[Partition; 3]> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        let ps = partitions(n);
        for a in &ps {
            for b in &ps {
                for c in &ps {
                    out.push([a.clone(), b.clone(), c.clone()]);
                }
            }
        }
    }
    out
}

/// Runs `f` on every instance in parallel and collects the failures.
/// An `Err` from `f` is itself recorded as a failure.
fn run<T, F>(
    name: &str,
    items: &[T],
    size: impl Fn(&T) -> usize + Sync,
    describe: impl Fn(&T) -> (Vec<Vec<usize>>, String) + Sync,
    f: F,
) -> Check
where
    T: Sync,
    F: Fn(&T) -> Result<Option<String>> + Sync,
{
    let failures: Vec<Failure> = items
        .par_iter()
        .filter_map(|item| {
            let detail = match f(item) {
                Ok(None) => return None,
                Ok(Some(d)) => d,
                Err(e) => format!("error: {e}"),
            };
            let (k, inst) = describe(item);
            Some(Failure::new(size(item), k, inst, detail))
        })
        .collect();
    Check::new(name, items.len(), failures)
}

fn triple_size(t: &[Partition; 3]) -> usize {
    t[0].size()
}

fn triple_desc(t: &[Partition; 3]) -> (Vec<Vec<usize>>, String) {
    let r: Vec<&Partition> = t.iter().collect();
    (key(&r), show(&r))
}

/// `kronecker` and `kronecker_alternating` agree on every triple of `n ≤ n_max`.
pub fn check_cross_algorithm(engine: &Engine, n_max: usize) -> Check {
    let triples = all_triples(n_max);
    run("cross_algorithm", &triples, triple_size, triple_desc, |[a, b, c]| {
        let g = kronecker(&engine.characters, a, b, c)?;
        let alt = kronecker_alternating(&engine.arrays, a, b, c, engine.guard)?;
        Ok((BigInt::from(g.clone()) != alt).then(|| format!("character sum {g}, alternating sum {alt}")))
    })
}

/// Invariance under the six orderings and the three double conjugations.
pub fn check_symmetry(engine: &Engine, n_max: usize) -> Check {
    let triples = all_triples(n_max);
    run("symmetry", &triples, triple_size, triple_desc, |[a, b, c]| {
        Ok((!symmetry_check(&engine.characters, a, b, c)?).then(|| "variants disagree".to_string()))
    })
}

/// Fixed small values: `g((2,2),(2,2),(3,1)) = 0`, the shifted family equal
/// to 1, the two-row squares by parity, and columns against rows.
pub fn check_known_values(engine: &Engine) -> Check {
    let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
    let mut cases: Vec<([Partition; 3], u32)> = vec![([p(&[2, 2]), p(&[2, 2]), p(&[3, 1])], 0)];
    for t in 1..=4 {
        cases.push(([p(&[2 + t, 2]), p(&[2 + t, 2]), p(&[3 + t, 1])], 1));
    }
    for m in 1..=5 {
        let sq = p(&[m, m]);
        cases.push(([sq.clone(), sq.clone(), sq], u32::from(m % 2 == 0)));
    }
    for k in 1..=8 {
        cases.push(([Partition::column(k), Partition::column(k), Partition::row(k)], 1));
    }
    run(
        "known_values",
        &cases,
        |(t, _)| triple_size(t),
        |(t, _)| triple_desc(t),
        |([a, b, c], want)| {
            let g = kronecker(&engine.characters, a, b, c)?;
            Ok((g != BigUint::from(*want)).then(|| format!("got {g}, expected {want}")))
        },
    )
}

/// `g(m^ℓ, m^ℓ, (ℓm−k, k)) = p_k(ℓ,m) − p_{k−1}(ℓ,m)` for `ℓ, m ≤ lmax`, `k ≤ ℓm/2`.
pub fn check_two_coefficients(engine: &Engine, lmax: usize) -> Check {
    let mut cases = Vec::new();
    for l in 1..=lmax {
        for m in 1..=lmax {
            for k in 0..=l * m / 2 {
                cases.push((l, m, k));
            }
        }
    }
    run(
        "two_coefficients",
        &cases,
        |&(l, m, _)| l * m,
        |&(l, m, k)| (vec![vec![l, m, k]], format!("l={l} m={m} k={k}")),
        |&(l, m, k)| {
            let rect = Partition::rectangle(m, l);
            let tau = Partition::two_row(l * m, k)?;
            let g = kronecker(&engine.characters, &rect, &rect, &tau)?;
            let d = delta_of(&gaussian_binomial(l, m), k);
            Ok((BigInt::from(g.clone()) != d).then(|| format!("g = {g}, gap = {d}")))
        },
    )
}

/// The reduction map certifies zeros correctly, preserves `g`, and keeps
/// `r ≤ 2sℓ²`, for the default length bound and one larger.
pub fn check_reduction(engine: &Engine, n_max: usize) -> Vec<Check> {
    let mut cases = Vec::new();
    for t in all_triples(n_max) {
        let l = t.iter().map(Partition::len).max().unwrap();
        cases.push((t.clone(), l));
        cases.push((t, l + 1));
    }
    let size = |(t, _): &([Partition; 3], usize)| triple_size(t);
    let desc = |(t, l): &([Partition; 3], usize)| {
        let (mut k, s) = triple_desc(t);
        k.push(vec![*l]);
        (k, format!("{s} l={l}"))
    };
    let sound = run("reduction_sound", &cases, size, desc, |([a, b, c], l)| {
        let g = kronecker(&engine.characters, a, b, c)?;
        Ok(match reduce(a, b, c, Some(*l))? {
            ReductionOutcome::ZeroCertificate { index, .. } => {
                (!g.is_zero()).then(|| format!("zero certificate at row {index} but g = {g}"))
            }
            ReductionOutcome::Reduced(r) => {
                let h = kronecker(&engine.characters, &r.lambda, &r.mu, &r.nu)?;
                (h != g).then(|| format!("g = {g}, reduced {:?} {:?} {:?} gives {h}", r.lambda, r.mu, r.nu))
            }
        })
    });
    let bound = run("reduction_size", &cases, size, desc, |([a, b, c], l)| {
        Ok(match reduce(a, b, c, Some(*l))? {
            ReductionOutcome::Reduced(r) if r.r > 2 * r.s * l * l => Some(format!("r = {} > 2sl^2", r.r)),
            _ => None,
        })
    });
    let idempotent = run("reduction_repeat", &cases, size, desc, |([a, b, c], l)| {
        let ReductionOutcome::Reduced(r) = reduce(a, b, c, Some(*l))? else {
            return Ok(None);
        };
        let g = kronecker(&engine.characters, &r.lambda, &r.mu, &r.nu)?;
        Ok(match reduce(&r.lambda, &r.mu, &r.nu, None)? {
            ReductionOutcome::Reduced(q) => {
                let h = kronecker(&engine.characters, &q.lambda, &q.mu, &q.nu)?;
                (h != g).then(|| format!("second reduction changes {g} to {h}"))
            }
            ReductionOutcome::ZeroCertificate { .. } => (!g.is_zero()).then(|| format!("zero certificate on g = {g}")),
        })
    });
    vec![sound, bound, idempotent]
}

/// For triples of `n ≤ n_max` meeting the k-stability condition (`k ≤ k_max`),
/// `G_k(t)` is constant for `t = 0..=t_max`.
pub fn check_kstab(engine: &Engine, n_max: usize, k_max: usize, t_max: usize) -> Check {
    let mut cases = Vec::new();
    for t in all_triples(n_max) {
        for k in 1..=k_max {
            if kstab_condition(&t[0], &t[1], &t[2], k) {
                cases.push((t.clone(), k));
            }
        }
    }
    run(
        "kstab_constant",
        &cases,
        |(t, _)| triple_size(t),
        |(t, k)| {
            let (mut key, s) = triple_desc(t);
            key.push(vec![*k]);
            (key, format!("{s} k={k}"))
        },
        |([a, b, c], k)| {
            let values = (0..=t_max)
                .map(|t| {
                    let (x, y, z) = shifted_triple(a, b, c, *k, t);
                    kronecker(&engine.characters, &x, &y, &z)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(values
                .iter()
                .any(|v| *v != values[0])
                .then(|| format!("values {values:?}")))
        },
    )
}

/// Sampled triples of `n ≤ n_max`, `k ≤ k_max`, for the monotonicity check.
/// `t` runs to `onset + 2` (or 3 without an onset); triples whose last
/// shifted size exceeds `size_cap` are redrawn.
pub fn monotone_samples(
    n_max: usize,
    k_max: usize,
    samples: usize,
    seed: u64,
    size_cap: usize,
) -> Vec<([Partition; 3], usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tables: Vec<Vec<Partition>> = (0..=n_max).map(partitions).collect();
    let mut out = Vec::with_capacity(samples);
    while out.len() < samples {
        let n = rng.gen_range(1..=n_max);
        let k = rng.gen_range(1..=k_max);
        let pick = |rng: &mut ChaCha8Rng| tables[n].choose(rng).unwrap().clone();
        let t = [pick(&mut rng), pick(&mut rng), pick(&mut rng)];
        let last = stability_onset(&t[0], &t[1], &t[2], k).map_or(3, |o| o + 2);
        if n + last * k <= size_cap {
            out.push((t, k, last));
        }
    }
    out
}

/// `G_k(t+1) ≥ G_k(t)` along each sampled sequence.
pub fn check_monotone(engine: &Engine, n_max: usize, samples: usize, seed: u64, size_cap: usize) -> Check {
    let cases = monotone_samples(n_max, 3, samples, seed, size_cap);
    run(
        "kstab_monotone",
        &cases,
        |(t, _, _)| triple_size(t),
        |(t, k, last)| {
            let (mut key, s) = triple_desc(t);
            key.push(vec![*k]);
            (key, format!("{s} k={k} t<={last}"))
        },
        |([a, b, c], k, last)| {
            let values = (0..=*last)
                .map(|t| {
                    let (x, y, z) = shifted_triple(a, b, c, *k, t);
                    kronecker(&engine.characters, &x, &y, &z)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(values
                .windows(2)
                .any(|w| w[1] < w[0])
                .then(|| format!("values {values:?}")))
        },
    )
}

/// Every upper bound is at least `g` on all triples of `n ≤ n_max`.
pub fn check_sandwich(engine: &Engine, n_max: usize) -> Check {
    let triples = all_triples(n_max);
    run("upper_bounds", &triples, triple_size, triple_desc, |[a, b, c]| {
        let g = kronecker(&engine.characters, a, b, c)?;
        let gr = Ratio::from_integer(BigInt::from(g.clone()));
        let mut bad = Vec::new();
        if upper_dimension(a, b, c)? < gr {
            bad.push("dimension_ratio");
        }
        if upper_min(a, b, c)? < g {
            bad.push("min_dimension");
        }
        if upper_schur(a, b, c)? < gr {
            bad.push("schur_ratio");
        }
        if upper_binomial_product(a, b, c)? < g {
            bad.push("binomial_product");
        }
        let (ca, cas) = upper_contingency(&engine.arrays, a, b, c)?;
        if ca < g {
            bad.push("contingency");
        }
        if cas < g {
            bad.push("binary_contingency");
        }
        Ok((!bad.is_empty()).then(|| format!("g = {g} exceeds {}", bad.join(", "))))
    })
}

/// The binomial product dominates the Schur ratio it relaxes.
pub fn check_binomial_dominates_schur(n_max: usize) -> Check {
    let triples = all_triples(n_max);
    run("binomial_over_schur", &triples, triple_size, triple_desc, |[a, b, c]| {
        let bin = Ratio::from_integer(BigInt::from(upper_binomial_product(a, b, c)?));
        let schur = upper_schur(a, b, c)?;
        Ok((bin < schur).then(|| format!("binomial {bin} < schur {schur}")))
    })
}

/// `|χ^λ[μ̂]| ≤ g(λ, μ, μ)` for self-conjugate `μ ⊢ n ≤ n_max` and every `λ ⊢ n`.
pub fn check_character_lower(engine: &Engine, n_max: usize) -> Check {
    let mut cases = Vec::new();
    for n in 0..=n_max {
        let ps = partitions(n);
        for mu in ps.iter().filter(|p| p.is_self_conjugate()) {
            for lam in &ps {
                cases.push([lam.clone(), mu.clone()]);
            }
        }
    }
    run(
        "character_lower",
        &cases,
        |t| t[0].size(),
        |t| (key(&[&t[0], &t[1]]), show(&[&t[0], &t[1]])),
        |[lam, mu]| {
            let lb = lower_character(&engine.characters, lam, mu)?;
            let g = kronecker(&engine.characters, lam, mu, mu)?;
            Ok((lb > g).then(|| format!("bound {lb} > g = {g}")))
        },
    )
}

/// `g(μ, μ, μ) ≥ 1` for self-conjugate `μ ⊢ n ≤ n_max`.
pub fn check_self_conjugate_cube(engine: &Engine, n_max: usize) -> Check {
    let cases: Vec<Partition> = (1..=n_max)
        .flat_map(partitions)
        .filter(Partition::is_self_conjugate)
        .collect();
    run(
        "self_conjugate_cube",
        &cases,
        Partition::size,
        |m| (key(&[m]), show(&[m])),
        |mu| {
            let g = kronecker(&engine.characters, mu, mu, mu)?;
            let lb = lower_character(&engine.characters, mu, mu)?;
            Ok((g.is_zero() || lb.is_zero()).then(|| format!("g = {g}, character bound {lb}")))
        },
    )
}

/// `χ^{τ_k}[ρ̂_m] = P(k) − P(k−1)` for `k ≤ n/2`, where `P(j)` counts
/// partitions of `j` into distinct principal hooks of the staircase `ρ_m`.
/// The right side can be negative, so only its magnitude bounds `g`.
pub fn check_staircase_character(engine: &Engine, ms: &[usize]) -> Check {
    let cases: Vec<(usize, usize)> = ms
        .iter()
        .flat_map(|&m| (0..=Partition::staircase(m).size() / 2).map(move |k| (m, k)))
        .collect();
    run(
        "staircase_character",
        &cases,
        |&(m, _)| m * (m + 1) / 2,
        |&(m, k)| (vec![vec![m, k]], format!("m={m} k={k}")),
        |&(m, k)| {
            let rho = Partition::staircase(m);
            let hooks = rho.principal_hooks();
            let allowed: BTreeSet<usize> = hooks.parts().iter().copied().collect();
            let tau = Partition::two_row(rho.size(), k)?;
            let chi = engine.characters.character(&tau, &hooks)?;
            let q = |j: usize| BigInt::from(count_distinct_parts_in_set(j, &allowed));
            let diff = q(k) - if k == 0 { BigInt::zero() } else { q(k - 1) };
            Ok((chi != diff).then(|| format!("character {chi}, count difference {diff}")))
        },
    )
}

/// Random pairs of triples with positive coefficients, component sizes at
/// most `max_size`.
pub fn manivel_samples(engine: &Engine, samples: usize, max_size: usize, seed: u64) -> Result<Vec<[Partition; 6]>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tables: Vec<Vec<Partition>> = (0..=max_size).map(partitions).collect();
    let mut out = Vec::with_capacity(samples);
    let positive = |rng: &mut ChaCha8Rng| -> Result<[Partition; 3]> {
        loop {
            let n = rng.gen_range(1..=max_size);
            let t = [0, 1, 2].map(|_| tables[n].choose(rng).unwrap().clone());
            if !kronecker(&engine.characters, &t[0], &t[1], &t[2])?.is_zero() {
                return Ok(t);
            }
        }
    };
    while out.len() < samples {
        let [a, b, c] = positive(&mut rng)?;
        let [d, e, f] = positive(&mut rng)?;
        out.push([a, b, c, d, e, f]);
    }
    Ok(out)
}

pub fn check_manivel_samples(engine: &Engine, samples: usize, max_size: usize, seed: u64) -> Check {
    let cases = match manivel_samples(engine, samples, max_size, seed) {
        Ok(c) => c,
        Err(e) => return Check::new("manivel", 0, vec![Failure::new(0, vec![], "sampling", e.to_string())]),
    };
    run(
        "manivel",
        &cases,
        |s| s[0].size() + s[3].size(),
        |s| {
            let r: Vec<&Partition> = s.iter().collect();
            (key(&r), format!("{} + {}", show(&r[..3]), show(&r[3..])))
        },
        |[a, b, c, d, e, f]| {
            Ok(match check_manivel(&engine.characters, [a, b, c], [d, e, f])? {
                Some(false) => Some("sum coefficient below the larger summand".into()),
                Some(true) => None,
                None => Some("sampled pair is not positive".into()),
            })
        },
    )
}

/// `c^α_{βγ} ≤ f^α / (f^β f^γ)` for every `α ⊢ ≤ n_max` and every split of sizes.
pub fn check_lr_bound(n_max: usize) -> Check {
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for alpha in partitions(n) {
            for p in 0..=n {
                for beta in partitions(p) {
                    for gamma in partitions(n - p) {
                        cases.push([alpha.clone(), beta.clone(), gamma]);
                    }
                }
            }
        }
    }
    run("lr_bound", &cases, triple_size, triple_desc, |[a, b, c]| {
        let lr = lr_coefficient(a, b, c);
        let bound = lr_upper_bound(a, b, c);
        Ok((Ratio::from_integer(BigInt::from(lr.clone())) > bound).then(|| format!("c = {lr} > {bound}")))
    })
}

/// `c^α_{βγ} = ḡ₁(α, β, γ)` for `|β| + |γ| ≤ total_max` and `α ⊢ |β| + |γ|`.
pub fn check_lr_stable(engine: &Engine, total_max: usize) -> Check {
    let mut cases = Vec::new();
    for total in 0..=total_max {
        for p in 0..=total {
            for beta in partitions(p) {
                for gamma in partitions(total - p) {
                    for alpha in partitions(total) {
                        cases.push([alpha, beta.clone(), gamma.clone()]);
                    }
                }
            }
        }
    }
    run("lr_stable", &cases, triple_size, triple_desc, |[a, b, c]| {
        let lr = lr_coefficient(a, b, c);
        let st = stable_kronecker(&engine.characters, a, b, c)?;
        Ok((lr != st).then(|| format!("LR {lr}, stable {st}")))
    })
}

/// `CA((m,m)³)` and the Schur ratio for `(m,m)³` stay within a factor
/// `1 ± 0.5` of each other.
pub fn check_two_row_cube_growth(engine: &Engine, ms: &[usize]) -> Check {
    run(
        "two_row_cube_growth",
        ms,
        |&m| 2 * m,
        |&m| (vec![vec![m]], format!("m={m}")),
        |&m| {
            let sq = Partition::rectangle(m, 2);
            let ca = engine.arrays.count_partitions(&sq, &sq, &sq, false);
            let schur = upper_schur(&sq, &sq, &sq)?;
            let r = Ratio::new(BigInt::from(ca.clone()), BigInt::from(1)) / schur.clone();
            let ok =
                r >= Ratio::new(BigInt::from(1), BigInt::from(2)) && r <= Ratio::new(BigInt::from(3), BigInt::from(2));
            Ok((!ok).then(|| format!("CA = {ca}, schur = {schur}, ratio {r}")))
        },
    )
}

fn shape_failure(label: &str, symmetric: bool, unimodal: bool) -> Option<String> {
    match (symmetric, unimodal) {
        (true, true) => None,
        (s, u) => Some(format!("{label}: symmetric {s}, unimodal {u}")),
    }
}

/// Gaussian binomials are symmetric and unimodal for `ℓ, m ≤ lmax`.
pub fn check_sylvester(lmax: usize) -> Check {
    let cases: Vec<(usize, usize)> = (0..=lmax).flat_map(|l| (0..=lmax).map(move |m| (l, m))).collect();
    run(
        "sylvester",
        &cases,
        |&(l, m)| l * m,
        |&(l, m)| (vec![vec![l, m]], format!("l={l} m={m}")),
        |&(l, m)| {
            let s = is_symmetric_unimodal(&gaussian_binomial(l, m), Ratio::new((l * m) as u64, 2));
            Ok(shape_failure("gaussian", s.symmetric, s.unimodal))
        },
    )
}

fn rectangle_cases(lo: usize, hi: usize, ordered: bool) -> Vec<(usize, usize)> {
    (lo..=hi)
        .flat_map(|l| (if ordered { l } else { lo }..=hi).map(move |m| (l, m)))
        .collect()
}

/// `δ_k(ℓ, m) ≥ 1` for `2 ≤ k ≤ ℓm/2`, `lo ≤ ℓ, m ≤ hi`.
pub fn check_strict_unimodality(lo: usize, hi: usize) -> Check {
    let cases = rectangle_cases(lo, hi, false);
    run(
        "strict_unimodality",
        &cases,
        |&(l, m)| l * m,
        |&(l, m)| (vec![vec![l, m]], format!("l={l} m={m}")),
        |&(l, m)| {
            let g = gaussian_binomial(l, m);
            let bad: Vec<usize> = (2..=l * m / 2).filter(|&k| delta_of(&g, k) < BigInt::from(1)).collect();
            Ok((!bad.is_empty()).then(|| format!("gap below 1 at k = {bad:?}")))
        },
    )
}

fn tiny() -> Real {
    Real::parse("1e-9")
}

/// Gap bound comparison: the exact integer exceeds the bound by more than `1e-9`.
fn margin_failure(exact: &BigInt, bound: &Real) -> Option<String> {
    let margin = Real::from_bigint(exact).sub(bound);
    (margin <= tiny()).then(|| {
        format!(
            "gap {exact} vs bound {} (margin {})",
            bound.to_sci(12),
            margin.to_sci(12)
        )
    })
}

/// `δ_k(ℓ, m) > A·2^{√s}/s^{9/4}` for `lo ≤ ℓ ≤ m ≤ hi`, `2 ≤ k ≤ ℓm/2`.
pub fn check_effective_gap(lo: usize, hi: usize) -> Check {
    let cases: Vec<(usize, usize, usize)> = rectangle_cases(lo, hi, true)
        .into_iter()
        .flat_map(|(l, m)| (2..=l * m / 2).map(move |k| (l, m, k)))
        .collect();
    let polys: std::collections::HashMap<(usize, usize), _> = rectangle_cases(lo, hi, true)
        .into_iter()
        .map(|(l, m)| ((l, m), gaussian_binomial(l, m)))
        .collect();
    run(
        "effective_gap",
        &cases,
        |&(l, m, _)| l * m,
        |&(l, m, k)| (vec![vec![l, m, k]], format!("l={l} m={m} k={k}")),
        |&(l, m, k)| {
            Ok(margin_failure(
                &delta_of(&polys[&(l, m)], k),
                &effective_gap_bound(l, m, k)?,
            ))
        },
    )
}

/// `δ_k(ℓ, m) ≥ C·2^{√v}/v^{9/4}` with the square-side reduction, where defined.
pub fn check_rectangle_gap(lo: usize, hi: usize) -> Check {
    let mut cases = Vec::new();
    for (l, m) in rectangle_cases(lo, hi, true) {
        for k in 2..=l * m / 2 {
            if rectangle_gap_bound(l, m, k).is_ok() {
                cases.push((l, m, k));
            }
        }
    }
    run(
        "rectangle_gap",
        &cases,
        |&(l, m, _)| l * m,
        |&(l, m, k)| (vec![vec![l, m, k]], format!("l={l} m={m} k={k}")),
        |&(l, m, k)| {
            let d = delta_of(&gaussian_binomial(l, m), k);
            Ok(margin_failure(&d, &rectangle_gap_bound(l, m, k)?))
        },
    )
}

/// Square gaps `δ_k(n, n) ≥ C·2^{√(2k)}/(2k)^{9/4}` for `k_min ≤ k ≤ n²/2`.
pub fn check_square_gap(lo: usize, hi: usize, k_min: usize) -> Check {
    let cases: Vec<(usize, usize)> = (lo..=hi)
        .flat_map(|n| (k_min..=n * n / 2).map(move |k| (n, k)))
        .collect();
    let polys: std::collections::HashMap<usize, _> = (lo..=hi).map(|n| (n, gaussian_binomial(n, n))).collect();
    run(
        "square_gap",
        &cases,
        |&(n, _)| n * n,
        |&(n, k)| (vec![vec![n, k]], format!("n={n} k={k}")),
        |&(n, k)| Ok(margin_failure(&delta_of(&polys[&n], k), &almkvist_gap_bound(k)?)),
    )
}

/// `b_k(n) − b_{k−1}(n) ≥ C·2^{√(2k)}/(2k)^{9/4}` for `lo ≤ n ≤ hi`, `k_min ≤ k ≤ n²/2`.
pub fn check_almkvist_gap(lo: usize, hi: usize, k_min: usize) -> Check {
    let cases: Vec<(usize, usize)> = (lo..=hi)
        .flat_map(|n| (k_min..=n * n / 2).map(move |k| (n, k)))
        .collect();
    let polys: std::collections::HashMap<usize, _> = (lo..=hi).map(|n| (n, distinct_odd_poly(n))).collect();
    run(
        "almkvist_gap",
        &cases,
        |&(n, _)| n,
        |&(n, k)| (vec![vec![n, k]], format!("n={n} k={k}")),
        |&(n, k)| Ok(margin_failure(&delta_of(&polys[&n], k), &almkvist_gap_bound(k)?)),
    )
}

/// Both Almkvist recurrences over their ranges for `2 ≤ n ≤ n_max`, reported
/// as two checks.
pub fn check_almkvist_recurrences(n_max: usize) -> Vec<Check> {
    let mut first = Vec::new();
    let mut second = Vec::new();
    for n in 2..=n_max {
        first.extend((3..=2 * n + 1).map(|k| (n, k)));
        second.extend((2 * n + 2..=(n - 1) * (n - 1) / 2).map(|k| (n, k)));
    }
    let polys: Vec<IntPolynomial> = (0..=n_max).map(distinct_odd_poly).collect();
    let go = |name: &str, cases: &[(usize, usize)]| {
        run(
            name,
            cases,
            |&(n, _)| n,
            |&(n, k)| (vec![vec![n, k]], format!("n={n} k={k}")),
            |&(n, k)| {
                let holds = almkvist_recurrence_check_with(&polys[n], &polys[n - 1], n, k)?;
                Ok((!holds).then(|| "identity fails".to_string()))
            },
        )
    };
    vec![go("almkvist_first", &first), go("almkvist_second", &second)]
}

/// `b_2(n), …, b_{n²−2}(n)` is symmetric and unimodal for `2 ≤ n ≤ n_max`.
pub fn check_almkvist_window(n_max: usize) -> Check {
    let cases: Vec<usize> = (2..=n_max).collect();
    run(
        "almkvist_window",
        &cases,
        |&n| n,
        |&n| (vec![vec![n]], format!("n={n}")),
        |&n| {
            let w = almkvist_window(n);
            Ok(shape_failure(
                "window",
                sequence_is_symmetric(&w),
                sequence_is_unimodal(&w),
            ))
        },
    )
}

/// The Stanley difference polynomial is symmetric about `n²/2` and unimodal.
pub fn check_stanley(n_max: usize) -> Check {
    let cases: Vec<usize> = (1..=n_max).collect();
    run(
        "stanley",
        &cases,
        |&n| n,
        |&n| (vec![vec![n]], format!("n={n}")),
        |&n| {
            let s = is_symmetric_unimodal(&stanley_difference(n), Ratio::new((n * n) as u64, 2));
            Ok(shape_failure("difference", s.symmetric, s.unimodal))
        },
    )
}

/// `δ_{2t}(4, t)` strictly increases over `t_lo ..= t_hi`.
pub fn check_square_family_growth(t_lo: usize, t_hi: usize) -> Check {
    let values: Vec<BigInt> = (t_lo..=t_hi)
        .map(|t| delta_of(&gaussian_binomial(4, t), 2 * t))
        .collect();
    let cases = [()];
    run(
        "four_row_growth",
        &cases,
        |_| 4 * t_hi,
        |_| (vec![vec![t_lo, t_hi]], format!("t={t_lo}..={t_hi}")),
        |_| {
            Ok((!strictly_increasing(&values)).then(|| {
                let v: Vec<String> = values.iter().map(ToString::to_string).collect();
                format!("values {}", v.join(","))
            }))
        },
    )
}

/// Runs one suite with the ranges in `config`.
pub fn run_suite(engine: &Engine, suite: Suite, config: &VerifyConfig) -> Vec<SuiteReport> {
    let n = config.n;
    let samples = config.samples;
    let seed = config.seed;
    let checks = match suite {
        Suite::All => {
            return Suite::EACH.iter().flat_map(|&s| run_suite(engine, s, config)).collect();
        }
        Suite::Symmetry => {
            let n = n.unwrap_or(7);
            vec![check_symmetry(engine, n), check_cross_algorithm(engine, n)]
        }
        Suite::Values => vec![check_known_values(engine)],
        Suite::Reduction => check_reduction(engine, n.unwrap_or(7)),
        Suite::Kstab => vec![
            check_kstab(engine, n.unwrap_or(7), 3, 3),
            check_monotone(
                engine,
                n.map_or(8, |n| n + 1),
                samples.unwrap_or(200),
                seed,
                MONOTONE_SIZE_CAP,
            ),
        ],
        Suite::Bounds => {
            let n = n.unwrap_or(7);
            vec![
                check_sandwich(engine, n),
                check_binomial_dominates_schur(n.min(6)),
                check_character_lower(engine, 10),
                check_self_conjugate_cube(engine, 10),
                check_staircase_character(engine, &[3, 4, 5, 6]),
                check_manivel_samples(engine, samples.unwrap_or(100), 6, seed),
                check_lr_bound(6),
                check_lr_stable(engine, 5),
                check_two_row_cube_growth(engine, &[4, 6, 8]),
            ]
        }
        Suite::Qbin => {
            let hi = n.unwrap_or(12);
            vec![
                check_sylvester(config.lmax.unwrap_or(10)),
                check_strict_unimodality(8, hi),
                check_effective_gap(8, hi),
                check_square_gap(8, hi, 2),
                check_rectangle_gap(8, hi),
                check_square_family_growth(4, 12),
            ]
        }
        Suite::Almkvist => {
            let mut v = check_almkvist_recurrences(n.unwrap_or(30));
            v.push(check_almkvist_window(n.unwrap_or(30)));
            v.push(check_almkvist_gap(31, 40, 26));
            v
        }
        Suite::Stanley => vec![check_stanley(n.unwrap_or(10))],
        Suite::TwoCoefficients => vec![check_two_coefficients(engine, config.lmax.unwrap_or(5))],
    };
    vec![SuiteReport { suite, checks }]
}

/// Largest shifted size drawn by the monotonicity sample.
pub const MONOTONE_SIZE_CAP: usize = 24;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_parse() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(serde_json::to_value(s).unwrap(), s.name());
        }
        assert!("symmetries".parse::<Suite>().is_err());
    }

    #[test]
    fn witness_is_smallest_then_lexicographic() {
        let f = |size, key: Vec<usize>| Failure::new(size, vec![key], "x", "d");
        let c = Check::new("c", 3, vec![f(5, vec![1]), f(4, vec![3]), f(4, vec![2, 2])]);
        assert_eq!(
            (c.witness().unwrap().size, c.witness().unwrap().key.clone()),
            (4, vec![vec![2, 2]])
        );
    }

    #[test]
    fn errors_become_failures() {
        let c = run(
            "e",
            &[1usize, 2],
            |&x| x,
            |&x| (vec![vec![x]], x.to_string()),
            |&x| {
                if x == 2 {
                    Err(Error::Internal("boom".into()))
                } else {
                    Ok(None)
                }
            },
        );
        assert_eq!(c.failures.len(), 1);
        assert!(c.failures[0].detail.contains("boom"));
    }

    #[test]
    fn monotone_samples_respect_cap() {
        let s = monotone_samples(8, 3, 50, 1, MONOTONE_SIZE_CAP);
        assert_eq!(s.len(), 50);
        assert!(s.iter().all(|(t, k, last)| t[0].size() + last * k <= MONOTONE_SIZE_CAP));
        assert_eq!(s, monotone_samples(8, 3, 50, 1, MONOTONE_SIZE_CAP));
    }

    #[test]
    fn report_serializes_numbers_as_strings() {
        let c = Check::new("c", 7, vec![Failure::new(3, vec![], "i", "d")]);
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["instances"], "7");
        assert_eq!(v["failures"][0]["size"], "3");
    }
}
