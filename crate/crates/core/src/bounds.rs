//! Upper and lower bounds on Kronecker coefficients and a report that
//! evaluates all of them against the true value.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::character::{binomial, dimension, gl_dimension, CharacterStore};
use crate::contingency::ArrayCounter;
use crate::decimal;
use crate::error::{Error, Result};
use crate::kronecker::{check_sizes, kronecker};
use crate::partition::{count_partitions, Partition};
use crate::stability::{tail_bound_applies, tail_bound_value, TailMode};

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `f^λ f^μ / f^ν`.
pub fn upper_dimension(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigRational> {
    check_sizes(lambda, mu, nu)?;
    Ok(ratio(dimension(lambda) * dimension(mu), dimension(nu)))
}

/// `min(f^λ, f^μ, f^ν)`.
pub fn upper_min(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
    check_sizes(lambda, mu, nu)?;
    Ok([lambda, mu, nu].iter().map(|p| dimension(p)).min().unwrap())
}

/// `d_ν(ab) / (d_λ(a) d_μ(b))` with `a = ℓ(λ)`, `b = ℓ(μ)`.
pub fn upper_schur(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigRational> {
    check_sizes(lambda, mu, nu)?;
    let (a, b) = (lambda.len(), mu.len());
    Ok(ratio(
        gl_dimension(nu, a * b),
        gl_dimension(lambda, a) * gl_dimension(mu, b),
    ))
}

/// `Π_{i=1}^{ℓ(ν)} C(ν_i − i + ab, ν_i)`; a factor with negative top is zero.
pub fn upper_binomial_product(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
    check_sizes(lambda, mu, nu)?;
    let ab = lambda.len() * mu.len();
    let mut acc = BigUint::one();
    for (i, &v) in nu.parts().iter().enumerate() {
        match (v + ab).checked_sub(i + 1) {
            Some(top) => acc *= binomial(top, v),
            None => return Ok(BigUint::zero()),
        }
    }
    Ok(acc)
}

/// `(CA(λ, μ, ν), CA*(λ′, μ, ν))`.
pub fn upper_contingency(
    counter: &ArrayCounter,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<(BigUint, BigUint)> {
    check_sizes(lambda, mu, nu)?;
    Ok((
        counter.count_partitions(lambda, mu, nu, false),
        counter.count_partitions(&lambda.conjugate(), mu, nu, true),
    ))
}

/// `|χ^λ[μ̂]|` for self-conjugate `μ`, where `μ̂` lists the principal hooks;
/// a lower bound on `g(λ, μ, μ)`.
pub fn lower_character(store: &CharacterStore, lambda: &Partition, mu: &Partition) -> Result<BigUint> {
    if !mu.is_self_conjugate() {
        return Err(Error::Domain(format!("{mu:?} is not self-conjugate")));
    }
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("{lambda:?} and {mu:?}")));
    }
    Ok(store.character(lambda, &mu.principal_hooks())?.magnitude().clone())
}

/// `g(λ+α, μ+β, ν+γ) ≥ max(g(λ,μ,ν), g(α,β,γ))`.
///
/// `None` when either coefficient on the right is zero, since the
/// inequality is only claimed for positive pairs.
pub fn check_manivel(store: &CharacterStore, first: [&Partition; 3], second: [&Partition; 3]) -> Result<Option<bool>> {
    let [l, m, n] = first;
    let [a, b, c] = second;
    let g1 = kronecker(store, l, m, n)?;
    let g2 = kronecker(store, a, b, c)?;
    if g1.is_zero() || g2.is_zero() {
        return Ok(None);
    }
    let sum = kronecker(store, &l.add(a), &m.add(b), &n.add(c))?;
    Ok(Some(sum >= g1.max(g2)))
}

/// Rounds up a nonnegative rational.
pub fn ceiling(r: &BigRational) -> BigInt {
    let (q, rem) = r.numer().div_rem(r.denom());
    if rem.is_positive() {
        q + 1
    } else {
        q
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Upper,
    Lower,
}

/// Exact value of a bound. Rationals carry their ceiling in the serialized
/// form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundValue {
    Integer(BigUint),
    Rational(BigRational),
}

impl BoundValue {
    fn as_rational(&self) -> BigRational {
        match self {
            BoundValue::Integer(n) => BigRational::from_integer(BigInt::from(n.clone())),
            BoundValue::Rational(r) => r.clone(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct BoundValueRepr {
    kind: String,
    value: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ceiling: Option<String>,
}

impl Serialize for BoundValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = match self {
            BoundValue::Integer(n) => BoundValueRepr {
                kind: "integer".into(),
                value: n.to_string(),
                ceiling: None,
            },
            BoundValue::Rational(r) => BoundValueRepr {
                kind: "rational".into(),
                value: r.to_string(),
                ceiling: Some(ceiling(r).to_string()),
            },
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BoundValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = BoundValueRepr::deserialize(d)?;
        match repr.kind.as_str() {
            "integer" => repr.value.parse().map(BoundValue::Integer).map_err(D::Error::custom),
            "rational" => repr.value.parse().map(BoundValue::Rational).map_err(D::Error::custom),
            other => Err(D::Error::custom(format!("unknown bound kind {other:?}"))),
        }
    }
}

impl std::fmt::Display for BoundValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundValue::Integer(n) => write!(f, "{n}"),
            BoundValue::Rational(r) if r.is_integer() => write!(f, "{}", r.numer()),
            BoundValue::Rational(r) => write!(f, "{r} (ceil {})", ceiling(r)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub name: String,
    pub direction: Direction,
    /// Absent when inapplicable or skipped by the budget.
    pub value: Option<BoundValue>,
    pub applicable: bool,
    /// Present when the bound and the true coefficient are both known.
    pub satisfied: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    #[serde(with = "decimal::option_biguint")]
    pub true_g: Option<BigUint>,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    /// Entries whose verdict is known and false.
    pub fn violations(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| e.satisfied == Some(false))
    }
}

/// Work estimate for the character-sum coefficient: `3 · P(n) · n` strip removals.
pub fn kronecker_cost(n: usize) -> BigUint {
    count_partitions(n) * BigUint::from(3 * n.max(1))
}

/// Work estimate for a contingency count: slices along the longest axis
/// times the number of candidate first slices.
pub fn contingency_cost(a: &Partition, b: &Partition, c: &Partition) -> BigUint {
    let mut axes = [a, b, c];
    axes.sort_by_key(|p| std::cmp::Reverse(p.len()));
    let cells = axes[1].len() * axes[2].len();
    if cells == 0 {
        return BigUint::one();
    }
    binomial(axes[0].first() + cells - 1, cells - 1) * BigUint::from(axes[0].len())
}

/// Evaluates every bound on `g(λ, μ, ν)`, and the coefficient itself when
/// its estimated cost is within `budget`.
pub fn full_report(
    store: &CharacterStore,
    counter: &ArrayCounter,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    budget: u64,
) -> Result<BoundReport> {
    let n = check_sizes(lambda, mu, nu)?;
    let budget = BigUint::from(budget);
    let true_g = if kronecker_cost(n) <= budget {
        Some(kronecker(store, lambda, mu, nu)?)
    } else {
        None
    };
    let g_rat = true_g
        .as_ref()
        .map(|g| BigRational::from_integer(BigInt::from(g.clone())));

    let mut entries = Vec::new();
    let mut push = |name: &str, direction, value: Option<BoundValue>, applicable: bool, note: Option<String>| {
        let satisfied = match (&value, &g_rat, applicable) {
            (Some(v), Some(g), true) => Some(match direction {
                Direction::Upper => v.as_rational() >= *g,
                Direction::Lower => v.as_rational() <= *g,
            }),
            _ => None,
        };
        entries.push(BoundEntry {
            name: name.into(),
            direction,
            value,
            applicable,
            satisfied,
            note,
        });
    };
    use BoundValue::{Integer, Rational};
    use Direction::{Lower, Upper};

    push(
        "dimension_ratio",
        Upper,
        Some(Rational(upper_dimension(lambda, mu, nu)?)),
        true,
        None,
    );
    push(
        "min_dimension",
        Upper,
        Some(Integer(upper_min(lambda, mu, nu)?)),
        true,
        None,
    );
    push(
        "schur_ratio",
        Upper,
        Some(Rational(upper_schur(lambda, mu, nu)?)),
        true,
        None,
    );
    push(
        "binomial_product",
        Upper,
        Some(Integer(upper_binomial_product(lambda, mu, nu)?)),
        true,
        None,
    );

    let conj = lambda.conjugate();
    for (name, first, binary) in [("contingency", lambda, false), ("binary_contingency", &conj, true)] {
        if contingency_cost(first, mu, nu) <= budget {
            push(
                name,
                Upper,
                Some(Integer(counter.count_partitions(first, mu, nu, binary))),
                true,
                None,
            );
        } else {
            push(name, Upper, None, true, Some("skipped: over budget".into()));
        }
    }

    let tail = nu.tail();
    let modes = [
        (
            "tail_length",
            TailMode::Length(lambda.len().max(mu.len()).max(tail.len())),
        ),
        ("tail_durfee", TailMode::Durfee(lambda.durfee().max(mu.durfee()))),
    ];
    for (name, mode) in modes {
        if tail_bound_applies(lambda, mu, &tail, mode) {
            push(name, Upper, Some(Integer(tail_bound_value(&tail, mode)?)), true, None);
        } else {
            push(name, Upper, None, false, Some("needs n >= u".into()));
        }
    }

    if mu == nu && mu.is_self_conjugate() {
        push(
            "character_lower",
            Lower,
            Some(Integer(lower_character(store, lambda, mu)?)),
            true,
            None,
        );
    } else {
        let why = if mu != nu {
            "needs mu = nu"
        } else {
            "needs self-conjugate mu"
        };
        push("character_lower", Lower, None, false, Some(why.into()));
    }

    Ok(BoundReport {
        lambda: lambda.clone(),
        mu: mu.clone(),
        nu: nu.clone(),
        true_g,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn dimension_bounds() {
        let r = p(&[4]);
        assert_eq!(upper_dimension(&r, &r, &r).unwrap(), int(1));
        let q = p(&[2, 2]);
        assert_eq!(upper_dimension(&q, &q, &q).unwrap(), int(2));
        assert_eq!(upper_dimension(&p(&[3, 1]), &p(&[3, 1]), &r).unwrap(), int(9));
        assert_eq!(
            upper_min(&p(&[3, 2]), &p(&[3, 2]), &p(&[3, 2])).unwrap(),
            BigUint::from(5u32)
        );
        assert_eq!(
            upper_min(&Partition::column(4), &Partition::column(4), &r).unwrap(),
            BigUint::one()
        );
    }

    #[test]
    fn schur_and_binomial_bounds() {
        let q = p(&[2, 2]);
        assert_eq!(upper_schur(&q, &q, &q).unwrap(), int(20));
        let r = p(&[5]);
        assert_eq!(upper_schur(&r, &r, &r).unwrap(), int(1));
        assert_eq!(upper_binomial_product(&q, &q, &q).unwrap(), BigUint::from(60u32));
        assert_eq!(upper_binomial_product(&r, &r, &r).unwrap(), BigUint::one());
        // a = b = 1 and ν = (1,1): the second factor has top 1 - 2 + 1 = 0
        assert_eq!(
            upper_binomial_product(&p(&[2]), &p(&[2]), &p(&[1, 1])).unwrap(),
            BigUint::zero()
        );
    }

    #[test]
    fn contingency_bounds() {
        let counter = ArrayCounter::new();
        let (ca, cas) = upper_contingency(&counter, &p(&[2]), &p(&[1, 1]), &p(&[1, 1])).unwrap();
        // one slice holding a 2x2 permutation matrix
        assert_eq!(ca, BigUint::from(2u32));
        assert!(cas >= BigUint::one());
        let r = p(&[4]);
        assert_eq!(
            upper_contingency(&counter, &r, &r, &r).unwrap(),
            (BigUint::one(), BigUint::one())
        );
    }

    #[test]
    fn character_lower_bound() {
        let store = CharacterStore::new();
        let hook = p(&[2, 1]);
        for lam in [p(&[3]), p(&[2, 1]), p(&[1, 1, 1])] {
            assert_eq!(lower_character(&store, &lam, &hook).unwrap(), BigUint::one());
        }
        let q = p(&[2, 2]);
        assert_eq!(lower_character(&store, &q, &q).unwrap(), BigUint::one());
        assert!(matches!(
            lower_character(&store, &q, &p(&[3, 1])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn manivel_examples() {
        let store = CharacterStore::new();
        let h = p(&[2, 1]);
        let (c, r) = (p(&[1, 1]), p(&[2]));
        assert_eq!(check_manivel(&store, [&h, &h, &h], [&c, &c, &r]).unwrap(), Some(true));
        let e = Partition::empty();
        assert_eq!(check_manivel(&store, [&e, &e, &e], [&h, &h, &h]).unwrap(), Some(true));
        let q = p(&[2, 2]);
        assert_eq!(
            check_manivel(&store, [&q, &q, &p(&[3, 1])], [&h, &h, &h]).unwrap(),
            None
        );
    }

    #[test]
    fn report_examples() {
        let store = CharacterStore::new();
        let counter = ArrayCounter::new();
        let q = p(&[2, 2]);
        let rep = full_report(&store, &counter, &q, &q, &p(&[3, 1]), 1_000_000).unwrap();
        assert_eq!(rep.true_g, Some(BigUint::zero()));
        assert_eq!(rep.violations().count(), 0);
        let lower = rep.entries.iter().find(|e| e.name == "character_lower").unwrap();
        assert!(!lower.applicable);
        let rep = full_report(&store, &counter, &q, &q, &q, 1_000_000).unwrap();
        assert_eq!(rep.true_g, Some(BigUint::one()));
        assert!(rep.entries.iter().all(|e| e.satisfied != Some(false)));
        assert!(
            rep.entries
                .iter()
                .find(|e| e.name == "character_lower")
                .unwrap()
                .applicable
        );
        let skipped = full_report(&store, &counter, &q, &q, &q, 1).unwrap();
        assert_eq!(skipped.true_g, None);
        assert!(skipped.entries.iter().all(|e| e.satisfied.is_none()));
    }

    #[test]
    fn report_json_round_trip() {
        let store = CharacterStore::new();
        let counter = ArrayCounter::new();
        let rep = full_report(&store, &counter, &p(&[3, 2]), &p(&[3, 2]), &p(&[4, 1]), 1_000_000).unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        let back: BoundReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rep);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
        assert!(json.contains(r#""true_g":"1""#), "{json}");
    }

    #[test]
    fn ceilings() {
        assert_eq!(ceiling(&BigRational::new(7.into(), 3.into())), BigInt::from(3));
        assert_eq!(ceiling(&int(4)), BigInt::from(4));
    }
}
