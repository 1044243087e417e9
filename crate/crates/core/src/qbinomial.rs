//! Gaussian binomials, their coefficient gaps, the distinct-odd-part
//! products `Π (1 + q^{2i−1})`, and the analytic lower bounds on gaps.

use num_bigint::BigInt;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::precision::Real;

/// `[ℓ+m choose m]_q`; the coefficient of `q^k` counts partitions of `k`
/// inside an `ℓ × m` box.
///
/// Built from `G(i, j) = G(i−1, j) + q^i G(i, j−1)`, keeping one column of
/// the table at a time.
pub fn gaussian_binomial(l: usize, m: usize) -> IntPolynomial {
    // col[i] = G(i, j) for the current j
    let mut col = vec![IntPolynomial::one(); l + 1];
    for _ in 1..=m {
        for i in 1..=l {
            let next = &col[i - 1] + &col[i].shift(i);
            col[i] = next;
        }
    }
    col[l].clone()
}

/// `p_k(ℓ, m) − p_{k−1}(ℓ, m)` with `p_{−1} = 0`. Past the middle this goes negative.
pub fn delta(l: usize, m: usize, k: usize) -> BigInt {
    delta_of(&gaussian_binomial(l, m), k)
}

/// Gap `c_k − c_{k−1}` of an already computed polynomial.
pub fn delta_of(p: &IntPolynomial, k: usize) -> BigInt {
    p.coeff(k) - p.coeff_signed(k as i64 - 1)
}

/// `Π_{i=1}^{n} (1 + q^{2i−1})`; the coefficient `b_k(n)` counts partitions
/// of `k` into distinct odd parts at most `2n − 1`.
pub fn distinct_odd_poly(n: usize) -> IntPolynomial {
    (1..=n).fold(IntPolynomial::one(), |acc, i| {
        &acc * &IntPolynomial::one_plus_power(2 * i - 1)
    })
}

/// Checks the Almkvist recurrence that applies at `(n, k)`:
///
/// * `3 ≤ k ≤ 2n+1`: `b_k(n) − b_{k−1}(n) = b_k(n−1) − b_{k−1}(n−1)`;
/// * `2n+2 ≤ k ≤ (n−1)²/2`:
///   `b_k(n) − b_{k−1}(n) = b_k(n−1) − b_{k−1}(n−1) + b_{k−2n+1}(n−1) − b_{k−2n}(n−1)`.
///
/// The second identity is exact for every `k`, since
/// `b_k(n) = b_k(n−1) + b_{k−2n+1}(n−1)`. The first drops the correction
/// term, which is `+1` at `k = 2n−1` and `−1` at `k = 2n+1`, so it fails at
/// those two values of `k` for every `n ≥ 2`.
pub fn almkvist_recurrence_check(n: usize, k: usize) -> Result<bool> {
    let first = recurrence_range(n, k)?;
    Ok(recurrence_holds(
        &distinct_odd_poly(n),
        &distinct_odd_poly(n - 1),
        n,
        k,
        first,
    ))
}

/// [`almkvist_recurrence_check`] with `cur = distinct_odd_poly(n)` and
/// `prev = distinct_odd_poly(n − 1)` supplied by the caller.
pub fn almkvist_recurrence_check_with(cur: &IntPolynomial, prev: &IntPolynomial, n: usize, k: usize) -> Result<bool> {
    let first = recurrence_range(n, k)?;
    Ok(recurrence_holds(cur, prev, n, k, first))
}

/// Whether `(n, k)` falls in the first range; a domain error outside both.
fn recurrence_range(n: usize, k: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::Domain(format!("Almkvist recurrences need n >= 2, got n = {n}")));
    }
    let upper = (n - 1) * (n - 1) / 2;
    let first = (3..=2 * n + 1).contains(&k);
    if !first && !(2 * n + 2..=upper).contains(&k) {
        return Err(Error::Domain(format!(
            "k = {k} is outside both ranges 3..={} and {}..={upper} for n = {n}",
            2 * n + 1,
            2 * n + 2
        )));
    }
    Ok(first)
}

fn recurrence_holds(cur: &IntPolynomial, prev: &IntPolynomial, n: usize, k: usize, first: bool) -> bool {
    let gap = |p: &IntPolynomial, k: i64| p.coeff_signed(k) - p.coeff_signed(k - 1);
    let k = k as i64;
    let lhs = gap(cur, k);
    let rhs = if first {
        gap(prev, k)
    } else {
        gap(prev, k) + gap(prev, k - 2 * n as i64 + 1)
    };
    lhs == rhs
}

/// `[2n choose n]_q − Π_{i=1}^{n} (1 + q^{2i−1})`.
pub fn stanley_difference(n: usize) -> IntPolynomial {
    &gaussian_binomial(n, n) - &distinct_odd_poly(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShapeCheck {
    pub symmetric: bool,
    pub unimodal: bool,
}

/// Whether the sequence weakly increases and then weakly decreases.
pub fn sequence_is_unimodal(seq: &[BigInt]) -> bool {
    let peak = seq.windows(2).position(|w| w[1] < w[0]).unwrap_or(seq.len());
    seq[peak.min(seq.len())..].windows(2).all(|w| w[1] <= w[0])
}

/// Whether the sequence reads the same backwards.
pub fn sequence_is_symmetric(seq: &[BigInt]) -> bool {
    seq.iter().eq(seq.iter().rev())
}

/// Symmetry of `p` about `center` (`c_k = c_{2·center − k}` for every `k`,
/// with coefficients at negative powers reading as zero) and unimodality of
/// its coefficients on `0 ..= max(deg p, 2·center)`.
pub fn is_symmetric_unimodal(p: &IntPolynomial, center: Ratio<u64>) -> ShapeCheck {
    let twice = center * 2;
    let span = p.degree().unwrap_or(0).max(twice.to_integer() as usize);
    let seq: Vec<BigInt> = (0..=span).map(|k| p.coeff(k)).collect();
    let symmetric = if twice.is_integer() {
        let d = twice.to_integer() as i64;
        (0..=span as i64).all(|k| p.coeff_signed(k) == p.coeff_signed(d - k))
    } else {
        p.is_zero()
    };
    ShapeCheck {
        symmetric,
        unimodal: sequence_is_unimodal(&seq),
    }
}

/// The sequence `b_2(n), …, b_{n²−2}(n)`; empty when `n² < 4`.
pub fn almkvist_window(n: usize) -> Vec<BigInt> {
    let p = distinct_odd_poly(n);
    if n * n < 4 {
        return Vec::new();
    }
    (2..=n * n - 2).map(|k| p.coeff(k)).collect()
}

/// `C = 3√3 / (√2 π²) ≈ 0.3722`.
pub fn constant_c() -> Real {
    let three = Real::from_u64(3);
    let pi = Real::pi();
    three
        .mul(&three.sqrt())
        .div(&Real::from_u64(2).sqrt().mul(&pi.mul(&pi)))
}

/// `A = 2^{−9/√2} · C ≈ 0.00452`.
pub fn constant_a() -> Real {
    let two = Real::from_u64(2);
    let e = Real::from_u64(9).div(&two.sqrt());
    constant_c().div(&two.pow(&e))
}

/// `K · 2^{√x} / x^{9/4}` for `x > 0`.
fn gap_profile(k: &Real, x: &Real) -> Real {
    let two = Real::from_u64(2);
    let num = two.pow(&x.sqrt());
    let den = x.pow(&Real::parse("2.25"));
    k.mul(&num).div(&den)
}

/// Lower bound on `p_k(ℓ,m) − p_{k−1}(ℓ,m)`: `A · 2^{√s} / s^{9/4}` with
/// `s = min(2k, ℓ²)`.
pub fn effective_gap_bound(l: usize, m: usize, k: usize) -> Result<Real> {
    if !(8 <= l && l <= m) || k < 2 || 2 * k > l * m {
        return Err(Error::Domain(format!(
            "gap bound needs m >= l >= 8 and 2 <= k <= lm/2, got l = {l}, m = {m}, k = {k}"
        )));
    }
    let s = (2 * k).min(l * l) as u64;
    Ok(gap_profile(&constant_a(), &Real::from_u64(s)))
}

/// `C · 2^{√(2k)} / (2k)^{9/4}`, the lower bound on `b_k(n) − b_{k−1}(n)` and
/// on the square-box gaps.
pub fn almkvist_gap_bound(k: usize) -> Result<Real> {
    if k == 0 {
        return Err(Error::Domain("gap bound needs k >= 1".into()));
    }
    Ok(gap_profile(&constant_c(), &Real::from_u64(2 * k as u64)))
}

/// Lower bound on rectangle gaps obtained from a square of side `n`:
/// `C · 2^{√v} / v^{9/4}` with `v = min(k, n²/2)` and
/// `n = 2⌊(ℓ−8)/2⌋`, minus one when `ℓm` is odd.
///
/// Needs `k ≥ 2` and `n ≥ 2`: at `k = 1` the gap is zero, and at `n = 1`
/// (`v = 1/2`) the bound exceeds small gaps such as `δ_2(11, 11) = 1`.
pub fn rectangle_gap_bound(l: usize, m: usize, k: usize) -> Result<Real> {
    if !(8 <= l && l <= m) || k < 2 || 2 * k > l * m {
        return Err(Error::Domain(format!(
            "rectangle gap bound needs 8 <= l <= m and 2 <= k <= lm/2, got l = {l}, m = {m}, k = {k}"
        )));
    }
    let even = 2 * ((l - 8) / 2);
    let n = if (l * m).is_multiple_of(2) {
        even as i64
    } else {
        even as i64 - 1
    };
    if n < 2 {
        return Err(Error::Domain(format!(
            "square side n = {n} is below 2 for l = {l}, m = {m}"
        )));
    }
    let half_square = Ratio::new((n * n) as u64, 2);
    let v = half_square.min(Ratio::from_integer(k as u64));
    let v = Real::from_u64(*v.numer()).div(&Real::from_u64(*v.denom()));
    Ok(gap_profile(&constant_c(), &v))
}

/// `p_k(ℓ, m)` by counting partitions directly; used as an oracle.
pub fn box_partition_count(l: usize, m: usize, k: usize) -> u64 {
    fn rec(rows: usize, max_part: usize, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        if rows == 0 {
            return 0;
        }
        (1..=max_part.min(left)).map(|x| rec(rows - 1, x, left - x)).sum()
    }
    rec(l, m, k)
}

/// Whether `seq` is strictly increasing.
pub fn strictly_increasing(seq: &[BigInt]) -> bool {
    seq.windows(2).all(|w| w[0] < w[1])
}
