//! Littlewood–Richardson coefficients by the lattice-word rule.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use crate::character::dimension;
use crate::partition::Partition;

/// `c^α_{βγ}`: the number of semistandard fillings of the skew shape `α/β`
/// with content `γ` whose reverse reading word (rows top to bottom, each
/// right to left) is a lattice word.
///
/// Zero when `|α| ≠ |β| + |γ|` or `β ⊄ α`.
pub fn lr_coefficient(alpha: &Partition, beta: &Partition, gamma: &Partition) -> BigUint {
    if alpha.size() != beta.size() + gamma.size() || !alpha.contains(beta) {
        return BigUint::from(0u32);
    }
    let rows = alpha.len();
    // cells of α/β in reading order; each row right to left
    let mut cells = Vec::new();
    for r in 1..=rows {
        for c in (beta.part(r) + 1..=alpha.part(r)).rev() {
            cells.push((r, c));
        }
    }
    let mut filling = vec![vec![0usize; alpha.first() + 1]; rows + 1];
    let mut used = vec![0usize; gamma.len() + 1];
    let mut count = 0u64;
    fill(&cells, 0, beta, gamma, &mut filling, &mut used, &mut count);
    BigUint::from(count)
}

fn fill(
    cells: &[(usize, usize)],
    pos: usize,
    beta: &Partition,
    gamma: &Partition,
    filling: &mut [Vec<usize>],
    used: &mut [usize],
    count: &mut u64,
) {
    if pos == cells.len() {
        *count += 1;
        return;
    }
    let (r, c) = cells[pos];
    // rows weakly increase left to right: at most the entry to the right
    let mut hi = gamma.len();
    if c + 1 < filling[r].len() && filling[r][c + 1] > 0 {
        hi = hi.min(filling[r][c + 1]);
    }
    // columns strictly increase downwards: above the entry in the row above
    let lo = if r > 1 && c > beta.part(r - 1) {
        filling[r - 1][c] + 1
    } else {
        1
    };
    for v in lo..=hi {
        if used[v] == gamma.part(v) || (v > 1 && used[v] + 1 > used[v - 1]) {
            continue;
        }
        used[v] += 1;
        filling[r][c] = v;
        fill(cells, pos + 1, beta, gamma, filling, used, count);
        filling[r][c] = 0;
        used[v] -= 1;
    }
}

/// `f^α / (f^β f^γ)`, an upper bound on `c^α_{βγ}`.
pub fn lr_upper_bound(alpha: &Partition, beta: &Partition, gamma: &Partition) -> BigRational {
    let num = BigInt::from(dimension(alpha));
    let den = BigInt::from(dimension(beta) * dimension(gamma));
    BigRational::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn c(a: &[usize], b: &[usize], g: &[usize]) -> u32 {
        u32::try_from(lr_coefficient(&p(a), &p(b), &p(g))).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(c(&[2, 1], &[1], &[2]), 1);
        assert_eq!(c(&[2, 1], &[2, 1], &[]), 1);
        assert_eq!(c(&[2], &[1], &[1]), 1);
        assert_eq!(c(&[3, 2, 1], &[2, 1], &[2, 1]), 2);
        // rows 11 / 2 / 1 / 2 is the only lattice filling
        assert_eq!(c(&[4, 2, 1, 1], &[2, 1], &[3, 2]), 1);
        assert_eq!(c(&[2, 2], &[1], &[2]), 0);
        assert_eq!(c(&[3], &[1], &[1]), 0);
        assert_eq!(c(&[2], &[3], &[]), 0);
    }

    #[test]
    fn bound_examples() {
        assert_eq!(
            lr_upper_bound(&p(&[2, 1]), &p(&[1]), &p(&[2])),
            BigRational::from_integer(2.into())
        );
        let a = p(&[3, 1]);
        assert_eq!(
            lr_upper_bound(&a, &a, &Partition::empty()),
            BigRational::from_integer(1.into())
        );
    }

    /// Pieri: `c^α_{β,(k)}` is 1 exactly when `α/β` is a horizontal strip of size `k`.
    #[test]
    fn pieri_rule() {
        use crate::partition::partitions;
        for n in 0..=7 {
            for alpha in partitions(n) {
                for m in 0..=n {
                    for beta in partitions(m) {
                        let k = n - m;
                        let strip =
                            alpha.contains(&beta) && (1..=alpha.len()).all(|i| alpha.part(i + 1) <= beta.part(i));
                        let expect = u32::from(strip);
                        let got = lr_coefficient(&alpha, &beta, &Partition::row(k));
                        assert_eq!(got, BigUint::from(expect), "{alpha:?} / {beta:?}");
                    }
                }
            }
        }
    }
}
