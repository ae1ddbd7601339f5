use num_bigint::BigInt;
use num_traits::Zero;

use super::{check_cutoff, EnumerationError};

pub const PERMANENT_CUTOFF: usize = 10;

/// Permanent of a square matrix by Ryser's inclusion-exclusion formula,
/// walking column subsets in Gray-code order.
pub fn ryser_permanent(matrix: &[Vec<i64>]) -> BigInt {
    let n = matrix.len();
    assert!(matrix.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        return BigInt::from(1);
    }
    let mut row_sums = vec![0i64; n];
    let mut total = BigInt::zero();
    let mut gray = 0usize;
    for step in 1..(1usize << n) {
        let col = step.trailing_zeros() as usize;
        let adding = gray & (1 << col) == 0;
        gray ^= 1 << col;
        for (r, sum) in row_sums.iter_mut().enumerate() {
            if adding {
                *sum += matrix[r][col];
            } else {
                *sum -= matrix[r][col];
            }
        }
        let prod: BigInt = row_sums.iter().map(|&s| BigInt::from(s)).product();
        if (n - gray.count_ones() as usize).is_multiple_of(2) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    total
}

/// `per(J - I)` for the `n × n` all-ones matrix `J`; equals the number of
/// derangements of `[n]`.
pub fn permanent_check(n: usize) -> Result<BigInt, EnumerationError> {
    check_cutoff("permanent", n, PERMANENT_CUTOFF)?;
    let m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i != j)).collect()).collect();
    Ok(ryser_permanent(&m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::Permutations;

    fn naive(m: &[Vec<i64>]) -> BigInt {
        Permutations::new(m.len())
            .map(|p| {
                p.iter()
                    .enumerate()
                    .map(|(i, &j)| BigInt::from(m[i][j - 1]))
                    .product::<BigInt>()
            })
            .sum()
    }

    #[test]
    fn matches_naive_expansion() {
        let m = vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]];
        assert_eq!(ryser_permanent(&m), naive(&m));
        assert_eq!(ryser_permanent(&m), BigInt::from(463));
        let m = vec![vec![2, -1, 0, 3], vec![1, 1, 1, 1], vec![0, 5, -2, 1], vec![3, 0, 0, 4]];
        assert_eq!(ryser_permanent(&m), naive(&m));
    }

    #[test]
    fn derangement_values() {
        let got: Vec<BigInt> = (0..=6).map(|n| permanent_check(n).unwrap()).collect();
        let want: Vec<BigInt> = [1, 0, 1, 2, 9, 44, 265].into_iter().map(BigInt::from).collect();
        assert_eq!(got, want);
        assert!(permanent_check(11).is_err());
    }
}
