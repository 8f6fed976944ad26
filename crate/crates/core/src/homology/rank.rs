//! Exact matrix rank over the rationals for small integer matrices.
//!
//! Two independent eliminations are provided. Both run in `i128` with
//! checked arithmetic and restart in `BigInt` on overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed};

trait Exact: Clone + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul + From<i64> {}

impl Exact for i128 {}
impl Exact for BigInt {}

fn convert<T: Exact>(m: &[Vec<i64>]) -> Vec<Vec<T>> {
    m.iter()
        .map(|row| row.iter().map(|&x| T::from(x)).collect())
        .collect()
}

/// Fraction-free (Bareiss) elimination. Every intermediate entry is a minor
/// of the input, so each division by the previous pivot is exact.
fn bareiss<T: Exact>(mut a: Vec<Vec<T>>) -> Option<usize> {
    let n = a.len();
    let m = a.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..m {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..m {
                let v = pivot
                    .checked_mul(&row[j])?
                    .checked_sub(&lead.checked_mul(&pivot_row[j])?)?;
                row[j] = v / prev.clone();
            }
            row[c] = T::zero();
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

fn row_content<T: Exact>(row: &[T]) -> T {
    row.iter()
        .fold(T::zero(), |g, x| if x.is_zero() { g } else { g.gcd(x) })
}

/// Euclidean row reduction over the integers: repeatedly subtract integer
/// multiples of the row with the smallest leading entry until only one
/// nonzero entry remains in the column. Rows are divided by their content
/// to keep entries small.
fn integer_echelon<T: Exact>(mut a: Vec<Vec<T>>) -> Option<usize> {
    let n = a.len();
    let m = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..m {
        if r == n {
            break;
        }
        while let Some(p) = (r..n)
            .filter(|&i| !a[i][c].is_zero())
            .min_by(|&x, &y| a[x][c].abs().cmp(&a[y][c].abs()))
        {
            a.swap(r, p);
            let mut done = true;
            let (top, rest) = a.split_at_mut(r + 1);
            let pivot_row = &top[r];
            for row in rest.iter_mut() {
                if row[c].is_zero() {
                    continue;
                }
                let q = row[c].div_floor(&pivot_row[c]);
                for j in c..m {
                    row[j] = row[j].checked_sub(&q.checked_mul(&pivot_row[j])?)?;
                }
                if !row[c].is_zero() {
                    done = false;
                }
                let g = row_content(row);
                if !g.is_zero() && !g.is_one() {
                    for x in row.iter_mut() {
                        *x = x.clone() / g.clone();
                    }
                }
            }
            if done {
                break;
            }
        }
        if !a[r][c].is_zero() {
            r += 1;
        }
    }
    Some(r)
}

/// Rank via fraction-free Gaussian elimination.
pub fn rank_bareiss(m: &[Vec<i64>]) -> usize {
    bareiss::<i128>(convert(m))
        .or_else(|| bareiss::<BigInt>(convert(m)))
        .expect("big integer elimination cannot overflow")
}

/// Rank via Euclidean integer row echelon form.
pub fn rank_integer_echelon(m: &[Vec<i64>]) -> usize {
    integer_echelon::<i128>(convert(m))
        .or_else(|| integer_echelon::<BigInt>(convert(m)))
        .expect("big integer elimination cannot overflow")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_cases() {
        let empty: Vec<Vec<i64>> = vec![];
        assert_eq!(rank_bareiss(&empty), 0);
        assert_eq!(rank_integer_echelon(&empty), 0);
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]];
        assert_eq!(rank_bareiss(&m), 2);
        assert_eq!(rank_integer_echelon(&m), 2);
        let id = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(rank_bareiss(&id), 2);
        let z = vec![vec![0, 0], vec![0, 0], vec![0, 0]];
        assert_eq!(rank_integer_echelon(&z), 0);
    }

    #[test]
    fn torsion_does_not_lower_rank() {
        // boundary-like matrix with an elementary divisor of 2
        let m = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(rank_bareiss(&m), 2);
        assert_eq!(rank_integer_echelon(&m), 2);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let big = 1i64 << 62;
        let m = vec![
            vec![big, big - 1, 3],
            vec![big - 3, big, 7],
            vec![5, big - 7, big],
        ];
        assert_eq!(rank_bareiss(&m), rank_integer_echelon(&m));
    }

    proptest! {
        #[test]
        fn methods_agree(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 6), 0..7)) {
            prop_assert_eq!(rank_bareiss(&rows), rank_integer_echelon(&rows));
        }

        #[test]
        fn rank_of_product_with_duplicated_rows(rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 5), 1..5)) {
            let mut doubled = rows.clone();
            doubled.extend(rows.iter().map(|r| r.iter().map(|x| 3 * x).collect::<Vec<_>>()));
            prop_assert_eq!(rank_bareiss(&doubled), rank_bareiss(&rows));
        }
    }
}
