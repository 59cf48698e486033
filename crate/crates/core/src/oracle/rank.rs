//! Exact matrix rank by fraction-free (Bareiss) elimination.
//!
//! Elimination runs in `i128` with overflow checks and restarts with
//! arbitrary-precision integers if any intermediate value overflows.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank over the rationals of an integer matrix given by rows.
pub fn exact_rank(rows: &[Vec<i64>]) -> usize {
    let small: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    match bareiss_i128(small) {
        Some(r) => r,
        None => bareiss_big(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        ),
    }
}

fn bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c];
        for row in rest.iter_mut() {
            let lead = row[c];
            for j in c + 1..cols {
                let a = pivot.checked_mul(row[j])?;
                let b = lead.checked_mul(pivot_row[j])?;
                row[j] = a.checked_sub(b)? / prev;
            }
            row[c] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = (&pivot * &row[j] - &lead * &pivot_row[j]) / &prev;
                row[j] = v;
            }
        }
        prev = pivot;
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Rank by Gaussian elimination over exact rationals (numerator, denominator).
    fn rational_rank(rows: &[Vec<i64>]) -> usize {
        use num_bigint::BigInt;
        use num_traits::Signed;
        #[derive(Clone)]
        struct Q(BigInt, BigInt);
        fn norm(q: Q) -> Q {
            let g = num_integer_gcd(&q.0, &q.1);
            let (mut a, mut b) = if g.is_zero() { (q.0, q.1) } else { (q.0 / &g, q.1 / &g) };
            if b.is_negative() {
                a = -a;
                b = -b;
            }
            Q(a, b)
        }
        fn num_integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
            let (mut a, mut b) = (a.abs(), b.abs());
            while !b.is_zero() {
                let t = &a % &b;
                a = b;
                b = t;
            }
            a
        }
        let mut m: Vec<Vec<Q>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Q(BigInt::from(x), BigInt::one())).collect())
            .collect();
        let (rows_n, cols) = (m.len(), m.first().map_or(0, Vec::len));
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows_n).find(|&i| !m[i][c].0.is_zero()) else { continue };
            m.swap(r, p);
            for i in r + 1..rows_n {
                if m[i][c].0.is_zero() {
                    continue;
                }
                let f = norm(Q(&m[i][c].0 * &m[r][c].1, &m[i][c].1 * &m[r][c].0));
                let (top, rest) = m.split_at_mut(i);
                for (cur, piv) in rest[0][c..].iter_mut().zip(&top[r][c..]) {
                    let sub = Q(&f.0 * &piv.0, &f.1 * &piv.1);
                    *cur = norm(Q(&cur.0 * &sub.1 - &sub.0 * &cur.1, &cur.1 * &sub.1));
                }
            }
            r += 1;
            if r == rows_n {
                break;
            }
        }
        r
    }

    #[test]
    fn small_cases() {
        assert_eq!(exact_rank(&[]), 0);
        assert_eq!(exact_rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(exact_rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(exact_rank(&[vec![0, 1, 0], vec![1, 0, 0], vec![1, 1, 0]]), 2);
        // rank 2 over Q although singular mod 2
        assert_eq!(exact_rank(&[vec![1, 1], vec![1, -1]]), 2);
    }

    #[test]
    fn big_entries_fall_back() {
        let big = i64::MAX / 3;
        let m = vec![vec![big, big - 1, 7], vec![big - 5, big, 3], vec![1, 2, big]];
        assert_eq!(bareiss_i128(m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect()), None);
        assert_eq!(exact_rank(&m), rational_rank(&m));
    }

    proptest! {
        #[test]
        fn matches_rational_elimination(rows in 1usize..7, cols in 1usize..7, seed in proptest::collection::vec(-3i64..=3, 49)) {
            let m: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 7 + j]).collect()).collect();
            prop_assert_eq!(exact_rank(&m), rational_rank(&m));
        }
    }
}
