//! Smith normal form with explicit unimodular transforms.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// `P * M * Q = S` with `P`, `Q` unimodular and `S` diagonal, nonnegative,
/// each diagonal entry dividing the next, zeros trailing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub s: IntMatrix,
    pub p: IntMatrix,
    pub q: IntMatrix,
}

impl SmithDecomposition {
    /// The `min(rows, cols)` diagonal entries of `S`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut p = IntMatrix::identity(rows);
    let mut q = IntMatrix::identity(cols);

    'outer: for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = smallest_nonzero(&a, t) else {
                break 'outer;
            };
            a.swap_rows(t, pi);
            p.swap_rows(t, pi);
            a.swap_cols(t, pj);
            q.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let k = -(&a[(i, t)] / &a[(t, t)]);
                a.add_row_multiple(i, t, &k);
                p.add_row_multiple(i, t, &k);
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let k = -(&a[(t, j)] / &a[(t, t)]);
                a.add_col_multiple(j, t, &k);
                q.add_col_multiple(j, t, &k);
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                // A remainder is now smaller than the pivot; pick it up next pass.
                continue;
            }

            let pivot = a[(t, t)].clone();
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !(&a[(i, j)] % &pivot).is_zero())
            });
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, i, &one);
                    p.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
    }

    for t in 0..rows.min(cols) {
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            p.negate_row(t);
        }
    }

    SmithDecomposition { s: a, p, q }
}

fn smallest_nonzero(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let v = a[(i, j)].abs();
            if v.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(_, b)| v < *b) {
                let done = v.is_one();
                best = Some(((i, j), v));
                if done {
                    return best.map(|(ij, _)| ij);
                }
            }
        }
    }
    best.map(|(ij, _)| ij)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(m: &IntMatrix) -> SmithDecomposition {
        let snf = smith_normal_form(m);
        assert_eq!(&(&snf.p * m) * &snf.q, snf.s, "P M Q != S for {m:?}");
        assert!(snf.p.is_unimodular());
        assert!(snf.q.is_unimodular());
        let d = snf.diagonal();
        for i in 0..snf.s.rows() {
            for j in 0..snf.s.cols() {
                if i != j {
                    assert!(snf.s[(i, j)].is_zero());
                }
            }
        }
        for w in d.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero(), "zeros must trail: {d:?}");
            } else {
                assert!((&w[1] % &w[0]).is_zero(), "divisibility chain broken: {d:?}");
            }
        }
        snf
    }

    #[test]
    fn identity() {
        let snf = check(&IntMatrix::identity(3));
        assert!(snf.s.is_identity());
    }

    #[test]
    fn small_example() {
        let snf = check(&IntMatrix::from_i64(&[[2, 2], [4, 2]]));
        assert_eq!(snf.s, IntMatrix::diag(&[2, 2]));
    }

    #[test]
    fn i_minus_psi() {
        let psi = IntMatrix::from_i64(&[[3, 2], [4, 3]]);
        let snf = check(&(&IntMatrix::identity(2) - &psi));
        assert_eq!(snf.s, IntMatrix::diag(&[2, 2]));
    }

    #[test]
    fn rectangular_and_degenerate() {
        check(&IntMatrix::from_i64(&[[0, 2, 4], [6, 0, 3]]));
        check(&IntMatrix::from_i64(&[[2], [3], [0]]));
        check(&IntMatrix::zeros(2, 3));
        check(&IntMatrix::zeros(0, 3));
        check(&IntMatrix::zeros(3, 0));
        let snf = check(&IntMatrix::diag(&[4, 6]));
        assert_eq!(snf.diagonal(), vec![BigInt::from(2), BigInt::from(12)]);
    }

    fn small_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..=3).prop_flat_map(|n| {
            prop::collection::vec(-20i64..=20, n * n).prop_map(move |v| {
                let rows: Vec<Vec<i64>> = v.chunks(n).map(<[i64]>::to_vec).collect();
                IntMatrix::from_i64(&rows)
            })
        })
    }

    proptest! {
        #[test]
        fn snf_invariants(m in small_matrix()) {
            let snf = check(&m);
            let det = m.det().unwrap();
            if !det.is_zero() {
                let prod: BigInt = snf.diagonal().iter().product();
                prop_assert_eq!(prod, det.abs());
            }
        }
    }
}
