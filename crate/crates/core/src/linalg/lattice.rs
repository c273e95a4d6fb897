//! Sublattices of `Z^n`: integer solving, kernels, saturation, cokernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::matrix::{IntMatrix, IntVector};
use super::smith::smith_normal_form;
use crate::error::{Error, Result};

/// Some `x` with `M x = b` over the integers, or `None` when no integer
/// solution exists.
pub fn solve_integer(m: &IntMatrix, b: &IntVector) -> Result<Option<IntVector>> {
    if m.rows() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} system with right-hand side of length {}",
            m.rows(),
            m.cols(),
            b.dim()
        )));
    }
    // M x = b  <=>  S y = P b  with  x = Q y.
    let snf = smith_normal_form(m);
    let pb = &snf.p * b;
    let d = snf.diagonal();
    let mut y = IntVector::zeros(m.cols());
    for (i, c) in pb.iter().enumerate() {
        match d.get(i) {
            Some(di) if !di.is_zero() => {
                let (quot, rem) = c.div_rem(di);
                if !rem.is_zero() {
                    return Ok(None);
                }
                y[i] = quot;
            }
            _ => {
                if !c.is_zero() {
                    return Ok(None);
                }
            }
        }
    }
    Ok(Some(&snf.q * &y))
}

pub fn in_image(m: &IntMatrix, b: &IntVector) -> Result<bool> {
    Ok(solve_integer(m, b)?.is_some())
}

/// Canonical (row Hermite normal form) basis of the lattice spanned by
/// `vectors`. Every returned vector has a positive leading entry, and entries
/// above each pivot are reduced into `[0, pivot)`.
pub fn hermite_basis(vectors: &[IntVector]) -> Vec<IntVector> {
    let Some(n) = vectors.first().map(IntVector::dim) else {
        return Vec::new();
    };
    let mut rows: Vec<IntVector> = vectors.to_vec();
    let mut pivot_row = 0;
    for col in 0..n {
        if pivot_row == rows.len() {
            break;
        }
        // Euclid down the column until one nonzero entry remains.
        loop {
            let best = (pivot_row..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .min_by_key(|&i| rows[i][col].abs());
            let Some(best) = best else { break };
            rows.swap(pivot_row, best);
            let mut done = true;
            for i in pivot_row + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let k = &rows[i][col] / &rows[pivot_row][col];
                let sub = rows[pivot_row].scale(&k);
                rows[i] = &rows[i] - &sub;
                done &= rows[i][col].is_zero();
            }
            if done {
                break;
            }
        }
        if rows[pivot_row][col].is_zero() {
            continue;
        }
        if rows[pivot_row][col].is_negative() {
            rows[pivot_row] = -&rows[pivot_row];
        }
        let pivot = rows[pivot_row][col].clone();
        for i in 0..pivot_row {
            let k = rows[i][col].div_floor(&pivot);
            if !k.is_zero() {
                let sub = rows[pivot_row].scale(&k);
                rows[i] = &rows[i] - &sub;
            }
        }
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    rows
}

/// Basis of the integer kernel `{x : M x = 0}`, in Hermite normal form.
/// The kernel is a direct summand, so the vectors are primitive and extend
/// to a basis of `Z^cols`.
pub fn kernel_basis(m: &IntMatrix) -> Vec<IntVector> {
    let snf = smith_normal_form(m);
    let r = snf.rank();
    let cols: Vec<IntVector> = (r..m.cols()).map(|j| snf.q.column(j)).collect();
    hermite_basis(&cols)
}

/// Basis of the smallest direct summand of `Z^n` containing the span of
/// `vectors`, i.e. `span_Q(vectors) ∩ Z^n`.
pub fn saturation(vectors: &[IntVector]) -> Vec<IntVector> {
    let Some(n) = vectors.first().map(IntVector::dim) else {
        return Vec::new();
    };
    let as_rows = |vs: &[IntVector]| {
        let mut m = IntMatrix::zeros(vs.len(), n);
        for (i, v) in vs.iter().enumerate() {
            for j in 0..n {
                m[(i, j)] = v[j].clone();
            }
        }
        m
    };
    // The double orthogonal complement of a sublattice is its saturation.
    let complement = kernel_basis(&as_rows(vectors));
    kernel_basis(&as_rows(&complement))
}

/// Index of the span of `vectors` inside its saturation: the product of the
/// nonzero elementary divisors. Finite by construction.
pub fn index_in_saturation(vectors: &[IntVector]) -> BigInt {
    let Some(n) = vectors.first().map(IntVector::dim) else {
        return BigInt::one();
    };
    let m = IntMatrix::from_columns(vectors, n);
    smith_normal_form(&m)
        .diagonal()
        .into_iter()
        .filter(|d| !d.is_zero())
        .product()
}

/// Structure of `Z^rows / Im(M)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CokernelInvariants {
    #[serde(rename = "rank")]
    pub free_rank: usize,
    #[serde(serialize_with = "serialize_ints")]
    pub torsion: Vec<BigInt>,
}

impl CokernelInvariants {
    pub fn torsion_i64(&self) -> Vec<i64> {
        self.torsion
            .iter()
            .map(|t| i64::try_from(t).expect("torsion coefficient overflows i64"))
            .collect()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }
}

pub(crate) fn serialize_ints<S: serde::Serializer>(
    xs: &[BigInt],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&super::matrix::int_to_json(x))?;
    }
    seq.end()
}

pub fn cokernel_invariants(m: &IntMatrix) -> CokernelInvariants {
    let d = smith_normal_form(m).diagonal();
    let rank = d.iter().filter(|x| !x.is_zero()).count();
    CokernelInvariants {
        free_rank: m.rows() - rank,
        torsion: d.into_iter().filter(|x| *x > BigInt::one()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(xs: &[i64]) -> IntVector {
        IntVector::from_i64(xs)
    }

    fn i_minus_psi() -> IntMatrix {
        &IntMatrix::identity(2) - &IntMatrix::from_i64(&[[3, 2], [4, 3]])
    }

    #[test]
    fn solve_identity() {
        let b = v(&[7, -3]);
        assert_eq!(solve_integer(&IntMatrix::identity(2), &b).unwrap(), Some(b));
    }

    #[test]
    fn parity_obstruction() {
        assert_eq!(solve_integer(&i_minus_psi(), &v(&[1, 0])).unwrap(), None);
        assert!(!in_image(&i_minus_psi(), &v(&[1, 0])).unwrap());
    }

    #[test]
    fn direct_preimage() {
        assert_eq!(
            solve_integer(&i_minus_psi(), &v(&[-2, -4])).unwrap(),
            Some(v(&[1, 0]))
        );
    }

    #[test]
    fn kernel_of_reflection() {
        let a = IntMatrix::from_i64(&[[3, 2], [-4, -3]]);
        let k = kernel_basis(&(&a - &IntMatrix::identity(2)));
        assert_eq!(k, vec![v(&[1, -1])]);
    }

    #[test]
    fn cokernels() {
        let c = cokernel_invariants(&IntMatrix::zeros(1, 1));
        assert_eq!((c.free_rank, c.torsion.len()), (1, 0));
        let psi = IntMatrix::from_i64(&[[3, 2], [4, 3]]);
        let c = cokernel_invariants(&(&psi - &IntMatrix::identity(2)));
        assert_eq!(c.free_rank, 0);
        assert_eq!(c.torsion_i64(), vec![2, 2]);
    }

    #[test]
    fn saturation_of_scaled_vector() {
        assert_eq!(saturation(&[v(&[2, 4, 6])]), vec![v(&[1, 2, 3])]);
        assert_eq!(index_in_saturation(&[v(&[2, 4, 6])]), BigInt::from(2));
        let full = saturation(&[v(&[2, 0]), v(&[0, 3])]);
        assert_eq!(full, vec![v(&[1, 0]), v(&[0, 1])]);
        assert!(saturation(&[]).is_empty());
        assert!(saturation(&[v(&[0, 0])]).is_empty());
    }

    #[test]
    fn hermite_is_canonical() {
        let a = hermite_basis(&[v(&[2, 1]), v(&[0, 3])]);
        let b = hermite_basis(&[v(&[2, 4]), v(&[-2, -1]), v(&[0, 6])]);
        assert_eq!(a, b);
    }

    fn small_system() -> impl Strategy<Value = (IntMatrix, IntVector)> {
        (1usize..=2, 1usize..=2).prop_flat_map(|(r, c)| {
            (
                prop::collection::vec(-5i64..=5, r * c),
                prop::collection::vec(-5i64..=5, r),
            )
                .prop_map(move |(m, b)| {
                    let rows: Vec<Vec<i64>> = m.chunks(c).map(<[i64]>::to_vec).collect();
                    (IntMatrix::from_i64(&rows), IntVector::from_i64(&b))
                })
        })
    }

    /// Exhaustive search over the box `|x_i| <= 50`.
    fn brute_force_solvable(m: &IntMatrix, b: &IntVector) -> bool {
        let rows: Vec<Vec<i64>> = (0..m.rows())
            .map(|i| m.row(i).to_i64_vec().unwrap())
            .collect();
        let b = b.to_i64_vec().unwrap();
        let hits = |x: &[i64]| {
            rows.iter()
                .zip(&b)
                .all(|(row, bi)| row.iter().zip(x).map(|(a, xi)| a * xi).sum::<i64>() == *bi)
        };
        match m.cols() {
            1 => (-50..=50).any(|x| hits(&[x])),
            2 => (-50..=50).any(|x| (-50..=50).any(|y| hits(&[x, y]))),
            _ => unreachable!(),
        }
    }

    proptest! {
        #[test]
        fn solve_agrees_with_search((m, b) in small_system()) {
            match solve_integer(&m, &b).unwrap() {
                Some(x) => prop_assert_eq!(&m * &x, b),
                None => prop_assert!(!brute_force_solvable(&m, &b)),
            }
        }

        #[test]
        fn kernel_vectors_are_primitive(rows in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 1..3)) {
            let m = IntMatrix::from_i64(&rows);
            let k = kernel_basis(&m);
            let snf_rank = crate::linalg::smith_normal_form(&m).rank();
            prop_assert_eq!(k.len(), 3 - snf_rank);
            for x in &k {
                prop_assert!((&m * x).is_zero());
                prop_assert!(x.content().is_one());
            }
            // Primitive and completable: the basis is its own saturation.
            prop_assert_eq!(saturation(&k), k.clone());
        }

        #[test]
        fn saturation_contains_span(vs in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 1..3)) {
            let vs: Vec<IntVector> = vs.iter().map(|x| IntVector::from_i64(x)).collect();
            let sat = saturation(&vs);
            if sat.is_empty() {
                prop_assert!(vs.iter().all(IntVector::is_zero));
                return Ok(());
            }
            let basis = IntMatrix::from_columns(&sat, 3);
            for x in &vs {
                prop_assert!(solve_integer(&basis, x).unwrap().is_some());
            }
            // Z^3 / span(sat) is torsion-free.
            prop_assert!(cokernel_invariants(&basis).torsion.is_empty());
        }
    }
}
