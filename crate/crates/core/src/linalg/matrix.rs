use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Serializes as a JSON number when it fits in `i64`, else as a decimal string.
pub(crate) fn int_to_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::String(x.to_string()),
    }
}

pub(crate) fn int_from_json(v: &serde_json::Value) -> Result<BigInt> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Parse(format!("not an integer: {n}"))),
        serde_json::Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("not an integer: {s:?}"))),
        other => Err(Error::Parse(format!("not an integer: {other}"))),
    }
}

/// A column vector of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntVector(pub Vec<BigInt>);

impl IntVector {
    pub fn zeros(n: usize) -> Self {
        IntVector(vec![BigInt::zero(); n])
    }

    pub fn from_i64(xs: &[i64]) -> Self {
        IntVector(xs.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// The `i`-th standard basis vector of `Z^n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = BigInt::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BigInt> {
        self.0.iter()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        IntVector(self.0.iter().map(|x| x * k).collect())
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    /// Divides out the content and makes the first nonzero coordinate positive.
    pub fn primitive(&self) -> Self {
        let g = self.content();
        if g.is_zero() {
            return self.clone();
        }
        let mut v = IntVector(self.0.iter().map(|x| x / &g).collect());
        v.normalize_sign();
        v
    }

    pub(crate) fn normalize_sign(&mut self) {
        if let Some(first) = self.0.iter().find(|x| !x.is_zero()) {
            if first.is_negative() {
                for x in &mut self.0 {
                    *x = -&*x;
                }
            }
        }
    }

    pub fn max_abs(&self) -> BigInt {
        self.0.iter().map(|x| x.abs()).max().unwrap_or_default()
    }

    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl Index<usize> for IntVector {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl IndexMut<usize> for IntVector {
    fn index_mut(&mut self, i: usize) -> &mut BigInt {
        &mut self.0[i]
    }
}

impl Add for &IntVector {
    type Output = IntVector;
    fn add(self, rhs: &IntVector) -> IntVector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &IntVector {
    type Output = IntVector;
    fn sub(self, rhs: &IntVector) -> IntVector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &IntVector {
    type Output = IntVector;
    fn neg(self) -> IntVector {
        IntVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for IntVector {
    type Err = Error;

    /// Accepts `1,0`, `(1,0)` or `1 0`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(IntVector(Vec::new()));
        }
        inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad vector entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(IntVector)
    }
}

impl Serialize for IntVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<serde_json::Value> = self.0.iter().map(int_to_json).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<serde_json::Value>::deserialize(d)?;
        raw.iter()
            .map(int_from_json)
            .collect::<Result<Vec<_>>>()
            .map(IntVector)
            .map_err(D::Error::custom)
    }
}

/// Dense integer matrix, row-major. Most of the toolkit works with square
/// matrices of size 2 or 3; relator matrices are rectangular.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from `i64` rows. Panics on ragged input; meant for literals.
    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.as_ref().len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.as_ref().len(), c, "ragged matrix literal");
            data.extend(row.as_ref().iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_columns(cols: &[IntVector], rows: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, v) in cols.iter().enumerate() {
            assert_eq!(v.dim(), rows, "column dimension mismatch");
            for i in 0..rows {
                m[(i, j)] = v[i].clone();
            }
        }
        m
    }

    pub fn diag(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &e) in entries.iter().enumerate() {
            m[(i, i)] = BigInt::from(e);
        }
        m
    }

    pub fn block_diag(a: &IntMatrix, b: &IntMatrix) -> Self {
        let mut m = Self::zeros(a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                m[(i, j)] = a[(i, j)].clone();
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                m[(a.rows + i, a.cols + j)] = b[(i, j)].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Side length of a square matrix.
    pub fn dim(&self) -> usize {
        debug_assert!(self.is_square());
        self.rows
    }

    pub fn row(&self, i: usize) -> IntVector {
        IntVector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> IntVector {
        IntVector((0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    pub fn columns(&self) -> Vec<IntVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    pub fn max_abs(&self) -> BigInt {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_default()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn try_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn try_mul_vec(&self, v: &IntVector) -> Result<IntVector> {
        if self.cols != v.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.dim()
            )));
        }
        Ok(IntVector(
            (0..self.rows)
                .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
                .collect(),
        ))
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        Ok(sign * &a[(n - 1, n - 1)])
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.det().map(|d| d.abs().is_one()).unwrap_or(false)
    }

    /// Inverse over the integers; only unimodular matrices have one.
    pub fn inverse(&self) -> Result<IntMatrix> {
        if !self.is_unimodular() {
            return Err(Error::NotUnimodular);
        }
        let n = self.rows;
        if n == 2 {
            let d = self.det()?;
            let (a, b, c, e) = (&self[(0, 0)], &self[(0, 1)], &self[(1, 0)], &self[(1, 1)]);
            return IntMatrix::from_rows(vec![
                vec![e * &d, -b * &d],
                vec![-c * &d, a * &d],
            ]);
        }
        // P M Q = I, so M^{-1} = Q P.
        let snf = super::smith::smith_normal_form(self);
        snf.q.try_mul(&snf.p)
    }

    pub fn pow(&self, k: i64) -> Result<IntMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("power of non-square matrix".into()));
        }
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = IntMatrix::identity(self.rows);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Reduction modulo 2 equals the identity.
    pub fn is_identity_mod2(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let odd = self[(i, j)].is_odd();
                    if i == j {
                        odd
                    } else {
                        !odd
                    }
                })
            })
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self[(src, j)] * k;
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += k * col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self[(i, src)] * k;
            self[(i, dst)] += v;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    /// Fixed-size copy of a 2x2 matrix with `i64` entries, when it fits.
    pub fn to_i64_2x2(&self) -> Option<[[i64; 2]; 2]> {
        if self.rows != 2 || self.cols != 2 {
            return None;
        }
        Some([
            [self[(0, 0)].to_i64()?, self[(0, 1)].to_i64()?],
            [self[(1, 0)].to_i64()?, self[(1, 1)].to_i64()?],
        ])
    }

    pub fn from_2x2(m: [[i64; 2]; 2]) -> Self {
        IntMatrix::from_i64(&m)
    }

    /// Formats in the literal syntax accepted by [`FromStr`], e.g. `3,2;4,3`.
    pub fn to_literal(&self) -> String {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self[(i, j)].to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.try_mul(rhs).expect("matrix dimension mismatch")
    }
}

impl Mul<&IntVector> for &IntMatrix {
    type Output = IntVector;
    fn mul(self, rhs: &IntVector) -> IntVector {
        self.try_mul_vec(rhs).expect("matrix/vector dimension mismatch")
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;
    fn neg(self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_literal())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl FromStr for IntMatrix {
    type Err = Error;

    /// Parses the literal format `a,b;c,d` (rows separated by `;`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Err(Error::Parse("empty matrix literal".into()));
        }
        let rows = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<BigInt>()
                            .map_err(|_| Error::Parse(format!("bad matrix entry {t:?} in {s:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        IntMatrix::from_rows(rows)
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<serde_json::Value>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| int_to_json(&self[(i, j)])).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<Vec<serde_json::Value>>::deserialize(d)?;
        let rows = raw
            .iter()
            .map(|r| r.iter().map(int_from_json).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        IntMatrix::from_rows(rows).map_err(D::Error::custom)
    }
}

/// Exact product; errors on dimension mismatch.
pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    a.try_mul(b)
}

/// `M^k`; negative `k` requires `M` unimodular.
pub fn mat_pow(m: &IntMatrix, k: i64) -> Result<IntMatrix> {
    m.pow(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[[i64; 2]]) -> IntMatrix {
        IntMatrix::from_i64(rows)
    }

    #[test]
    fn identity_is_unit() {
        let a = m(&[[3, 2], [4, 3]]);
        assert_eq!(mat_mul(&IntMatrix::identity(2), &a).unwrap(), a);
    }

    #[test]
    fn sigma_action_is_involution() {
        let v = m(&[[17, 24], [-12, -17]]);
        assert!(mat_mul(&v, &v).unwrap().is_identity());
    }

    #[test]
    fn inverse_pair() {
        let a = m(&[[3, 2], [4, 3]]);
        let b = m(&[[3, -2], [-4, 3]]);
        assert!(mat_mul(&a, &b).unwrap().is_identity());
        assert_eq!(a.inverse().unwrap(), b);
    }

    #[test]
    fn powers() {
        let a = m(&[[3, 2], [4, 3]]);
        assert!(mat_pow(&a, 0).unwrap().is_identity());
        assert!(mat_pow(&IntMatrix::diag(&[1, -1]), 2).unwrap().is_identity());
        assert!(mat_pow(&m(&[[0, 1], [-1, 1]]), 6).unwrap().is_identity());
        assert!(!mat_pow(&m(&[[0, 1], [-1, 1]]), 3).unwrap().is_identity());
        assert_eq!(mat_pow(&a, -1).unwrap(), m(&[[3, -2], [-4, 3]]));
    }

    #[test]
    fn negative_power_needs_unimodular() {
        assert_eq!(
            mat_pow(&m(&[[2, 0], [0, 1]]), -1),
            Err(Error::NotUnimodular)
        );
    }

    #[test]
    fn dimension_mismatch() {
        assert!(matches!(
            mat_mul(&IntMatrix::identity(2), &IntMatrix::identity(3)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let a = IntMatrix::from_i64(&[[2, -1, 3], [0, 4, 5], [1, 1, -2]]);
        // 2(-8-5) + 1(0-5) + 3(0-4)
        assert_eq!(a.det().unwrap(), BigInt::from(-43));
        let z = IntMatrix::from_i64(&[[0, 1, 2], [0, 3, 4], [0, 5, 6]]);
        assert!(z.det().unwrap().is_zero());
        assert_eq!(IntMatrix::zeros(0, 0).det().unwrap(), BigInt::one());
    }

    #[test]
    fn inverse_3x3() {
        let a = IntMatrix::from_i64(&[[1, 0, 0], [1, 3, 2], [0, 4, 3]]);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_identity());
    }

    #[test]
    fn literal_round_trip() {
        let a: IntMatrix = "3,2;4,3".parse().unwrap();
        assert_eq!(a, m(&[[3, 2], [4, 3]]));
        assert_eq!(a.to_literal(), "3,2;4,3");
        assert!("3,2;4".parse::<IntMatrix>().is_err());
        assert!("x".parse::<IntMatrix>().is_err());
    }

    #[test]
    fn json_form() {
        let a = m(&[[3, 2], [4, 3]]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, "[[3,2],[4,3]]");
        let b: IntMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
        let big: IntMatrix = serde_json::from_str(r#"[["123456789012345678901234567890"]]"#).unwrap();
        assert_eq!(big[(0, 0)].to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn vector_parse() {
        let v: IntVector = "(1,-2)".parse().unwrap();
        assert_eq!(v, IntVector::from_i64(&[1, -2]));
        assert_eq!(IntVector::from_i64(&[0, -4, 6]).primitive(), IntVector::from_i64(&[0, 2, -3]));
    }
}
