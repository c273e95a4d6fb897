//! The matrix invariant of `Sol³×E¹`-manifolds Seifert fibred over the
//! pillowcase orbifold `S(2,2,2,2)`.
//!
//! Such a group, together with an ordered pair `u, v` of generating
//! involutions of the base, determines `Ψ = [[p, q], [r, p]]` in `SL(2,Z)`
//! with `p` odd, `|p| > 1`, `q` and `r` even, and `q > 0`, and `Ψ` determines
//! the group. The matrices `Ψ` and `Ψ⁻¹` give the same group. Exchanging `u`
//! and `v` replaces `Ψ` by its [`swap_partner`], which may be a different
//! normalized invariant of the same group. In the customary notation
//! `Ψ = [[a, b], [−c, a]]` we have `(a, b, c) = (p, q, −r)`.
//!
//! ```
//! use solfour::classifier::{normalize, validate};
//! use solfour::IntMatrix;
//!
//! let psi: IntMatrix = "3,-2;-4,3".parse().unwrap();
//! assert!(validate(&psi).is_err());
//! let inv = normalize(&psi).unwrap();
//! assert_eq!((inv.p, inv.q, inv.r), (3.into(), 2.into(), 4.into()));
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extension::{
    w1_factors_through_z4, AbelianSummary, ExtensionGroup, FpPresentation, QuotientKind,
};
use crate::gl2z::{element_order, ElementOrder};
use crate::linalg::{int_from_json, int_to_json, kernel_basis, saturation, solve_integer, IntMatrix, IntVector};

/// Word-length bound for the torsion gate.
pub const TORSION_WORD_BOUND: usize = 7;

/// Why a matrix is not a normalized invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstraintViolation {
    NotTwoByTwo,
    DistinctDiagonal { p: BigInt, s: BigInt },
    EvenP(BigInt),
    SmallP(BigInt),
    OddOffDiagonal { q: BigInt, r: BigInt },
    Determinant(BigInt),
    NonPositiveQ(BigInt),
}

impl ConstraintViolation {
    /// Stable machine-readable tag.
    pub fn code(&self) -> &'static str {
        match self {
            ConstraintViolation::NotTwoByTwo => "not-2x2",
            ConstraintViolation::DistinctDiagonal { .. } => "distinct-diagonal",
            ConstraintViolation::EvenP(_) => "even-p",
            ConstraintViolation::SmallP(_) => "not-hyperbolic",
            ConstraintViolation::OddOffDiagonal { .. } => "odd-off-diagonal",
            ConstraintViolation::Determinant(_) => "determinant",
            ConstraintViolation::NonPositiveQ(_) => "non-positive-q",
        }
    }
}

impl fmt::Display for ConstraintViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstraintViolation::NotTwoByTwo => write!(f, "matrix must be 2x2"),
            ConstraintViolation::DistinctDiagonal { p, s } => {
                write!(f, "diagonal entries differ ({p} and {s})")
            }
            ConstraintViolation::EvenP(p) => write!(f, "diagonal entry p = {p} must be odd"),
            ConstraintViolation::SmallP(p) => write!(f, "|p| = {} must exceed 1", p.abs()),
            ConstraintViolation::OddOffDiagonal { q, r } => {
                write!(f, "off-diagonal entries q = {q}, r = {r} must both be even")
            }
            ConstraintViolation::Determinant(d) => write!(f, "determinant is {d}, expected 1"),
            ConstraintViolation::NonPositiveQ(q) => write!(f, "q = {q} must be positive"),
        }
    }
}

/// `Ψ = [[p, q], [r, p]]`, always normalized.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PillowcaseInvariant {
    pub p: BigInt,
    pub q: BigInt,
    pub r: BigInt,
}

impl PillowcaseInvariant {
    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(vec![
            vec![self.p.clone(), self.q.clone()],
            vec![self.r.clone(), self.p.clone()],
        ])
        .expect("2x2")
    }

    /// `Ψ⁻¹ = [[p, −q], [−r, p]]`; never itself normalized.
    pub fn inverse_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(vec![
            vec![self.p.clone(), -&self.q],
            vec![-&self.r, self.p.clone()],
        ])
        .expect("2x2")
    }

    /// `(a, b, c)` with `Ψ = [[a, b], [−c, a]]`.
    pub fn abc(&self) -> (BigInt, BigInt, BigInt) {
        (self.p.clone(), self.q.clone(), -&self.r)
    }

    /// `A = D Ψ = [[p, q], [−r, −p]]` with `D = diag(1, −1)`: the action of `u`
    /// on the fibre lattice.
    pub fn u_action(&self) -> IntMatrix {
        IntMatrix::from_rows(vec![
            vec![self.p.clone(), self.q.clone()],
            vec![-&self.r, -&self.p],
        ])
        .expect("2x2")
    }

    fn sort_key(&self) -> (BigInt, bool, BigInt) {
        (self.p.abs(), self.p.is_negative(), self.q.clone())
    }
}

impl fmt::Display for PillowcaseInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.p, self.q, self.r)
    }
}

impl Serialize for PillowcaseInvariant {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PillowcaseInvariant", 3)?;
        st.serialize_field("p", &int_to_json(&self.p))?;
        st.serialize_field("q", &int_to_json(&self.q))?;
        st.serialize_field("r", &int_to_json(&self.r))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for PillowcaseInvariant {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        struct Raw {
            p: serde_json::Value,
            q: serde_json::Value,
            r: serde_json::Value,
        }
        let raw = Raw::deserialize(d)?;
        let get = |v: &serde_json::Value| int_from_json(v).map_err(D::Error::custom);
        let m = IntMatrix::from_rows(vec![
            vec![get(&raw.p)?, get(&raw.q)?],
            vec![get(&raw.r)?, get(&raw.p)?],
        ])
        .map_err(D::Error::custom)?;
        validate(&m).map_err(D::Error::custom)
    }
}

/// Checks every constraint, reporting the first one violated.
pub fn validate(m: &IntMatrix) -> Result<PillowcaseInvariant> {
    use ConstraintViolation as V;
    if m.rows() != 2 || m.cols() != 2 {
        return Err(V::NotTwoByTwo.into());
    }
    let (p, q, r, s) = (&m[(0, 0)], &m[(0, 1)], &m[(1, 0)], &m[(1, 1)]);
    if p != s {
        return Err(V::DistinctDiagonal { p: p.clone(), s: s.clone() }.into());
    }
    if p.is_even() {
        return Err(V::EvenP(p.clone()).into());
    }
    if p.abs() <= BigInt::one() {
        return Err(V::SmallP(p.clone()).into());
    }
    if q.is_odd() || r.is_odd() {
        return Err(V::OddOffDiagonal { q: q.clone(), r: r.clone() }.into());
    }
    let det = p * p - q * r;
    if !det.is_one() {
        return Err(V::Determinant(det).into());
    }
    if !q.is_positive() {
        return Err(V::NonPositiveQ(q.clone()).into());
    }
    Ok(PillowcaseInvariant { p: p.clone(), q: q.clone(), r: r.clone() })
}

/// The normalized representative of `{M, M⁻¹}`.
pub fn normalize(m: &IntMatrix) -> Result<PillowcaseInvariant> {
    let first = match validate(m) {
        Ok(inv) => return Ok(inv),
        Err(e) => e,
    };
    if m.rows() == 2 && m.cols() == 2 {
        if let Ok(inv) = m.inverse() {
            if let Ok(v) = validate(&inv) {
                return Ok(v);
            }
        }
    }
    Err(first)
}

/// Whether two invariants coincide after normalization.
///
/// Equal invariants give isomorphic groups. Invariants related by
/// [`swap_partner`] also do, although this test reports them as distinct.
pub fn isomorphic(a: &PillowcaseInvariant, b: &PillowcaseInvariant) -> bool {
    a == b
}

/// [`isomorphic`] on raw matrices, normalizing each first.
pub fn isomorphic_matrices(a: &IntMatrix, b: &IntMatrix) -> Result<bool> {
    Ok(isomorphic(&normalize(a)?, &normalize(b)?))
}

/// The invariant read off with the roles of `u` and `v` exchanged.
///
/// Diagonalizing the new `v` means passing to the eigenbasis `P` of
/// `A = DΨ`, where the old `v` acts by `P⁻¹DP`, so the new invariant is
/// `D P⁻¹ D P`. Both describe the same group; for instance `(3,2,4)` and
/// `(3,4,2)` are swap partners.
pub fn swap_partner(inv: &PillowcaseInvariant) -> PillowcaseInvariant {
    let a = inv.u_action();
    let minus = kernel_basis(&(&a + &IntMatrix::identity(2)));
    let p = IntMatrix::from_columns(&[square_vector(inv), minus[0].clone()], 2);
    let d = IntMatrix::diag(&[1, -1]);
    let p_inv = p.inverse().expect("eigenvectors of an involution conjugate to D span Z^2");
    let new_a = &(&p_inv * &d) * &p;
    normalize(&(&d * &new_a)).expect("conjugates of D keep the parity constraints")
}

/// All invariants with `max(|p|, q, r) ≤ max_entry`, ordered by `|p|`, then
/// positive `p` before negative, then `q`.
pub fn enumerate(max_entry: u64) -> Vec<PillowcaseInvariant> {
    let odd: Vec<u64> = (3..=max_entry).step_by(2).collect();
    let mut out: Vec<PillowcaseInvariant> = odd
        .par_iter()
        .flat_map_iter(|&p| {
            let n = p * p - 1;
            let mut found = Vec::new();
            let mut q = 2;
            while q <= max_entry.min(n) {
                if n % q == 0 {
                    let r = n / q;
                    if r % 2 == 0 && r <= max_entry {
                        for sign in [1i64, -1] {
                            found.push(PillowcaseInvariant {
                                p: BigInt::from(p) * sign,
                                q: BigInt::from(q),
                                r: BigInt::from(r),
                            });
                        }
                    }
                }
                q += 2;
            }
            found
        })
        .collect();
    out.sort_by_key(PillowcaseInvariant::sort_key);
    out
}

/// Extracts the invariant from a torsion-free extension of `D_∞ = ⟨u, v⟩`
/// by `Z³` with actions `U`, `V` and squares `û² = s_u`, `v̂² = s_v`.
///
/// `C = ker(W − I)` for `W = UV` is the centre-like summand, `N` the
/// saturation of `Im(W − I)`. In a basis of `N` diagonalizing
/// `D = V|_N = diag(1, −1)`, the invariant is `Ψ = D · U|_N`, normalized.
/// Since `A² = D² = I` we have `AD = (DA)⁻¹`, so the order of the product
/// does not matter after normalization.
pub fn from_extension(
    u: &IntMatrix,
    v: &IntMatrix,
    s_u: &IntVector,
    s_v: &IntVector,
) -> Result<PillowcaseInvariant> {
    for m in [u, v] {
        if m.rows() != 3 || m.cols() != 3 {
            return Err(Error::DimensionMismatch("actions must be 3x3".into()));
        }
        if !(m * m).is_identity() {
            return Err(Error::InconsistentExtension("actions must be involutions".into()));
        }
    }
    let id3 = IntMatrix::identity(3);
    let w = u * v;
    if w.pow(12)?.is_identity() {
        return Err(Error::NotHyperbolic(format!("uv acts with finite order: {}", w.to_literal())));
    }

    let g = ExtensionGroup::builder(QuotientKind::Dinf, 3)
        .action(0, u.clone())
        .action(1, v.clone())
        .square(0, s_u.clone())
        .square(1, s_v.clone())
        .build()?;
    if let Some(t) = g.find_torsion(TORSION_WORD_BOUND)? {
        return Err(Error::TorsionFound(g.render(&t)));
    }

    let c = kernel_basis(&(&w - &id3));
    if c.len() != 1 {
        return Err(Error::NotHyperbolic(format!("uv fixes a rank {} sublattice", c.len())));
    }
    let n = saturation(&(&w - &id3).columns());
    if n.len() != 2 {
        return Err(Error::Decomposition(format!("Im(W - I) has rank {}", n.len())));
    }
    let basis = IntMatrix::from_columns(&[n[0].clone(), n[1].clone(), c[0].clone()], 3);
    if basis.det()?.is_zero() {
        return Err(Error::Decomposition("N + C has infinite index".into()));
    }

    let n_mat = IntMatrix::from_columns(&n, 3);
    let restrict = |m: &IntMatrix| -> Result<IntMatrix> {
        let cols = n
            .iter()
            .map(|x| {
                solve_integer(&n_mat, &(m * x))?
                    .ok_or_else(|| Error::Decomposition("action does not preserve N".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntMatrix::from_columns(&cols, 2))
    };
    let a = restrict(u)?;
    let d = restrict(v)?;

    let id2 = IntMatrix::identity(2);
    let plus = kernel_basis(&(&d - &id2));
    let minus = kernel_basis(&(&d + &id2));
    if plus.len() != 1 || minus.len() != 1 {
        return Err(Error::Decomposition(format!("v acts on N by {}, not a reflection", d.to_literal())));
    }
    let r = IntMatrix::from_columns(&[plus[0].clone(), minus[0].clone()], 2);
    if !r.is_unimodular() {
        return Err(Error::Decomposition(format!(
            "v acts on N by {}, which is not conjugate to diag(1,-1)",
            d.to_literal()
        )));
    }
    let a2 = &(&r.inverse()? * &a) * &r;
    let psi = &IntMatrix::diag(&[1, -1]) * &a2;
    if element_order(&psi)? != ElementOrder::Infinite {
        return Err(Error::NotHyperbolic(psi.to_literal()));
    }
    normalize(&psi)
}

/// `(e, f)`: the primitive generator of `ker(A − I)` with first nonzero
/// coordinate positive.
pub fn square_vector(inv: &PillowcaseInvariant) -> IntVector {
    let k = kernel_basis(&(&inv.u_action() - &IntMatrix::identity(2)));
    debug_assert_eq!(k.len(), 1);
    k[0].clone()
}

/// The presentation
/// `⟨u, v, x, y, z | u x u⁻¹ = x^a y^c, u y u⁻¹ = x^b y^d, u z u⁻¹ = z⁻¹, u² = x^e y^f,
/// v² = x, v y v⁻¹ = y⁻¹, v z v⁻¹ = z⁻¹⟩` (with `x, y, z` commuting) and the
/// matching extension of `D_∞` by `Z³`.
pub fn presentation_from_invariant(
    inv: &PillowcaseInvariant,
) -> Result<(FpPresentation, ExtensionGroup)> {
    let small = |x: &BigInt| {
        x.to_i64()
            .ok_or_else(|| Error::InconsistentExtension(format!("entry {x} exceeds 64 bits")))
    };
    let (a, b, c) = inv.abc();
    let (a, b, c) = (small(&a)?, small(&b)?, small(&c)?);
    let d = -a;
    let ef = square_vector(inv);
    let (e, f) = (small(&ef[0])?, small(&ef[1])?);

    let relations = [
        format!("u x u^-1 = x^{a} y^{c}"),
        format!("u y u^-1 = x^{b} y^{d}"),
        "u z u^-1 = z^-1".to_string(),
        format!("u^2 = x^{e} y^{f}"),
        "v^2 = x".to_string(),
        "v y v^-1 = y^-1".to_string(),
        "v z v^-1 = z^-1".to_string(),
        "x y = y x".to_string(),
        "x z = z x".to_string(),
        "y z = z y".to_string(),
    ];
    let rel_refs: Vec<&str> = relations.iter().map(String::as_str).collect();
    let presentation = FpPresentation::from_relations(&["u", "v", "x", "y", "z"], &rel_refs)?;

    let u_action = IntMatrix::block_diag(&inv.u_action(), &IntMatrix::diag(&[-1]));
    let g = ExtensionGroup::builder(QuotientKind::Dinf, 3)
        .lattice_names(&["x", "y", "z"])
        .action(0, u_action)
        .action(1, IntMatrix::diag(&[1, -1, -1]))
        .square(0, IntVector(vec![ef[0].clone(), ef[1].clone(), BigInt::zero()]))
        .square(1, IntVector::from_i64(&[1, 0, 0]))
        .axis_signs(&[-1, -1])
        .build()?;
    if let Some(t) = g.find_torsion(TORSION_WORD_BOUND)? {
        return Err(Error::TorsionFound(g.render(&t)));
    }
    Ok((presentation, g))
}

/// Orders of generator images in `H_1`; `None` for infinite order.
pub type GeneratorOrders = BTreeMap<String, Option<u64>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub invariant: PillowcaseInvariant,
    pub h1: AbelianSummary,
    pub orders: GeneratorOrders,
    pub w1_factors_through_z4: bool,
    pub beta1_zero: bool,
}

pub fn homology_report(inv: &PillowcaseInvariant) -> Result<HomologyReport> {
    let (presentation, g) = presentation_from_invariant(inv)?;
    let ab = presentation.abelianize();
    let orders = presentation
        .generators
        .iter()
        .enumerate()
        .map(|(j, name)| (name.clone(), ab.generator_order(j).and_then(|o| o.to_u64())))
        .collect();
    let w1 = w1_factors_through_z4(&g)?;
    Ok(HomologyReport {
        invariant: inv.clone(),
        h1: ab.summary(),
        orders,
        w1_factors_through_z4: w1.factors,
        beta1_zero: ab.rank() == 0,
    })
}
