//! Structure of `GL(2,Z)`: orders and canonical forms of finite-order
//! elements, bounded conjugacy and centralizer searches, and typing of
//! two-ended subgroups.
//!
//! Finite orders in `GL(2,Z)` are exactly 1, 2, 3, 4 and 6, so an element has
//! finite order iff its twelfth power is the identity. Up to conjugacy the
//! nontrivial finite-order elements other than `-I` are
//!
//! | class        | representative   | order |
//! |--------------|------------------|-------|
//! | `Reflection` | `1,0;0,-1`       | 2     |
//! | `Swap`       | `0,1;1,0`        | 2     |
//! | `Order3`     | `0,1;-1,-1`      | 3     |
//! | `Order4`     | `0,1;-1,0`       | 4     |
//! | `Order6`     | `0,1;-1,1`       | 6     |
//!
//! The two order-2 classes share trace and determinant; reduction mod 2 tells
//! them apart (`Reflection` reduces to the identity, `Swap` does not).

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementOrder {
    Finite(u32),
    Infinite,
}

impl ElementOrder {
    pub fn is_finite(self) -> bool {
        matches!(self, ElementOrder::Finite(_))
    }
}

impl fmt::Display for ElementOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementOrder::Finite(k) => write!(f, "{k}"),
            ElementOrder::Infinite => f.write_str("infinite"),
        }
    }
}

fn check_gl2(m: &IntMatrix) -> Result<()> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "expected a 2x2 matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let det = m.det()?;
    if !det.abs().is_one() {
        return Err(Error::DeterminantNotUnit(det.to_string()));
    }
    Ok(())
}

/// Smallest `k >= 1` with `M^k = I`, or `Infinite` when `M^12 != I`.
pub fn element_order(m: &IntMatrix) -> Result<ElementOrder> {
    check_gl2(m)?;
    let mut acc = m.clone();
    for k in 1..=12u32 {
        if acc.is_identity() {
            return Ok(ElementOrder::Finite(k));
        }
        acc = &acc * m;
    }
    Ok(ElementOrder::Infinite)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FiniteOrderClass {
    Identity,
    MinusIdentity,
    Reflection,
    Swap,
    Order3,
    Order4,
    Order6,
}

impl FiniteOrderClass {
    pub const ALL: [FiniteOrderClass; 7] = [
        FiniteOrderClass::Identity,
        FiniteOrderClass::MinusIdentity,
        FiniteOrderClass::Reflection,
        FiniteOrderClass::Swap,
        FiniteOrderClass::Order3,
        FiniteOrderClass::Order4,
        FiniteOrderClass::Order6,
    ];

    /// The five classes outside the centre `{±I}`.
    pub const NON_CENTRAL: [FiniteOrderClass; 5] = [
        FiniteOrderClass::Reflection,
        FiniteOrderClass::Swap,
        FiniteOrderClass::Order3,
        FiniteOrderClass::Order4,
        FiniteOrderClass::Order6,
    ];

    pub fn representative(self) -> IntMatrix {
        use FiniteOrderClass::*;
        IntMatrix::from_2x2(match self {
            Identity => [[1, 0], [0, 1]],
            MinusIdentity => [[-1, 0], [0, -1]],
            Reflection => [[1, 0], [0, -1]],
            Swap => [[0, 1], [1, 0]],
            Order3 => [[0, 1], [-1, -1]],
            Order4 => [[0, 1], [-1, 0]],
            Order6 => [[0, 1], [-1, 1]],
        })
    }

    pub fn order(self) -> u32 {
        use FiniteOrderClass::*;
        match self {
            Identity => 1,
            MinusIdentity | Reflection | Swap => 2,
            Order3 => 3,
            Order4 => 4,
            Order6 => 6,
        }
    }
}

/// Conjugacy class of a finite-order element.
pub fn finite_order_class(m: &IntMatrix) -> Result<FiniteOrderClass> {
    use FiniteOrderClass::*;
    Ok(match element_order(m)? {
        ElementOrder::Infinite => return Err(Error::InfiniteOrder),
        ElementOrder::Finite(1) => Identity,
        ElementOrder::Finite(2) => {
            if (m + &IntMatrix::identity(2)).is_zero() {
                MinusIdentity
            } else if m.is_identity_mod2() {
                Reflection
            } else {
                Swap
            }
        }
        ElementOrder::Finite(3) => Order3,
        ElementOrder::Finite(4) => Order4,
        ElementOrder::Finite(6) => Order6,
        ElementOrder::Finite(k) => unreachable!("GL(2,Z) has no elements of order {k}"),
    })
}

type Mat2 = [[i128; 2]; 2];

fn small(m: &IntMatrix) -> Result<Mat2> {
    let e = |i, j| {
        m[(i, j)]
            .to_i128()
            .ok_or_else(|| Error::Parse("matrix entries too large for a bounded search".into()))
    };
    Ok([[e(0, 0)?, e(0, 1)?], [e(1, 0)?, e(1, 1)?]])
}

fn mul2(a: &Mat2, b: &Mat2) -> Mat2 {
    [
        [
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
        ],
        [
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        ],
    ]
}

/// Calls `visit` on every matrix with `|det| = 1` and entries in
/// `[-bound, bound]`, in order of increasing max-norm. Stops when `visit`
/// returns `true`.
fn for_each_in_box(bound: i64, mut visit: impl FnMut(&Mat2) -> bool) {
    let bound = i128::from(bound);
    for shell in 0..=bound {
        for a in -shell..=shell {
            for b in -shell..=shell {
                for c in -shell..=shell {
                    for d in -shell..=shell {
                        if a.abs().max(b.abs()).max(c.abs()).max(d.abs()) != shell {
                            continue;
                        }
                        if (a * d - b * c).abs() != 1 {
                            continue;
                        }
                        if visit(&[[a, b], [c, d]]) {
                            return;
                        }
                    }
                }
            }
        }
    }
}

fn to_matrix(m: &Mat2) -> IntMatrix {
    IntMatrix::from_rows(vec![
        vec![BigInt::from(m[0][0]), BigInt::from(m[0][1])],
        vec![BigInt::from(m[1][0]), BigInt::from(m[1][1])],
    ])
    .expect("2x2")
}

/// Bounded conjugacy search: some `C` in `GL(2,Z)` with entries at most
/// `bound` in absolute value and `C M C^{-1} = N`. `None` only means no
/// conjugator exists inside the box; larger conjugators are not examined.
pub fn conjugate_in_gl2z(m: &IntMatrix, n: &IntMatrix, bound: i64) -> Result<Option<IntMatrix>> {
    check_gl2(m)?;
    check_gl2(n)?;
    if m == n {
        return Ok(Some(IntMatrix::identity(2)));
    }
    let (sm, sn) = (small(m)?, small(n)?);
    let mut found = None;
    // C M C^{-1} = N  <=>  C M = N C
    for_each_in_box(bound, |c| {
        if mul2(c, &sm) == mul2(&sn, c) {
            found = Some(*c);
            true
        } else {
            false
        }
    });
    Ok(found.as_ref().map(to_matrix))
}

/// Every `C` in `GL(2,Z)` with entries at most `bound` commuting with `M`.
pub fn centralizer_sample(m: &IntMatrix, bound: i64) -> Result<Vec<IntMatrix>> {
    check_gl2(m)?;
    let sm = small(m)?;
    let mut out = Vec::new();
    for_each_in_box(bound, |c| {
        if mul2(c, &sm) == mul2(&sm, c) {
            out.push(to_matrix(c));
        }
        false
    });
    Ok(out)
}

/// One of the six shapes a two-ended subgroup of `GL(2,Z)` can take.
///
/// * 1: `Z`
/// * 2: `Z ⊕ ⟨-I⟩`
/// * 3: `⟨A, B⟩` with `A² = B² = I`
/// * 4: `⟨A, B, -I⟩` with `A² = B² = I`
/// * 5: `⟨A, B⟩` with `A` of order 4 and `B² = I`
/// * 6: `⟨A, B⟩` with `A`, `B` of order 4
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoEndedType {
    pub case: u8,
    /// The infinite-order generator (cases 1-2) or `A, B` (cases 3-6).
    pub witnesses: Vec<IntMatrix>,
    pub has_minus_identity: bool,
}

/// Types the subgroup generated by one infinite-order matrix or by two
/// finite-order matrices, optionally with `-I` listed among the generators.
///
/// Whether `-I` lies in the subgroup is decided exactly: in cases 3 and 4 the
/// odd words are conjugates of `A` or `B` and the even words powers of the
/// infinite-order `AB`, so `-I` is present only when listed.
pub fn two_ended_type(generators: &[IntMatrix]) -> Result<TwoEndedType> {
    let minus_i = FiniteOrderClass::MinusIdentity.representative();
    let mut explicit_minus = false;
    let mut gens = Vec::new();
    for g in generators {
        check_gl2(g)?;
        if *g == minus_i {
            explicit_minus = true;
        } else if !g.is_identity() {
            gens.push(g.clone());
        }
    }

    match gens.as_slice() {
        [g] => {
            if element_order(g)?.is_finite() {
                return Err(Error::NotTwoEnded("single generator has finite order".into()));
            }
            Ok(TwoEndedType {
                case: if explicit_minus { 2 } else { 1 },
                witnesses: vec![g.clone()],
                has_minus_identity: explicit_minus,
            })
        }
        [a, b] => {
            let order_of = |m: &IntMatrix| -> Result<u32> {
                match element_order(m)? {
                    ElementOrder::Finite(k @ (2 | 4)) => Ok(k),
                    ElementOrder::Finite(k) => Err(Error::NotTwoEnded(format!(
                        "generator {m} has order {k}; free factors need order dividing 4"
                    ))),
                    ElementOrder::Infinite => Err(Error::NotTwoEnded(format!(
                        "generator {m} has infinite order"
                    ))),
                }
            };
            let (oa, ob) = (order_of(a)?, order_of(b)?);
            if element_order(&(a * b))?.is_finite() {
                return Err(Error::NotTwoEnded("product AB has finite order".into()));
            }
            let (case, witnesses) = match (oa, ob) {
                (2, 2) => (if explicit_minus { 4 } else { 3 }, vec![a.clone(), b.clone()]),
                (4, 2) => (5, vec![a.clone(), b.clone()]),
                (2, 4) => (5, vec![b.clone(), a.clone()]),
                _ => (6, vec![a.clone(), b.clone()]),
            };
            Ok(TwoEndedType {
                case,
                witnesses,
                has_minus_identity: explicit_minus || case >= 5,
            })
        }
        [] => Err(Error::NotTwoEnded("subgroup is finite".into())),
        _ => Err(Error::NotTwoEnded(
            "expected one or two generators besides -I".into(),
        )),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MonodromyImage {
    DihedralInfinite,
    Other,
}

/// Word length up to which `-I` is searched for in [`monodromy_image_type`].
pub const MINUS_IDENTITY_WORD_BOUND: usize = 12;

/// Classifies the image of the pillowcase orbifold group from the images of
/// its four order-2 generators.
pub fn monodromy_image_type(images: &[IntMatrix]) -> Result<MonodromyImage> {
    for m in images {
        check_gl2(m)?;
    }
    let nontrivial: Vec<&IntMatrix> = images.iter().filter(|m| !m.is_identity()).collect();
    for m in &nontrivial {
        if finite_order_class(m).ok() != Some(FiniteOrderClass::Reflection) {
            return Ok(MonodromyImage::Other);
        }
    }
    let two = BigInt::from(2);
    let infinite = nontrivial
        .iter()
        .any(|a| nontrivial.iter().any(|b| (*a * *b).trace().abs() > two));
    if !infinite {
        return Ok(MonodromyImage::Other);
    }

    let minus_i = FiniteOrderClass::MinusIdentity.representative();
    let mut seen: HashSet<IntMatrix> = HashSet::from([IntMatrix::identity(2)]);
    let mut frontier = vec![IntMatrix::identity(2)];
    for _ in 0..MINUS_IDENTITY_WORD_BOUND {
        let mut next = Vec::new();
        for w in &frontier {
            for g in &nontrivial {
                let x = w * *g;
                if x == minus_i {
                    return Ok(MonodromyImage::Other);
                }
                if seen.insert(x.clone()) {
                    next.push(x);
                }
            }
        }
        frontier = next;
    }
    Ok(MonodromyImage::DihedralInfinite)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: [[i64; 2]; 2]) -> IntMatrix {
        IntMatrix::from_2x2(rows)
    }

    #[test]
    fn orders() {
        assert_eq!(element_order(&IntMatrix::identity(2)).unwrap(), ElementOrder::Finite(1));
        assert_eq!(element_order(&m([[0, 1], [-1, 0]])).unwrap(), ElementOrder::Finite(4));
        assert_eq!(element_order(&m([[3, 2], [4, 3]])).unwrap(), ElementOrder::Infinite);
        assert!(matches!(
            element_order(&m([[2, 0], [0, 1]])),
            Err(Error::DeterminantNotUnit(_))
        ));
    }

    #[test]
    fn representatives_have_stated_orders() {
        for class in FiniteOrderClass::ALL {
            let rep = class.representative();
            assert_eq!(element_order(&rep).unwrap(), ElementOrder::Finite(class.order()));
            assert_eq!(finite_order_class(&rep).unwrap(), class);
        }
    }

    #[test]
    fn classes() {
        assert_eq!(
            finite_order_class(&IntMatrix::diag(&[1, -1])).unwrap(),
            FiniteOrderClass::Reflection
        );
        assert_eq!(
            finite_order_class(&m([[1, 1], [0, -1]])).unwrap(),
            FiniteOrderClass::Swap
        );
        assert_eq!(
            finite_order_class(&IntMatrix::diag(&[-1, -1])).unwrap(),
            FiniteOrderClass::MinusIdentity
        );
        assert_eq!(finite_order_class(&m([[3, 2], [4, 3]])), Err(Error::InfiniteOrder));
    }

    #[test]
    fn conjugacy_search() {
        let a = m([[3, 2], [4, 3]]);
        assert_eq!(conjugate_in_gl2z(&a, &a, 3).unwrap(), Some(IntMatrix::identity(2)));
        assert_eq!(
            conjugate_in_gl2z(&IntMatrix::diag(&[1, -1]), &m([[1, 1], [0, -1]]), 10).unwrap(),
            None
        );
        let swap = m([[0, 1], [1, 0]]);
        let target = m([[1, 1], [0, -1]]);
        let c = conjugate_in_gl2z(&swap, &target, 10).unwrap().unwrap();
        assert_eq!(&(&c * &swap) * &c.inverse().unwrap(), target);
    }

    #[test]
    fn centralizer_of_identity() {
        // Exhaustive count of |det| = 1 matrices with entries in {-1, 0, 1}.
        let mut expected = 0;
        for a in -1i64..=1 {
            for b in -1i64..=1 {
                for c in -1i64..=1 {
                    for d in -1i64..=1 {
                        if (a * d - b * c).abs() == 1 {
                            expected += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(expected, 40);
        assert_eq!(centralizer_sample(&IntMatrix::identity(2), 1).unwrap().len(), expected);
    }

    #[test]
    fn centralizers_of_finite_order_elements_are_finite() {
        let c = centralizer_sample(&m([[0, 1], [-1, -1]]), 5).unwrap();
        assert!(!c.is_empty());
        for x in &c {
            assert!(element_order(x).unwrap().is_finite(), "{x} has infinite order");
        }
    }

    #[test]
    fn centralizer_of_hyperbolic() {
        let a = m([[3, 2], [4, 3]]);
        let c = centralizer_sample(&a, 3).unwrap();
        assert!(c.contains(&IntMatrix::identity(2)));
        assert!(c.contains(&IntMatrix::diag(&[-1, -1])));
        // `a` itself has an entry 4 and only shows up in a larger box.
        assert!(!c.contains(&a));
        assert!(centralizer_sample(&a, 4).unwrap().contains(&a));
        for x in &c {
            assert_eq!(x * &a, &a * x);
        }
    }

    #[test]
    fn two_ended_cases() {
        let psi = m([[3, 2], [4, 3]]);
        let minus = IntMatrix::diag(&[-1, -1]);
        assert_eq!(two_ended_type(std::slice::from_ref(&psi)).unwrap().case, 1);
        let t = two_ended_type(&[psi.clone(), minus.clone()]).unwrap();
        assert_eq!((t.case, t.has_minus_identity), (2, true));

        let d = IntMatrix::diag(&[1, -1]);
        let v = m([[17, 24], [-12, -17]]);
        let t = two_ended_type(&[d.clone(), v.clone()]).unwrap();
        assert_eq!((t.case, t.has_minus_identity), (3, false));
        assert_eq!(&d * &v, m([[17, 24], [12, 17]]));
        assert_eq!(two_ended_type(&[d.clone(), v.clone(), minus]).unwrap().case, 4);

        let j = m([[0, 1], [-1, 0]]);
        let b = m([[1, 2], [0, -1]]);
        let t = two_ended_type(&[b.clone(), j.clone()]).unwrap();
        assert_eq!(t.case, 5);
        assert_eq!(t.witnesses[0], j);
        let j2 = m([[2, 5], [-1, -2]]);
        assert_eq!(two_ended_type(&[j.clone(), j2]).unwrap().case, 6);
    }

    #[test]
    fn not_two_ended() {
        let d = IntMatrix::diag(&[1, -1]);
        assert!(matches!(
            two_ended_type(std::slice::from_ref(&d)),
            Err(Error::NotTwoEnded(_))
        ));
        // Both involutions commute: product of finite order.
        assert!(matches!(
            two_ended_type(&[d, IntMatrix::diag(&[-1, 1])]),
            Err(Error::NotTwoEnded(_))
        ));
        assert!(matches!(
            two_ended_type(&[m([[0, 1], [-1, -1]]), m([[1, 0], [0, -1]])]),
            Err(Error::NotTwoEnded(_))
        ));
    }

    #[test]
    fn monodromy_images() {
        let a = m([[3, 2], [-4, -3]]);
        let d = IntMatrix::diag(&[1, -1]);
        assert_eq!((&a * &d).trace(), BigInt::from(6));
        assert_eq!(
            monodromy_image_type(&[a.clone(), d.clone(), a.clone(), d.clone()]).unwrap(),
            MonodromyImage::DihedralInfinite
        );
        let id = IntMatrix::identity(2);
        assert_eq!(
            monodromy_image_type(&[id.clone(), id.clone(), id.clone(), id]).unwrap(),
            MonodromyImage::Other
        );
        assert_eq!(
            monodromy_image_type(&[a.clone(), m([[0, 1], [1, 0]]), a.clone(), d.clone()]).unwrap(),
            MonodromyImage::Other
        );
        // A and -A are both reflections, but their product is -I.
        assert_eq!(
            monodromy_image_type(&[a.clone(), d.clone(), -&a, d]).unwrap(),
            MonodromyImage::Other
        );
    }
}
