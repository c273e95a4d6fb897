use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::group::{ExtensionGroup, GroupElement};
use super::presentation::{Abelianization, FpPresentation};
use super::quotient::{QuotientKind, QuotientWord};
use crate::error::{Error, Result};
use crate::linalg::{
    cokernel_invariants, in_image, kernel_basis, solve_integer, IntMatrix, IntVector,
};

/// Largest exponent tried when looking for a finite power of an action.
const MAX_ACTION_ORDER: i64 = 120;

/// `H_1` of the group, from its defining presentation.
pub fn abelianization(g: &ExtensionGroup) -> Abelianization {
    g.defining_presentation().abelianize()
}

/// `w(a) = det ρ(q) · axis(q)`, as `0` (preserving) or `1` (reversing).
pub fn orientation_character(g: &ExtensionGroup, a: &GroupElement) -> Result<u8> {
    let det = g.action_of(&a.q).det()?;
    let mut sign: i64 = if det.is_negative() { -1 } else { 1 };
    if !a.q.is_identity() {
        let axis = g.axis_signs().ok_or(Error::Untagged)?;
        for l in a.q.letters() {
            sign *= i64::from(axis[l.gen]);
        }
    } else if g.kind() != QuotientKind::Trivial && g.axis_signs().is_none() {
        return Err(Error::Untagged);
    }
    Ok(u8::from(sign < 0))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct W1Report {
    /// Whether some `H_1 → Z/4` lifts the orientation character.
    pub factors: bool,
    /// The character on each generator.
    pub character: BTreeMap<String, u8>,
    /// Values of a lifting homomorphism on each generator, when one exists.
    pub witness: Option<BTreeMap<String, u8>>,
}

/// Decides whether the orientation character factors through `Z/4`.
///
/// On a cyclic factor `Z/d` (`d = 0` for `Z`) a homomorphism to `Z/4` sends
/// the generator to some `a` with `d a ≡ 0 (mod 4)`; it lifts the character
/// iff `a` can be chosen with the right parity.
pub fn w1_factors_through_z4(g: &ExtensionGroup) -> Result<W1Report> {
    let p = g.defining_presentation();
    let m = g.quotient_names().len();
    let w: Vec<u8> = (0..p.generators.len())
        .map(|i| if i < m { orientation_character(g, &g.quotient_generator(i)) } else { Ok(0) })
        .collect::<Result<_>>()?;
    for r in &p.relators {
        let total: i64 = r.0.iter().map(|&(gen, k)| k * i64::from(w[gen])).sum();
        if total.rem_euclid(2) != 0 {
            return Err(Error::InconsistentExtension(format!(
                "orientation character is not a homomorphism: relator {}",
                r.render(&p.generators)
            )));
        }
    }
    let ab = p.abelianize();
    let four = BigInt::from(4);
    let mut choice = Vec::new();
    let mut factors = true;
    for (i, d) in ab.moduli().iter().enumerate() {
        let wi: i64 = ab
            .factor_lift(i)
            .iter()
            .zip(&w)
            .map(|(e, &c)| (e * BigInt::from(c)).mod_floor(&BigInt::from(2)).to_i64().unwrap())
            .sum::<i64>()
            % 2;
        let admits_odd = d.is_zero() || (d % &four).is_zero();
        if wi == 1 && !admits_odd {
            factors = false;
        }
        choice.push(BigInt::from(wi));
    }
    let character = p.generators.iter().cloned().zip(w.iter().copied()).collect();
    let witness = factors.then(|| {
        p.generators
            .iter()
            .enumerate()
            .map(|(j, name)| {
                let v: BigInt = ab.generator_class(j).iter().zip(&choice).map(|(c, a)| c * a).sum();
                (name.clone(), v.mod_floor(&four).to_u8().unwrap())
            })
            .collect::<BTreeMap<_, _>>()
    });
    if let Some(wit) = &witness {
        debug_assert!(p.generators.iter().zip(&w).all(|(n, &c)| wit[n] % 2 == c));
    }
    Ok(W1Report { factors, character, witness })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterReport {
    pub rank: usize,
    pub generators: Vec<GroupElement>,
}

/// Center of the group.
///
/// A central `(t, q)` needs `q` central in the quotient and `ρ(q) = I`. For
/// such `q`, with `h = q̂` and `ĝ h ĝ⁻¹ = d_g h`, the element `t h^j` is
/// central iff `(ρ(g) − I) t = −j d_g` for every quotient generator `g`.
/// Since `ρ(h) = I`, the obstruction is linear in `j`, so the smallest
/// working `j` is at most the exponent of the cokernel.
pub fn center(g: &ExtensionGroup) -> Result<CenterReport> {
    let n = g.rank();
    let m = g.quotient_names().len();
    let id = IntMatrix::identity(n);
    let mut stacked = IntMatrix::zeros(m * n, n);
    for k in 0..m {
        let diff = g.action(k) - &id;
        for i in 0..n {
            for j in 0..n {
                stacked[(k * n + i, j)] = diff[(i, j)].clone();
            }
        }
    }
    let fixed = kernel_basis(&stacked);
    let mut generators: Vec<GroupElement> = fixed
        .iter()
        .map(|t| g.lattice_element(t.clone()))
        .collect::<Result<_>>()?;

    let (infinite, finite) = central_candidates(g);
    let mut rank = fixed.len();
    if let Some(q) = infinite {
        if let Some(z) = lift_central(g, &stacked, q)? {
            generators.push(z);
            rank += 1;
        }
    }
    if let Some(q) = finite {
        if let Some(z) = lift_central(g, &stacked, q)? {
            generators.push(z);
        }
    }
    Ok(CenterReport { rank, generators })
}

/// Generators of the subgroup of central quotient elements acting trivially:
/// one of infinite order and one of finite order, where they exist.
fn central_candidates(g: &ExtensionGroup) -> (Option<QuotientWord>, Option<QuotientWord>) {
    let id = IntMatrix::identity(g.rank());
    let first_power = |test: &dyn Fn(i64) -> bool| (1..=MAX_ACTION_ORDER).find(|&k| test(k));
    let pow = |i: usize, k: i64| g.action(i).pow(k).expect("unimodular");
    match g.kind() {
        QuotientKind::Trivial | QuotientKind::Dinf => (None, None),
        QuotientKind::C2 => (None, g.action(0).is_identity().then_some(QuotientWord::C2(true))),
        QuotientKind::Zq => (first_power(&|k| pow(0, k).is_identity()).map(QuotientWord::Zq), None),
        QuotientKind::Klein => (
            first_power(&|k| pow(0, 2 * k).is_identity()).map(|k| QuotientWord::Klein(2 * k, 0)),
            None,
        ),
        QuotientKind::ZxC2 => {
            let gi = g.action(1);
            let inf = first_power(&|k| {
                let t = pow(0, k);
                t.is_identity() || (&t * gi) == id
            })
            .map(|k| QuotientWord::ZxC2(k, !pow(0, k).is_identity()));
            (inf, gi.is_identity().then_some(QuotientWord::ZxC2(0, true)))
        }
    }
}

fn lift_central(
    g: &ExtensionGroup,
    stacked: &IntMatrix,
    q: QuotientWord,
) -> Result<Option<GroupElement>> {
    let n = g.rank();
    let h = GroupElement::new(IntVector::zeros(n), q);
    let mut d = IntVector::zeros(stacked.rows());
    for k in 0..g.quotient_names().len() {
        let c = g.commutator(&g.quotient_generator(k), &h)?;
        debug_assert!(c.q.is_identity(), "candidate is not central in the quotient");
        for i in 0..n {
            d[k * n + i] = c.t[i].clone();
        }
    }
    let exponent = cokernel_invariants(stacked)
        .torsion
        .last()
        .and_then(|x| x.to_i64())
        .unwrap_or(1);
    for j in 1..=exponent {
        let rhs = d.scale(&BigInt::from(-j));
        if let Some(t) = solve_integer(stacked, &rhs)? {
            let hj = g.pow(&h, j)?;
            return Ok(Some(g.mul(&g.lattice_element(t)?, &hj)?));
        }
    }
    Ok(None)
}

/// Lattice vectors whose image in `H_1` is torsion.
pub fn i_lattice(g: &ExtensionGroup) -> Vec<IntVector> {
    let ab = abelianization(g);
    let m = g.quotient_names().len();
    let n = g.rank();
    let r = ab.rank();
    let mut f = IntMatrix::zeros(r, n);
    for j in 0..n {
        for (i, x) in ab.free_part(&ab.generator_class(m + j)).into_iter().enumerate() {
            f[(i, j)] = x;
        }
    }
    kernel_basis(&f)
}

/// For a bordered `Θ = [[1, 0], [ξ, Ψ]]` with `Ψ` hyperbolic: whether `Θ` is
/// conjugate to the block diagonal `[[1, 0], [0, Ψ]]`, i.e. whether
/// `ξ ∈ Im(I − Ψ)`.
pub fn is_block_diagonalizable(theta: &IntMatrix) -> Result<bool> {
    let (xi, psi) = split_bordered(theta)?;
    in_image(&(&IntMatrix::identity(2) - &psi), &xi)
}

pub(crate) fn split_bordered(theta: &IntMatrix) -> Result<(IntVector, IntMatrix)> {
    let shape = || Error::DimensionMismatch("expected a bordered 3x3 matrix [[1,0,0],[ξ,Ψ]]".into());
    if theta.rows() != 3 || theta.cols() != 3 {
        return Err(shape());
    }
    if !theta[(0, 0)].is_one() || !theta[(0, 1)].is_zero() || !theta[(0, 2)].is_zero() {
        return Err(shape());
    }
    let xi = IntVector(vec![theta[(1, 0)].clone(), theta[(2, 0)].clone()]);
    let psi = IntMatrix::from_rows(vec![
        vec![theta[(1, 1)].clone(), theta[(1, 2)].clone()],
        vec![theta[(2, 1)].clone(), theta[(2, 2)].clone()],
    ])?;
    if psi.det()?.abs() != BigInt::one() || psi.trace().abs() <= BigInt::from(2) {
        return Err(Error::NotHyperbolic(psi.to_literal()));
    }
    Ok((xi, psi))
}

/// Whether sending each generator of `src` to the named element of `target`
/// kills every relator.
pub fn verify_homomorphism(
    src: &FpPresentation,
    images: &BTreeMap<String, GroupElement>,
    target: &ExtensionGroup,
) -> Result<bool> {
    let imgs: Vec<&GroupElement> = src
        .generators
        .iter()
        .map(|name| images.get(name).ok_or_else(|| Error::UnknownGenerator(name.clone())))
        .collect::<Result<_>>()?;
    for r in &src.relators {
        let value = target.evaluate_with(r, |i| Ok(imgs[i].clone()))?;
        if !value.is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Bookkeeping for an automorphism of a `Dinf` extension: the lattice
/// matrix `P`, the sign `ε` with `f(uv) ≡ (uv)^ε`, and the product `ε det P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismSummary {
    pub p: IntMatrix,
    pub epsilon: i8,
    pub det_p: BigInt,
    pub orientation_sign: BigInt,
}

/// `images` is keyed by the generator names of `g` itself.
pub fn dinf_automorphism_summary(
    g: &ExtensionGroup,
    images: &BTreeMap<String, GroupElement>,
) -> Result<AutomorphismSummary> {
    if g.kind() != QuotientKind::Dinf {
        return Err(Error::UnsupportedKind { op: "automorphism summary", kind: g.kind().to_string() });
    }
    let get = |name: &String| images.get(name).ok_or_else(|| Error::UnknownGenerator(name.clone()));
    let mut cols = Vec::new();
    for name in g.lattice_names() {
        let e = get(name)?;
        if !e.q.is_identity() {
            return Err(Error::InconsistentExtension(format!("image of `{name}` leaves the lattice")));
        }
        cols.push(e.t.clone());
    }
    let p = IntMatrix::from_columns(&cols, g.rank());
    let fu = get(&g.quotient_names()[0])?;
    let letters = fu.q.letters();
    if letters.len() % 2 == 0 {
        return Err(Error::InconsistentExtension("image of `u` is not an involution mod the lattice".into()));
    }
    // An odd alternating word is conjugate to its middle letter.
    let epsilon: i8 = if letters[letters.len() / 2].gen == 0 { 1 } else { -1 };
    let det_p = p.det()?;
    let orientation_sign = &det_p * BigInt::from(epsilon);
    Ok(AutomorphismSummary { p, epsilon, det_p, orientation_sign })
}

/// Matrix of an endomorphism on the free part of `H_1`, in the basis given
/// by the named generators of `g`. `images[k]` is the image of `basis[k]`.
pub fn induced_free_matrix(
    g: &ExtensionGroup,
    basis: &[&str],
    images: &[GroupElement],
) -> Result<IntMatrix> {
    let ab = abelianization(g);
    let names = g.generator_names();
    let k = basis.len();
    let free_of = |exps: &[BigInt]| ab.free_part(&ab.class_of_exponents(exps));
    let mut b_cols = Vec::new();
    for name in basis {
        let j = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        let mut e = vec![BigInt::zero(); names.len()];
        e[j] = BigInt::one();
        b_cols.push(IntVector(free_of(&e)));
    }
    let b = IntMatrix::from_columns(&b_cols, ab.rank());
    let mut cols = Vec::new();
    for img in images {
        let y = IntVector(free_of(&g.exponent_vector(img)));
        let x = solve_integer(&b, &y)?.ok_or_else(|| {
            Error::Decomposition("image leaves the span of the chosen basis".into())
        })?;
        cols.push(x);
    }
    Ok(IntMatrix::from_columns(&cols, k))
}
