use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::presentation::{parse_word, FpPresentation, Word};
use super::quotient::{Letter, QuotientKind, QuotientWord};
use crate::error::{Error, Result};
use crate::linalg::{solve_integer, IntMatrix, IntVector};

/// An extension `1 → Z^n → π → Q → 1` with `Q` drawn from [`QuotientKind`].
///
/// Every element is written `t · q̂` with `t` in the lattice and `q̂` the
/// product of the section letters of the normal-form word `q`. Conjugation
/// by `q̂` acts on the lattice through `ρ(q)`, a left action:
/// `ρ(ab) = ρ(a) ρ(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionGroup {
    kind: QuotientKind,
    rank: usize,
    quotient_names: Vec<String>,
    lattice_names: Vec<String>,
    actions: Vec<IntMatrix>,
    /// `ĝ² = s_g` for involutive generators; `None` elsewhere.
    squares: Vec<Option<IntVector>>,
    /// `[t̂, ĝ] = c` for the `ZxC2` kind.
    commutator: Option<IntVector>,
    axis_signs: Option<Vec<i8>>,
}

/// `t · q̂`: translation part on the left, quotient word on the right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub t: IntVector,
    pub q: QuotientWord,
}

impl GroupElement {
    pub fn new(t: IntVector, q: QuotientWord) -> Self {
        GroupElement { t, q }
    }

    pub fn is_identity(&self) -> bool {
        self.t.is_zero() && self.q.is_identity()
    }
}

/// Collects the data of an [`ExtensionGroup`] and checks it on [`build`](Self::build).
#[derive(Clone, Debug)]
pub struct ExtensionBuilder {
    kind: QuotientKind,
    rank: usize,
    quotient_names: Vec<String>,
    lattice_names: Vec<String>,
    actions: Vec<Option<IntMatrix>>,
    squares: Vec<Option<IntVector>>,
    commutator: Option<IntVector>,
    axis_signs: Option<Vec<i8>>,
}

impl ExtensionBuilder {
    pub fn quotient_names(mut self, names: &[&str]) -> Self {
        self.quotient_names = names.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn lattice_names(mut self, names: &[&str]) -> Self {
        self.lattice_names = names.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn action(mut self, gen: usize, m: IntMatrix) -> Self {
        if gen < self.actions.len() {
            self.actions[gen] = Some(m);
        }
        self
    }

    pub fn square(mut self, gen: usize, s: IntVector) -> Self {
        if gen < self.squares.len() {
            self.squares[gen] = Some(s);
        }
        self
    }

    pub fn commutator(mut self, c: IntVector) -> Self {
        self.commutator = Some(c);
        self
    }

    pub fn axis_signs(mut self, signs: &[i8]) -> Self {
        self.axis_signs = Some(signs.to_vec());
        self
    }

    pub fn build(self) -> Result<ExtensionGroup> {
        let bad = |msg: String| Error::InconsistentExtension(msg);
        let (kind, n) = (self.kind, self.rank);
        let m = kind.generator_count();
        if self.quotient_names.len() != m {
            return Err(bad(format!("{kind} needs {m} quotient generator names")));
        }
        if self.lattice_names.len() != n {
            return Err(bad(format!("lattice of rank {n} needs {n} generator names")));
        }
        let mut all: Vec<&String> = self.quotient_names.iter().chain(&self.lattice_names).collect();
        all.sort();
        if all.windows(2).any(|w| w[0] == w[1]) || all.iter().any(|s| s.is_empty() || s.as_str() == "1") {
            return Err(bad("generator names must be distinct and nonempty".into()));
        }

        let mut actions = Vec::with_capacity(m);
        for (i, a) in self.actions.into_iter().enumerate() {
            let a = a.unwrap_or_else(|| IntMatrix::identity(n));
            if a.rows() != n || a.cols() != n {
                return Err(Error::DimensionMismatch(format!(
                    "action of `{}` is {}x{}, lattice rank is {n}",
                    self.quotient_names[i],
                    a.rows(),
                    a.cols()
                )));
            }
            if !a.is_unimodular() {
                return Err(bad(format!("action of `{}` is not in GL({n},Z)", self.quotient_names[i])));
            }
            actions.push(a);
        }

        let mut squares = Vec::with_capacity(m);
        for (i, s) in self.squares.into_iter().enumerate() {
            let name = &self.quotient_names[i];
            if !kind.is_involution(i) {
                if s.as_ref().is_some_and(|s| !s.is_zero()) {
                    return Err(bad(format!("`{name}` has infinite order and carries no square")));
                }
                squares.push(None);
                continue;
            }
            let s = s.unwrap_or_else(|| IntVector::zeros(n));
            if s.dim() != n {
                return Err(Error::DimensionMismatch(format!("square of `{name}` has length {}", s.dim())));
            }
            if !(&actions[i] * &actions[i]).is_identity() {
                return Err(bad(format!("action of `{name}` does not square to the identity")));
            }
            if &actions[i] * &s != s {
                return Err(bad(format!("action of `{name}` does not fix its square")));
            }
            squares.push(Some(s));
        }

        let commutator = match kind {
            QuotientKind::ZxC2 => {
                let c = self.commutator.unwrap_or_else(|| IntVector::zeros(n));
                if c.dim() != n {
                    return Err(Error::DimensionMismatch("commutator vector".into()));
                }
                let (t, g) = (&actions[0], &actions[1]);
                if t * g != g * t {
                    return Err(bad("actions of Z and Z/2 do not commute".into()));
                }
                let s = squares[1].as_ref().expect("involution square");
                // t̂ ĝ² t̂⁻¹ = (c ĝ)² = c + G c + s
                let lhs = t * s;
                let rhs = &(s + &c) + &(g * &c);
                if lhs != rhs {
                    return Err(bad("commutator is incompatible with the square of the involution".into()));
                }
                Some(c)
            }
            _ => {
                if self.commutator.as_ref().is_some_and(|c| !c.is_zero()) {
                    return Err(bad(format!("{kind} carries no commutator")));
                }
                None
            }
        };

        if kind == QuotientKind::Klein {
            let (x, y) = (&actions[0], &actions[1]);
            let lhs = &(x * y) * &x.inverse()?;
            if lhs != y.inverse()? {
                return Err(bad("actions violate x y x^-1 = y^-1".into()));
            }
        }

        if let Some(signs) = &self.axis_signs {
            if signs.len() != m || signs.iter().any(|s| s.abs() != 1) {
                return Err(bad("axis signs must be ±1, one per quotient generator".into()));
            }
        }

        Ok(ExtensionGroup {
            kind,
            rank: n,
            quotient_names: self.quotient_names,
            lattice_names: self.lattice_names,
            actions,
            squares,
            commutator,
            axis_signs: self.axis_signs,
        })
    }
}

impl ExtensionGroup {
    pub fn builder(kind: QuotientKind, rank: usize) -> ExtensionBuilder {
        let m = kind.generator_count();
        ExtensionBuilder {
            kind,
            rank,
            quotient_names: kind.default_names().iter().map(|s| s.to_string()).collect(),
            lattice_names: (1..=rank).map(|i| format!("e{i}")).collect(),
            actions: vec![None; m],
            squares: vec![None; m],
            commutator: None,
            axis_signs: None,
        }
    }

    /// Rebuilds the group with its data transported along `c`: lattice
    /// vectors `t ↦ c t`, actions `ρ ↦ c ρ c⁻¹`.
    pub fn conjugated_by(&self, c: &IntMatrix) -> Result<ExtensionGroup> {
        let c_inv = c.inverse()?;
        let mut g = self.clone();
        for a in &mut g.actions {
            *a = &(c * &*a) * &c_inv;
        }
        for s in g.squares.iter_mut().flatten() {
            *s = c * &*s;
        }
        if let Some(x) = &mut g.commutator {
            *x = c * &*x;
        }
        Ok(g)
    }

    /// A copy with some square vectors replaced.
    pub fn with_square(&self, gen: usize, s: IntVector) -> Result<ExtensionGroup> {
        let mut b = self.to_builder();
        b.squares[gen] = Some(s);
        b.build()
    }

    fn to_builder(&self) -> ExtensionBuilder {
        ExtensionBuilder {
            kind: self.kind,
            rank: self.rank,
            quotient_names: self.quotient_names.clone(),
            lattice_names: self.lattice_names.clone(),
            actions: self.actions.iter().cloned().map(Some).collect(),
            squares: self.squares.clone(),
            commutator: self.commutator.clone(),
            axis_signs: self.axis_signs.clone(),
        }
    }

    pub fn kind(&self) -> QuotientKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn quotient_names(&self) -> &[String] {
        &self.quotient_names
    }

    pub fn lattice_names(&self) -> &[String] {
        &self.lattice_names
    }

    /// Quotient generators first, then lattice generators.
    pub fn generator_names(&self) -> Vec<String> {
        self.quotient_names.iter().chain(&self.lattice_names).cloned().collect()
    }

    pub fn action(&self, gen: usize) -> &IntMatrix {
        &self.actions[gen]
    }

    pub fn actions(&self) -> &[IntMatrix] {
        &self.actions
    }

    pub fn square_of(&self, gen: usize) -> Option<&IntVector> {
        self.squares[gen].as_ref()
    }

    pub fn commutator_vector(&self) -> Option<&IntVector> {
        self.commutator.as_ref()
    }

    pub fn axis_signs(&self) -> Option<&[i8]> {
        self.axis_signs.as_deref()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::new(IntVector::zeros(self.rank), self.kind.identity())
    }

    pub fn lattice_element(&self, t: IntVector) -> Result<GroupElement> {
        if t.dim() != self.rank {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in a lattice of rank {}",
                t.dim(),
                self.rank
            )));
        }
        Ok(GroupElement::new(t, self.kind.identity()))
    }

    /// The section `ĝ` of quotient generator `gen`.
    pub fn quotient_generator(&self, gen: usize) -> GroupElement {
        let (c, q) = self.push(&self.kind.identity(), Letter::new(gen, false));
        GroupElement::new(c, q)
    }

    /// Generator `i` of [`generator_names`](Self::generator_names).
    pub fn generator(&self, i: usize) -> Result<GroupElement> {
        let m = self.quotient_names.len();
        if i < m {
            Ok(self.quotient_generator(i))
        } else if i < m + self.rank {
            self.lattice_element(IntVector::unit(self.rank, i - m))
        } else {
            Err(Error::UnknownGenerator(format!("#{i}")))
        }
    }

    /// `ρ(q)` for a normal-form word.
    pub fn action_of(&self, q: &QuotientWord) -> IntMatrix {
        let pow = |m: &IntMatrix, k: i64| m.pow(k).expect("actions are unimodular");
        let id = || IntMatrix::identity(self.rank);
        match *q {
            QuotientWord::Trivial => id(),
            QuotientWord::C2(e) => if e { self.actions[0].clone() } else { id() },
            QuotientWord::Zq(k) => pow(&self.actions[0], k),
            QuotientWord::ZxC2(k, e) => {
                let t = pow(&self.actions[0], k);
                if e { &t * &self.actions[1] } else { t }
            }
            QuotientWord::Dinf { first, len } => {
                let (a, b) = if first == 0 { (0, 1) } else { (1, 0) };
                let pair = &self.actions[a] * &self.actions[b];
                let even = pow(&pair, (len / 2) as i64);
                if len % 2 == 1 { &even * &self.actions[a] } else { even }
            }
            QuotientWord::Klein(a, b) => &pow(&self.actions[0], a) * &pow(&self.actions[1], b),
        }
    }

    fn involution_square(&self, gen: usize) -> &IntVector {
        self.squares[gen].as_ref().expect("involutive generator carries a square")
    }

    /// `q̂ · ℓ̂ = c · q̂'`; returns `(c, q')`.
    fn push(&self, q: &QuotientWord, l: Letter) -> (IntVector, QuotientWord) {
        let zero = || IntVector::zeros(self.rank);
        if l.inverse && self.kind.is_involution(l.gen) {
            // ĝ⁻¹ = (-s_g) ĝ
            let pre = -&(&self.action_of(q) * self.involution_square(l.gen));
            let (c, q2) = self.push(q, Letter::new(l.gen, false));
            return (&pre + &c, q2);
        }
        let step = if l.inverse { -1 } else { 1 };
        match *q {
            QuotientWord::Trivial => unreachable!("trivial quotient has no letters"),
            QuotientWord::C2(false) => (zero(), QuotientWord::C2(true)),
            QuotientWord::C2(true) => (self.involution_square(0).clone(), QuotientWord::C2(false)),
            QuotientWord::Zq(k) => (zero(), QuotientWord::Zq(k + step)),
            QuotientWord::ZxC2(k, e) => {
                let c = self.commutator.as_ref().expect("ZxC2 commutator");
                let t_pow = |j: i64| self.actions[0].pow(j).expect("unimodular");
                match (l.gen, e, l.inverse) {
                    (0, false, _) => (zero(), QuotientWord::ZxC2(k + step, false)),
                    // ĝ t̂ = (-c) t̂ ĝ
                    (0, true, false) => (-&(&t_pow(k) * c), QuotientWord::ZxC2(k + 1, true)),
                    // ĝ t̂⁻¹ = (T⁻¹ c) t̂⁻¹ ĝ
                    (0, true, true) => (&t_pow(k - 1) * c, QuotientWord::ZxC2(k - 1, true)),
                    (_, false, _) => (zero(), QuotientWord::ZxC2(k, true)),
                    (_, true, _) => (&t_pow(k) * self.involution_square(1), QuotientWord::ZxC2(k, false)),
                }
            }
            QuotientWord::Dinf { first, len } => {
                let gen = l.gen as u8;
                if len == 0 {
                    return (zero(), QuotientWord::Dinf { first: gen, len: 1 });
                }
                let last = ((usize::from(first) + len - 1) % 2) as u8;
                if last == gen {
                    let shorter = if len == 1 {
                        QuotientWord::Dinf { first: 0, len: 0 }
                    } else {
                        QuotientWord::Dinf { first, len: len - 1 }
                    };
                    let c = &self.action_of(&shorter) * self.involution_square(l.gen);
                    (c, shorter)
                } else {
                    (zero(), QuotientWord::Dinf { first, len: len + 1 })
                }
            }
            QuotientWord::Klein(a, b) => match l.gen {
                0 => (zero(), QuotientWord::Klein(a + step, -b)),
                _ => (zero(), QuotientWord::Klein(a, b + step)),
            },
        }
    }

    fn check(&self, a: &GroupElement) -> Result<()> {
        if a.q.kind() != self.kind || a.t.dim() != self.rank {
            return Err(Error::KindMismatch);
        }
        Ok(())
    }

    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        let mut t = &a.t + &(&self.action_of(&a.q) * &b.t);
        let mut q = a.q.clone();
        for l in b.q.letters() {
            let (c, next) = self.push(&q, l);
            t = &t + &c;
            q = next;
        }
        Ok(GroupElement::new(t, q))
    }

    pub fn inv(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        // (v q̂)⁻¹ = q̂⁻¹ (-v)
        let mut t = IntVector::zeros(self.rank);
        let mut q = self.kind.identity();
        for l in a.q.letters().into_iter().rev() {
            let (c, next) = self.push(&q, Letter::new(l.gen, !l.inverse));
            t = &t + &c;
            q = next;
        }
        let shift = &self.action_of(&q) * &(-&a.t);
        Ok(GroupElement::new(&t + &shift, q))
    }

    pub fn pow(&self, a: &GroupElement, k: i64) -> Result<GroupElement> {
        let mut base = if k < 0 { self.inv(a)? } else { a.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base)?;
            }
        }
        Ok(acc)
    }

    /// `a b a⁻¹ b⁻¹`
    pub fn commutator(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        let ab = self.mul(a, b)?;
        let ba = self.mul(b, a)?;
        self.mul(&ab, &self.inv(&ba)?)
    }

    /// Evaluates a word over [`generator_names`](Self::generator_names).
    pub fn evaluate(&self, w: &Word) -> Result<GroupElement> {
        self.evaluate_with(w, |i| self.generator(i))
    }

    /// Evaluates a word whose generators are sent to the given elements.
    pub fn evaluate_with(
        &self,
        w: &Word,
        image: impl Fn(usize) -> Result<GroupElement>,
    ) -> Result<GroupElement> {
        let mut acc = self.identity();
        for &(g, k) in &w.0 {
            let x = self.pow(&image(g)?, k)?;
            acc = self.mul(&acc, &x)?;
        }
        Ok(acc)
    }

    /// Parses and evaluates a word like `u v u^-1 x^3`.
    pub fn evaluate_word(&self, s: &str) -> Result<GroupElement> {
        self.evaluate(&parse_word(s, &self.generator_names())?)
    }

    pub fn is_torsion(&self, a: &GroupElement) -> Result<bool> {
        self.check(a)?;
        Ok(match a.q.order() {
            None => false,
            Some(1) => a.t.is_zero(),
            Some(k) => self.pow(a, i64::from(k))?.t.is_zero(),
        })
    }

    /// Searches the odd-length cosets of a `Dinf` extension for an element of
    /// order 2. The coset of `ŵ` holds one iff `-s(w) ∈ Im(I + ρ(w))`, where
    /// `ŵ² = s(w)`.
    pub fn find_torsion(&self, max_word_len: usize) -> Result<Option<GroupElement>> {
        if self.kind != QuotientKind::Dinf {
            return Err(Error::UnsupportedKind { op: "find_torsion", kind: self.kind.to_string() });
        }
        let id = IntMatrix::identity(self.rank);
        for len in (1..=max_word_len).step_by(2) {
            for first in 0..2u8 {
                let w = QuotientWord::Dinf { first, len };
                let h = GroupElement::new(IntVector::zeros(self.rank), w.clone());
                let s = self.mul(&h, &h)?.t;
                let m = &id + &self.action_of(&w);
                if let Some(t) = solve_integer(&m, &(-&s))? {
                    return Ok(Some(GroupElement::new(t, w)));
                }
            }
        }
        Ok(None)
    }

    /// Renders an element as a word: lattice part first, then the quotient word.
    pub fn render(&self, a: &GroupElement) -> String {
        let mut parts: Vec<String> = a
            .t
            .iter()
            .zip(&self.lattice_names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, name)| if c.is_one() { name.clone() } else { format!("{name}^{c}") })
            .collect();
        if !a.q.is_identity() {
            parts.push(a.q.render(&self.quotient_names));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }

    /// Word spelling a lattice vector.
    pub fn lattice_word(&self, t: &IntVector) -> Word {
        let m = self.quotient_names.len();
        Word(
            t.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (m + i, i64::try_from(c).expect("lattice coefficient fits i64")))
                .collect(),
        )
    }

    /// The presentation read off from the extension data: lattice
    /// commutators, the conjugation action of each quotient generator, the
    /// square of each involution, and the lifted relations of the quotient.
    pub fn defining_presentation(&self) -> FpPresentation {
        let m = self.quotient_names.len();
        let n = self.rank;
        let mut p = FpPresentation {
            generators: self.generator_names(),
            relators: Vec::new(),
        };
        let e = |i: usize| m + i;
        for i in 0..n {
            for j in i + 1..n {
                p.relators.push(Word(vec![(e(i), 1), (e(j), 1), (e(i), -1), (e(j), -1)]));
            }
        }
        for g in 0..m {
            for i in 0..n {
                let lhs = Word(vec![(g, 1), (e(i), 1), (g, -1)]);
                let rhs = self.lattice_word(&self.actions[g].column(i));
                p.relators.push(lhs.concat(&rhs.inverse()));
            }
            if let Some(s) = &self.squares[g] {
                p.relators.push(Word(vec![(g, 2)]).concat(&self.lattice_word(s).inverse()));
            }
        }
        match self.kind {
            QuotientKind::Klein => p.relators.push(Word(vec![(0, 1), (1, 1), (0, -1), (1, 1)])),
            QuotientKind::ZxC2 => {
                let c = self.commutator.as_ref().expect("ZxC2 commutator");
                let lhs = Word(vec![(0, 1), (1, 1), (0, -1), (1, -1)]);
                p.relators.push(lhs.concat(&self.lattice_word(c).inverse()));
            }
            _ => {}
        }
        p
    }

    /// Lattice coordinates plus quotient exponent sums: the image of an
    /// element in the abelianization of the free group on the generators.
    pub fn exponent_vector(&self, a: &GroupElement) -> Vec<BigInt> {
        let m = self.quotient_names.len();
        let mut exps = vec![BigInt::zero(); m];
        for l in a.q.letters() {
            if l.inverse {
                exps[l.gen] -= 1;
            } else {
                exps[l.gen] += 1;
            }
        }
        exps.extend(a.t.iter().cloned());
        exps
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dinf_zero() -> ExtensionGroup {
        ExtensionGroup::builder(QuotientKind::Dinf, 0).build().unwrap()
    }

    fn g2() -> ExtensionGroup {
        ExtensionGroup::builder(QuotientKind::Zq, 2)
            .quotient_names(&["u"])
            .lattice_names(&["s", "t"])
            .action(0, IntMatrix::diag(&[-1, -1]))
            .build()
            .unwrap()
    }

    fn pillowcase() -> ExtensionGroup {
        let a = IntMatrix::from_i64(&[[3, 2], [-4, -3]]);
        ExtensionGroup::builder(QuotientKind::Dinf, 3)
            .lattice_names(&["x", "y", "z"])
            .action(0, IntMatrix::block_diag(&a, &IntMatrix::diag(&[-1])))
            .action(1, IntMatrix::diag(&[1, -1, -1]))
            .square(0, IntVector::from_i64(&[1, -1, 0]))
            .square(1, IntVector::from_i64(&[1, 0, 0]))
            .axis_signs(&[-1, -1])
            .build()
            .unwrap()
    }

    #[test]
    fn squares_of_section_letters() {
        let g = pillowcase();
        let u = g.quotient_generator(0);
        let v = g.quotient_generator(1);
        let uu = g.mul(&u, &u).unwrap();
        assert_eq!(uu, g.lattice_element(IntVector::from_i64(&[1, -1, 0])).unwrap());
        assert_eq!(g.render(&uu), "x y^-1");
        let vv = g.mul(&v, &v).unwrap();
        assert_eq!(g.render(&vv), "x");
    }

    #[test]
    fn inverse_and_identity() {
        let g = pillowcase();
        let a = g.evaluate_word("x^2 u v y^-3 u").unwrap();
        let b = g.inv(&a).unwrap();
        assert!(g.mul(&a, &b).unwrap().is_identity());
        assert!(g.mul(&b, &a).unwrap().is_identity());
        let e = g.identity();
        assert_eq!(g.mul(&e, &a).unwrap(), a);
        assert_eq!(g.inv(&e).unwrap(), e);
    }

    #[test]
    fn word_evaluation_is_a_power() {
        let g = pillowcase();
        let uv = g.evaluate_word("u v").unwrap();
        assert_eq!(g.evaluate_word("u v u v").unwrap(), g.pow(&uv, 2).unwrap());
        assert_eq!(g.evaluate_word("u^-1").unwrap(), g.inv(&g.quotient_generator(0)).unwrap());
    }

    #[test]
    fn defining_relators_hold() {
        for g in [pillowcase(), g2(), dinf_zero()] {
            let p = g.defining_presentation();
            for r in &p.relators {
                assert!(g.evaluate(r).unwrap().is_identity(), "{}", r.render(&p.generators));
            }
        }
    }

    #[test]
    fn torsion_checks() {
        let g = pillowcase();
        assert!(!g.is_torsion(&g.quotient_generator(0)).unwrap());
        assert!(!g.is_torsion(&g.lattice_element(IntVector::from_i64(&[5, 7, 0])).unwrap()).unwrap());
        assert!(g.is_torsion(&g.identity()).unwrap());
        assert_eq!(g.find_torsion(7).unwrap(), None);

        let split = g.with_square(0, IntVector::zeros(3)).unwrap();
        let w = split.find_torsion(7).unwrap().unwrap();
        assert_eq!(split.render(&w), "u");
        assert!(split.is_torsion(&w).unwrap());

        let half = g.with_square(1, IntVector::zeros(3)).unwrap();
        let w = half.find_torsion(7).unwrap().unwrap();
        assert_eq!(w.q, QuotientWord::Dinf { first: 1, len: 1 });
    }

    #[test]
    fn find_torsion_needs_dinf() {
        assert!(matches!(g2().find_torsion(3), Err(Error::UnsupportedKind { .. })));
    }

    #[test]
    fn rejects_incompatible_square() {
        let r = ExtensionGroup::builder(QuotientKind::C2, 1)
            .action(0, IntMatrix::diag(&[-1]))
            .square(0, IntVector::from_i64(&[1]))
            .build();
        assert!(matches!(r, Err(Error::InconsistentExtension(_))));
    }

    #[test]
    fn klein_normal_form() {
        let psi = IntMatrix::from_i64(&[[3, 2], [4, 3]]);
        let g = ExtensionGroup::builder(QuotientKind::Klein, 2)
            .lattice_names(&["a", "b"])
            .action(0, IntMatrix::diag(&[1, -1]))
            .action(1, psi)
            .build()
            .unwrap();
        let lhs = g.evaluate_word("x y x^-1").unwrap();
        let rhs = g.evaluate_word("y^-1").unwrap();
        assert_eq!(lhs, rhs);
        let x2 = g.evaluate_word("x^2").unwrap();
        let y = g.evaluate_word("y").unwrap();
        assert!(g.commutator(&x2, &y).unwrap().is_identity());
    }
}
