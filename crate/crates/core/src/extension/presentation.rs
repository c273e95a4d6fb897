use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form, CokernelInvariants, IntMatrix};

/// A word in the free group, as `(generator index, exponent)` syllables.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Word(pub Vec<(usize, i64)>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&(g, k)| (g, -k)).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Exponent sum of each of `n` generators.
    pub fn exponent_sums(&self, n: usize) -> Vec<i64> {
        let mut sums = vec![0; n];
        for &(g, k) in &self.0 {
            sums[g] += k;
        }
        sums
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|&(g, k)| {
                if k == 1 {
                    names[g].clone()
                } else {
                    format!("{}^{}", names[g], k)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Parses a word such as `u x u^-1 y^4`. Syllables are separated by
/// whitespace or `*`; when every generator name is a single character,
/// juxtaposition (`uxu^-1`) is accepted too. `1` denotes the empty word.
pub fn parse_word(s: &str, names: &[String]) -> Result<Word> {
    let single_char = names.iter().all(|n| n.chars().count() == 1);
    let mut out = Vec::new();
    for token in s.split(|c: char| c.is_whitespace() || c == '*' || c == '·') {
        if token.is_empty() || token == "1" {
            continue;
        }
        let mut rest = token;
        while !rest.is_empty() {
            let name_len = if single_char {
                rest.chars().next().map_or(0, char::len_utf8)
            } else {
                rest.find('^').unwrap_or(rest.len())
            };
            let name = &rest[..name_len];
            let gen = names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            rest = &rest[name_len..];
            let mut exp = 1i64;
            if let Some(after) = rest.strip_prefix('^') {
                let end = after
                    .char_indices()
                    .find(|&(i, c)| !(c.is_ascii_digit() || (i == 0 && c == '-')))
                    .map_or(after.len(), |(i, _)| i);
                exp = after[..end]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {token:?}")))?;
                rest = &after[end..];
            }
            if exp != 0 {
                out.push((gen, exp));
            }
        }
    }
    Ok(Word(out))
}

/// Parses `lhs = rhs` into the relator `lhs rhs⁻¹`, or a bare relator word.
pub fn parse_relation(s: &str, names: &[String]) -> Result<Word> {
    match s.split_once('=') {
        Some((lhs, rhs)) => Ok(parse_word(lhs, names)?.concat(&parse_word(rhs, names)?.inverse())),
        None => parse_word(s, names),
    }
}

/// A finite presentation: named generators and relator words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl FpPresentation {
    pub fn new(generators: &[&str]) -> Self {
        FpPresentation {
            generators: generators.iter().map(|s| s.to_string()).collect(),
            relators: Vec::new(),
        }
    }

    /// Builds a presentation from relation strings like `u x u^-1 = x^3 y^-4`.
    pub fn from_relations(generators: &[&str], relations: &[&str]) -> Result<Self> {
        let mut p = FpPresentation::new(generators);
        for r in relations {
            p.add_relation(r)?;
        }
        Ok(p)
    }

    pub fn add_relation(&mut self, s: &str) -> Result<()> {
        let w = parse_relation(s, &self.generators)?;
        self.relators.push(w);
        Ok(())
    }

    pub fn add_relator(&mut self, w: Word) -> Result<()> {
        if let Some(&(g, _)) = w.0.iter().find(|&&(g, _)| g >= self.generators.len()) {
            return Err(Error::UnknownGenerator(format!("#{g}")));
        }
        self.relators.push(w);
        Ok(())
    }

    pub fn generator_index(&self, name: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn parse_word(&self, s: &str) -> Result<Word> {
        parse_word(s, &self.generators)
    }

    /// Relator rows of exponent sums, one row per relator.
    pub fn relation_matrix(&self) -> IntMatrix {
        let n = self.generators.len();
        let rows: Vec<Vec<i64>> = self.relators.iter().map(|r| r.exponent_sums(n)).collect();
        if rows.is_empty() {
            return IntMatrix::zeros(0, n);
        }
        IntMatrix::from_i64(&rows)
    }

    pub fn abelianize(&self) -> Abelianization {
        Abelianization::of(self)
    }
}

impl fmt::Display for FpPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| r.render(&self.generators))
            .collect();
        write!(f, "⟨{} | {}⟩", self.generators.join(", "), rels.join(", "))
    }
}

/// `H_1 = Z^gens / (relator rows)` in Smith coordinates.
///
/// Each nontrivial cyclic factor has a modulus (`0` for a free `Z` factor),
/// every generator has a coordinate vector in the factors, and every factor
/// has a lift to an exponent vector over the generators.
#[derive(Clone, Debug)]
pub struct Abelianization {
    pub generators: Vec<String>,
    pub invariants: CokernelInvariants,
    moduli: Vec<BigInt>,
    /// `coords[j][i]`: coordinate of generator `j` in factor `i`.
    coords: Vec<Vec<BigInt>>,
    /// `lifts[i][j]`: exponent of generator `j` in a lift of factor `i`'s generator.
    lifts: Vec<Vec<BigInt>>,
}

impl Abelianization {
    pub fn of(p: &FpPresentation) -> Self {
        let g = p.generators.len();
        // H_1 = coker(R^T : Z^relators -> Z^gens)
        let a = p.relation_matrix().transpose();
        let snf = smith_normal_form(&a);
        let diag = snf.diagonal();
        let p_inv = snf.p.inverse().expect("Smith transforms are unimodular");

        let mut moduli = Vec::new();
        let mut keep = Vec::new();
        for i in 0..g {
            let d = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
            if !d.is_one() {
                moduli.push(d);
                keep.push(i);
            }
        }
        let coords = (0..g)
            .map(|j| {
                keep.iter()
                    .zip(&moduli)
                    .map(|(&i, d)| reduce(&snf.p[(i, j)], d))
                    .collect()
            })
            .collect();
        let lifts = keep
            .iter()
            .map(|&i| (0..g).map(|j| p_inv[(j, i)].clone()).collect())
            .collect();

        let free_rank = moduli.iter().filter(|d| d.is_zero()).count();
        let mut torsion: Vec<BigInt> = moduli.iter().filter(|d| !d.is_zero()).cloned().collect();
        torsion.sort();
        Abelianization {
            generators: p.generators.clone(),
            invariants: CokernelInvariants { free_rank, torsion },
            moduli,
            coords,
            lifts,
        }
    }

    pub fn rank(&self) -> usize {
        self.invariants.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.invariants.torsion
    }

    /// Moduli of the nontrivial cyclic factors, `0` meaning `Z`.
    pub fn moduli(&self) -> &[BigInt] {
        &self.moduli
    }

    /// Coordinates of an exponent vector over the generators.
    pub fn class_of_exponents(&self, exps: &[BigInt]) -> Vec<BigInt> {
        (0..self.moduli.len())
            .map(|i| {
                let raw: BigInt = exps
                    .iter()
                    .zip(&self.coords)
                    .map(|(e, c)| e * &c[i])
                    .sum();
                reduce(&raw, &self.moduli[i])
            })
            .collect()
    }

    pub fn generator_class(&self, j: usize) -> Vec<BigInt> {
        self.coords[j].clone()
    }

    /// Order of a class; `None` when infinite.
    pub fn class_order(&self, class: &[BigInt]) -> Option<BigInt> {
        let mut order = BigInt::one();
        for (c, d) in class.iter().zip(&self.moduli) {
            if c.is_zero() {
                continue;
            }
            if d.is_zero() {
                return None;
            }
            order = order.lcm(&(d / c.gcd(d)));
        }
        Some(order)
    }

    pub fn generator_order(&self, j: usize) -> Option<BigInt> {
        self.class_order(&self.coords[j])
    }

    /// Exponent vector (over the generators) lifting factor `i`'s generator.
    pub fn factor_lift(&self, i: usize) -> &[BigInt] {
        &self.lifts[i]
    }

    /// Free-part coordinates of a class (one entry per `Z` factor).
    pub fn free_part(&self, class: &[BigInt]) -> Vec<BigInt> {
        class
            .iter()
            .zip(&self.moduli)
            .filter(|(_, d)| d.is_zero())
            .map(|(c, _)| c.clone())
            .collect()
    }

    pub fn summary(&self) -> AbelianSummary {
        AbelianSummary {
            rank: self.rank(),
            torsion: self.torsion().iter().map(|t| t.to_i64().unwrap_or(i64::MAX)).collect(),
        }
    }
}

/// JSON form `{"rank": 0, "torsion": [2, 4, 4]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianSummary {
    pub rank: usize,
    pub torsion: Vec<i64>,
}

fn reduce(x: &BigInt, d: &BigInt) -> BigInt {
    if d.is_zero() {
        x.clone()
    } else {
        x.mod_floor(&d.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(ns: &[&str]) -> Vec<String> {
        ns.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parse_spaced_and_juxtaposed() {
        let n = names(&["u", "x", "y"]);
        let a = parse_word("u x u^-1 y^4", &n).unwrap();
        let b = parse_word("uxu^-1y^4", &n).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.0, vec![(0, 1), (1, 1), (0, -1), (2, 4)]);
        assert_eq!(parse_word("1", &n).unwrap(), Word::empty());
        assert!(matches!(parse_word("q", &n), Err(Error::UnknownGenerator(_))));
    }

    #[test]
    fn multi_char_names() {
        let n = names(&["e1", "e2", "t"]);
        let w = parse_word("e1^2 t^-3 e2", &n).unwrap();
        assert_eq!(w.render(&n), "e1^2 t^-3 e2");
    }

    #[test]
    fn relation_to_relator() {
        let n = names(&["u", "x", "y"]);
        let r = parse_relation("u x u^-1 = x^3 y^-4", &n).unwrap();
        assert_eq!(r.exponent_sums(3), vec![0, -2, 4]);
    }

    #[test]
    fn infinite_dihedral_abelianization() {
        let p = FpPresentation::from_relations(&["u", "v"], &["u^2", "v^2"]).unwrap();
        let ab = p.abelianize();
        assert_eq!(ab.summary(), AbelianSummary { rank: 0, torsion: vec![2, 2] });
        assert_eq!(ab.generator_order(0), Some(BigInt::from(2)));
    }

    #[test]
    fn free_abelian_orders() {
        let p = FpPresentation::from_relations(&["a", "b"], &["a b a^-1 b^-1"]).unwrap();
        let ab = p.abelianize();
        assert_eq!(ab.rank(), 2);
        assert_eq!(ab.generator_order(0), None);
    }

    #[test]
    fn lifts_map_back_to_factor_generators() {
        let p = FpPresentation::from_relations(&["a", "b", "c"], &["a^2 b^-2", "c^4 a^2", "b^6"])
            .unwrap();
        let ab = p.abelianize();
        for i in 0..ab.moduli().len() {
            let class = ab.class_of_exponents(ab.factor_lift(i));
            for (k, c) in class.iter().enumerate() {
                let expected = if k == i { BigInt::one() } else { BigInt::zero() };
                assert_eq!(reduce(c, &ab.moduli()[k]), reduce(&expected, &ab.moduli()[k]));
            }
        }
    }
}
