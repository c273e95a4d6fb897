use std::fmt;

use serde::{Deserialize, Serialize};

/// The virtually-cyclic (or Klein bottle) quotients `Q` in `1 → Z^n → π → Q → 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuotientKind {
    Trivial,
    /// Order 2, generator `g`.
    C2,
    /// Infinite cyclic, generator `t`.
    Zq,
    /// `Z × Z/2`, generators `t` (infinite) and `g` (order 2).
    ZxC2,
    /// `⟨u, v | u² = v² = 1⟩`.
    Dinf,
    /// `⟨x, y | x y x⁻¹ = y⁻¹⟩`.
    Klein,
}

impl QuotientKind {
    pub fn generator_count(self) -> usize {
        match self {
            QuotientKind::Trivial => 0,
            QuotientKind::C2 | QuotientKind::Zq => 1,
            QuotientKind::ZxC2 | QuotientKind::Dinf | QuotientKind::Klein => 2,
        }
    }

    pub fn default_names(self) -> &'static [&'static str] {
        match self {
            QuotientKind::Trivial => &[],
            QuotientKind::C2 => &["g"],
            QuotientKind::Zq => &["t"],
            QuotientKind::ZxC2 => &["t", "g"],
            QuotientKind::Dinf => &["u", "v"],
            QuotientKind::Klein => &["x", "y"],
        }
    }

    /// Whether quotient generator `i` has order 2 (and so carries a square cocycle).
    pub fn is_involution(self, i: usize) -> bool {
        matches!(
            (self, i),
            (QuotientKind::C2, 0) | (QuotientKind::ZxC2, 1) | (QuotientKind::Dinf, _)
        )
    }

    pub fn identity(self) -> QuotientWord {
        match self {
            QuotientKind::Trivial => QuotientWord::Trivial,
            QuotientKind::C2 => QuotientWord::C2(false),
            QuotientKind::Zq => QuotientWord::Zq(0),
            QuotientKind::ZxC2 => QuotientWord::ZxC2(0, false),
            QuotientKind::Dinf => QuotientWord::Dinf { first: 0, len: 0 },
            QuotientKind::Klein => QuotientWord::Klein(0, 0),
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s.to_ascii_lowercase().as_str() {
            "trivial" => QuotientKind::Trivial,
            "c2" => QuotientKind::C2,
            "zq" | "z" => QuotientKind::Zq,
            "zxc2" => QuotientKind::ZxC2,
            "dinf" => QuotientKind::Dinf,
            "klein" | "kb" => QuotientKind::Klein,
            _ => return None,
        })
    }
}

impl fmt::Display for QuotientKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A quotient element in its kind's normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum QuotientWord {
    Trivial,
    /// `g^e`
    C2(bool),
    /// `t^k`
    Zq(i64),
    /// `t^k g^e`
    ZxC2(i64, bool),
    /// Alternating word of length `len` starting with generator `first` (0 = u, 1 = v).
    /// The empty word is stored with `first = 0`.
    Dinf { first: u8, len: usize },
    /// `x^a y^b`
    Klein(i64, i64),
}

/// A generator of the quotient or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize, inverse: bool) -> Self {
        Letter { gen, inverse }
    }
}

fn repeat(gen: usize, k: i64) -> impl Iterator<Item = Letter> {
    std::iter::repeat_n(Letter::new(gen, k < 0), k.unsigned_abs() as usize)
}

impl QuotientWord {
    pub fn is_identity(&self) -> bool {
        match *self {
            QuotientWord::Trivial => true,
            QuotientWord::C2(e) => !e,
            QuotientWord::Zq(k) => k == 0,
            QuotientWord::ZxC2(k, e) => k == 0 && !e,
            QuotientWord::Dinf { len, .. } => len == 0,
            QuotientWord::Klein(a, b) => a == 0 && b == 0,
        }
    }

    /// The letters whose product is the chosen section of this element.
    pub fn letters(&self) -> Vec<Letter> {
        match *self {
            QuotientWord::Trivial => Vec::new(),
            QuotientWord::C2(e) => repeat(0, i64::from(e)).collect(),
            QuotientWord::Zq(k) => repeat(0, k).collect(),
            QuotientWord::ZxC2(k, e) => repeat(0, k).chain(repeat(1, i64::from(e))).collect(),
            QuotientWord::Dinf { first, len } => (0..len)
                .map(|i| Letter::new((usize::from(first) + i) % 2, false))
                .collect(),
            QuotientWord::Klein(a, b) => repeat(0, a).chain(repeat(1, b)).collect(),
        }
    }

    /// Order in the quotient, `None` for infinite.
    pub fn order(&self) -> Option<u32> {
        if self.is_identity() {
            return Some(1);
        }
        match *self {
            QuotientWord::C2(_) => Some(2),
            QuotientWord::ZxC2(0, true) => Some(2),
            QuotientWord::Dinf { len, .. } if len % 2 == 1 => Some(2),
            _ => None,
        }
    }

    /// Whether the element is central in the quotient group.
    pub fn is_central(&self) -> bool {
        match *self {
            QuotientWord::Trivial | QuotientWord::C2(_) | QuotientWord::Zq(_) => true,
            QuotientWord::ZxC2(..) => true,
            QuotientWord::Dinf { len, .. } => len == 0,
            QuotientWord::Klein(a, b) => a % 2 == 0 && b == 0,
        }
    }

    /// Renders the normal form with the group's generator names, `1` for the identity.
    pub fn render(&self, names: &[String]) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut push = |gen: usize, k: i64| {
            if k == 0 {
                return;
            }
            if k == 1 {
                parts.push(names[gen].clone());
            } else {
                parts.push(format!("{}^{}", names[gen], k));
            }
        };
        match *self {
            QuotientWord::Trivial => {}
            QuotientWord::C2(e) => push(0, i64::from(e)),
            QuotientWord::Zq(k) => push(0, k),
            QuotientWord::ZxC2(k, e) => {
                push(0, k);
                push(1, i64::from(e));
            }
            QuotientWord::Dinf { .. } => {
                for l in self.letters() {
                    push(l.gen, 1);
                }
            }
            QuotientWord::Klein(a, b) => {
                push(0, a);
                push(1, b);
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }

    pub fn kind(&self) -> QuotientKind {
        match self {
            QuotientWord::Trivial => QuotientKind::Trivial,
            QuotientWord::C2(_) => QuotientKind::C2,
            QuotientWord::Zq(_) => QuotientKind::Zq,
            QuotientWord::ZxC2(..) => QuotientKind::ZxC2,
            QuotientWord::Dinf { .. } => QuotientKind::Dinf,
            QuotientWord::Klein(..) => QuotientKind::Klein,
        }
    }
}
