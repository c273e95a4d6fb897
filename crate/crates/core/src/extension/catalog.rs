//! Named groups, and the JSON description format for extension data.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use super::group::{ExtensionGroup, GroupElement};
use super::presentation::FpPresentation;
use super::quotient::QuotientKind;
use crate::classifier::{self, PillowcaseInvariant};
use crate::error::{Error, Result};
use crate::gl2z::{element_order, ElementOrder};
use crate::linalg::{int_from_json, int_to_json, IntMatrix, IntVector};

/// A named group with whatever extra structure the catalog knows about it.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub group: ExtensionGroup,
    /// Fundamental group of a closed `Sol³×E¹`-manifold.
    pub sol_e1: bool,
    /// Seifert fibred over the pillowcase orbifold.
    pub pillowcase: bool,
    /// A presentation on the group's customary generators, when it differs
    /// from the defining presentation of the extension data.
    pub presentation: Option<FpPresentation>,
    pub notes: Vec<String>,
}

impl CatalogEntry {
    fn new(id: impl Into<String>, group: ExtensionGroup) -> Self {
        CatalogEntry {
            id: id.into(),
            group,
            sol_e1: false,
            pillowcase: false,
            presentation: None,
            notes: Vec::new(),
        }
    }
}

pub const SIGMA_NOTE: &str = "uses the relation u y u^-1 = y^-1; with u y u^-1 = y instead, \
     uv acts on <x,y> with finite order and the group is not a Sol^3-group";

/// The catalog identifiers. Parametrized ones take a matrix literal or a
/// triple, e.g. `pillowcase(3,2,4)` or `bordered((1,0),(3,2;4,3))`.
pub const CATALOG_IDS: &[&str] = &[
    "Dinf",
    "G2",
    "B1",
    "B1-sd-theta",
    "sigma-sec4",
    "sigma-times-z",
    "sigma-sd-f",
    "kb-monodromy(3,2;4,3)",
    "bordered((1,0),(3,2;4,3))",
    "pillowcase(3,2,4)",
];

fn default_psi() -> IntMatrix {
    IntMatrix::from_i64(&[[3, 2], [4, 3]])
}

fn v(xs: &[i64]) -> IntVector {
    IntVector::from_i64(xs)
}

pub fn lookup(id: &str) -> Result<CatalogEntry> {
    let id = id.trim();
    let (name, args) = match id.find('(') {
        Some(i) if id.ends_with(')') => (&id[..i], Some(&id[i + 1..id.len() - 1])),
        Some(_) => return Err(Error::UnknownCatalog(id.to_string())),
        None => (id, None),
    };
    let no_args = |entry: CatalogEntry| match args {
        None => Ok(entry),
        Some(_) => Err(Error::UnknownCatalog(id.to_string())),
    };
    match name.to_ascii_lowercase().as_str() {
        "dinf" => no_args(dinf()),
        "g2" => no_args(g2()),
        "b1" => no_args(b1()),
        "b1-sd-theta" => no_args(b1_sd_theta()),
        "sigma-sec4" | "sigma" => no_args(sigma()),
        "sigma-times-z" => no_args(sigma_times_z()),
        "sigma-sd-f" => no_args(sigma_sd_f()),
        "kb-monodromy" => {
            let psi = match args {
                Some(a) => parse_matrix_arg(a)?,
                None => default_psi(),
            };
            kb_monodromy(&psi)
        }
        "bordered" => {
            let (xi, psi) = match args {
                Some(a) => {
                    let parts = split_top_level(a);
                    if parts.len() != 2 {
                        return Err(Error::Parse(format!("bordered takes (ξ, Ψ), got `{a}`")));
                    }
                    let xi: IntVector = strip_parens(parts[0]).parse()?;
                    (xi, parse_matrix_arg(parts[1])?)
                }
                None => (v(&[1, 0]), default_psi()),
            };
            bordered(&xi, &psi)
        }
        "pillowcase" => {
            let inv = match args {
                Some(a) => parse_invariant_arg(a)?,
                None => classifier::validate(&default_psi())?,
            };
            pillowcase(&inv)
        }
        _ => Err(Error::UnknownCatalog(id.to_string())),
    }
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s).trim()
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(s[start..].trim());
    parts
}

fn parse_matrix_arg(s: &str) -> Result<IntMatrix> {
    strip_parens(s).parse()
}

/// `p,q,r` or a matrix literal; a matrix is normalized first.
pub fn parse_invariant_arg(s: &str) -> Result<PillowcaseInvariant> {
    let s = strip_parens(s);
    if s.contains(';') {
        return classifier::normalize(&s.parse()?);
    }
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!("expected p,q,r or a 2x2 matrix literal, got `{s}`")));
    }
    let n: Vec<i64> = parts
        .iter()
        .map(|x| x.parse().map_err(|_| Error::Parse(format!("bad integer `{x}`"))))
        .collect::<Result<_>>()?;
    classifier::validate(&IntMatrix::from_i64(&[[n[0], n[1]], [n[2], n[0]]]))
}

/// `D_∞ = ⟨u, v | u² = v² = 1⟩` as an extension with zero lattice.
pub fn dinf() -> CatalogEntry {
    let g = ExtensionGroup::builder(QuotientKind::Dinf, 0).build().expect("valid");
    CatalogEntry::new("Dinf", g)
}

/// `Z² ⋊_{−I} Z`.
pub fn g2() -> CatalogEntry {
    let g = ExtensionGroup::builder(QuotientKind::Zq, 2)
        .quotient_names(&["u"])
        .lattice_names(&["s", "t"])
        .action(0, IntMatrix::diag(&[-1, -1]))
        .axis_signs(&[1])
        .build()
        .expect("valid");
    CatalogEntry::new("G2", g)
}

/// `⟨t, x, y | tx = xt, ty = yt, x y x⁻¹ = y⁻¹⟩`.
pub fn b1_presentation() -> FpPresentation {
    FpPresentation::from_relations(&["t", "x", "y"], &["t x = x t", "t y = y t", "x y x^-1 = y^-1"])
        .expect("valid")
}

/// `Z × Kb`, remodeled over the index-2 lattice `⟨t, w = x², y⟩`.
pub fn b1() -> CatalogEntry {
    let g = ExtensionGroup::builder(QuotientKind::C2, 3)
        .quotient_names(&["x"])
        .lattice_names(&["t", "w", "y"])
        .action(0, IntMatrix::diag(&[1, 1, -1]))
        .square(0, v(&[0, 1, 0]))
        .axis_signs(&[-1])
        .build()
        .expect("valid");
    let mut e = CatalogEntry::new("B1", g);
    e.presentation = Some(b1_presentation());
    e
}

/// Images of the generators `t, x, y` of [`b1_presentation`] in [`b1`]
/// under the identification, and under `θ(t) = t³x²`, `θ(x) = t⁴x³`, `θ(y) = y`.
pub fn b1_images(g: &ExtensionGroup) -> Result<(BTreeMap<String, GroupElement>, BTreeMap<String, GroupElement>)> {
    let plain = images(g, &[("t", "t"), ("x", "x"), ("y", "y")])?;
    let theta = images(g, &[("t", "t^3 x^2"), ("x", "t^4 x^3"), ("y", "y")])?;
    Ok((plain, theta))
}

/// `B₁ ⋊_θ Z` with the stable letter `s`.
pub fn b1_sd_theta() -> CatalogEntry {
    let g = ExtensionGroup::builder(QuotientKind::ZxC2, 3)
        .quotient_names(&["s", "x"])
        .lattice_names(&["t", "w", "y"])
        .action(0, IntMatrix::from_i64(&[[3, 8, 0], [1, 3, 0], [0, 0, 1]]))
        .action(1, IntMatrix::diag(&[1, 1, -1]))
        .square(1, v(&[0, 1, 0]))
        .commutator(v(&[4, 1, 0]))
        .axis_signs(&[1, -1])
        .build()
        .expect("valid");
    let mut e = CatalogEntry::new("B1-sd-theta", g);
    e.sol_e1 = true;
    e
}

fn sigma_v() -> IntMatrix {
    IntMatrix::from_i64(&[[17, 24], [-12, -17]])
}

/// `⟨x, y, u, v | xy = yx, u² = x, u y u⁻¹ = y⁻¹, v² = x³y⁻², v x v⁻¹ = x¹⁷y⁻¹², v y v⁻¹ = x²⁴y⁻¹⁷⟩`.
pub fn sigma_presentation() -> FpPresentation {
    FpPresentation::from_relations(
        &["x", "y", "u", "v"],
        &[
            "x y = y x",
            "u^2 = x",
            "u y u^-1 = y^-1",
            "v^2 = x^3 y^-2",
            "v x v^-1 = x^17 y^-12",
            "v y v^-1 = x^24 y^-17",
        ],
    )
    .expect("valid")
}

pub fn sigma() -> CatalogEntry {
    let g = ExtensionGroup::builder(QuotientKind::Dinf, 2)
        .lattice_names(&["x", "y"])
        .action(0, IntMatrix::diag(&[1, -1]))
        .action(1, sigma_v())
        .square(0, v(&[1, 0]))
        .square(1, v(&[3, -2]))
        .axis_signs(&[-1, -1])
        .build()
        .expect("valid");
    let mut e = CatalogEntry::new("sigma-sec4", g);
    e.presentation = Some(sigma_presentation());
    e.notes.push(SIGMA_NOTE.to_string());
    e
}

/// Order of the `uv` action when `u` acts trivially on `⟨x, y⟩`.
pub fn sigma_uncorrected_uv_order() -> ElementOrder {
    element_order(&sigma_v()).expect("unimodular")
}

/// The involution `f(u) = v`, `f(v) = u`, `f(y) = x⁴y⁻³`, with the forced
/// value `f(x) = f(u)² = v² = x³y⁻²`.
pub fn sigma_automorphism(g: &ExtensionGroup) -> Result<BTreeMap<String, GroupElement>> {
    images(g, &[("u", "v"), ("v", "u"), ("x", "x^3 y^-2"), ("y", "x^4 y^-3")])
}

/// `σ × Z`.
pub fn sigma_times_z() -> CatalogEntry {
    let g = ExtensionGroup::builder(QuotientKind::Dinf, 3)
        .lattice_names(&["x", "y", "w"])
        .action(0, IntMatrix::diag(&[1, -1, 1]))
        .action(1, IntMatrix::block_diag(&sigma_v(), &IntMatrix::identity(1)))
        .square(0, v(&[1, 0, 0]))
        .square(1, v(&[3, -2, 0]))
        .axis_signs(&[-1, -1])
        .build()
        .expect("valid");
    let mut e = CatalogEntry::new("sigma-times-z", g);
    e.sol_e1 = true;
    e.notes.push(SIGMA_NOTE.to_string());
    e
}

/// `σ ⋊_f Z`: with stable letter `s`, `v = s u s⁻¹` and `w = s²` is central.
pub fn sigma_sd_f() -> CatalogEntry {
    let p = IntMatrix::from_i64(&[[3, 4], [-2, -3]]);
    let g = ExtensionGroup::builder(QuotientKind::Dinf, 3)
        .quotient_names(&["u", "s"])
        .lattice_names(&["x", "y", "w"])
        .action(0, IntMatrix::diag(&[1, -1, 1]))
        .action(1, IntMatrix::block_diag(&p, &IntMatrix::identity(1)))
        .square(0, v(&[1, 0, 0]))
        .square(1, v(&[0, 0, 1]))
        .axis_signs(&[-1, -1])
        .build()
        .expect("valid");
    let mut e = CatalogEntry::new("sigma-sd-f", g);
    e.sol_e1 = true;
    e.notes.push(SIGMA_NOTE.to_string());
    e
}

/// `Z² ⋊_θ π₁(Kb)` with `θ(x) = diag(1, −1)` and `θ(y) = Ψ`.
pub fn kb_monodromy(psi: &IntMatrix) -> Result<CatalogEntry> {
    let g = ExtensionGroup::builder(QuotientKind::Klein, 2)
        .lattice_names(&["a", "b"])
        .action(0, IntMatrix::diag(&[1, -1]))
        .action(1, psi.clone())
        .axis_signs(&[-1, 1])
        .build()?;
    let hyperbolic = matches!(element_order(psi)?, ElementOrder::Infinite);
    let mut e = CatalogEntry::new(format!("kb-monodromy({})", psi.to_literal()), g);
    e.sol_e1 = hyperbolic;
    Ok(e)
}

/// `Z³ ⋊_Θ Z` for the bordered matrix `Θ = [[1, 0], [ξ, Ψ]]`.
pub fn bordered(xi: &IntVector, psi: &IntMatrix) -> Result<CatalogEntry> {
    if xi.dim() != 2 || psi.rows() != 2 || psi.cols() != 2 {
        return Err(Error::DimensionMismatch("bordered takes ξ ∈ Z² and a 2x2 Ψ".into()));
    }
    let theta = bordered_matrix(xi, psi);
    super::analysis::split_bordered(&theta)?;
    let g = ExtensionGroup::builder(QuotientKind::Zq, 3)
        .lattice_names(&["z", "x", "y"])
        .action(0, theta)
        .axis_signs(&[1])
        .build()?;
    let mut e = CatalogEntry::new(format!("bordered(({},{}),({}))", xi[0], xi[1], psi.to_literal()), g);
    e.sol_e1 = true;
    Ok(e)
}

pub fn bordered_matrix(xi: &IntVector, psi: &IntMatrix) -> IntMatrix {
    let mut theta = IntMatrix::identity(3);
    for i in 0..2 {
        theta[(i + 1, 0)] = xi[i].clone();
        for j in 0..2 {
            theta[(i + 1, j + 1)] = psi[(i, j)].clone();
        }
    }
    theta
}

pub fn pillowcase(inv: &PillowcaseInvariant) -> Result<CatalogEntry> {
    let (presentation, g) = classifier::presentation_from_invariant(inv)?;
    let mut e = CatalogEntry::new(format!("pillowcase({},{},{})", inv.p, inv.q, inv.r), g);
    e.sol_e1 = true;
    e.pillowcase = true;
    e.presentation = Some(presentation);
    Ok(e)
}

/// Builds a generator-name → element map by evaluating words in `g`.
pub fn images(g: &ExtensionGroup, words: &[(&str, &str)]) -> Result<BTreeMap<String, GroupElement>> {
    words
        .iter()
        .map(|(name, w)| Ok((name.to_string(), g.evaluate_word(w)?)))
        .collect()
}

/// Reads a group description:
/// `{kind, rank, action: {gen: matrix}, cocycles: {gen: vector}, axisSigns: {gen: ±1}}`,
/// with optional `generators` and `lattice` name lists and a `commutator`
/// vector for `ZxC2`. Matrices may be arrays of arrays or literals like
/// `"3,2;4,3"`; vectors may be arrays or strings.
pub fn from_description(value: &Value) -> Result<ExtensionGroup> {
    let bad = |m: &str| Error::Parse(format!("group description: {m}"));
    let obj = value.as_object().ok_or_else(|| bad("expected an object"))?;
    let kind_str = obj.get("kind").and_then(Value::as_str).ok_or_else(|| bad("missing `kind`"))?;
    let kind = QuotientKind::parse(kind_str).ok_or_else(|| bad(&format!("unknown kind `{kind_str}`")))?;
    let rank = obj
        .get("rank")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing `rank`"))? as usize;
    if rank > 8 {
        return Err(bad("rank above 8 is not supported"));
    }

    let names_of = |key: &str| -> Result<Option<Vec<String>>> {
        match obj.get(key) {
            None => Ok(None),
            Some(Value::Array(xs)) => xs
                .iter()
                .map(|x| x.as_str().map(str::to_string).ok_or_else(|| bad(&format!("`{key}` must list strings"))))
                .collect::<Result<_>>()
                .map(Some),
            Some(_) => Err(bad(&format!("`{key}` must be an array"))),
        }
    };
    let mut b = ExtensionGroup::builder(kind, rank);
    let qnames: Vec<String> = names_of("generators")?
        .unwrap_or_else(|| kind.default_names().iter().map(|s| s.to_string()).collect());
    if let Some(l) = names_of("lattice")? {
        b = b.lattice_names(&l.iter().map(String::as_str).collect::<Vec<_>>());
    }
    b = b.quotient_names(&qnames.iter().map(String::as_str).collect::<Vec<_>>());
    let gen_index = |name: &str| {
        qnames
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    };

    let section = |key: &str| -> Result<Map<String, Value>> {
        match obj.get(key) {
            None => Ok(Map::new()),
            Some(Value::Object(m)) => Ok(m.clone()),
            Some(_) => Err(bad(&format!("`{key}` must be an object"))),
        }
    };
    for (name, m) in section("action")? {
        b = b.action(gen_index(&name)?, matrix_from_json(m)?);
    }
    for (name, s) in section("cocycles")? {
        b = b.square(gen_index(&name)?, vector_from_json(s)?);
    }
    if let Some(c) = obj.get("commutator") {
        b = b.commutator(vector_from_json(c.clone())?);
    }
    let signs = section("axisSigns")?;
    if !signs.is_empty() {
        let mut out = vec![0i8; qnames.len()];
        for (name, s) in signs {
            let s = s.as_i64().ok_or_else(|| bad("axis signs must be integers"))?;
            out[gen_index(&name)?] = i8::try_from(s).map_err(|_| bad("axis sign out of range"))?;
        }
        b = b.axis_signs(&out);
    }
    b.build()
}

fn matrix_from_json(v: Value) -> Result<IntMatrix> {
    match v {
        Value::String(s) => s.parse(),
        other => serde_json::from_value(other).map_err(|e| Error::Parse(e.to_string())),
    }
}

fn vector_from_json(v: Value) -> Result<IntVector> {
    match v {
        Value::String(s) => s.parse(),
        Value::Array(xs) => Ok(IntVector(xs.iter().map(int_from_json).collect::<Result<_>>()?)),
        _ => Err(Error::Parse("expected a vector".into())),
    }
}

/// Inverse of [`from_description`].
pub fn to_description(g: &ExtensionGroup) -> Value {
    let names = g.quotient_names();
    let mut action = Map::new();
    let mut cocycles = Map::new();
    for (i, name) in names.iter().enumerate() {
        action.insert(name.clone(), serde_json::to_value(g.action(i)).expect("serializable"));
        if let Some(s) = g.square_of(i) {
            cocycles.insert(name.clone(), Value::Array(s.iter().map(int_to_json).collect()));
        }
    }
    let mut out = json!({
        "kind": g.kind(),
        "rank": g.rank(),
        "generators": names,
        "lattice": g.lattice_names(),
        "action": action,
        "cocycles": cocycles,
    });
    if let Some(c) = g.commutator_vector() {
        out["commutator"] = Value::Array(c.iter().map(int_to_json).collect());
    }
    if let Some(signs) = g.axis_signs() {
        let m: Map<String, Value> = names.iter().cloned().zip(signs.iter().map(|&s| json!(s))).collect();
        out["axisSigns"] = Value::Object(m);
    }
    out
}
