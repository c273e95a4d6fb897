//! Brute-force verification sweeps, shared by the CLI and the test suites.
//!
//! Every sweep fans out over rayon's pool and reports failures sorted by
//! their input, so a report depends only on its parameters.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classifier::{self, PillowcaseInvariant};
use crate::error::{Error, Result};
use crate::extension::{self, catalog, ExtensionGroup, GroupElement};
use crate::gl2z::{self, ElementOrder, FiniteOrderClass};
use crate::linalg::{IntMatrix, IntVector};

pub const SUITES: &[&str] = &[
    "finite-subgroups",
    "order-twelve",
    "two-ended",
    "theorem10-roundtrip",
    "corollary-h1",
    "sec3-family",
    "sec4-examples",
    "enumeration",
    "torsion-gate",
    "beta1",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyParams {
    /// Entry bound for 2x2 sweeps.
    pub box_bound: i64,
    /// Entry bound for conjugator searches.
    pub conjugator_bound: i64,
    /// Entry bound for invariant enumerations.
    pub max_entry: u64,
    /// Largest `a` in the bordered-matrix family.
    pub a_max: i64,
    /// Word-length bound for torsion searches.
    pub max_word: usize,
    /// Random basis changes per invariant in the round trip.
    pub conjugations: usize,
    /// Entry bound for the random basis changes.
    pub conjugation_entry: i64,
    pub seed: u64,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            box_bound: 3,
            conjugator_bound: 10,
            max_entry: 20,
            a_max: 12,
            max_word: classifier::TORSION_WORD_BOUND,
            conjugations: 100,
            conjugation_entry: 3,
            seed: 0x5017,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

impl Failure {
    fn new(input: impl Into<String>, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        Failure { input: input.into(), expected: expected.into(), actual: actual.into() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub instances: usize,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u128,
    pub parameters: BTreeMap<String, i64>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Outcome {
    instances: usize,
    failures: Vec<Failure>,
    notes: Vec<String>,
    parameters: Vec<(&'static str, i64)>,
}

pub fn run_suite(name: &str, params: &VerifyParams) -> Result<VerificationReport> {
    let start = Instant::now();
    let outcome = match name {
        "finite-subgroups" => finite_subgroups(params),
        "order-twelve" => order_twelve(params),
        "two-ended" => two_ended(params),
        "theorem10-roundtrip" => roundtrip(params),
        "corollary-h1" => pillowcase_homology(params),
        "sec3-family" => bordered_family(params),
        "sec4-examples" => explicit_examples(),
        "enumeration" => enumeration(params),
        "torsion-gate" => torsion_gate(params),
        "beta1" => beta1(params),
        _ => return Err(Error::UnknownSuite(name.to_string())),
    }?;
    let mut failures = outcome.failures;
    failures.sort();
    Ok(VerificationReport {
        suite: name.to_string(),
        instances: outcome.instances,
        failures,
        elapsed_ms: start.elapsed().as_millis(),
        parameters: outcome.parameters.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        notes: outcome.notes,
    })
}

/// All 2x2 integer matrices with `|det| = 1` and entries in `[-bound, bound]`.
pub fn unimodular_box(bound: i64) -> Vec<IntMatrix> {
    let r = -bound..=bound;
    let mut out = Vec::new();
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    if (a * d - b * c).abs() == 1 {
                        out.push(IntMatrix::from_2x2([[a, b], [c, d]]));
                    }
                }
            }
        }
    }
    out
}

/// A uniformly sampled matrix in `GL(n,Z)` with entries in `[-bound, bound]`.
pub fn random_unimodular(rng: &mut impl Rng, n: usize, bound: i64) -> IntMatrix {
    loop {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect())
            .collect();
        let m = IntMatrix::from_i64(&rows);
        if m.is_unimodular() {
            return m;
        }
    }
}

fn collect<T: Sync>(items: &[T], check: impl Fn(&T) -> Vec<Failure> + Sync + Send) -> Vec<Failure> {
    items.par_iter().flat_map_iter(check).collect()
}

fn order_twelve(p: &VerifyParams) -> Result<Outcome> {
    let all = unimodular_box(p.box_bound);
    let failures = collect(&all, |m| {
        let lit = m.to_literal();
        let twelfth = m.pow(12).expect("unimodular").is_identity();
        let mut out = Vec::new();
        match gl2z::element_order(m) {
            Ok(ElementOrder::Finite(k)) => {
                if !twelfth {
                    out.push(Failure::new(&lit, "M^12 = I for finite order", "M^12 != I"));
                }
                if ![1, 2, 3, 4, 6].contains(&k) {
                    out.push(Failure::new(&lit, "order in {1,2,3,4,6}", k.to_string()));
                }
                let exact = m.pow(i64::from(k)).unwrap().is_identity()
                    && (1..k).all(|j| !m.pow(i64::from(j)).unwrap().is_identity());
                if !exact {
                    out.push(Failure::new(&lit, format!("order exactly {k}"), "wrong order"));
                }
            }
            Ok(ElementOrder::Infinite) => {
                if twelfth {
                    out.push(Failure::new(&lit, "infinite order", "M^12 = I"));
                }
            }
            Err(e) => out.push(Failure::new(&lit, "an order", e.to_string())),
        }
        out
    });
    Ok(Outcome {
        instances: all.len(),
        failures,
        notes: Vec::new(),
        parameters: vec![("box", p.box_bound)],
    })
}

fn finite_subgroups(p: &VerifyParams) -> Result<Outcome> {
    let minus = FiniteOrderClass::MinusIdentity.representative();
    let candidates: Vec<IntMatrix> = unimodular_box(p.box_bound)
        .into_iter()
        .filter(|m| !m.is_identity() && *m != minus)
        .filter(|m| gl2z::element_order(m).map(ElementOrder::is_finite).unwrap_or(false))
        .collect();
    let failures = collect(&candidates, |m| {
        let lit = m.to_literal();
        let mut out = Vec::new();
        let hits: Vec<FiniteOrderClass> = FiniteOrderClass::NON_CENTRAL
            .iter()
            .copied()
            .filter(|c| {
                gl2z::conjugate_in_gl2z(&c.representative(), m, p.conjugator_bound)
                    .expect("valid input")
                    .is_some()
            })
            .collect();
        if hits.len() != 1 {
            out.push(Failure::new(&lit, "conjugate to exactly one representative", format!("{hits:?}")));
        }
        let class = gl2z::finite_order_class(m).expect("finite order");
        if hits.first() != Some(&class) {
            out.push(Failure::new(&lit, format!("{hits:?}"), format!("{class:?}")));
        }
        let det_negative = m.det().unwrap().is_negative();
        if class.order() == 2 && det_negative {
            let mod2 = m.is_identity_mod2();
            let reflection = hits == [FiniteOrderClass::Reflection];
            if mod2 != reflection {
                out.push(Failure::new(
                    &lit,
                    format!("reflection by search: {reflection}"),
                    format!("identity mod 2: {mod2}"),
                ));
            }
        }
        out
    });
    Ok(Outcome {
        instances: candidates.len(),
        failures,
        notes: Vec::new(),
        parameters: vec![("box", p.box_bound), ("bound", p.conjugator_bound)],
    })
}

fn two_ended(p: &VerifyParams) -> Result<Outcome> {
    let all = unimodular_box(p.box_bound);
    let minus = FiniteOrderClass::MinusIdentity.representative();
    let infinite: Vec<IntMatrix> = all
        .iter()
        .filter(|m| gl2z::element_order(m).unwrap() == ElementOrder::Infinite)
        .cloned()
        .collect();
    let involutions: Vec<IntMatrix> = all
        .iter()
        .filter(|m| gl2z::element_order(m).unwrap() == ElementOrder::Finite(2) && **m != minus)
        .cloned()
        .collect();
    let conjugators = [
        IntMatrix::from_2x2([[1, 1], [0, 1]]),
        IntMatrix::from_2x2([[0, 1], [1, 0]]),
        IntMatrix::from_2x2([[2, 1], [1, 1]]),
    ];

    let mut failures = collect(&infinite, |m| {
        let lit = m.to_literal();
        let mut out = Vec::new();
        let case = |gens: &[IntMatrix]| gl2z::two_ended_type(gens).map(|t| t.case).ok();
        if case(std::slice::from_ref(m)) != Some(1) {
            out.push(Failure::new(&lit, "case 1", format!("{:?}", case(std::slice::from_ref(m)))));
        }
        if case(&[m.clone(), minus.clone()]) != Some(2) {
            out.push(Failure::new(format!("{lit} with -I"), "case 2", "other"));
        }
        out
    });

    let pairs: Vec<(usize, usize)> = (0..involutions.len())
        .flat_map(|i| (0..involutions.len()).map(move |j| (i, j)))
        .collect();
    failures.extend(collect(&pairs, |&(i, j)| {
        let (a, b) = (&involutions[i], &involutions[j]);
        let input = format!("{} & {}", a.to_literal(), b.to_literal());
        let product_infinite = gl2z::element_order(&(a * b)).unwrap() == ElementOrder::Infinite;
        let t = gl2z::two_ended_type(&[a.clone(), b.clone()]);
        let mut out = Vec::new();
        if !product_infinite {
            if t.is_ok() {
                out.push(Failure::new(&input, "not two-ended", "typed"));
            }
            return out;
        }
        match t {
            Ok(t) if t.case == 3 && !t.has_minus_identity => {}
            other => {
                out.push(Failure::new(&input, "case 3", format!("{other:?}")));
                return out;
            }
        }
        let swapped = gl2z::two_ended_type(&[b.clone(), a.clone()]).map(|t| t.case).ok();
        if swapped != Some(3) {
            out.push(Failure::new(&input, "swapped: case 3", format!("{swapped:?}")));
        }
        if (b * a) != (a * b).inverse().unwrap() {
            out.push(Failure::new(&input, "BA = (AB)^-1", "differs"));
        }
        if gl2z::two_ended_type(&[a.clone(), b.clone(), minus.clone()]).map(|t| t.case).ok() != Some(4) {
            out.push(Failure::new(&input, "with -I: case 4", "other"));
        }
        for c in &conjugators {
            let ci = c.inverse().unwrap();
            let conj = |m: &IntMatrix| &(c * m) * &ci;
            let case = gl2z::two_ended_type(&[conj(a), conj(b)]).map(|t| t.case).ok();
            if case != Some(3) {
                out.push(Failure::new(format!("{input} conjugated by {}", c.to_literal()), "case 3", format!("{case:?}")));
            }
        }
        out
    }));
    Ok(Outcome {
        instances: infinite.len() + pairs.len(),
        failures,
        notes: Vec::new(),
        parameters: vec![("box", p.box_bound)],
    })
}

fn pillowcase_group(inv: &PillowcaseInvariant) -> Result<ExtensionGroup> {
    Ok(classifier::presentation_from_invariant(inv)?.1)
}

fn roundtrip(p: &VerifyParams) -> Result<Outcome> {
    let invariants = classifier::enumerate(p.max_entry);
    let failures = invariants
        .par_iter()
        .enumerate()
        .flat_map_iter(|(idx, inv)| {
            let mut out = Vec::new();
            let g = match pillowcase_group(inv) {
                Ok(g) => g,
                Err(e) => return vec![Failure::new(inv.to_string(), "realizable", e.to_string())],
            };
            let (u, v) = (g.action(0), g.action(1));
            let (su, sv) = (g.square_of(0).unwrap(), g.square_of(1).unwrap());
            let check = |label: String, r: Result<PillowcaseInvariant>, out: &mut Vec<Failure>| match r {
                Ok(x) if x == *inv => {}
                Ok(x) => out.push(Failure::new(label, inv.to_string(), x.to_string())),
                Err(e) => out.push(Failure::new(label, inv.to_string(), e.to_string())),
            };
            check(inv.to_string(), classifier::from_extension(u, v, su, sv), &mut out);
            let mut rng = ChaCha8Rng::seed_from_u64(p.seed ^ idx as u64);
            for k in 0..p.conjugations {
                let c = random_unimodular(&mut rng, 3, p.conjugation_entry);
                let ci = c.inverse().unwrap();
                let conj = |m: &IntMatrix| &(&c * m) * &ci;
                let r = classifier::from_extension(&conj(u), &conj(v), &(&c * su), &(&c * sv));
                check(format!("{inv} conjugated #{k} by {}", c.to_literal()), r, &mut out);
            }
            out
        })
        .collect();
    Ok(Outcome {
        instances: invariants.len() * (1 + p.conjugations),
        failures,
        notes: Vec::new(),
        parameters: vec![
            ("max", p.max_entry as i64),
            ("conjugations", p.conjugations as i64),
            ("conjugation_entry", p.conjugation_entry),
        ],
    })
}

fn pillowcase_homology(p: &VerifyParams) -> Result<Outcome> {
    let invariants = classifier::enumerate(p.max_entry);
    let failures = collect(&invariants, |inv| {
        let mut out = Vec::new();
        let h = match classifier::homology_report(inv) {
            Ok(h) => h,
            Err(e) => return vec![Failure::new(inv.to_string(), "report", e.to_string())],
        };
        if !h.beta1_zero || h.h1.rank != 0 {
            out.push(Failure::new(inv.to_string(), "beta1 = 0", h.h1.rank.to_string()));
        }
        for (name, want) in [("u", 4), ("v", 4), ("x", 2), ("y", 2), ("z", 2)] {
            if h.orders[name] != Some(want) {
                out.push(Failure::new(
                    format!("{inv} order of {name}"),
                    want.to_string(),
                    format!("{:?}", h.orders[name]),
                ));
            }
        }
        if !h.w1_factors_through_z4 {
            out.push(Failure::new(inv.to_string(), "w1 factors through Z/4", "does not"));
        }
        out
    });
    Ok(Outcome {
        instances: invariants.len(),
        failures,
        notes: Vec::new(),
        parameters: vec![("max", p.max_entry as i64)],
    })
}

fn divisors(n: i64) -> Vec<i64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

fn bordered_family(p: &VerifyParams) -> Result<Outcome> {
    let mut cases = Vec::new();
    for a in 2..=p.a_max {
        let n = a * a - 1;
        for b in divisors(n) {
            cases.push((a, b, n / b));
            cases.push((a, -b, -(n / b)));
        }
    }
    let mut failures = collect(&cases, |&(a, b, c)| {
        let psi = IntMatrix::from_2x2([[a, b], [c, a]]);
        let det = (&IntMatrix::identity(2) - &psi).det().unwrap().abs();
        if det != BigInt::from(2 * (a - 1)) {
            vec![Failure::new(psi.to_literal(), (2 * (a - 1)).to_string(), det.to_string())]
        } else {
            Vec::new()
        }
    });

    let psi = IntMatrix::from_2x2([[3, 2], [4, 3]]);
    let xi = IntVector::from_i64(&[1, 0]);
    let theta = catalog::bordered_matrix(&xi, &psi);
    match extension::is_block_diagonalizable(&theta) {
        Ok(false) => {}
        other => failures.push(Failure::new("bordered (1,0)", "not block diagonalizable", format!("{other:?}"))),
    }
    let g = catalog::bordered(&xi, &psi)?.group;
    let c = extension::center(&g)?;
    if c.rank != 1 {
        failures.push(Failure::new("center of bordered (1,0)", "rank 1", c.rank.to_string()));
    }
    Ok(Outcome {
        instances: cases.len() + 2,
        failures,
        notes: Vec::new(),
        parameters: vec![("a_max", p.a_max)],
    })
}

fn explicit_examples() -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut fail = |input: &str, expected: &str, actual: String| {
        failures.push(Failure::new(input, expected, actual));
    };

    let kb = catalog::kb_monodromy(&IntMatrix::from_2x2([[3, 2], [4, 3]]))?.group;
    let c = extension::center(&kb)?;
    let gens: Vec<String> = c.generators.iter().map(|z| kb.render(z)).collect();
    if c.rank != 1 || gens != ["x^2"] {
        fail("kb-monodromy center", "rank 1 generated by x^2", format!("rank {} {gens:?}", c.rank));
    }

    let sigma = catalog::sigma();
    let g = &sigma.group;
    let pres = sigma.presentation.as_ref().expect("sigma presentation");
    let identity = catalog::images(g, &[("u", "u"), ("v", "v"), ("x", "x"), ("y", "y")])?;
    if !extension::verify_homomorphism(pres, &identity, g)? {
        fail("sigma presentation", "relators hold", "a relator fails".into());
    }
    let f = catalog::sigma_automorphism(g)?;
    if !extension::verify_homomorphism(pres, &f, g)? {
        fail("sigma automorphism f", "homomorphism", "a relator fails".into());
    }
    let s = extension::dinf_automorphism_summary(g, &f)?;
    let want_p = IntMatrix::from_2x2([[3, 4], [-2, -3]]);
    if s.p != want_p {
        fail("sigma f: P", &want_p.to_literal(), s.p.to_literal());
    }
    if !(&s.p * &s.p).is_identity() {
        fail("sigma f: P^2", "I", (&s.p * &s.p).to_literal());
    }
    if s.det_p != -BigInt::one() || s.epsilon != -1 || !s.orientation_sign.is_one() {
        fail(
            "sigma f: orientation bookkeeping",
            "det P = -1, epsilon = -1, product +1",
            format!("det P = {}, epsilon = {}, product {}", s.det_p, s.epsilon, s.orientation_sign),
        );
    }
    if gl2z::element_order(&IntMatrix::from_2x2([[17, 24], [-12, -17]]))? != ElementOrder::Finite(2) {
        fail("sigma variant with u y u^-1 = y", "uv of finite order", "infinite".into());
    }

    let b1 = catalog::b1();
    let g = &b1.group;
    let pres = b1.presentation.as_ref().expect("B1 presentation");
    let (plain, theta) = catalog::b1_images(g)?;
    if !extension::verify_homomorphism(pres, &plain, g)? {
        fail("B1 presentation", "relators hold", "a relator fails".into());
    }
    if !extension::verify_homomorphism(pres, &theta, g)? {
        fail("B1 theta", "homomorphism", "a relator fails".into());
    }
    let m = extension::induced_free_matrix(g, &["t", "x"], &[theta["t"].clone(), theta["x"].clone()])?;
    let want = IntMatrix::from_2x2([[3, 4], [2, 3]]);
    if m != want || !m.is_unimodular() {
        fail("B1 theta on <t,x>", &want.to_literal(), m.to_literal());
    }

    Ok(Outcome {
        instances: 9,
        failures,
        notes: vec![format!("sigma-sec4 {}", catalog::SIGMA_NOTE)],
        parameters: Vec::new(),
    })
}

/// Independent scan of the box for `[[p, q], [r, p]]` meeting every constraint.
pub fn brute_force_invariants(max_entry: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for p in -max_entry..=max_entry {
        for q in -max_entry..=max_entry {
            for r in -max_entry..=max_entry {
                if p % 2 != 0 && p.abs() > 1 && q % 2 == 0 && r % 2 == 0 && q > 0 && p * p - q * r == 1 {
                    out.push((p, q, r));
                }
            }
        }
    }
    out
}

fn enumeration(p: &VerifyParams) -> Result<Outcome> {
    let listed = classifier::enumerate(p.max_entry);
    let mut failures = Vec::new();
    let as_triple = |i: &PillowcaseInvariant| {
        (i.p.to_i64().unwrap(), i.q.to_i64().unwrap(), i.r.to_i64().unwrap())
    };
    let mut got: Vec<_> = listed.iter().map(as_triple).collect();
    got.sort();
    let mut want = brute_force_invariants(p.max_entry as i64);
    want.sort();
    if got != want {
        failures.push(Failure::new(
            format!("enumerate({})", p.max_entry),
            format!("{} invariants", want.len()),
            format!("{} invariants", got.len()),
        ));
    }
    failures.extend(collect(&listed, |inv| {
        let mut out = Vec::new();
        if classifier::normalize(&inv.matrix()).as_ref() != Ok(inv) {
            out.push(Failure::new(inv.to_string(), "normalize idempotent", "changed"));
        }
        match classifier::normalize(&inv.inverse_matrix()) {
            Ok(x) if x == *inv => {}
            other => out.push(Failure::new(format!("{inv}^-1"), inv.to_string(), format!("{other:?}"))),
        }
        out
    }));
    Ok(Outcome {
        instances: listed.len(),
        failures,
        notes: Vec::new(),
        parameters: vec![("max", p.max_entry as i64)],
    })
}

fn torsion_gate(p: &VerifyParams) -> Result<Outcome> {
    let invariants = classifier::enumerate(p.max_entry);
    let failures = collect(&invariants, |inv| {
        let mut out = Vec::new();
        let g = match pillowcase_group(inv) {
            Ok(g) => g,
            Err(e) => return vec![Failure::new(inv.to_string(), "torsion-free", e.to_string())],
        };
        match g.find_torsion(p.max_word) {
            Ok(None) => {}
            other => out.push(Failure::new(inv.to_string(), "no torsion", format!("{other:?}"))),
        }
        for gen in 0..2 {
            let zeroed = g.with_square(gen, IntVector::zeros(3)).expect("zero square is compatible");
            let label = format!("{inv} with {} zeroed", ["s_u", "s_v"][gen]);
            match zeroed.find_torsion(p.max_word) {
                Ok(Some(w)) if zeroed.is_torsion(&w).unwrap_or(false) => {}
                other => out.push(Failure::new(label, "torsion witness", format!("{other:?}"))),
            }
        }
        out
    });
    Ok(Outcome {
        instances: invariants.len() * 3,
        failures,
        notes: Vec::new(),
        parameters: vec![("max", p.max_entry as i64), ("max_word", p.max_word as i64)],
    })
}

/// Every catalogued `Sol³×E¹` group: the fixed entries plus the
/// parametrized families over the invariants up to `max_entry`.
pub fn sol_e1_catalog(max_entry: u64) -> Result<Vec<catalog::CatalogEntry>> {
    let mut out = Vec::new();
    for id in catalog::CATALOG_IDS {
        let e = catalog::lookup(id)?;
        if e.sol_e1 {
            out.push(e);
        }
    }
    for inv in classifier::enumerate(max_entry) {
        let psi = inv.matrix();
        out.push(catalog::pillowcase(&inv)?);
        out.push(catalog::kb_monodromy(&psi)?);
        for xi in [[0, 0], [1, 0], [0, 1]] {
            out.push(catalog::bordered(&IntVector::from_i64(&xi), &psi)?);
        }
    }
    Ok(out)
}

fn beta1(p: &VerifyParams) -> Result<Outcome> {
    let entries = sol_e1_catalog(p.max_entry)?;
    let failures = collect(&entries, |e| {
        let b = extension::abelianization(&e.group).rank();
        let mut out = Vec::new();
        if b > 2 {
            out.push(Failure::new(&e.id, "beta1 <= 2", b.to_string()));
        }
        if (b == 0) != e.pillowcase {
            out.push(Failure::new(&e.id, format!("beta1 = 0 iff pillowcase ({})", e.pillowcase), b.to_string()));
        }
        out
    });
    Ok(Outcome {
        instances: entries.len(),
        failures,
        notes: Vec::new(),
        parameters: vec![("max", p.max_entry as i64)],
    })
}

/// Whether `z` commutes with every generator of `g`.
pub fn is_central(g: &ExtensionGroup, z: &GroupElement) -> Result<bool> {
    for i in 0..g.generator_names().len() {
        if !g.commutator(&g.generator(i)?, z)?.is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn quick() -> VerifyParams {
        VerifyParams { box_bound: 2, max_entry: 8, conjugations: 3, a_max: 5, ..VerifyParams::default() }
    }

    #[test]
    fn every_suite_passes_at_small_bounds() {
        for s in SUITES.iter().filter(|s| **s != "corollary-h1") {
            let r = run_suite(s, &quick()).unwrap();
            assert!(r.passed(), "{s}: {:?}", r.failures);
            assert!(r.instances > 0, "{s}");
        }
    }

    #[test]
    fn order_claim_breaks_when_gcd_exceeds_two() {
        let r = run_suite("corollary-h1", &quick()).unwrap();
        // Up to 8 the claim fails for (-3,4,2), (5,4,6), (-5,6,4), (7,6,8) and (-7,8,6),
        // where x has order gcd(p - 1, q) in H1.
        let inputs: std::collections::BTreeSet<&str> =
            r.failures.iter().map(|f| f.input.split(' ').next().unwrap()).collect();
        assert_eq!(
            inputs.into_iter().collect::<Vec<_>>(),
            ["(-3,4,2)", "(-5,6,4)", "(-7,8,6)", "(5,4,6)", "(7,6,8)"]
        );
        assert!(r.failures.iter().all(|f| !f.expected.contains("beta1") && !f.input.contains("order of y")));
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("nope", &quick()), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn box_counts() {
        // 20 matrices of each determinant sign with entries in {-1, 0, 1}.
        assert_eq!(unimodular_box(1).len(), 40);
        assert!(unimodular_box(0).is_empty());
    }

    #[test]
    fn random_conjugators_are_unimodular() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let c = random_unimodular(&mut rng, 3, 3);
            assert!(c.is_unimodular());
            assert!(c.max_abs() <= BigInt::from(3));
            assert!(!c.det().unwrap().is_zero());
        }
    }
}
