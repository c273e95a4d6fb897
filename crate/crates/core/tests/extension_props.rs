use proptest::prelude::*;

use solfour::extension::{self, catalog, ExtensionGroup, GroupElement, Word};
use solfour::IntVector;

const GROUPS: &[&str] = &[
    "Dinf",
    "G2",
    "B1",
    "B1-sd-theta",
    "sigma-sec4",
    "sigma-sd-f",
    "kb-monodromy(3,2;4,3)",
    "bordered((1,0),(3,2;4,3))",
    "pillowcase(3,2,4)",
];

fn group(idx: usize) -> ExtensionGroup {
    catalog::lookup(GROUPS[idx]).unwrap().group
}

fn element(g: &ExtensionGroup, letters: &[(usize, i64)]) -> GroupElement {
    let n = g.generator_names().len();
    let w = Word(letters.iter().map(|&(i, e)| (i % n, e)).collect());
    g.evaluate(&w).unwrap()
}

fn letters() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..8, -2i64..=2), 0..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(gi in 0..GROUPS.len(), a in letters(), b in letters(), c in letters()) {
        let g = group(gi);
        let (a, b, c) = (element(&g, &a), element(&g, &b), element(&g, &c));
        let left = g.mul(&g.mul(&a, &b).unwrap(), &c).unwrap();
        let right = g.mul(&a, &g.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverses_cancel(gi in 0..GROUPS.len(), a in letters()) {
        let g = group(gi);
        let x = element(&g, &a);
        let xi = g.inv(&x).unwrap();
        prop_assert!(g.mul(&x, &xi).unwrap().is_identity());
        prop_assert!(g.mul(&xi, &x).unwrap().is_identity());
        let n = g.generator_names().len();
        let w = Word(a.iter().map(|&(i, e)| (i % n, e)).collect());
        prop_assert_eq!(g.evaluate(&w.inverse()).unwrap(), xi);
    }

    #[test]
    fn orientation_character_is_a_homomorphism(gi in 0..GROUPS.len(), a in letters(), b in letters()) {
        let g = group(gi);
        let (x, y) = (element(&g, &a), element(&g, &b));
        let Ok(cx) = extension::orientation_character(&g, &x) else { return Ok(()) };
        let cy = extension::orientation_character(&g, &y).unwrap();
        let cxy = extension::orientation_character(&g, &g.mul(&x, &y).unwrap()).unwrap();
        prop_assert_eq!(cxy, (cx + cy) % 2);
    }

    #[test]
    fn center_commutes_with_everything(gi in 0..GROUPS.len(), a in letters()) {
        let g = group(gi);
        let x = element(&g, &a);
        for z in extension::center(&g).unwrap().generators {
            prop_assert!(g.commutator(&z, &x).unwrap().is_identity());
        }
    }

    #[test]
    fn pillowcase_torsion_matches_exhaustive_search(a in -2i64..=2, b in -2i64..=2) {
        let g = catalog::lookup("pillowcase(3,2,4)").unwrap().group;
        let fixed_u = g.square_of(0).unwrap().scale(&a.into());
        let g = g.with_square(0, fixed_u).unwrap()
            .with_square(1, IntVector::from_i64(&[b, 0, 0])).unwrap();
        prop_assert_eq!(g.find_torsion(5).unwrap().is_some(), exhaustive_torsion(&g, 5, 3));
    }
}

/// Scans every element whose quotient word has length at most `len` and
/// whose translation part has entries at most `bound`.
fn exhaustive_torsion(g: &ExtensionGroup, len: usize, bound: i64) -> bool {
    let mut words = vec![g.identity()];
    for first in 0..2 {
        let mut w = g.identity();
        for k in 0..len {
            w = g.mul(&w, &g.generator((first + k) % 2).unwrap()).unwrap();
            words.push(w.clone());
        }
    }
    let r = -bound..=bound;
    for x in r.clone() {
        for y in r.clone() {
            for z in r.clone() {
                let t = g.lattice_element(IntVector::from_i64(&[x, y, z])).unwrap();
                for w in &words {
                    let e = g.mul(&t, w).unwrap();
                    if !e.is_identity() && g.is_torsion(&e).unwrap() {
                        return true;
                    }
                }
            }
        }
    }
    false
}

#[test]
fn defining_relators_hold_in_every_catalog_group() {
    for id in catalog::CATALOG_IDS {
        let entry = catalog::lookup(id).unwrap();
        let g = &entry.group;
        let p = g.defining_presentation();
        for r in &p.relators {
            assert!(g.evaluate(r).unwrap().is_identity(), "{id}: {}", r.render(&p.generators));
        }
    }
}

#[test]
fn conjugating_the_lattice_keeps_the_abelianization() {
    use solfour::IntMatrix;
    let c = IntMatrix::from_i64(&[[1, 1, 0], [0, 1, 0], [2, 1, 1]]);
    for id in ["pillowcase(3,2,4)", "bordered((1,0),(3,2;4,3))", "sigma-sd-f"] {
        let g = catalog::lookup(id).unwrap().group;
        let h = g.conjugated_by(&c).unwrap();
        assert_eq!(
            extension::abelianization(&g).summary(),
            extension::abelianization(&h).summary(),
            "{id}"
        );
    }
}

#[test]
fn description_round_trip() {
    for id in catalog::CATALOG_IDS {
        let g = catalog::lookup(id).unwrap().group;
        let back = catalog::from_description(&catalog::to_description(&g)).unwrap();
        assert_eq!(catalog::to_description(&back), catalog::to_description(&g), "{id}");
    }
}
