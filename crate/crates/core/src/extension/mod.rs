//! Groups `π` in extensions `1 → Z^n → π → Q → 1` with `Q` virtually cyclic
//! or the Klein bottle group, computed in an exact normal form.
//!
//! ```
//! use solfour::extension::catalog;
//!
//! let g = catalog::lookup("pillowcase(3,2,4)").unwrap().group;
//! let u2 = g.evaluate_word("u u").unwrap();
//! assert_eq!(g.render(&u2), "x y^-1");
//! ```

pub mod analysis;
pub mod catalog;
mod group;
mod presentation;
mod quotient;

pub use analysis::{
    abelianization, center, dinf_automorphism_summary, i_lattice, induced_free_matrix,
    is_block_diagonalizable, orientation_character, verify_homomorphism, w1_factors_through_z4,
    AutomorphismSummary, CenterReport, W1Report,
};
pub use group::{ExtensionBuilder, ExtensionGroup, GroupElement};
pub use presentation::{parse_relation, parse_word, AbelianSummary, Abelianization, FpPresentation, Word};
pub use quotient::{Letter, QuotientKind, QuotientWord};
