//! Every equation checked by the structure suites, written once in the term
//! syntax of [`crate::diagram`].
//!
//! Generator names: `mu`, `eta`, `delta`, `eps` (structure maps), `rho = delta eta`,
//! `sigma = eps mu`, `s`, `t`, `r` (derived idempotents), `nu`, `nui` (antipode and
//! its inverse). Bare `1`, `c`, `ci` refer to the carrier `A`. Unit and counit
//! nodes are always written out explicitly.

use crate::report::Identity as I;

pub const MONOID: &[I] = &[
    I::new("monoid.associativity", "mu (mu x 1)", "mu (1 x mu)"),
    I::new("monoid.unit_left", "mu (eta x 1)", "1"),
    I::new("monoid.unit_right", "mu (1 x eta)", "1"),
];

pub const COMONOID: &[I] = &[
    I::new("comonoid.coassociativity", "(delta x 1) delta", "(1 x delta) delta"),
    I::new("comonoid.counit_left", "(eps x 1) delta", "1"),
    I::new("comonoid.counit_right", "(1 x eps) delta", "1"),
];

/// The compatibility axioms of a weak bimonoid, each weakened equality in
/// both its plain and its braided form.
pub const WEAK_BIMONOID: &[I] = &[
    I::new("weak.comult_mult", "delta mu", "(mu x mu)(1 x c x 1)(delta x delta)"),
    I::new("weak.counit_plain", "eps mu (mu x 1)", "(sigma x sigma)(1 x delta x 1)"),
    I::new("weak.counit_braided", "eps mu (mu x 1)", "(sigma x sigma)(1 x ci delta x 1)"),
    I::new("weak.unit_plain", "(delta x 1) delta eta", "(1 x mu x 1)(rho x rho)"),
    I::new("weak.unit_braided", "(delta x 1) delta eta", "(1 x mu x 1)(1 x ci x 1)(rho x rho)"),
];

/// The defining diagrams of the derived idempotents.
pub const DERIVED_DEFINITIONS: &[I] = &[
    I::new("defn.source", "s", "(1 x sigma)(rho x 1)"),
    I::new("defn.target", "t", "(1 x sigma)(c x 1)(1 x rho)"),
    I::new("defn.rotated", "r", "(sigma x 1)(1 x c)(rho x 1)"),
];

pub const SOURCE_PROPERTIES: &[I] = &[
    I::new("source.comult_plain", "delta s", "(1 x mu)(rho x s)"),
    I::new("source.comult_braided", "delta s", "(1 x mu)(1 x ci)(rho x s)"),
    I::new("source.mult_plain", "s mu", "(s x sigma)(delta x 1)"),
    I::new("source.mult_braided", "s mu", "(s x sigma)(ci x 1)(delta x 1)"),
    I::new("source.fixes_rho", "(s x 1) rho", "rho"),
    I::new("source.fixes_unit", "s eta", "eta"),
    I::new("source.sigma_invariant", "sigma (1 x s)", "sigma"),
    I::new("source.counit_invariant", "eps s", "eps"),
    I::new("source.comult_of_image", "(s x 1) delta s", "delta s"),
    I::new("source.mult_into_image", "s mu (1 x s)", "s mu"),
    I::new("source.comult_mult_right", "delta mu (1 x s)", "(1 x mu)(delta x s)"),
    I::new("source.comult_mult_left", "delta mu (s x 1)", "(1 x mu)(c x 1)(s x delta)"),
    I::new("source.mult_comult_right", "(1 x s) delta mu", "(mu x s)(1 x c)(delta x 1)"),
    I::new("source.mult_comult_left", "(s x 1) delta mu", "(s x mu)(delta x 1)"),
    I::new("source.image_subalgebra", "s mu (s x s)", "mu (s x s)"),
    I::new("source.image_subcoalgebra", "(s x s) delta s", "(s x s) delta"),
    I::new("source.splits_comult", "mu (s x 1) ci delta", "1"),
    I::new("source.idempotent", "s s", "s"),
];

pub const TARGET_PROPERTIES: &[I] = &[
    I::new("target.comult_plain", "delta t", "(1 x mu)(rho x t)"),
    I::new("target.comult_braided", "delta t", "(1 x mu)(1 x ci)(rho x t)"),
    I::new("target.mult_plain", "t mu", "(sigma x t)(1 x delta)"),
    I::new("target.mult_braided", "t mu", "(sigma x t)(1 x ci delta)"),
    I::new("target.fixes_rho", "(t x 1) rho", "rho"),
    I::new("target.fixes_unit", "t eta", "eta"),
    I::new("target.sigma_invariant", "sigma (t x 1)", "sigma"),
    I::new("target.counit_invariant", "eps t", "eps"),
    I::new("target.comult_of_image", "(t x 1) delta t", "delta t"),
    I::new("target.mult_into_image", "t mu (t x 1)", "t mu"),
    I::new("target.comult_mult_right", "delta mu (1 x t)", "(1 x mu)(delta x t)"),
    I::new("target.comult_mult_left", "delta mu (t x 1)", "(1 x mu)(c x 1)(t x delta)"),
    I::new("target.mult_comult_right", "(1 x t) delta mu", "(mu x t)(1 x delta)"),
    I::new("target.mult_comult_left", "(t x 1) delta mu", "(t x mu)(c x 1)(1 x delta)"),
    I::new("target.image_subalgebra", "t mu (t x t)", "mu (t x t)"),
    I::new("target.image_subcoalgebra", "(t x t) delta t", "(t x t) delta"),
    I::new("target.splits_comult", "mu (1 x t) delta", "1"),
    I::new("target.idempotent", "t t", "t"),
];

pub const SOURCE_TARGET_INTERACTION: &[I] = &[
    I::new("interact.target_of_source", "t s", "s"),
    I::new("interact.source_of_target", "s t", "t"),
    I::new("interact.comult_target_image", "(s x 1) delta t", "delta t"),
    I::new("interact.comult_source_image", "(t x 1) delta s", "delta s"),
    I::new("interact.commute", "(t x s) delta", "c (s x t) delta"),
    I::new("interact.mult_exchange", "(t x mu)(delta x 1)", "(s x mu)(c x 1)(1 x delta)"),
];

pub const ROTATED_PROPERTIES: &[I] = &[
    I::new("rotated.source_after", "s r", "s"),
    I::new("rotated.source_before", "r s", "r"),
    I::new("rotated.commute_comult", "(t x r) delta", "c (r x t) delta"),
    I::new("rotated.commute_mult", "mu (t x r)", "mu (r x t) c"),
    I::new("rotated.source_absorbs", "s mu (1 x r)", "s mu"),
    I::new("rotated.rotated_absorbs", "r mu (1 x s)", "r mu"),
];

pub const ANTIPODE_AXIOMS: &[I] = &[
    I::new("antipode.left", "mu (nu x 1) delta", "t"),
    I::new("antipode.right", "mu (1 x nu) delta", "r"),
    I::new("antipode.middle", "mu (mu x 1)(nu x 1 x nu)(delta x 1) delta", "nu"),
];

pub const ANTIPODE_CONSEQUENCES: &[I] = &[
    I::new("antipode_cons.target_absorbs", "mu (t x nu) delta", "nu"),
    I::new("antipode_cons.rotated_absorbs", "mu (nu x r) delta", "nu"),
    I::new("antipode_cons.source", "nu s", "r"),
    I::new("antipode_cons.target_a", "t nu", "nu r"),
    I::new("antipode_cons.target_b", "nu r", "t r"),
    I::new("antipode_cons.rotated_a", "r nu", "nu t"),
    I::new("antipode_cons.rotated_b", "nu t", "r t"),
    I::new("antipode_cons.counit", "eps nu", "eps"),
    I::new("antipode_cons.anti_comult", "delta nu", "c (nu x nu) delta"),
    I::new("antipode_cons.unit", "nu eta", "eta"),
    I::new("antipode_cons.anti_mult", "nu mu", "mu (nu x nu) c"),
];

pub const ANTIPODE_INVERSE: &[I] = &[
    I::new("antipode_inv.left", "nui nu", "1"),
    I::new("antipode_inv.right", "nu nui", "1"),
];

/// Ordinary bialgebra laws that fail for genuinely weak examples.
pub const BIALGEBRA_LAWS: &[I] = &[
    I::new("weakness.counit_multiplicative", "eps mu", "eps x eps"),
    I::new("weakness.unit_comultiplicative", "delta eta", "eta x eta"),
    I::new("weakness.counit_unit", "eps eta", "1[I]"),
];

pub const FROBENIUS: &[I] = &[
    I::new("frobenius.condition_left", "(1 x mu)(delta x 1)", "delta mu"),
    I::new("frobenius.condition_right", "(mu x 1)(1 x delta)", "delta mu"),
    I::new("frobenius.pairing_left", "(sigma x 1)(1 x rho)", "1"),
    I::new("frobenius.pairing_right", "(1 x sigma)(rho x 1)", "1"),
];

pub const SEPARABLE: &[I] = &[I::new("frobenius.separable", "mu delta", "1")];
