//! Quantum categories and quantum groupoids in the Cauchy completion, and
//! their construction from weak bimonoids and weak Hopf monoids.
//!
//! All objects are split idempotents on plain spaces: `C = (C, eC)`,
//! `P = (A ⊗ A, m)`. Generator names in the checks: `delta`, `eps` (the
//! comonoid `A`), `deltaC`, `epsC`, `eC` (the comonoid `C`), `s`, `t`,
//! `mu: P -> A`, `eta: C -> A`, `m`, `gl`, `gr`, `glP`, `grP`, `dl`, `dr`,
//! and for groupoids `nu`, `nui`, `ups`, `upsi`, `theta`, `thetai`, `vs`.

use crate::cauchy::QObject;
use crate::comodules::equalizer_oracle;
use crate::diagram::Env;
use crate::error::{Error, Result};
use crate::exact_linear::{Bicharacter, LinMap};
use crate::report::{check_equation, run_equations, Item, Report, Witness};
use crate::scalar::Scalar;
use crate::structures::{ComonoidData, WeakBimonoidData, WeakHopfData};

#[derive(Clone, Debug)]
pub struct QuantumCategoryData<S> {
    pub a: ComonoidData<S>,
    /// The object-of-objects; its carrier is split by `c_idem`.
    pub c: ComonoidData<S>,
    pub c_idem: LinMap<S>,
    pub chi: Bicharacter<S>,
    pub s: LinMap<S>,
    pub t: LinMap<S>,
    /// Composition `P -> A`, as a map on `A ⊗ A` that factors through `m`.
    pub mu: LinMap<S>,
    pub eta: LinMap<S>,
    pub p: QObject<S>,
    pub delta_l: LinMap<S>,
    pub delta_r: LinMap<S>,
}

pub const PRECONDITION: (&str, &str) = ("c[C,C] (s x t) delta", "(t x s) delta");
pub const GAMMA_L: &str = "ci[C,A] (1 x s) delta";
pub const GAMMA_R: &str = "(1 x t) delta";
/// The idempotent of `A ⊗_C A` for a weak bimonoid.
pub const WEAK_M: &str = "(1 x sigma x 1)(delta x ci delta)";
pub const DELTA_L: &str = "(1 x 1 x m)(1 x c x 1)(delta x delta) m";
pub const DELTA_R: &str = "(m x 1)(1 x 1 x mu)(1 x c x 1)(delta x delta) m";
pub const DELTA_R_CLOSED: &str = "(m x mu)(1 x c x 1)(delta x delta) m";
pub const THETA: &str = "m (1 x nu mu)(c x 1)(1 x delta) m";
pub const THETA_INV: &str = "m ci (1 x nui mu)(delta x 1) m";
pub const UPSILON: &str = "t nu nu t";
pub const UPSILON_INV: &str = "t nui nui t";
pub const VARSIGMA: &str = "(s x 1 x t)(gr x 1) m";
pub const VARSIGMA_ALT: &str = "(s x 1 x t)(1 x gl) m";
pub const COACTION_P: &str = "(1 x 1 x dr) dl";
pub const COACTION_PL: &str = "(1 x 1 x c[A A,A])(1 x 1 x 1 x 1 x nu) dP";
/// `P_r`: the inverse braiding moves the last tensor factor to the front.
pub const COACTION_PR: &str = "ci[A,A A A A](1 x 1 x 1 x 1 x nui) dP";

impl<S: Scalar> QuantumCategoryData<S> {
    /// Environment binding `A`, `C` and the generators listed in the module
    /// documentation. `mu` is the composition `P -> A`.
    pub fn env(&self) -> Result<Env<S>> {
        let mut env = Env::new(self.chi.clone())
            .object("A", &self.a.carrier)
            .object("C", &self.c.carrier)
            .generator("delta", &self.a.delta)
            .generator("eps", &self.a.epsilon)
            .generator("deltaC", &self.c.delta)
            .generator("epsC", &self.c.epsilon)
            .generator("eC", &self.c_idem)
            .generator("s", &self.s)
            .generator("t", &self.t)
            .generator("mu", &self.mu)
            .generator("eta", &self.eta)
            .generator("m", &self.p.e)
            .generator("dl", &self.delta_l)
            .generator("dr", &self.delta_r);
        for (name, term) in [
            ("gl", GAMMA_L),
            ("gr", GAMMA_R),
            ("glP", "(1[C] x m)(gl x 1) m"),
            ("grP", "(m x 1[C])(1 x gr) m"),
        ] {
            let map = env.eval_str(term)?;
            env.set_generator(name, map);
        }
        Ok(env)
    }
}

/// The quantum category of a weak bimonoid: `C = (A, t)`, `s`, `t`, the
/// multiplication restricted to `P` and `eta = t`.
pub fn quantum_category<S: Scalar>(w: &WeakBimonoidData<S>) -> Result<QuantumCategoryData<S>> {
    let mut env = w.env();
    env.objects.insert("C".into(), w.carrier.clone());
    let pre = check_equation(&env, "precondition", PRECONDITION.0, PRECONDITION.1);
    if let Some(wit) = pre.witness {
        return Err(Error::PreconditionSquareFailed(format!("at ({}, {})", wit.row, wit.col)));
    }
    let m = env.eval_str(WEAK_M)?;
    env.set_generator("m", m.clone());
    let delta_l = env.eval_str(DELTA_L)?;
    let delta_r = env.eval_str(DELTA_R)?;
    let mu = env.eval_str("mu m")?;
    let c = ComonoidData {
        carrier: w.carrier.clone(),
        delta: env.eval_str("(t x t) delta t")?,
        epsilon: env.eval_str("eps t")?,
    };
    Ok(QuantumCategoryData {
        a: w.comonoid(),
        c,
        c_idem: w.t.clone(),
        chi: w.chi.clone(),
        s: w.s.clone(),
        t: w.t.clone(),
        mu,
        eta: w.t.clone(),
        p: QObject { carrier: w.carrier.tensor(&w.carrier), e: m },
        delta_l,
        delta_r,
    })
}

fn eqs(prefix: &str, list: &[(&str, &str, &str)]) -> Vec<(String, String, String)> {
    list.iter().map(|(id, l, r)| (format!("{prefix}{id}"), l.to_string(), r.to_string())).collect()
}

/// The structure of `P`, the coactions `delta_l`, `delta_r`, and axioms
/// B1 to B6.
pub fn check_quantum_category<S: Scalar>(qc: &QuantumCategoryData<S>) -> Report {
    let mut r = Report::new("quantum_category");
    let env = match qc.env() {
        Ok(e) => e,
        Err(e) => {
            r.push(Item::fail("qc.data", "quantum category data is well typed", Witness::note(&e.to_string())));
            return r;
        }
    };
    let list: &[(&str, &str, &str)] = &[
        ("data.precondition", PRECONDITION.0, PRECONDITION.1),
        ("data.c_idempotent", "eC eC", "eC"),
        ("data.c_coassociative", "(deltaC x 1[C]) deltaC", "(1[C] x deltaC) deltaC"),
        ("data.c_counit", "(epsC x 1[C]) deltaC", "eC"),
        ("data.s_comonoid_morphism", "c[C,C] deltaC s", "(s x s) delta"),
        ("data.s_counit", "epsC s", "eps"),
        ("data.t_comonoid_morphism", "deltaC t", "(t x t) delta"),
        ("data.t_counit", "epsC t", "eps"),
        ("P.idempotent", "m m", "m"),
        ("P.equalizes", "(gr x 1) m", "(1 x gl) m"),
        ("P.bicomodule", "(1[C] x grP) glP", "(glP x 1[C]) grP"),
        ("P.left_coassociative", "(deltaC x 1[A A]) glP", "(1[C] x glP) glP"),
        ("P.left_counit", "(epsC x 1[A A]) glP", "m"),
        ("P.right_coassociative", "(1[A A] x deltaC) grP", "(grP x 1[C]) grP"),
        ("P.right_counit", "(1[A A] x epsC) grP", "m"),
        ("delta_l.defining", "(1 x 1 x m) dl", "(1 x c x 1)(delta x delta) m"),
        ("delta_l.coassociative", "(1 x c x 1 x 1 x 1)(delta x delta x 1 x 1) dl", "(1 x 1 x dl) dl"),
        ("delta_l.counit", "(eps x eps x 1 x 1) dl", "m"),
        ("delta_r.defining", "(m x 1) dr", "(1 x 1 x mu) dl"),
        ("delta_r.closed_form", "dr", DELTA_R_CLOSED),
        ("B1.mu_left_comodule_morphism", "gl mu", "(1[C] x mu) glP"),
        ("B1.mu_right_comodule_morphism", "gr mu", "(mu x 1[C]) grP"),
        ("B1.eta_left_comodule_morphism", "gl eta", "(1[C] x eta) deltaC"),
        ("B1.eta_right_comodule_morphism", "gr eta", "(eta x 1[C]) deltaC"),
        ("B1.associativity", "mu (mu x 1)(m x 1)(1 x m)", "mu (1 x mu)(m x 1)(1 x m)"),
        ("B1.unit_left", "mu (eta x 1) gl", "1"),
        ("B1.unit_right", "mu (1 x eta) gr", "1"),
        ("B2", "(1[C] x mu)(t x eps x 1 x 1) dl", "(1[C] x mu)(eps x s x 1 x 1) dl"),
        ("B3", "delta mu", "(mu x 1) dr"),
        ("B4", "eps mu", "(eps x eps) m"),
        ("B5", "eps eta", "epsC"),
        ("B6.source", "(eta x 1)(s x 1) delta eta", "delta eta"),
        ("B6.target", "(eta x 1)(t x 1) delta eta", "delta eta"),
        ("B6.c_coassociative", "((s x 1) delta eta x 1)(s x 1) delta eta", "(1[C] x delta)(s x 1) delta eta"),
        ("B6.c_counit", "(1[C] x eps)(s x 1) delta eta", "eC"),
    ];
    run_equations(&env, &mut r, &eqs("", list));
    let terms = ["1[A A]".to_string(), "gr x 1".to_string(), "1 x gl".to_string()];
    r.push(equalizer_oracle("P.image_is_equalizer", &env, &terms, &qc.p.e));
    r.finish(None)
}

#[derive(Clone, Debug)]
pub struct QuantumGroupoidData<S> {
    pub qc: QuantumCategoryData<S>,
    pub upsilon: LinMap<S>,
    pub nu: LinMap<S>,
    pub theta: LinMap<S>,
    pub varsigma: LinMap<S>,
    pub upsilon_inv: Option<LinMap<S>>,
    pub nu_inv: Option<LinMap<S>>,
    pub theta_inv: Option<LinMap<S>>,
}

impl<S: Scalar> QuantumGroupoidData<S> {
    pub fn env(&self) -> Result<Env<S>> {
        let mut env = self.qc.env()?;
        env.set_generator("nu", self.nu.clone());
        env.set_generator("ups", self.upsilon.clone());
        env.set_generator("theta", self.theta.clone());
        env.set_generator("vs", self.varsigma.clone());
        for (name, map) in [("nui", &self.nu_inv), ("upsi", &self.upsilon_inv), ("thetai", &self.theta_inv)] {
            if let Some(f) = map {
                env.set_generator(name, f.clone());
            }
        }
        let dp = env.eval_str(COACTION_P)?;
        env.set_generator("dP", dp);
        Ok(env)
    }
}

/// The quantum groupoid of a weak Hopf monoid with invertible antipode.
pub fn quantum_groupoid<S: Scalar>(h: &WeakHopfData<S>) -> Result<QuantumGroupoidData<S>> {
    let h = match h.nu_inv {
        Some(_) => h.clone(),
        None => h.clone().with_computed_inverse()?,
    };
    let qc = quantum_category(&h.bimonoid)?;
    let mut env = h.env();
    env.objects.insert("C".into(), h.bimonoid.carrier.clone());
    env.set_generator("m", qc.p.e.clone());
    let qenv = qc.env()?;
    for g in ["gl", "gr"] {
        env.set_generator(g, qenv.generators[g].clone());
    }
    Ok(QuantumGroupoidData {
        upsilon: env.eval_str(UPSILON)?,
        upsilon_inv: Some(env.eval_str(UPSILON_INV)?),
        theta: env.eval_str(THETA)?,
        theta_inv: Some(env.eval_str(THETA_INV)?),
        varsigma: env.eval_str(VARSIGMA)?,
        nu: h.nu.clone(),
        nu_inv: h.nu_inv.clone(),
        qc,
    })
}

/// Axioms G1 to G3, the equal routes defining `varsigma`, invertibility
/// and comonoid-morphism properties of `nu`, `upsilon`, and `theta` as a
/// morphism of left `A ⊗ A ⊗ A`-comodules `P_l -> P_r`.
pub fn check_quantum_groupoid<S: Scalar>(qg: &QuantumGroupoidData<S>) -> Report {
    check_quantum_groupoid_with(qg, COACTION_PR)
}

/// As [`check_quantum_groupoid`] with the `P_r` coaction given by a term.
pub fn check_quantum_groupoid_with<S: Scalar>(qg: &QuantumGroupoidData<S>, pr: &str) -> Report {
    let mut r = Report::new("quantum_groupoid");
    let env = match qg.env().and_then(|mut env| {
        env.set_generator("Pl", env.eval_str(COACTION_PL)?);
        if qg.nu_inv.is_some() {
            env.set_generator("Pr", env.eval_str(pr)?);
        }
        Ok(env)
    }) {
        Ok(e) => e,
        Err(e) => {
            r.push(Item::fail("qg.data", "quantum groupoid data is well typed", Witness::note(&e.to_string())));
            return r;
        }
    };
    let list: &[(&str, &str, &str)] = &[
        ("G1", "s nu", "t"),
        ("G2", "t nu", "ups s"),
        ("varsigma.routes_agree", VARSIGMA, VARSIGMA_ALT),
        ("varsigma.given", "vs", VARSIGMA),
        ("G3_corrected", "(1[C C] x ups) c[C,C C] vs", "vs theta"),
        ("nu.comonoid_morphism", "delta nu", "(nu x nu) c delta"),
        ("nu.counit", "eps nu", "eps"),
        ("upsilon.typed", "eC ups eC", "ups"),
        ("upsilon.comonoid_morphism", "deltaC ups", "(ups x ups) c[C,C] c[C,C] deltaC"),
        ("upsilon.counit", "epsC ups", "epsC"),
        ("theta.typed", "m theta m", "theta"),
        ("theta.comodule_morphism", "(1 x 1 x 1 x theta) Pl", "Pr theta"),
        ("theta.coaction_l_counit", "(eps x eps x eps x 1 x 1) Pl", "m"),
        ("theta.coaction_r_counit", "(eps x eps x eps x 1 x 1) Pr", "m"),
    ];
    let inverses: &[(&str, &str, &str)] = &[
        ("nu.inverse_left", "nui nu", "1"),
        ("nu.inverse_right", "nu nui", "1"),
        ("upsilon.inverse_left", "upsi ups", "eC"),
        ("upsilon.inverse_right", "ups upsi", "eC"),
        ("theta.inverse_left", "thetai theta", "m"),
        ("theta.inverse_right", "theta thetai", "m"),
    ];
    let has_inverses = qg.nu_inv.is_some() && qg.upsilon_inv.is_some() && qg.theta_inv.is_some();
    for eq in eqs("", list) {
        if !has_inverses && eq.2.contains("Pr") {
            r.push(Item::skipped(&eq.0, &format!("{} = {}", eq.1, eq.2), "no inverse antipode"));
        } else {
            r.push(check_equation(&env, &eq.0, &eq.1, &eq.2));
        }
    }
    if has_inverses {
        run_equations(&env, &mut r, &eqs("", inverses));
    } else {
        for (id, l, rr) in inverses {
            r.push(Item::skipped(id, &format!("{l} = {rr}"), "inverses not supplied"));
        }
    }
    r.finish(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{crossing_sensitive_frobenius, frobenius_square, functions_frobenius, groupoid_algebra, walking_isomorphism};
    use crate::report::Verdict;
    use crate::scalar::Rat;

    fn show(r: &Report) -> String {
        r.failures().map(|i| format!("{} {} {:?}\n", i.id, i.citation, i.witness)).collect()
    }

    fn full<S: Scalar>(h: &WeakHopfData<S>) {
        let qc = quantum_category(&h.bimonoid).unwrap();
        let r = check_quantum_category(&qc);
        assert!(r.passed(), "{}", show(&r));
        let qg = quantum_groupoid(h).unwrap();
        let r = check_quantum_groupoid(&qg);
        assert!(r.passed(), "{}", show(&r));
    }

    #[test]
    fn groupoid_is_quantum_groupoid() {
        full(&groupoid_algebra::<Rat>(&walking_isomorphism(), &()).unwrap());
    }

    #[test]
    fn square_is_quantum_groupoid() {
        full(&frobenius_square(&functions_frobenius::<Rat>(2, &())).unwrap());
    }

    #[test]
    fn non_symmetric_square_is_quantum_groupoid() {
        full(&frobenius_square(&crossing_sensitive_frobenius(5).unwrap()).unwrap());
    }

    fn non_symmetric() -> WeakHopfData<crate::scalar::Fp> {
        frobenius_square(&crossing_sensitive_frobenius(5).unwrap()).unwrap()
    }

    #[test]
    fn only_one_pr_braiding_makes_theta_a_comodule_morphism() {
        let qg = quantum_groupoid(&non_symmetric()).unwrap();
        let verdict = |pr: &str| check_quantum_groupoid_with(&qg, pr).get("theta.comodule_morphism").unwrap().verdict;
        assert_eq!(verdict(COACTION_PR), Verdict::Pass);
        for pr in [
            "c[A A A A,A](1 x 1 x 1 x 1 x nui) dP",
            "(1 x 1 x ci[A,A A])(1 x 1 x 1 x 1 x nui) dP",
            "(1 x 1 x c[A A,A])(1 x 1 x 1 x 1 x nui) dP",
        ] {
            assert_eq!(verdict(pr), Verdict::Fail, "{pr}");
        }
    }

    #[test]
    fn mutations_are_caught() {
        let h = groupoid_algebra::<Rat>(&walking_isomorphism(), &()).unwrap();
        let mut qc = quantum_category(&h.bimonoid).unwrap();
        qc.eta = LinMap::identity(&h.bimonoid.carrier);
        let r = check_quantum_category(&qc);
        assert_eq!(r.get("B6.source").unwrap().verdict, Verdict::Fail);

        let mut qg = quantum_groupoid(&h).unwrap();
        qg.theta = qg.qc.p.e.clone();
        let r = check_quantum_groupoid(&qg);
        assert_eq!(r.get("theta.comodule_morphism").unwrap().verdict, Verdict::Fail);
        assert_eq!(r.get("G3_corrected").unwrap().verdict, Verdict::Fail);
    }

    #[test]
    fn g3_needs_the_forward_braiding() {
        let qg = quantum_groupoid(&non_symmetric()).unwrap();
        let env = qg.env().unwrap();
        let item = check_equation(&env, "g3", "(1[C C] x ups) ci[C,C C] vs", "vs theta");
        assert_eq!(item.verdict, Verdict::Fail);
    }
}
