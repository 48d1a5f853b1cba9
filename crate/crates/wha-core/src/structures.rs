//! Monoids, comonoids, Frobenius monoids, weak bimonoids and weak Hopf
//! monoids, with their checker suites and the antipode search.

use crate::diagram::Env;
use crate::error::{Error, Result};
use crate::exact_linear::{chain, compose, tensor, Bicharacter, LinMap, Space};
use crate::matrix::Mat;
use crate::registry;
use crate::report::{check_maps, run_identities, Item, Report, Verdict, Witness};
use crate::scalar::Scalar;

fn expect_boundary<S: Scalar>(name: &str, m: &LinMap<S>, src: &Space, tgt: &Space) -> Result<()> {
    if m.src() != src || m.tgt() != tgt {
        return Err(Error::DomainMismatch(format!(
            "{name} should be {src} -> {tgt}, found {} -> {}",
            m.src(),
            m.tgt()
        )));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct MonoidData<S> {
    pub carrier: Space,
    pub mu: LinMap<S>,
    pub eta: LinMap<S>,
}

impl<S: Scalar> MonoidData<S> {
    pub fn new(carrier: &Space, mu: LinMap<S>, eta: LinMap<S>) -> Result<Self> {
        let unit = Space::unit(carrier.group());
        expect_boundary("mu", &mu, &carrier.tensor(carrier), carrier)?;
        expect_boundary("eta", &eta, &unit, carrier)?;
        Ok(MonoidData { carrier: carrier.clone(), mu, eta })
    }
}

#[derive(Clone, Debug)]
pub struct ComonoidData<S> {
    pub carrier: Space,
    pub delta: LinMap<S>,
    pub epsilon: LinMap<S>,
}

impl<S: Scalar> ComonoidData<S> {
    pub fn new(carrier: &Space, delta: LinMap<S>, epsilon: LinMap<S>) -> Result<Self> {
        let unit = Space::unit(carrier.group());
        expect_boundary("delta", &delta, carrier, &carrier.tensor(carrier))?;
        expect_boundary("epsilon", &epsilon, carrier, &unit)?;
        Ok(ComonoidData { carrier: carrier.clone(), delta, epsilon })
    }
}

fn plain_env<S: Scalar>(carrier: &Space, chi: Option<&Bicharacter<S>>) -> Env<S> {
    let chi = chi
        .cloned()
        .unwrap_or_else(|| Bicharacter::trivial(carrier.group().clone()));
    Env::new(chi).object("A", carrier)
}

pub fn check_monoid<S: Scalar>(m: &MonoidData<S>) -> Report {
    let env = plain_env::<S>(&m.carrier, None)
        .generator("mu", &m.mu)
        .generator("eta", &m.eta);
    run_identities("monoid", &env, registry::MONOID)
}

pub fn check_comonoid<S: Scalar>(c: &ComonoidData<S>) -> Report {
    let env = plain_env::<S>(&c.carrier, None)
        .generator("delta", &c.delta)
        .generator("eps", &c.epsilon);
    run_identities("comonoid", &env, registry::COMONOID)
}

/// A monoid and comonoid on one carrier, with the pairing `rho = delta eta`
/// and copairing `sigma = eps mu`.
#[derive(Clone, Debug)]
pub struct FrobeniusData<S> {
    pub monoid: MonoidData<S>,
    pub comonoid: ComonoidData<S>,
    pub rho: LinMap<S>,
    pub sigma: LinMap<S>,
    pub chi: Bicharacter<S>,
}

impl<S: Scalar> FrobeniusData<S> {
    pub fn new(monoid: MonoidData<S>, comonoid: ComonoidData<S>, chi: Bicharacter<S>) -> Result<Self> {
        if monoid.carrier != comonoid.carrier {
            return Err(Error::DomainMismatch("monoid and comonoid carriers differ".into()));
        }
        let rho = compose(&comonoid.delta, &monoid.eta)?;
        let sigma = compose(&comonoid.epsilon, &monoid.mu)?;
        Ok(FrobeniusData { monoid, comonoid, rho, sigma, chi })
    }

    pub fn carrier(&self) -> &Space {
        &self.monoid.carrier
    }

    pub fn env(&self) -> Env<S> {
        Env::new(self.chi.clone())
            .object("A", self.carrier())
            .generator("mu", &self.monoid.mu)
            .generator("eta", &self.monoid.eta)
            .generator("delta", &self.comonoid.delta)
            .generator("eps", &self.comonoid.epsilon)
            .generator("rho", &self.rho)
            .generator("sigma", &self.sigma)
    }
}

/// Monoid, comonoid, Frobenius condition, the pairing triangles and
/// separability.
pub fn check_frobenius<S: Scalar>(fr: &FrobeniusData<S>) -> Report {
    let mut r = check_monoid(&fr.monoid);
    r.suite = "frobenius".into();
    r.extend(check_comonoid(&fr.comonoid));
    let env = fr.env();
    r.extend(run_identities("", &env, registry::FROBENIUS));
    r.extend(run_identities("", &env, registry::SEPARABLE));
    r.finish(None)
}

pub fn is_separable<S: Scalar>(fr: &FrobeniusData<S>) -> bool {
    let env = fr.env();
    run_identities("", &env, registry::SEPARABLE).passed()
}

/// Inverse of a morphism of Frobenius monoids `f: R -> S`, given by
/// `(1 x sigma_S)(1 x f x 1)(rho_R x 1)`; also checks the mirrored formula.
pub fn frobenius_inverse<S: Scalar>(
    f: &LinMap<S>,
    r: &FrobeniusData<S>,
    s: &FrobeniusData<S>,
) -> Result<LinMap<S>> {
    expect_boundary("f", f, r.carrier(), s.carrier())?;
    let fail = |what: &str| Error::NotFrobeniusMorphism(what.to_string());
    if compose(f, &r.monoid.mu)? != compose(&s.monoid.mu, &tensor(f, f))? {
        return Err(fail("does not preserve multiplication"));
    }
    if compose(f, &r.monoid.eta)? != s.monoid.eta {
        return Err(fail("does not preserve the unit"));
    }
    if compose(&tensor(f, f), &r.comonoid.delta)? != compose(&s.comonoid.delta, f)? {
        return Err(fail("does not preserve comultiplication"));
    }
    if compose(&s.comonoid.epsilon, f)? != r.comonoid.epsilon {
        return Err(fail("does not preserve the counit"));
    }
    let one_r = LinMap::identity(r.carrier());
    let one_s = LinMap::identity(s.carrier());
    let g = chain(&[
        &tensor(&one_r, &s.sigma),
        &tensor(&tensor(&one_r, f), &one_s),
        &tensor(&r.rho, &one_s),
    ])?;
    let mirrored = chain(&[
        &tensor(&s.sigma, &one_r),
        &tensor(&tensor(&one_s, f), &one_r),
        &tensor(&one_s, &r.rho),
    ])?;
    if g != mirrored {
        return Err(fail("the two inverse formulas disagree"));
    }
    if compose(&g, f)? != one_r || compose(f, &g)? != one_s {
        return Err(fail("candidate inverse is not two-sided"));
    }
    Ok(g)
}

/// A weak bimonoid with its derived source, target and rotated target.
#[derive(Clone, Debug)]
pub struct WeakBimonoidData<S> {
    pub carrier: Space,
    pub mu: LinMap<S>,
    pub eta: LinMap<S>,
    pub delta: LinMap<S>,
    pub epsilon: LinMap<S>,
    pub chi: Bicharacter<S>,
    pub s: LinMap<S>,
    pub t: LinMap<S>,
    pub r: LinMap<S>,
}

impl<S: Scalar> WeakBimonoidData<S> {
    pub fn new(
        carrier: &Space,
        mu: LinMap<S>,
        eta: LinMap<S>,
        delta: LinMap<S>,
        epsilon: LinMap<S>,
        chi: Bicharacter<S>,
    ) -> Result<Self> {
        MonoidData::new(carrier, mu.clone(), eta.clone())?;
        ComonoidData::new(carrier, delta.clone(), epsilon.clone())?;
        if carrier.group() != chi.group() {
            return Err(Error::DomainMismatch("carrier and bicharacter groups differ".into()));
        }
        let id = LinMap::identity(carrier);
        let mut w = WeakBimonoidData {
            carrier: carrier.clone(),
            mu,
            eta,
            delta,
            epsilon,
            chi,
            s: id.clone(),
            t: id.clone(),
            r: id,
        };
        w.rederive()?;
        Ok(w)
    }

    /// Recompute `s`, `t`, `r` from the structure maps.
    pub fn rederive(&mut self) -> Result<()> {
        let (s, t, r) = derive_stn(self)?;
        self.s = s;
        self.t = t;
        self.r = r;
        Ok(())
    }

    pub fn rho(&self) -> LinMap<S> {
        compose(&self.delta, &self.eta).expect("boundaries checked")
    }

    pub fn sigma(&self) -> LinMap<S> {
        compose(&self.epsilon, &self.mu).expect("boundaries checked")
    }

    pub fn monoid(&self) -> MonoidData<S> {
        MonoidData { carrier: self.carrier.clone(), mu: self.mu.clone(), eta: self.eta.clone() }
    }

    pub fn comonoid(&self) -> ComonoidData<S> {
        ComonoidData {
            carrier: self.carrier.clone(),
            delta: self.delta.clone(),
            epsilon: self.epsilon.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// Environment binding `A` and the generators listed in [`crate::registry`].
    pub fn env(&self) -> Env<S> {
        Env::new(self.chi.clone())
            .object("A", &self.carrier)
            .generator("mu", &self.mu)
            .generator("eta", &self.eta)
            .generator("delta", &self.delta)
            .generator("eps", &self.epsilon)
            .generator("rho", &self.rho())
            .generator("sigma", &self.sigma())
            .generator("s", &self.s)
            .generator("t", &self.t)
            .generator("r", &self.r)
    }
}

/// Evaluate the defining diagrams of `s`, `t` and `r`.
pub fn derive_stn<S: Scalar>(w: &WeakBimonoidData<S>) -> Result<(LinMap<S>, LinMap<S>, LinMap<S>)> {
    let env = Env::new(w.chi.clone())
        .object("A", &w.carrier)
        .generator("rho", &w.rho())
        .generator("sigma", &w.sigma());
    let get = |id: &str| {
        let ident = registry::DERIVED_DEFINITIONS
            .iter()
            .find(|i| i.id == id)
            .expect("registered definition");
        env.eval_str(ident.rhs)
    };
    Ok((get("defn.source")?, get("defn.target")?, get("defn.rotated")?))
}

/// Monoid and comonoid axioms plus the weak compatibility axioms.
pub fn check_weak_bimonoid<S: Scalar>(w: &WeakBimonoidData<S>) -> Report {
    let mut r = check_monoid(&w.monoid());
    r.extend(check_comonoid(&w.comonoid()));
    r.extend(run_identities("", &w.env(), registry::WEAK_BIMONOID));
    r.suite = "weak_bimonoid".into();
    r.finish(None)
}

/// Properties of `s`, `t`, their interaction, and of `r`.
pub fn check_st_properties<S: Scalar>(w: &WeakBimonoidData<S>) -> Report {
    let env = w.env();
    let mut r = Report::new("source_target");
    for group in [
        registry::DERIVED_DEFINITIONS,
        registry::SOURCE_PROPERTIES,
        registry::TARGET_PROPERTIES,
        registry::SOURCE_TARGET_INTERACTION,
        registry::ROTATED_PROPERTIES,
    ] {
        r.extend(run_identities("", &env, group));
    }
    r.finish(None)
}

/// Certify that ordinary bialgebra laws fail. An item passes when the law
/// fails, and carries the failing entry as witness; it is skipped when the
/// law happens to hold (the structure is not genuinely weak there).
pub fn weakness_witnesses<S: Scalar>(w: &WeakBimonoidData<S>) -> Report {
    let env = w.env();
    let mut r = Report::new("weakness");
    for ident in registry::BIALGEBRA_LAWS {
        let probe = crate::report::check_identity(&env, ident);
        let statement = format!("{} != {}", ident.lhs, ident.rhs);
        let item = match probe.verdict {
            Verdict::Fail if probe.witness.as_ref().is_some_and(|w| !w.row.is_empty()) => {
                let mut it = Item::pass(ident.id, &statement);
                it.witness = probe.witness;
                it
            }
            Verdict::Pass => Item::skipped(ident.id, &statement, "law holds"),
            _ => probe,
        };
        r.push(item);
    }
    r.push(crate::report::check_identity(&env, &registry::WEAK_BIMONOID[0]));
    r.finish(None)
}

/// `f * g = mu (f x g) delta`.
pub fn convolution<S: Scalar>(f: &LinMap<S>, g: &LinMap<S>, w: &WeakBimonoidData<S>) -> Result<LinMap<S>> {
    expect_boundary("f", f, &w.carrier, &w.carrier)?;
    expect_boundary("g", g, &w.carrier, &w.carrier)?;
    chain(&[&w.mu, &tensor(f, g), &w.delta])
}

#[derive(Clone, Debug)]
pub struct WeakHopfData<S> {
    pub bimonoid: WeakBimonoidData<S>,
    pub nu: LinMap<S>,
    pub nu_inv: Option<LinMap<S>>,
}

impl<S: Scalar> WeakHopfData<S> {
    pub fn new(bimonoid: WeakBimonoidData<S>, nu: LinMap<S>, nu_inv: Option<LinMap<S>>) -> Result<Self> {
        expect_boundary("nu", &nu, &bimonoid.carrier, &bimonoid.carrier)?;
        if let Some(ni) = &nu_inv {
            expect_boundary("nu_inv", ni, &bimonoid.carrier, &bimonoid.carrier)?;
        }
        Ok(WeakHopfData { bimonoid, nu, nu_inv })
    }

    /// Attach the inverse of `nu`, computed exactly.
    pub fn with_computed_inverse(mut self) -> Result<Self> {
        let inv = self.nu.to_mat().inverse().ok_or(Error::AntipodeNotInvertible)?;
        let a = &self.bimonoid.carrier;
        self.nu_inv = Some(LinMap::from_mat(a, a, &inv)?);
        Ok(self)
    }

    pub fn env(&self) -> Env<S> {
        let mut env = self.bimonoid.env().generator("nu", &self.nu);
        if let Some(ni) = &self.nu_inv {
            env.set_generator("nui", ni.clone());
        }
        env
    }
}

/// Antipode axioms, their consequences, and invertibility when an inverse
/// is supplied.
pub fn check_weak_hopf<S: Scalar>(h: &WeakHopfData<S>) -> Report {
    let env = h.env();
    let mut r = Report::new("weak_hopf");
    r.extend(run_identities("", &env, registry::ANTIPODE_AXIOMS));
    r.extend(run_identities("", &env, registry::ANTIPODE_CONSEQUENCES));
    if h.nu_inv.is_some() {
        r.extend(run_identities("", &env, registry::ANTIPODE_INVERSE));
    } else {
        for i in registry::ANTIPODE_INVERSE {
            r.push(Item::skipped(i.id, &i.statement(), "no inverse supplied"));
        }
    }
    r.finish(None)
}

/// Outcome of the antipode search.
#[derive(Clone, Debug)]
pub struct AntipodeSearch<S> {
    /// Whether `nu * 1 = t`, `1 * nu = r` has any solution.
    pub linear_solvable: bool,
    /// Dimension of the solution space of the homogeneous system.
    pub kernel_dim: usize,
    pub antipode: Option<LinMap<S>>,
}

/// Solve the two convolution equations, which are linear in `nu`, then
/// test the third axiom. If `nu0` solves the linear pair, every antipode
/// equals `nu0 * 1 * nu0`, so one candidate decides existence and the
/// answer is unique.
pub fn antipode_search<S: Scalar>(w: &WeakBimonoidData<S>) -> Result<AntipodeSearch<S>> {
    let a = &w.carrier;
    let n = a.dim();
    let grades = a.grade_codes();
    let vars: Vec<(usize, usize)> = (0..n)
        .flat_map(|l| (0..n).map(move |j| (l, j)))
        .filter(|&(l, j)| grades[l] == grades[j])
        .collect();
    let mut var_index = vec![usize::MAX; n * n];
    for (k, &(l, j)) in vars.iter().enumerate() {
        var_index[l * n + j] = k;
    }
    // Rows: (m, i) for nu * 1 = t, then (m, i) for 1 * nu = r.
    let mut mat: Mat<S> = Mat::zeros(2 * n * n, vars.len());
    let mut rhs = vec![S::zero(); 2 * n * n];
    for i in 0..n {
        for m in 0..n {
            rhs[m * n + i] = w.t.get(m, i);
            rhs[n * n + m * n + i] = w.r.get(m, i);
        }
        for (ab, c) in w.delta.column(i) {
            let (x, y) = (ab / n, ab % n);
            for l in 0..n {
                // nu * 1: nu acts on the left factor x.
                let k = var_index[l * n + x];
                if k != usize::MAX {
                    for (mrow, v) in w.mu.column(l * n + y) {
                        let row = mrow * n + i;
                        let cur = mat.get(row, k).clone();
                        mat.set(row, k, cur + c.clone() * v.clone());
                    }
                }
                // 1 * nu: nu acts on the right factor y.
                let k = var_index[l * n + y];
                if k != usize::MAX {
                    for (mrow, v) in w.mu.column(x * n + l) {
                        let row = n * n + mrow * n + i;
                        let cur = mat.get(row, k).clone();
                        mat.set(row, k, cur + c.clone() * v.clone());
                    }
                }
            }
        }
    }
    let Some((x, kernel)) = mat.solve(&rhs) else {
        return Ok(AntipodeSearch { linear_solvable: false, kernel_dim: 0, antipode: None });
    };
    let entries = vars.iter().zip(&x).map(|(&(l, j), v)| (l, j, v.clone()));
    let nu0 = LinMap::from_entries(a, a, entries)?;
    let id = LinMap::identity(a);
    let candidate = convolution(&convolution(&nu0, &id, w)?, &nu0, w)?;
    let ok = convolution(&candidate, &id, w)? == w.t
        && convolution(&id, &candidate, w)? == w.r
        && convolution(&convolution(&candidate, &id, w)?, &candidate, w)? == candidate;
    Ok(AntipodeSearch {
        linear_solvable: true,
        kernel_dim: kernel.len(),
        antipode: ok.then_some(candidate),
    })
}

pub fn find_antipode<S: Scalar>(w: &WeakBimonoidData<S>) -> Option<LinMap<S>> {
    antipode_search(w).ok().and_then(|s| s.antipode)
}

/// Report item for the search, comparing with a supplied antipode if any.
pub fn antipode_report<S: Scalar>(w: &WeakBimonoidData<S>, supplied: Option<&LinMap<S>>) -> Report {
    let mut r = Report::new("antipode_search");
    let citation = "nu * 1 = t, 1 * nu = r, nu * 1 * nu = nu (solved exactly; unique)";
    match antipode_search(w) {
        Err(e) => r.push(Item::fail("antipode_search.exists", citation, Witness::note(&e.to_string()))),
        Ok(res) => match (&res.antipode, supplied) {
            (None, _) => {
                let why = if res.linear_solvable {
                    "candidate nu*1*nu fails the antipode axioms"
                } else {
                    "the linear system nu*1 = t, 1*nu = r has no solution"
                };
                r.push(Item::fail("antipode_search.exists", citation, Witness::note(&format!("no antipode exists: {why}"))));
            }
            (Some(found), supplied) => {
                r.push(Item::pass("antipode_search.exists", citation).with_detail(format!(
                    "kernel dimension of the linear system: {}",
                    res.kernel_dim
                )));
                if let Some(given) = supplied {
                    r.push(check_maps("antipode_search.matches_supplied", "found nu = supplied nu", found, given));
                }
            }
        },
    }
    r.finish(None)
}
