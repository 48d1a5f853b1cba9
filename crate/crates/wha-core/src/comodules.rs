//! Right comodules over a weak bimonoid `A`, the induced bicomodules over
//! `C`, the tensor product over `C`, and duals over a weak Hopf monoid.
//!
//! Every comodule lives in the Cauchy completion: it carries an idempotent
//! `e` (the identity for ordinary comodules, `t` for `C` itself) and all
//! equations are stated up to these idempotents.

use crate::diagram::Env;
use crate::error::Result;
use crate::exact_linear::{compose, dual_space, equalizer, image_contained, LinMap, Space};
use crate::report::{check_equation, run_equations, Item, Report, Witness};
use crate::scalar::Scalar;
use crate::structures::{WeakBimonoidData, WeakHopfData};

#[derive(Clone, Debug)]
pub struct ComoduleData<S> {
    /// Identifier used in term syntax and report ids.
    pub name: String,
    pub space: Space,
    pub e: LinMap<S>,
    pub gamma: LinMap<S>,
}

/// `A` coacting on itself by `delta`.
pub fn regular_comodule<S: Scalar>(w: &WeakBimonoidData<S>, name: &str) -> ComoduleData<S> {
    ComoduleData {
        name: name.into(),
        space: w.carrier.clone(),
        e: LinMap::identity(&w.carrier),
        gamma: w.delta.clone(),
    }
}

/// `C = (A, t)` with coaction `delta t`.
pub fn object_comodule<S: Scalar>(w: &WeakBimonoidData<S>) -> ComoduleData<S> {
    ComoduleData {
        name: "C".into(),
        space: w.carrier.clone(),
        e: w.t.clone(),
        gamma: compose(&w.delta, &w.t).expect("endomorphism"),
    }
}

/// Substitute `{X}`, `{Y}`, `{Z}` in a term template.
fn fill(template: &str, names: &[&str]) -> String {
    let mut out = template.to_string();
    for (k, n) in names.iter().enumerate() {
        out = out.replace(["{X}", "{Y}", "{Z}"][k], n);
    }
    out
}

/// Bind a comodule's object `X`, coaction `gX`, idempotent `eX` and the
/// induced coactions `glX`, `grX`, `fullX`.
fn bind<S: Scalar>(env: &mut Env<S>, m: &ComoduleData<S>) -> Result<()> {
    let x = m.name.as_str();
    env.objects.insert(x.into(), m.space.clone());
    env.set_generator(&format!("g{x}"), m.gamma.clone());
    env.set_generator(&format!("e{x}"), m.e.clone());
    for (gen, template) in [("gl", INDUCED_LEFT), ("gr", INDUCED_RIGHT), ("full", INDUCED_FULL)] {
        let map = env.eval_str(&fill(template, &[x]))?;
        env.set_generator(&format!("{gen}{x}"), map);
    }
    Ok(())
}

pub const INDUCED_LEFT: &str = "(s x 1[{X}]) ci[A,{X}] g{X}";
pub const INDUCED_RIGHT: &str = "(1[{X}] x t) g{X}";
pub const INDUCED_FULL: &str = "(s x 1[{X}] x t)(ci[A,{X}] x 1)(1[{X}] x delta) g{X}";
pub const COSPLIT_D: &str = "(1[{X}] x sigma x 1[{Y}])(g{X} x t x 1[{Y}])";
pub const TENSOR_M_SIMPLIFIED: &str =
    "(1[{X}] x sigma x 1[{Y}])(g{X} x 1 x 1[{Y}])(1[{X}] x ci[A,{Y}])(1[{X}] x g{Y})";
pub const TENSOR_COACTION: &str = "(1[{X} {Y}] x mu)(1[{X}] x c[A,{Y}] x 1)(g{X} x g{Y})";
pub const UNIT_RIGHT: &str = "(1[{X}] x sigma)(g{X} x t)";
pub const UNIT_LEFT: &str = "(sigma x 1[{X}])(t x ci[A,{X}] g{X})";

/// A weak bimonoid environment with the given comodules bound.
pub fn comodule_env<S: Scalar>(w: &WeakBimonoidData<S>, mods: &[&ComoduleData<S>]) -> Result<Env<S>> {
    let mut env = w.env();
    for m in mods {
        bind(&mut env, m)?;
    }
    Ok(env)
}

/// Coassociativity, counit, compatibility with the idempotent, and the
/// induced bicomodule structure.
pub fn check_comodule<S: Scalar>(w: &WeakBimonoidData<S>, m: &ComoduleData<S>) -> Report {
    let mut r = Report::new("comodule");
    let env = match comodule_env(w, &[m]) {
        Ok(e) => e,
        Err(e) => {
            r.push(Item::fail(&format!("comodule.{}.bind", m.name), "coactions are well typed", Witness::note(&e.to_string())));
            return r;
        }
    };
    let x = m.name.as_str();
    let t = |id: &str, l: &str, rr: &str| (format!("comodule.{x}.{id}"), fill(l, &[x]), fill(rr, &[x]));
    let idents = vec![
        t("typed", "(e{X} x 1) g{X} e{X}", "g{X}"),
        t("coassociativity", "(g{X} x 1) g{X}", "(1[{X}] x delta) g{X}"),
        t("counit", "(1[{X}] x eps) g{X}", "e{X}"),
        t("left_coassociativity", "((t x t) delta x 1[{X}]) gl{X}", "(1 x gl{X}) gl{X}"),
        t("left_counit", "(eps x 1[{X}]) gl{X}", "e{X}"),
        t("right_coassociativity", "(1[{X}] x (t x t) delta) gr{X}", "(gr{X} x 1) gr{X}"),
        t("right_counit", "(1[{X}] x eps) gr{X}", "e{X}"),
        t("bicomodule_square", "(1 x gr{X}) gl{X}", "(gl{X} x 1) gr{X}"),
        t("bicomodule_full", "full{X}", "(1 x gr{X}) gl{X}"),
    ];
    run_equations(&env, &mut r, &idents);
    r.finish(None)
}

/// The tensor product over `C` as a comodule `(X ⊗ Y, m, gamma)` named `XY`.
pub struct TensorOverC<S> {
    pub d: LinMap<S>,
    pub m: LinMap<S>,
    pub comodule: ComoduleData<S>,
}

/// The idempotent `m = d (1 x gamma_l)` on `X ⊗ Y` and the coaction
/// `(m x 1) gamma m` of the tensor product.
pub fn tensor_over_c<S: Scalar>(w: &WeakBimonoidData<S>, x: &ComoduleData<S>, y: &ComoduleData<S>) -> Result<TensorOverC<S>> {
    let env = comodule_env(w, &[x, y])?;
    let names = [x.name.as_str(), y.name.as_str()];
    let d = env.eval_str(&fill(COSPLIT_D, &names))?;
    let gl = env.eval_str(&format!("1[{}] x gl{}", names[0], names[1]))?;
    let m = compose(&d, &gl)?;
    let raw = env.eval_str(&fill(TENSOR_COACTION, &names))?;
    let ident_a = LinMap::identity(&w.carrier);
    let gamma = compose(&crate::exact_linear::tensor(&m, &ident_a), &compose(&raw, &m)?)?;
    Ok(TensorOverC {
        d,
        comodule: ComoduleData {
            name: format!("{}{}", names[0], names[1]),
            space: x.space.tensor(&y.space),
            e: m.clone(),
            gamma,
        },
        m,
    })
}

/// Cosplit laws, the simplified form and idempotence of `m`, agreement of
/// its image with the equalizer, and the comodule structure on `X ⊗_C Y`.
pub fn check_tensor<S: Scalar>(w: &WeakBimonoidData<S>, x: &ComoduleData<S>, y: &ComoduleData<S>) -> Report {
    let mut r = Report::new("tensor_over_c");
    let tag = format!("tensor.{}_{}", x.name, y.name);
    let tp = match tensor_over_c(w, x, y) {
        Ok(tp) => tp,
        Err(e) => {
            r.push(Item::fail(&format!("{tag}.build"), "tensor over C is well typed", Witness::note(&e.to_string())));
            return r;
        }
    };
    let mut env = comodule_env(w, &[x, y]).expect("bound in tensor_over_c");
    let (xn, yn) = (x.name.as_str(), y.name.as_str());
    env.set_generator(&format!("d{xn}{yn}"), tp.d.clone());
    env.set_generator(&format!("m{xn}{yn}"), tp.m.clone());
    env.set_generator(&format!("raw{xn}{yn}"), env.eval_str(&fill(TENSOR_COACTION, &[xn, yn])).expect("typed"));
    let t = |id: &str, l: &str, rr: &str| {
        let l = fill(l, &[xn, yn]).replace("{XY}", &format!("{xn}{yn}"));
        let rr = fill(rr, &[xn, yn]).replace("{XY}", &format!("{xn}{yn}"));
        (format!("{tag}.{id}"), l, rr)
    };
    let idents = vec![
        t("cosplit_retraction", "d{XY} (gr{X} x e{Y})", "e{X} x e{Y}"),
        t("cosplit_fork", "(gr{X} x 1[{Y}]) d{XY} (1[{X}] x gl{Y})", "(1[{X}] x gl{Y}) d{XY} (1[{X}] x gl{Y})"),
        t("m_simplified", "m{XY}", TENSOR_M_SIMPLIFIED),
        t("m_idempotent", "m{XY} m{XY}", "m{XY}"),
        t("m_absorbs_idempotents", "m{XY} (e{X} x e{Y})", "m{XY}"),
        t("m_equalizes", "(gr{X} x 1[{Y}]) m{XY}", "(1[{X}] x gl{Y}) m{XY}"),
        t("coaction_commutes_with_m", "(m{XY} x 1) raw{XY} m{XY}", "raw{XY} m{XY}"),
        t("coaction_typed", "(m{XY} x 1) raw{XY} m{XY}", "(m{XY} x 1) raw{XY}"),
    ];
    run_equations(&env, &mut r, &idents);
    r.push(equalizer_agreement(&format!("{tag}.image_is_equalizer"), &env, x, y, &tp.m));
    let c = check_comodule(w, &tp.comodule);
    for it in c.items {
        r.push(Item { id: it.id.replacen("comodule.", &format!("{tag}.as_comodule."), 1), ..it });
    }
    r.finish(None)
}

/// The equalizer of `(gamma_r x 1, 1 x gamma_l)` inside the image of
/// `e_X x e_Y`, computed by a kernel, against the image of `m`.
fn equalizer_agreement<S: Scalar>(id: &str, env: &Env<S>, x: &ComoduleData<S>, y: &ComoduleData<S>, m: &LinMap<S>) -> Item {
    let (xn, yn) = (x.name.as_str(), y.name.as_str());
    let terms = [format!("e{xn} x e{yn}"), format!("gr{xn} x 1[{yn}]"), format!("1[{xn}] x gl{yn}")];
    equalizer_oracle(id, env, &terms, m)
}

/// Compare the image of `m` with the equalizer of `f e` and `g e`, where
/// `terms = [e, f, g]`; computed by a kernel, independently of `m`.
pub(crate) fn equalizer_oracle<S: Scalar>(id: &str, env: &Env<S>, terms: &[String; 3], m: &LinMap<S>) -> Item {
    let citation = format!("image m = equalizer of ({}, {}) on the image of {}", terms[1], terms[2], terms[0]);
    let result = (|| -> Result<(usize, usize, bool, bool)> {
        let e = env.eval_str(&terms[0])?;
        let f = compose(&env.eval_str(&terms[1])?, &e)?;
        let g = compose(&env.eval_str(&terms[2])?, &e)?;
        let (_, incl) = equalizer(&f, &g)?;
        let eq = compose(&e, &incl)?;
        Ok((eq.rank(), m.rank(), image_contained(m, &eq), image_contained(&eq, m)))
    })();
    match result {
        Ok((a, b, c1, c2)) => Item::check(id, &citation, a == b && c1 && c2, || {
            Witness::note(&format!("equalizer dim {a}, image dim {b}, containments {c1}/{c2}"))
        })
        .with_detail(format!("dimension {b}")),
        Err(e) => Item::fail(id, &citation, Witness::note(&e.to_string())),
    }
}

/// Unit isomorphisms `X ⊗_C C ≅ X ≅ C ⊗_C X` with their comodule-morphism
/// checks and the two auxiliary identities behind them.
pub fn check_unit_isos<S: Scalar>(w: &WeakBimonoidData<S>, x: &ComoduleData<S>) -> Report {
    let mut r = Report::new("unit_isos");
    let c = object_comodule(w);
    let tag = format!("unit.{}", x.name);
    let built = (|| -> Result<(Env<S>, TensorOverC<S>, TensorOverC<S>)> {
        let xc = tensor_over_c(w, x, &c)?;
        let cx = tensor_over_c(w, &c, x)?;
        let mut env = comodule_env(w, &[x, &c])?;
        bind(&mut env, &xc.comodule)?;
        bind(&mut env, &cx.comodule)?;
        Ok((env, xc, cx))
    })();
    let (mut env, xc, cx) = match built {
        Ok(b) => b,
        Err(e) => {
            r.push(Item::fail(&format!("{tag}.build"), "unit isomorphisms are well typed", Witness::note(&e.to_string())));
            return r;
        }
    };
    let xn = x.name.as_str();
    env.set_generator("phi", env.eval_str(&fill(UNIT_RIGHT, &[xn])).expect("typed"));
    env.set_generator("psi", env.eval_str(&fill(UNIT_LEFT, &[xn])).expect("typed"));
    let (xcn, cxn) = (xc.comodule.name.clone(), cx.comodule.name.clone());
    let t = |id: &str, l: &str, rr: &str| {
        let sub = |s: &str| fill(s, &[xn]).replace("{XC}", &xcn).replace("{CX}", &cxn);
        (format!("{tag}.{id}"), sub(l), sub(rr))
    };
    let idents = vec![
        t("right_retraction", "phi gr{X}", "e{X}"),
        t("right_section", "gr{X} phi e{XC}", "e{XC}"),
        t("right_phi_comodule_morphism", "(phi x 1) g{XC}", "g{X} phi e{XC}"),
        t("right_gamma_comodule_morphism", "g{XC} gr{X}", "(gr{X} x 1) g{X}"),
        t("left_retraction", "psi gl{X}", "e{X}"),
        t("left_section", "gl{X} psi e{CX}", "e{CX}"),
        t("left_psi_comodule_morphism", "(psi x 1) g{CX}", "g{X} psi e{CX}"),
        t("left_gamma_comodule_morphism", "g{CX} gl{X}", "(gl{X} x 1) g{X}"),
        t(
            "aux_right",
            "(1[{X}] x 1 x mu)(1[{X}] x c[A,C] x 1)(g{X} x delta t)",
            "(1[{X}] x t x mu (1 x t))((1[{X}] x delta) g{X} x 1)",
        ),
        t(
            "aux_left",
            "(1 x 1[{X}] x mu)(1 x c[A,{X}] x 1)(delta t x g{X})",
            "(s x 1[{X}] x mu)(ci[A,{X}] x 1 x 1)(g{X} x t x 1)(c[C,{X}] x 1)(1 x g{X})",
        ),
    ];
    env.objects.insert("C".into(), w.carrier.clone());
    run_equations(&env, &mut r, &idents);
    r.finish(None)
}

/// Strict associativity: the idempotents of `(X ⊗_C Y) ⊗_C Z` and
/// `X ⊗_C (Y ⊗_C Z)` on `X ⊗ Y ⊗ Z` are equal.
pub fn check_associativity<S: Scalar>(w: &WeakBimonoidData<S>, x: &ComoduleData<S>, y: &ComoduleData<S>, z: &ComoduleData<S>) -> Item {
    let id = format!("assoc.{}_{}_{}", x.name, y.name, z.name);
    let citation = "idempotent of (X (x)C Y) (x)C Z = idempotent of X (x)C (Y (x)C Z)";
    let result = (|| -> Result<Option<crate::exact_linear::Difference<S>>> {
        let xy = tensor_over_c(w, x, y)?;
        let yz = tensor_over_c(w, y, z)?;
        let u = tensor_over_c(w, &xy.comodule, z)?.m;
        let v = tensor_over_c(w, x, &yz.comodule)?.m;
        let v = v.retyped(u.src(), u.tgt())?;
        u.first_difference(&v)
    })();
    match result {
        Ok(None) => Item::pass(&id, citation),
        Ok(Some(_)) => Item::fail(&id, citation, Witness::note("idempotents differ")),
        Err(e) => Item::fail(&id, citation, Witness::note(&e.to_string())),
    }
}

/// The forgetful functor to `C`-bicomodules is strong monoidal: the
/// bicomodule coaction of `UX ⊗_C UY` equals that of `U(X ⊗_C Y)`.
pub fn forgetful_strong_monoidal_check<S: Scalar>(w: &WeakBimonoidData<S>, x: &ComoduleData<S>, y: &ComoduleData<S>) -> Report {
    forgetful_with(w, x, y, INDUCED_FULL)
}

/// As [`forgetful_strong_monoidal_check`], with the full induced coaction of
/// the tensor product given by `full_template`.
pub fn forgetful_with<S: Scalar>(w: &WeakBimonoidData<S>, x: &ComoduleData<S>, y: &ComoduleData<S>, full_template: &str) -> Report {
    let mut r = Report::new("forgetful");
    let id = format!("forgetful.{}_{}", x.name, y.name);
    let citation = "(1 x m x 1)(gamma_l x gamma_r) m = (1 x m x 1) full coaction of X (x)C Y";
    let result = (|| -> Result<Item> {
        let tp = tensor_over_c(w, x, y)?;
        let mut env = comodule_env(w, &[x, y, &tp.comodule])?;
        let xy = tp.comodule.name.as_str();
        env.set_generator("fullP", env.eval_str(&fill(full_template, &[xy]))?);
        let lhs = format!("(1 x e{xy} x 1)(gl{} x gr{}) e{xy}", x.name, y.name);
        let rhs = format!("(1 x e{xy} x 1) fullP");
        Ok(check_equation(&env, &id, &lhs, &rhs))
    })();
    r.push(match result {
        Ok(mut it) => {
            it.citation = citation.into();
            it
        }
        Err(e) => Item::fail(&id, citation, Witness::note(&e.to_string())),
    });
    r.finish(None)
}

pub const DUAL_COACTION: &str =
    "(e{Y} x nu) c[A,{Y}] (ev[{X}] x 1 x 1[{Y}])(1[{Y}] x g{X} x 1[{Y}])(1[{Y}] x coev[{X}]) e{Y}";
pub const DUAL_IDEMPOTENT: &str = "(ev[{X}] x 1[{Y}])(1[{Y}] x e{X} x 1[{Y}])(1[{Y}] x coev[{X}])";
pub const DUAL_EVAL: &str = "t (ev[{X}] x 1)(1[{Y}] x g{X})";
pub const DUAL_COEVAL: &str =
    "(1[{X} {Y}] x sigma (r x t))(1[{X}] x c[A,{Y}] x 1)(g{X} x 1[{Y}] x 1)(coev[{X}] x 1)";

/// The dual comodule `X*` (named `<X>d`) with evaluation and coevaluation.
pub struct DualComodule<S> {
    pub dual: ComoduleData<S>,
    pub eval: LinMap<S>,
    pub coeval: LinMap<S>,
}

pub fn dual_comodule<S: Scalar>(h: &WeakHopfData<S>, x: &ComoduleData<S>) -> Result<DualComodule<S>> {
    let w = &h.bimonoid;
    let dname = format!("{}d", x.name);
    let dspace = dual_space::<S>(&x.space).space;
    let mut env = comodule_env(w, &[x])?;
    env.set_generator("nu", h.nu.clone());
    env.objects.insert(dname.clone(), dspace.clone());
    let names = [x.name.as_str(), dname.as_str()];
    let e = env.eval_str(&fill(DUAL_IDEMPOTENT, &names))?;
    env.set_generator(&format!("e{dname}"), e.clone());
    let gamma = env.eval_str(&fill(DUAL_COACTION, &names))?;
    let eval = env.eval_str(&fill(DUAL_EVAL, &names))?;
    let coeval = env.eval_str(&fill(DUAL_COEVAL, &names))?;
    Ok(DualComodule {
        dual: ComoduleData { name: dname, space: dspace, e, gamma },
        eval,
        coeval,
    })
}

/// Comodule axioms for `X*`, evaluation and coevaluation as comodule
/// morphisms, and both triangle identities.
pub fn check_dual<S: Scalar>(h: &WeakHopfData<S>, x: &ComoduleData<S>) -> Report {
    let w = &h.bimonoid;
    let mut r = Report::new("dual_comodule");
    let tag = format!("dual.{}", x.name);
    let built = (|| -> Result<(Env<S>, String, String)> {
        let d = dual_comodule(h, x)?;
        let c = object_comodule(w);
        let dx = tensor_over_c(w, &d.dual, x)?;
        let xd = tensor_over_c(w, x, &d.dual)?;
        let mut env = comodule_env(w, &[x, &d.dual, &c, &dx.comodule, &xd.comodule])?;
        let ev = compose(&w.t, &compose(&d.eval, &dx.m)?)?;
        let co = compose(&xd.m, &compose(&d.coeval, &w.t)?)?;
        env.set_generator("ev1", ev);
        env.set_generator("co1", co);
        env.set_generator("phi", env.eval_str(&fill(UNIT_RIGHT, &[&x.name]))?);
        env.set_generator("psi", env.eval_str(&fill(UNIT_LEFT, &[&d.dual.name]))?);
        let mut sub = check_comodule(w, &d.dual);
        for it in sub.items.drain(..) {
            r.push(Item { id: it.id.replacen("comodule.", &format!("{tag}.as_comodule."), 1), ..it });
        }
        Ok((env, dx.comodule.name, xd.comodule.name))
    })();
    let (env, dxn, xdn) = match built {
        Ok(b) => b,
        Err(e) => {
            r.push(Item::fail(&format!("{tag}.build"), "dual comodule is well typed", Witness::note(&e.to_string())));
            return r;
        }
    };
    let xn = x.name.as_str();
    let dn = format!("{xn}d");
    let t = |id: &str, l: &str, rr: &str| {
        let sub = |s: &str| fill(s, &[xn, &dn]).replace("{DX}", &dxn).replace("{XD}", &xdn);
        (format!("{tag}.{id}"), sub(l), sub(rr))
    };
    let idents = vec![
        t("eval_comodule_morphism", "(ev1 x 1) g{DX}", "gC ev1"),
        t("coeval_comodule_morphism", "g{XD} co1", "(co1 x 1) gC"),
        t("triangle_right", "phi (1[{X}] x ev1)(co1 x 1[{X}]) gl{X}", "e{X}"),
        t("triangle_left", "psi (ev1 x 1[{Y}])(1[{Y}] x co1) gr{Y}", "e{Y}"),
    ];
    run_equations(&env, &mut r, &idents);
    r.finish(None)
}

/// All comodule suites for the regular comodule `M` and `C`.
pub fn check_comodules<S: Scalar>(h: &WeakBimonoidData<S>, hopf: Option<&WeakHopfData<S>>) -> Report {
    let m = regular_comodule(h, "M");
    let c = object_comodule(h);
    let mut r = Report::new("comodules");
    for x in [&m, &c] {
        r.extend(check_comodule(h, x));
        r.extend(check_unit_isos(h, x));
    }
    for (x, y) in [(&m, &m), (&m, &c), (&c, &m), (&c, &c)] {
        r.extend(check_tensor(h, x, y));
    }
    for (x, y) in [(&m, &m), (&m, &c)] {
        r.extend(forgetful_strong_monoidal_check(h, x, y));
    }
    for (x, y, z) in [(&m, &m, &m), (&m, &c, &m)] {
        r.push(check_associativity(h, x, y, z));
    }
    match hopf {
        Some(hh) => {
            for x in [&m, &c] {
                r.extend(check_dual(hh, x));
            }
        }
        None => r.push(Item::skipped("dual", "duals need an antipode", "no antipode")),
    }
    r.finish(None)
}
