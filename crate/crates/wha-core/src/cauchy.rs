//! The Cauchy completion: objects `(X, e)` with `e` idempotent, morphisms
//! `f` with `e' f e = f`, and the object of objects `C = (A, t)`.

use crate::diagram::Env;
use crate::error::{Error, Result};
use crate::exact_linear::{compose, tensor, LinMap, Space};
use crate::report::{check_maps, run_identities, Identity, Item, Report, Witness};
use crate::scalar::Scalar;
use crate::structures::WeakBimonoidData;

#[derive(Clone, Debug, PartialEq)]
pub struct QObject<S> {
    pub carrier: Space,
    pub e: LinMap<S>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QMorphism<S> {
    pub src: QObject<S>,
    pub tgt: QObject<S>,
    pub f: LinMap<S>,
}

impl<S: Scalar> QObject<S> {
    pub fn new(e: LinMap<S>) -> Result<Self> {
        if e.src() != e.tgt() || !e.is_idempotent() {
            return Err(Error::NotIdempotent);
        }
        Ok(QObject { carrier: e.src().clone(), e })
    }

    /// Rank of the idempotent, the dimension of the split object.
    pub fn dim(&self) -> usize {
        self.e.rank()
    }

    pub fn identity(&self) -> QMorphism<S> {
        QMorphism { src: self.clone(), tgt: self.clone(), f: self.e.clone() }
    }
}

/// `X ↦ (X, 1)`.
pub fn q_embed<S: Scalar>(x: &Space) -> QObject<S> {
    QObject { carrier: x.clone(), e: LinMap::identity(x) }
}

impl<S: Scalar> QMorphism<S> {
    /// Check `tgt.e ∘ f ∘ src.e = f`.
    pub fn new(src: &QObject<S>, tgt: &QObject<S>, f: LinMap<S>) -> Result<Self> {
        let sandwich = compose(&tgt.e, &compose(&f, &src.e)?)?;
        if sandwich != f {
            return Err(Error::DomainMismatch("map does not satisfy e' f e = f".into()));
        }
        Ok(QMorphism { src: src.clone(), tgt: tgt.clone(), f })
    }
}

pub fn q_compose<S: Scalar>(g: &QMorphism<S>, f: &QMorphism<S>) -> Result<QMorphism<S>> {
    if f.tgt != g.src {
        return Err(Error::DomainMismatch("objects of the Cauchy completion differ".into()));
    }
    Ok(QMorphism { src: f.src.clone(), tgt: g.tgt.clone(), f: compose(&g.f, &f.f)? })
}

pub fn q_tensor_objects<S: Scalar>(x: &QObject<S>, y: &QObject<S>) -> QObject<S> {
    QObject { carrier: x.carrier.tensor(&y.carrier), e: tensor(&x.e, &y.e) }
}

pub fn q_tensor<S: Scalar>(f: &QMorphism<S>, g: &QMorphism<S>) -> QMorphism<S> {
    QMorphism {
        src: q_tensor_objects(&f.src, &g.src),
        tgt: q_tensor_objects(&f.tgt, &g.tgt),
        f: tensor(&f.f, &g.f),
    }
}

/// A splitting in the Cauchy completion.
#[derive(Clone, Debug)]
pub struct QSplitting<S> {
    pub mid: QObject<S>,
    pub retract: QMorphism<S>,
    pub section: QMorphism<S>,
}

/// Split an idempotent endomorphism `f` of `(X, e)` through `(X, f)`.
pub fn q_split<S: Scalar>(f: &QMorphism<S>) -> Result<QSplitting<S>> {
    if f.src != f.tgt || compose(&f.f, &f.f)? != f.f {
        return Err(Error::NotIdempotent);
    }
    let mid = QObject { carrier: f.src.carrier.clone(), e: f.f.clone() };
    Ok(QSplitting {
        retract: QMorphism { src: f.src.clone(), tgt: mid.clone(), f: f.f.clone() },
        section: QMorphism { src: mid.clone(), tgt: f.src.clone(), f: f.f.clone() },
        mid,
    })
}

/// The object of objects with its comonoid and monoid structure.
#[derive(Clone, Debug)]
pub struct ObjectOfObjects<S> {
    pub c: QObject<S>,
    pub delta: LinMap<S>,
    pub epsilon: LinMap<S>,
    pub mu: LinMap<S>,
    pub eta: LinMap<S>,
}

impl<S: Scalar> ObjectOfObjects<S> {
    pub fn dim(&self) -> usize {
        self.c.dim()
    }

    pub fn rho(&self) -> LinMap<S> {
        compose(&self.delta, &self.eta).expect("boundaries")
    }

    pub fn sigma(&self) -> LinMap<S> {
        compose(&self.epsilon, &self.mu).expect("boundaries")
    }

    /// The weak bimonoid environment extended with `dc`, `ec`, `mc`, `uc`,
    /// `rhoc`, `sigmac`.
    pub fn env(&self, w: &WeakBimonoidData<S>) -> Env<S> {
        w.env()
            .generator("dc", &self.delta)
            .generator("ec", &self.epsilon)
            .generator("mc", &self.mu)
            .generator("uc", &self.eta)
            .generator("rhoc", &self.rho())
            .generator("sigmac", &self.sigma())
    }
}

/// `C = (A, t)` with `delta_C = (t x t) delta`, `eps_C = eps`,
/// `mu_C = mu (t x t)`, `eta_C = eta`.
pub fn object_of_objects<S: Scalar>(w: &WeakBimonoidData<S>) -> Result<ObjectOfObjects<S>> {
    let c = QObject::new(w.t.clone())?;
    let tt = tensor(&w.t, &w.t);
    Ok(ObjectOfObjects {
        c,
        delta: compose(&tt, &w.delta)?,
        epsilon: w.epsilon.clone(),
        mu: compose(&w.mu, &tt)?,
        eta: w.eta.clone(),
    })
}

/// Structure of `C` as a separable Frobenius monoid in the Cauchy
/// completion, where the identity of `C` is `t`.
pub const OBJECT_OF_OBJECTS: &[Identity] = &[
    Identity::new("objects.comult_typed", "(t x t) dc t", "dc"),
    Identity::new("objects.counit_typed", "ec t", "ec"),
    Identity::new("objects.mult_typed", "t mc (t x t)", "mc"),
    Identity::new("objects.unit_typed", "t uc", "uc"),
    Identity::new("objects.coassociativity", "(dc x t) dc", "(t x dc) dc"),
    Identity::new("objects.counit_left", "(ec x t) dc", "t"),
    Identity::new("objects.counit_right", "(t x ec) dc", "t"),
    Identity::new("objects.associativity", "mc (mc x t)", "mc (t x mc)"),
    Identity::new("objects.unit_left", "mc (uc x t)", "t"),
    Identity::new("objects.unit_right", "mc (t x uc)", "t"),
    Identity::new("objects.frobenius_left", "(t x mc)(dc x t)", "dc mc"),
    Identity::new("objects.frobenius_right", "(mc x t)(t x dc)", "dc mc"),
    Identity::new("objects.pairing_left", "(sigmac x t)(t x rhoc)", "t"),
    Identity::new("objects.pairing_right", "(t x sigmac)(rhoc x t)", "t"),
    Identity::new("objects.separable", "mc dc", "t"),
];

/// `s` and `t` as comonoid morphisms into `C` with opposite and ordinary
/// comultiplication.
pub const ST_COMONOID_MORPHISMS: &[Identity] = &[
    Identity::new("objects.source_comonoid_morphism", "c (t x t) delta s", "(s x s) delta"),
    Identity::new("objects.target_comonoid_morphism", "(t x t) delta t", "(t x t) delta"),
    Identity::new("objects.source_counit", "eps s", "eps"),
    Identity::new("objects.target_counit", "eps t", "eps"),
];

/// Both splittings of `t`, through `(A, t)` and through `(A, s)`, and the
/// structure of `C`.
pub fn check_object_of_objects<S: Scalar>(w: &WeakBimonoidData<S>) -> Report {
    let mut r = Report::new("object_of_objects");
    let cc = match object_of_objects(w) {
        Ok(c) => c,
        Err(e) => {
            r.push(Item::fail("objects.target_idempotent", "t t = t", Witness::note(&e.to_string())));
            return r.finish(None);
        }
    };
    r.push(Item::pass("objects.target_idempotent", "t t = t"));
    let a = q_embed::<S>(&w.carrier);
    let t_q = QMorphism { src: a.clone(), tgt: a.clone(), f: w.t.clone() };
    match q_split(&t_q) {
        Ok(sp) => {
            let sr = q_compose(&sp.section, &sp.retract).map(|m| m.f);
            let rs = q_compose(&sp.retract, &sp.section).map(|m| m.f);
            r.push(check_maps("objects.split_via_target_a", "section retract = t", &sr.unwrap_or_else(|_| w.s.clone()), &w.t));
            r.push(check_maps("objects.split_via_target_b", "retract section = id of (A, t)", &rs.unwrap_or_else(|_| w.s.clone()), &w.t));
        }
        Err(e) => r.push(Item::fail("objects.split_via_target_a", "section retract = t", Witness::note(&e.to_string()))),
    }
    // Second splitting: s: (A, s) -> (A, t) and t: (A, t) -> (A, s) are
    // well typed and mutually inverse.
    let ts = compose(&w.t, &w.s).expect("endomorphisms");
    let st = compose(&w.s, &w.t).expect("endomorphisms");
    r.push(check_maps("objects.split_via_source_typed_s", "t s s = s", &compose(&ts, &w.s).expect("endo"), &w.s));
    r.push(check_maps("objects.split_via_source_typed_t", "s t t = t", &compose(&st, &w.t).expect("endo"), &w.t));
    r.push(check_maps("objects.split_via_source_a", "t s = s (identity of (A, s))", &ts, &w.s));
    r.push(check_maps("objects.split_via_source_b", "s t = t (identity of (A, t))", &st, &w.t));
    let ranks = (w.t.rank(), w.s.rank(), cc.dim());
    r.push(Item::check(
        "objects.dimension",
        "dim C = rank t = rank s",
        ranks.0 == ranks.1 && ranks.1 == ranks.2,
        || Witness::note(&format!("rank t = {}, rank s = {}, dim C = {}", ranks.0, ranks.1, ranks.2)),
    )
    .with_detail(format!("dim C = {}", ranks.2)));
    let env = cc.env(w);
    r.extend(run_identities("", &env, OBJECT_OF_OBJECTS));
    r.finish(None)
}

pub fn check_st_comonoid_morphisms<S: Scalar>(w: &WeakBimonoidData<S>) -> Report {
    run_identities("st_comonoid_morphisms", &w.env(), ST_COMONOID_MORPHISMS).finish(None)
}

/// For a weak bimonoid morphism `f: A -> B`, the isomorphism
/// `t f t: (A, t) -> (B, t)` of objects of objects, with its inverse.
pub fn induced_c_iso<S: Scalar>(
    f: &LinMap<S>,
    a: &WeakBimonoidData<S>,
    b: &WeakBimonoidData<S>,
) -> Result<(QMorphism<S>, QMorphism<S>)> {
    let fail = |w: &str| Error::NotWeakBimonoidMorphism(w.to_string());
    if f.src() != &a.carrier || f.tgt() != &b.carrier {
        return Err(fail("wrong boundary"));
    }
    let ff = tensor(f, f);
    if compose(f, &a.mu)? != compose(&b.mu, &ff)? || compose(f, &a.eta)? != b.eta {
        return Err(fail("not a monoid morphism"));
    }
    if compose(&ff, &a.delta)? != compose(&b.delta, f)? || compose(&b.epsilon, f)? != a.epsilon {
        return Err(fail("not a comonoid morphism"));
    }
    if compose(f, &a.t)? != compose(&b.t, f)? || compose(f, &a.s)? != compose(&b.s, f)? {
        return Err(fail("does not commute with s and t"));
    }
    let ca = object_of_objects(a)?;
    let cb = object_of_objects(b)?;
    let tft = compose(&b.t, &compose(f, &a.t)?)?;
    // Frobenius inverse inside the Cauchy completion:
    // (t_A x sigma_B)(t_A x tft x t_B)(rho_A x t_B).
    let g = compose(
        &tensor(&a.t, &cb.sigma()),
        &compose(&tensor(&tensor(&a.t, &tft), &b.t), &tensor(&ca.rho(), &b.t))?,
    )?;
    if compose(&g, &tft)? != a.t || compose(&tft, &g)? != b.t {
        return Err(fail("induced map on objects of objects is not invertible"));
    }
    Ok((
        QMorphism::new(&ca.c, &cb.c, tft)?,
        QMorphism::new(&cb.c, &ca.c, g)?,
    ))
}
