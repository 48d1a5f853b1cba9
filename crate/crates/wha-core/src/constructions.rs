//! Concrete models: category and groupoid algebras, separable Frobenius
//! monoids, and the weak Hopf monoid `R ⊗ R` built from a separable
//! Frobenius monoid `R`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::diagram::Env;
use crate::error::{Error, Result};
use crate::exact_linear::{Bicharacter, Group, LinMap, Space};
use crate::report::{check_maps, Item, Report, Witness};
use crate::scalar::Scalar;
use crate::structures::{
    is_separable, ComonoidData, FrobeniusData, MonoidData, WeakBimonoidData, WeakHopfData,
};

/// A finite category given by its non-identity morphisms and the
/// composites of composable non-identity pairs. Identities are implicit and
/// named `id_<object>`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteCategoryPresentation {
    pub objects: Vec<String>,
    /// `(name, source, target)`.
    pub morphisms: Vec<(String, String, String)>,
    /// `(g, f, g∘f)` for every composable pair of non-identity morphisms.
    pub compose: Vec<(String, String, String)>,
    /// `(f, f⁻¹)`; presence marks the presentation as a groupoid.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inverse: Option<Vec<(String, String)>>,
}

/// A validated category: all morphisms (identities first) and the full
/// composition table `comp[g][f] = g∘f`.
#[derive(Clone, Debug)]
pub struct Category {
    pub names: Vec<String>,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    pub num_objects: usize,
    pub comp: Vec<Vec<Option<usize>>>,
    pub inverse: Option<Vec<usize>>,
}

impl Category {
    pub fn identity_of(&self, object: usize) -> usize {
        object
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

fn id_name(obj: &str) -> String {
    format!("id_{obj}")
}

/// Build the full table, returning the first structural problem found.
fn build_category(p: &FiniteCategoryPresentation) -> std::result::Result<Category, (String, String)> {
    let bad = |id: &str, msg: String| Err((id.to_string(), msg));
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    let mut obj_index: BTreeMap<&str, usize> = BTreeMap::new();
    let mut names = Vec::new();
    let (mut src, mut tgt) = (Vec::new(), Vec::new());
    for (k, o) in p.objects.iter().enumerate() {
        if obj_index.insert(o.as_str(), k).is_some() {
            return bad("category.names", format!("duplicate object `{o}`"));
        }
        index.insert(id_name(o), k);
        names.push(id_name(o));
        src.push(k);
        tgt.push(k);
    }
    for (name, s, t) in &p.morphisms {
        let (Some(&si), Some(&ti)) = (obj_index.get(s.as_str()), obj_index.get(t.as_str())) else {
            return bad("category.names", format!("morphism `{name}` has an unknown endpoint"));
        };
        if index.insert(name.clone(), names.len()).is_some() {
            return bad("category.names", format!("duplicate morphism name `{name}`"));
        }
        names.push(name.clone());
        src.push(si);
        tgt.push(ti);
    }
    let n = names.len();
    let no = p.objects.len();
    let mut comp = vec![vec![None; n]; n];
    for f in 0..n {
        comp[tgt[f]][f] = Some(f);
        comp[f][src[f]] = Some(f);
    }
    for (g, f, h) in &p.compose {
        let lookup = |x: &String| index.get(x).copied();
        let (Some(gi), Some(fi), Some(hi)) = (lookup(g), lookup(f), lookup(h)) else {
            return bad("category.names", format!("composite `{g} ∘ {f} = {h}` uses an unknown name"));
        };
        if gi < no || fi < no {
            return bad("category.identity", format!("composite `{g} ∘ {f}` involves an identity"));
        }
        if src[gi] != tgt[fi] {
            return bad("category.totality", format!("`{g} ∘ {f}` is not composable"));
        }
        if src[hi] != src[fi] || tgt[hi] != tgt[gi] {
            return bad("category.totality", format!("`{g} ∘ {f} = {h}` has the wrong endpoints"));
        }
        if comp[gi][fi].is_some() {
            return bad("category.totality", format!("`{g} ∘ {f}` is defined twice"));
        }
        comp[gi][fi] = Some(hi);
    }
    for g in no..n {
        for f in no..n {
            if src[g] == tgt[f] && comp[g][f].is_none() {
                return bad("category.totality", format!("`{} ∘ {}` is missing", names[g], names[f]));
            }
        }
    }
    let inverse = match &p.inverse {
        None => None,
        Some(pairs) => {
            let mut inv: Vec<Option<usize>> = (0..n).map(|k| (k < no).then_some(k)).collect();
            for (f, g) in pairs {
                let (Some(&fi), Some(&gi)) = (index.get(f), index.get(g)) else {
                    return bad("category.groupoid", format!("inverse pair ({f}, {g}) uses an unknown name"));
                };
                inv[fi] = Some(gi);
            }
            match inv.into_iter().collect::<Option<Vec<usize>>>() {
                Some(v) => Some(v),
                None => return bad("category.groupoid", "some morphism has no listed inverse".into()),
            }
        }
    };
    Ok(Category { names, src, tgt, num_objects: no, comp, inverse })
}

/// Totality, identity and associativity verdicts, plus the groupoid check
/// when an inverse table is present.
pub fn validate_category(p: &FiniteCategoryPresentation) -> (Report, Option<Category>) {
    let mut r = Report::new("category");
    let cat = match build_category(p) {
        Ok(c) => c,
        Err((id, msg)) => {
            r.push(Item::fail(&id, "presentation is well formed", Witness::note(&msg)));
            return (r.finish(None), None);
        }
    };
    r.push(Item::pass("category.names", "names are unique and endpoints exist"));
    r.push(Item::pass("category.totality", "g∘f is defined exactly when src g = tgt f"));
    r.push(Item::pass("category.identity", "id∘f = f = f∘id"));
    let n = cat.len();
    let mut assoc_witness = None;
    'outer: for h in 0..n {
        for g in 0..n {
            let Some(hg) = cat.comp[h][g] else { continue };
            for f in 0..n {
                let Some(gf) = cat.comp[g][f] else { continue };
                let left = cat.comp[hg][f];
                let right = cat.comp[h][gf];
                if left != right {
                    assoc_witness = Some(Witness {
                        row: format!("({} ∘ {}) ∘ {}", cat.names[h], cat.names[g], cat.names[f]),
                        col: format!("{} ∘ ({} ∘ {})", cat.names[h], cat.names[g], cat.names[f]),
                        lhs: left.map_or("undefined".into(), |k| cat.names[k].clone()),
                        rhs: right.map_or("undefined".into(), |k| cat.names[k].clone()),
                    });
                    break 'outer;
                }
            }
        }
    }
    let assoc_ok = assoc_witness.is_none();
    r.push(match assoc_witness {
        None => Item::pass("category.associativity", "(h∘g)∘f = h∘(g∘f)"),
        Some(w) => Item::fail("category.associativity", "(h∘g)∘f = h∘(g∘f)", w),
    });
    if let Some(inv) = &cat.inverse {
        let bad = (0..n).find(|&f| {
            cat.comp[inv[f]][f] != Some(cat.src[f]) || cat.comp[f][inv[f]] != Some(cat.tgt[f])
        });
        let citation = "f⁻¹∘f = id_src and f∘f⁻¹ = id_tgt";
        r.push(match bad {
            None => Item::pass("category.groupoid", citation),
            Some(f) => Item::fail(
                "category.groupoid",
                citation,
                Witness::note(&format!("`{}` and `{}` are not inverse", cat.names[f], cat.names[inv[f]])),
            ),
        });
    }
    let ok = r.passed() && assoc_ok;
    (r.finish(None), ok.then_some(cat))
}

fn validated(p: &FiniteCategoryPresentation) -> Result<Category> {
    let (report, cat) = validate_category(p);
    cat.ok_or_else(|| {
        let why: Vec<String> = report
            .failures()
            .map(|i| format!("{}: {}", i.id, i.witness.as_ref().map_or(String::new(), |w| format!("{} {} {} {}", w.row, w.col, w.lhs, w.rhs).trim().to_string())))
            .collect();
        Error::InvalidPresentation(why.join("; "))
    })
}

/// The category algebra with product `f·g = g∘f` (zero when undefined),
/// unit the sum of identities, `delta(f) = f ⊗ f` and `eps(f) = 1`.
pub fn category_algebra<S: Scalar>(p: &FiniteCategoryPresentation, ctx: &S::Ctx) -> Result<WeakBimonoidData<S>> {
    let cat = validated(p)?;
    algebra_of(&cat, ctx)
}

fn algebra_of<S: Scalar>(cat: &Category, ctx: &S::Ctx) -> Result<WeakBimonoidData<S>> {
    let g = Group::trivial();
    let labels: Vec<&str> = cat.names.iter().map(String::as_str).collect();
    let a = Space::plain(&g, &labels);
    let aa = a.tensor(&a);
    let unit = Space::unit(&g);
    let one = S::from_int(ctx, 1);
    let n = cat.len();
    let mu = LinMap::from_fn(&aa, &a, |k| {
        let (f, gm) = (k / n, k % n);
        cat.comp[gm][f].map(|h| vec![(h, one.clone())]).unwrap_or_default()
    })?;
    let eta = LinMap::from_fn(&unit, &a, |_| (0..cat.num_objects).map(|o| (cat.identity_of(o), one.clone())).collect())?;
    let delta = LinMap::from_fn(&a, &aa, |f| vec![(f * n + f, one.clone())])?;
    let eps = LinMap::from_fn(&a, &unit, |_| vec![(0, one.clone())])?;
    WeakBimonoidData::new(&a, mu, eta, delta, eps, Bicharacter::trivial_with(g, one.clone()))
}

/// The groupoid algebra with antipode `nu(f) = f⁻¹`, which is its own inverse.
pub fn groupoid_algebra<S: Scalar>(p: &FiniteCategoryPresentation, ctx: &S::Ctx) -> Result<WeakHopfData<S>> {
    if p.inverse.is_none() {
        return Err(Error::NotAGroupoid("no inverse table".into()));
    }
    let cat = validated(p).map_err(|e| match e {
        Error::InvalidPresentation(m) if m.contains("category.groupoid") => Error::NotAGroupoid(m),
        other => other,
    })?;
    let w = algebra_of::<S>(&cat, ctx)?;
    let inv = cat.inverse.clone().expect("groupoid");
    let one = S::from_int(ctx, 1);
    let nu = LinMap::from_fn(&w.carrier, &w.carrier, |f| vec![(inv[f], one.clone())])?;
    WeakHopfData::new(w, nu.clone(), Some(nu))
}

/// The walking isomorphism: objects `A`, `B`, morphisms `f: A -> B`, `g = f⁻¹`.
pub fn walking_isomorphism() -> FiniteCategoryPresentation {
    let s = |x: &str| x.to_string();
    FiniteCategoryPresentation {
        objects: vec![s("A"), s("B")],
        morphisms: vec![(s("f"), s("A"), s("B")), (s("g"), s("B"), s("A"))],
        compose: vec![(s("g"), s("f"), s("id_A")), (s("f"), s("g"), s("id_B"))],
        inverse: Some(vec![(s("f"), s("g")), (s("g"), s("f"))]),
    }
}

/// The walking arrow `f: A -> B`.
pub fn walking_arrow() -> FiniteCategoryPresentation {
    let s = |x: &str| x.to_string();
    FiniteCategoryPresentation {
        objects: vec![s("A"), s("B")],
        morphisms: vec![(s("f"), s("A"), s("B"))],
        compose: vec![],
        inverse: None,
    }
}

/// Disjoint union of one-object groupoids given by cyclic groups `Z/n`.
/// Morphism `<obj><k>` is the element `k` (for `k > 0`) of the group at `obj`.
pub fn cyclic_groups_groupoid(orders: &[(&str, u32)]) -> FiniteCategoryPresentation {
    let mut p = FiniteCategoryPresentation { inverse: Some(vec![]), ..Default::default() };
    let name = |o: &str, k: u32| if k == 0 { id_name(o) } else { format!("{o}{k}") };
    for &(o, n) in orders {
        p.objects.push(o.to_string());
        for k in 1..n {
            p.morphisms.push((name(o, k), o.to_string(), o.to_string()));
            p.inverse.as_mut().expect("set").push((name(o, k), name(o, (n - k) % n)));
        }
        for a in 1..n {
            for b in 1..n {
                p.compose.push((name(o, a), name(o, b), name(o, (a + b) % n)));
            }
        }
    }
    p
}

/// `K^n`: pointwise product, `delta(e_i) = e_i ⊗ e_i`, `eps(e_i) = 1`.
pub fn functions_frobenius<S: Scalar>(n: usize, ctx: &S::Ctx) -> FrobeniusData<S> {
    let g = Group::trivial();
    let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let a = Space::plain(&g, &refs);
    let aa = a.tensor(&a);
    let unit = Space::unit(&g);
    let one = S::from_int(ctx, 1);
    let mu = LinMap::from_fn(&aa, &a, |k| if k / n == k % n { vec![(k / n, one.clone())] } else { vec![] }).expect("trivial grading");
    let eta = LinMap::from_fn(&unit, &a, |_| (0..n).map(|i| (i, one.clone())).collect()).expect("trivial grading");
    let delta = LinMap::from_fn(&a, &aa, |i| vec![(i * n + i, one.clone())]).expect("trivial grading");
    let eps = LinMap::from_fn(&a, &unit, |_| vec![(0, one.clone())]).expect("trivial grading");
    FrobeniusData::new(
        MonoidData::new(&a, mu, eta).expect("boundaries"),
        ComonoidData::new(&a, delta, eps).expect("boundaries"),
        Bicharacter::trivial_with(g, one),
    )
    .expect("same carrier")
}

/// Group algebra of a finite abelian group `G` with the scaled coproduct
/// `delta(g) = (1/|G|) Σ_h h ⊗ h⁻¹g` and `eps(g) = |G|·[g = 0]`.
///
/// With `chi = None` the algebra is trivially graded; otherwise basis
/// element `g` has grade `g` in the group of `chi`, which must equal `G`.
pub fn group_frobenius<S: Scalar>(group: &Group, ctx: &S::Ctx, chi: Option<Bicharacter<S>>) -> Result<FrobeniusData<S>> {
    let order = group.order();
    let p = S::characteristic(ctx);
    if p != 0 && (order as u64).is_multiple_of(p) {
        return Err(Error::BadCharacteristic { p, order });
    }
    let one = S::from_int(ctx, 1);
    let (grading, chi) = match chi {
        Some(chi) => {
            if chi.group() != group {
                return Err(Error::DomainMismatch("bicharacter group differs from the group".into()));
            }
            (group.clone(), chi)
        }
        None => (Group::trivial(), Bicharacter::trivial_with(Group::trivial(), one.clone())),
    };
    let graded = grading == *group;
    let basis = group
        .elements()
        .map(|g| {
            let label = format!("g{}", group.decode(g).iter().map(u32::to_string).collect::<Vec<_>>().join("_"));
            let grade = if graded { group.decode(g) } else { vec![] };
            (label, grade)
        })
        .collect();
    let a = Space::new(&grading, basis)?;
    let aa = a.tensor(&a);
    let unit = Space::unit(&grading);
    let n = order;
    let inv_n = S::from_ratio(ctx, 1, n as i64).expect("checked characteristic");
    let mu = LinMap::from_fn(&aa, &a, |k| vec![(group.add((k / n) as u32, (k % n) as u32) as usize, one.clone())])?;
    let eta = LinMap::from_fn(&unit, &a, |_| vec![(0, one.clone())])?;
    let delta = LinMap::from_fn(&a, &aa, |g| {
        group
            .elements()
            .map(|h| {
                let rest = group.add(group.neg(h), g as u32);
                (h as usize * n + rest as usize, inv_n.clone())
            })
            .collect()
    })?;
    let eps = LinMap::from_fn(&a, &unit, |g| if g == 0 { vec![(0, S::from_int(ctx, n as i64))] } else { vec![] })?;
    FrobeniusData::new(MonoidData::new(&a, mu, eta)?, ComonoidData::new(&a, delta, eps)?, chi)
}

/// The `Z/4` group algebra over `F_5` graded by itself with
/// `chi(a, b) = 2^(ab)`, a separable Frobenius monoid in a non-symmetric
/// braided category.
pub fn crossing_sensitive_frobenius(p: u32) -> Result<FrobeniusData<crate::scalar::Fp>> {
    use crate::scalar::Fp;
    let g = Group::cyclic(4);
    let two = Fp::new(2, p);
    let chi = Bicharacter::from_generator_matrix(g.clone(), vec![vec![two]])?;
    group_frobenius(&g, &p, Some(chi))
}

fn frobenius_env<S: Scalar>(r: &FrobeniusData<S>) -> Env<S> {
    let base = Env::new(r.chi.clone())
        .object("R", r.carrier())
        .generator("mu", &r.monoid.mu)
        .generator("eta", &r.monoid.eta)
        .generator("delta", &r.comonoid.delta)
        .generator("eps", &r.comonoid.epsilon)
        .generator("rho", &r.rho)
        .generator("sigma", &r.sigma);
    let kappa = base.eval_str(SQUARE_KAPPA).expect("well-typed");
    let kappap = base.eval_str(SQUARE_KAPPA_PRIME).expect("well-typed");
    base.generator("kappa", &kappa).generator("kappap", &kappap)
}

const SQUARE_KAPPA: &str = "(sigma x 1)(1 x c)(rho x 1)";
const SQUARE_KAPPA_PRIME: &str = "(1 x sigma)(ci x 1)(1 x rho)";
/// Structure of `R ⊗ R`: comultiplication, counit, multiplication, unit,
/// antipode and its inverse.
pub const SQUARE_DELTA: &str = "1 x rho x 1";
pub const SQUARE_EPS: &str = "sigma";
pub const SQUARE_MU: &str = "(mu x mu)(c[R R, R] x 1)";
pub const SQUARE_ETA: &str = "eta x eta";
pub const SQUARE_NU: &str = "(kappa x 1) c";
pub const SQUARE_NU_INV: &str = "(1 x kappap) ci";
/// Simplified forms of the derived target and rotated target.
pub const SQUARE_T: &str = "(eta x 1) mu";
pub const SQUARE_R: &str = "(1 x eta) mu (kappa x 1) c";

/// The weak Hopf monoid on `R ⊗ R` for a separable Frobenius monoid `R`,
/// with multiplication from `R^op ⊗ R` and an invertible antipode.
pub fn frobenius_square<S: Scalar>(r: &FrobeniusData<S>) -> Result<WeakHopfData<S>> {
    if !is_separable(r) {
        return Err(Error::NotSeparable);
    }
    let env = frobenius_env(r);
    let a = r.carrier().tensor(r.carrier());
    let w = WeakBimonoidData::new(
        &a,
        env.eval_str(SQUARE_MU)?,
        env.eval_str(SQUARE_ETA)?,
        env.eval_str(SQUARE_DELTA)?,
        env.eval_str(SQUARE_EPS)?,
        r.chi.clone(),
    )?;
    WeakHopfData::new(w, env.eval_str(SQUARE_NU)?, Some(env.eval_str(SQUARE_NU_INV)?))
}

/// Compare the derived `t` and `r` of `R ⊗ R` with their simplified forms.
pub fn square_closed_forms<S: Scalar>(r: &FrobeniusData<S>, h: &WeakHopfData<S>) -> Report {
    let env = frobenius_env(r);
    let mut rep = Report::new("frobenius_square");
    for (id, text, derived) in [
        ("square.target_closed_form", SQUARE_T, &h.bimonoid.t),
        ("square.rotated_closed_form", SQUARE_R, &h.bimonoid.r),
    ] {
        let citation = format!("derived = {text}");
        rep.push(match env.eval_str(text) {
            Ok(m) => check_maps(id, &citation, derived, &m),
            Err(e) => Item::fail(id, &citation, Witness::note(&e.to_string())),
        });
    }
    rep.finish(None)
}

/// Names of all morphisms of a presentation, identities included.
pub fn morphism_names(p: &FiniteCategoryPresentation) -> BTreeSet<String> {
    p.objects.iter().map(|o| id_name(o)).chain(p.morphisms.iter().map(|m| m.0.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Fp, Rat};
    use crate::structures::{check_frobenius, check_st_properties, check_weak_bimonoid, check_weak_hopf};

    #[test]
    fn walking_isomorphism_is_weak_hopf() {
        let h = groupoid_algebra::<Rat>(&walking_isomorphism(), &()).unwrap();
        assert_eq!(h.bimonoid.dim(), 4);
        assert!(check_weak_bimonoid(&h.bimonoid).passed());
        assert!(check_st_properties(&h.bimonoid).passed(), "{:#?}", check_st_properties(&h.bimonoid).failures().collect::<Vec<_>>());
        assert!(check_weak_hopf(&h).passed(), "{:#?}", check_weak_hopf(&h).failures().collect::<Vec<_>>());
    }

    #[test]
    fn broken_associativity_is_flagged() {
        let s = |x: &str| x.to_string();
        // Three composable arrows with two different composites for the
        // triple, making associativity fail.
        let p = FiniteCategoryPresentation {
            objects: vec![s("A"), s("B"), s("C"), s("D")],
            morphisms: vec![
                (s("f"), s("A"), s("B")),
                (s("g"), s("B"), s("C")),
                (s("h"), s("C"), s("D")),
                (s("gf"), s("A"), s("C")),
                (s("hg"), s("B"), s("D")),
                (s("x"), s("A"), s("D")),
                (s("y"), s("A"), s("D")),
            ],
            compose: vec![
                (s("g"), s("f"), s("gf")),
                (s("h"), s("g"), s("hg")),
                (s("h"), s("gf"), s("x")),
                (s("hg"), s("f"), s("y")),
            ],
            inverse: None,
        };
        let (r, cat) = validate_category(&p);
        assert!(cat.is_none());
        assert!(r.get("category.associativity").unwrap().witness.is_some());
    }

    #[test]
    fn frobenius_examples_are_separable() {
        for n in 0..4 {
            assert!(check_frobenius(&functions_frobenius::<Rat>(n, &())).passed());
        }
        let z2 = group_frobenius::<Rat>(&Group::cyclic(2), &(), None).unwrap();
        assert!(check_frobenius(&z2).passed());
        let z3 = group_frobenius::<Fp>(&Group::cyclic(3), &5, None).unwrap();
        assert!(check_frobenius(&z3).passed());
        assert!(matches!(
            group_frobenius::<Fp>(&Group::cyclic(2), &2, None),
            Err(Error::BadCharacteristic { p: 2, order: 2 })
        ));
        assert!(check_frobenius(&crossing_sensitive_frobenius(5).unwrap()).passed());
    }

    #[test]
    fn square_of_q2_is_weak_hopf() {
        let r = functions_frobenius::<Rat>(2, &());
        let h = frobenius_square(&r).unwrap();
        assert!(check_weak_bimonoid(&h.bimonoid).passed());
        assert!(check_st_properties(&h.bimonoid).passed(), "{:#?}", check_st_properties(&h.bimonoid).failures().collect::<Vec<_>>());
        assert!(check_weak_hopf(&h).passed(), "{:#?}", check_weak_hopf(&h).failures().collect::<Vec<_>>());
        assert!(square_closed_forms(&r, &h).passed());
    }

    #[test]
    fn square_in_non_symmetric_braiding() {
        let r = crossing_sensitive_frobenius(5).unwrap();
        assert!(!r.chi.is_symmetric());
        let h = frobenius_square(&r).unwrap();
        for rep in [check_weak_bimonoid(&h.bimonoid), check_st_properties(&h.bimonoid), check_weak_hopf(&h), square_closed_forms(&r, &h)] {
            assert!(rep.passed(), "{:#?}", rep.failures().collect::<Vec<_>>());
        }
    }
}
