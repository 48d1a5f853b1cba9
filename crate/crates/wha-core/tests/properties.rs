mod common;

use common::{assert_passed, dense, rank};
use proptest::prelude::*;
use wha_core::constructions::{groupoid_algebra, walking_isomorphism};
use wha_core::diagram::Env;
use wha_core::exact_linear::{compose, kernel, split_idempotent, tensor, Bicharacter, Group, LinMap, Space};
use wha_core::structures::{check_st_properties, check_weak_bimonoid, check_weak_hopf, WeakBimonoidData, WeakHopfData};
use wha_core::{Rat, Scalar};

fn group() -> Group {
    Group::cyclic(2)
}

fn space(grades: &[u32]) -> Space {
    let basis = grades.iter().enumerate().map(|(i, &k)| (format!("b{i}"), vec![k])).collect();
    Space::new(&group(), basis).unwrap()
}

fn graded_map(src: &Space, tgt: &Space, coeffs: &[i64]) -> LinMap<Rat> {
    let mut k = 0;
    let mut entries = Vec::new();
    for c in 0..src.dim() {
        for r in 0..tgt.dim() {
            if src.grade_code(c) == tgt.grade_code(r) {
                entries.push((r, c, Rat::from_int(&(), coeffs[k % coeffs.len()])));
                k += 1;
            }
        }
    }
    LinMap::from_entries(src, tgt, entries).unwrap()
}

/// Unit upper-triangular map (invertible) with the given off-diagonal entries.
fn unitriangular(x: &Space, coeffs: &[i64]) -> LinMap<Rat> {
    let n = x.dim();
    let mut k = 0;
    let mut entries = Vec::new();
    for c in 0..n {
        entries.push((c, c, Rat::from_int(&(), 1)));
        for r in 0..c {
            if x.grade_code(r) == x.grade_code(c) {
                entries.push((r, c, Rat::from_int(&(), coeffs[k % coeffs.len()])));
                k += 1;
            }
        }
    }
    LinMap::from_entries(x, x, entries).unwrap()
}

fn inverse(u: &LinMap<Rat>) -> LinMap<Rat> {
    LinMap::from_mat(u.tgt(), u.src(), &u.to_mat().inverse().unwrap()).unwrap()
}

fn grades() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..2, 1..5)
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..4, 1..10)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative_and_tensor_interchanges(
        gx in grades(), gy in grades(), gz in grades(), gw in grades(), c in coeffs()
    ) {
        let (x, y, z, w) = (space(&gx), space(&gy), space(&gz), space(&gw));
        let f = graded_map(&x, &y, &c);
        let g = graded_map(&y, &z, &c[1..].iter().chain(&c).copied().collect::<Vec<_>>());
        let h = graded_map(&z, &w, &c.iter().rev().copied().collect::<Vec<_>>());
        prop_assert_eq!(
            compose(&h, &compose(&g, &f).unwrap()).unwrap(),
            compose(&compose(&h, &g).unwrap(), &f).unwrap()
        );
        prop_assert_eq!(
            compose(&tensor(&g, &h), &tensor(&f, &g)).unwrap(),
            tensor(&compose(&g, &f).unwrap(), &compose(&h, &g).unwrap())
        );
        prop_assert_eq!(dense(&tensor(&f, &g)).len(), y.dim() * z.dim());
    }

    #[test]
    fn kernel_has_complementary_dimension(gx in grades(), gy in grades(), c in coeffs()) {
        let (x, y) = (space(&gx), space(&gy));
        let f = graded_map(&x, &y, &c);
        let (k, incl) = kernel(&f, "k").unwrap();
        prop_assert!(compose(&f, &incl).unwrap().is_zero());
        prop_assert_eq!(k.dim() + rank(&dense(&f)), x.dim());
        prop_assert_eq!(incl.rank(), k.dim());
    }

    #[test]
    fn idempotents_split(gx in grades(), keep in prop::collection::vec(any::<bool>(), 5), c in coeffs()) {
        let x = space(&gx);
        let u = unitriangular(&x, &c);
        let d = LinMap::from_entries(&x, &x, (0..x.dim()).filter(|&i| keep[i]).map(|i| (i, i, Rat::from_int(&(), 1)))).unwrap();
        let e = compose(&u, &compose(&d, &inverse(&u)).unwrap()).unwrap();
        prop_assert!(e.is_idempotent());
        let sp = split_idempotent(&e).unwrap();
        prop_assert_eq!(compose(&sp.section, &sp.retract).unwrap(), e.clone());
        prop_assert_eq!(compose(&sp.retract, &sp.section).unwrap(), LinMap::identity(&sp.space));
        prop_assert_eq!(sp.space.dim(), keep[..x.dim()].iter().filter(|b| **b).count());
    }

    #[test]
    fn term_evaluation_matches_direct_composition(gx in grades(), gy in grades(), c in coeffs()) {
        let (x, y) = (space(&gx), space(&gy));
        let f = graded_map(&x, &y, &c);
        let g = graded_map(&y, &x, &c.iter().map(|v| v + 1).collect::<Vec<_>>());
        let env = Env::new(Bicharacter::trivial(group())).object("X", &x).object("Y", &y).generator("f", &f).generator("g", &g);
        prop_assert_eq!(env.eval_str("(f x 1[X])(1[X] x g)").unwrap(), tensor(&f, &g));
        prop_assert_eq!(env.eval_str("g f").unwrap(), compose(&g, &f).unwrap());
        prop_assert_eq!(env.eval_str("c[Y,Y] (f x f)").unwrap(), compose(&env.eval_str("c[Y,Y]").unwrap(), &tensor(&f, &f)).unwrap());
    }
}

/// Conjugate every structure map of `h` by `u`.
fn transport(h: &WeakHopfData<Rat>, u: &LinMap<Rat>) -> WeakHopfData<Rat> {
    let w = &h.bimonoid;
    let ui = inverse(u);
    let uu = tensor(u, u);
    let uui = tensor(&ui, &ui);
    let c = |a: &LinMap<Rat>, b: &LinMap<Rat>, d: &LinMap<Rat>| compose(a, &compose(b, d).unwrap()).unwrap();
    let one = LinMap::identity(&Space::unit(w.carrier.group()));
    let nw = WeakBimonoidData::new(
        &w.carrier,
        c(u, &w.mu, &uui),
        c(u, &w.eta, &one),
        c(&uu, &w.delta, &ui),
        c(&one, &w.epsilon, &ui),
        w.chi.clone(),
    )
    .unwrap();
    WeakHopfData::new(nw, c(u, &h.nu, &ui), None).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn structure_transported_along_a_change_of_basis(c in coeffs()) {
        let h = groupoid_algebra::<Rat>(&walking_isomorphism(), &()).unwrap();
        let u = unitriangular(&h.bimonoid.carrier, &c);
        let moved = transport(&h, &u);
        assert_passed(&check_weak_bimonoid(&moved.bimonoid));
        assert_passed(&check_st_properties(&moved.bimonoid));
        assert_passed(&check_weak_hopf(&moved));
        let ui = inverse(&u);
        prop_assert_eq!(moved.bimonoid.t.clone(), compose(&u, &compose(&h.bimonoid.t, &ui).unwrap()).unwrap());
    }
}
