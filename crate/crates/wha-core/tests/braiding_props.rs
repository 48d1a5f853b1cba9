use proptest::prelude::*;
use wha_core::exact_linear::{braiding, braiding_inv, compose, tensor, Bicharacter, Group, LinMap, Space};
use wha_core::{Fp, Rat, Scalar};

/// A grading group, its bicharacter, and the same bicharacter written as a
/// closed formula on grades for comparison.
struct Setting<S: Scalar> {
    group: Group,
    chi: Bicharacter<S>,
    formula: fn(u32, u32) -> S,
    ctx: S::Ctx,
}

fn signs() -> Setting<Rat> {
    let g = Group::cyclic(2);
    let chi = Bicharacter::from_generator_matrix(g.clone(), vec![vec![Rat::from_integer((-1).into())]]).unwrap();
    Setting { group: g, chi, formula: |a, b| Rat::from_integer(if a * b % 2 == 1 { -1 } else { 1 }.into()), ctx: () }
}

fn fourth_root() -> Setting<Fp> {
    let g = Group::cyclic(4);
    let chi = Bicharacter::from_generator_matrix(g.clone(), vec![vec![Fp::new(2, 5)]]).unwrap();
    Setting { group: g, chi, formula: |a, b| Fp::new([1, 2, 4, 3][(a * b % 4) as usize], 5), ctx: 5 }
}

fn space(g: &Group, grades: &[u32]) -> Space {
    let basis = grades.iter().enumerate().map(|(i, &k)| (format!("b{i}"), g.decode(k))).collect();
    Space::new(g, basis).unwrap()
}

/// A grade-preserving map with coefficients drawn cyclically from `coeffs`.
fn graded_map<S: Scalar>(src: &Space, tgt: &Space, coeffs: &[i64], ctx: &S::Ctx) -> LinMap<S> {
    let mut k = 0;
    let mut entries = Vec::new();
    for c in 0..src.dim() {
        for r in 0..tgt.dim() {
            if src.grade_code(c) == tgt.grade_code(r) {
                entries.push((r, c, S::from_int(ctx, coeffs[k % coeffs.len()])));
                k += 1;
            }
        }
    }
    LinMap::from_entries(src, tgt, entries).unwrap()
}

fn expected<S: Scalar>(s: &Setting<S>, x: &Space, y: &Space) -> LinMap<S> {
    let (dx, dy) = (x.dim(), y.dim());
    LinMap::from_fn(&x.tensor(y), &y.tensor(x), |k| {
        let (i, j) = (k / dy, k % dy);
        vec![(j * dx + i, (s.formula)(x.grade_code(i), y.grade_code(j)))]
    })
    .unwrap()
}

fn laws<S: Scalar>(s: &Setting<S>, gx: &[u32], gy: &[u32], gz: &[u32], coeffs: &[i64]) {
    let (x, y, z) = (space(&s.group, gx), space(&s.group, gy), space(&s.group, gz));
    let c = |a: &Space, b: &Space| braiding(a, b, &s.chi).unwrap();
    let id = |a: &Space| LinMap::<S>::identity(a);
    assert_eq!(c(&x, &y), expected(s, &x, &y));
    // Hexagons.
    let lhs = c(&x, &y.tensor(&z));
    let rhs = compose(&tensor(&id(&y), &c(&x, &z)), &tensor(&c(&x, &y), &id(&z))).unwrap();
    assert_eq!(lhs, rhs);
    let lhs = c(&x.tensor(&y), &z);
    let rhs = compose(&tensor(&c(&x, &z), &id(&y)), &tensor(&id(&x), &c(&y, &z))).unwrap();
    assert_eq!(lhs, rhs);
    // Naturality in both arguments: f: X -> Z, g: Y -> X.
    let f = graded_map::<S>(&x, &z, coeffs, &s.ctx);
    let g = graded_map::<S>(&y, &x, &coeffs[1..], &s.ctx);
    let lhs = compose(&c(&z, &x), &tensor(&f, &g)).unwrap();
    let rhs = compose(&tensor(&g, &f), &c(&x, &y)).unwrap();
    assert_eq!(lhs, rhs);
    // Inverse.
    assert_eq!(compose(&braiding_inv(&x, &y, &s.chi).unwrap(), &c(&x, &y)).unwrap(), id(&x.tensor(&y)));
}

fn grades(n: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..n, 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sign_braiding_laws(gx in grades(2), gy in grades(2), gz in grades(2), coeffs in prop::collection::vec(-4i64..5, 2..12)) {
        laws(&signs(), &gx, &gy, &gz, &coeffs);
    }

    #[test]
    fn fourth_root_braiding_laws(gx in grades(4), gy in grades(4), gz in grades(4), coeffs in prop::collection::vec(-4i64..5, 2..12)) {
        laws(&fourth_root(), &gx, &gy, &gz, &coeffs);
    }
}

#[test]
fn fourth_root_braiding_is_not_symmetric() {
    let s = fourth_root();
    let line = space(&s.group, &[1]);
    let c = braiding(&line, &line, &s.chi).unwrap();
    let twice = compose(&c, &c).unwrap();
    assert_ne!(twice, LinMap::identity(&line.tensor(&line)));
    assert_eq!(twice.get(0, 0), Fp::new(4, 5));
    assert!(!s.chi.is_symmetric());
    // The sign braiding squares to the identity.
    let q = signs();
    assert!(q.chi.is_symmetric());
    let odd = space(&q.group, &[1, 0]);
    let c = braiding(&odd, &odd, &q.chi).unwrap();
    assert_eq!(compose(&c, &c).unwrap(), LinMap::identity(&odd.tensor(&odd)));
}
