//! Test-side oracles, written against dense matrices and independent of the
//! library's sparse linear algebra.

#![allow(dead_code)]

use num_traits::{One, Zero};
use wha_core::constructions::FiniteCategoryPresentation;
use wha_core::exact_linear::{LinMap, Space};
use wha_core::report::Report;
use wha_core::Rat;

pub type Dense = Vec<Vec<Rat>>;

pub fn dense(f: &LinMap<Rat>) -> Dense {
    (0..f.tgt().dim()).map(|i| (0..f.src().dim()).map(|j| f.get(i, j)).collect()).collect()
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Row-reduce `[a | b]`; a particular solution of `a x = b`, or `None`.
pub fn solve(mut a: Dense, mut b: Vec<Rat>) -> Option<Vec<Rat>> {
    let (rows, cols) = (a.len(), a.first().map_or(0, Vec::len));
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        b.swap(r, p);
        let inv = Rat::one() / a[r][c].clone();
        for v in a[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        b[r] = b[r].clone() * inv;
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let k = a[i][c].clone();
                for j in 0..cols {
                    let d = a[r][j].clone() * k.clone();
                    a[i][j] = a[i][j].clone() - d;
                }
                b[i] = b[i].clone() - b[r].clone() * k;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if b[r..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = b[i].clone();
    }
    Some(x)
}

pub fn rank(a: &Dense) -> usize {
    let mut m = a.clone();
    let (rows, cols) = (m.len(), m.first().map_or(0, Vec::len));
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        for i in r + 1..rows {
            if !m[i][c].is_zero() {
                let k = m[i][c].clone() / m[r][c].clone();
                for j in c..cols {
                    let d = m[r][j].clone() * k.clone();
                    m[i][j] = m[i][j].clone() - d;
                }
            }
        }
        r += 1;
    }
    r
}

/// Basis of `{v : a v = 0}`, by full row reduction.
pub fn null_space(a: &Dense, cols: usize) -> Vec<Vec<Rat>> {
    let mut m = a.clone();
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = Rat::one() / m[r][c].clone();
        for v in m[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let k = m[i][c].clone();
                for j in 0..cols {
                    let d = m[r][j].clone() * k.clone();
                    m[i][j] = m[i][j].clone() - d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rat::zero(); cols];
            v[free] = Rat::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[i][free].clone();
            }
            v
        })
        .collect()
}

/// Matrix whose columns are `vs`, with `rows` rows.
pub fn from_columns(vs: &[Vec<Rat>], rows: usize) -> Dense {
    (0..rows).map(|i| vs.iter().map(|v| v[i].clone()).collect()).collect()
}

/// `[a | b]`.
pub fn hcat(a: &Dense, b: &Dense) -> Dense {
    a.iter().zip(b).map(|(x, y)| x.iter().chain(y).cloned().collect()).collect()
}

pub fn sub(a: &Dense, b: &Dense) -> Dense {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(p, q)| p.clone() - q.clone()).collect()).collect()
}

pub fn matmul(a: &Dense, b: &Dense) -> Dense {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Rat::zero(), |acc, k| acc + row[k].clone() * b[k][j].clone()))
                .collect()
        })
        .collect()
}

/// The permutation matrix `f ↦ f⁻¹` on the basis of a groupoid algebra,
/// read off the presentation by label.
pub fn inverse_map(p: &FiniteCategoryPresentation, carrier: &Space) -> Dense {
    let n = carrier.dim();
    let mut m = vec![vec![Rat::zero(); n]; n];
    let idx = |name: &str| carrier.index_of(name).unwrap_or_else(|| panic!("no basis element {name}"));
    for o in &p.objects {
        let i = idx(&format!("id_{o}"));
        m[i][i] = Rat::one();
    }
    for (f, g) in p.inverse.as_ref().expect("groupoid") {
        m[idx(g)][idx(f)] = Rat::one();
    }
    m
}

/// Solvability of `nu * 1 = t`, `1 * nu = r` over all `n x n` matrices, by
/// expanding the convolution entrywise in the unknowns `x[i][a]`.
pub fn antipode_system_solution(mu: &Dense, delta: &Dense, t: &Dense, r: &Dense) -> Option<Dense> {
    let n = t.len();
    let var = |i: usize, a: usize| i * n + a;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for left in [true, false] {
        for l in 0..n {
            for k in 0..n {
                let mut row = vec![Rat::zero(); n * n];
                for a in 0..n {
                    for b in 0..n {
                        let d = &delta[a * n + b][k];
                        if d.is_zero() {
                            continue;
                        }
                        for i in 0..n {
                            // nu applied to the left or the right tensor factor.
                            let (v, m) = if left { (var(i, a), &mu[l][i * n + b]) } else { (var(i, b), &mu[l][a * n + i]) };
                            row[v] = row[v].clone() + d.clone() * m.clone();
                        }
                    }
                }
                rows.push(row);
                rhs.push(if left { t[l][k].clone() } else { r[l][k].clone() });
            }
        }
    }
    solve(rows, rhs).map(|x| (0..n).map(|i| (0..n).map(|a| x[var(i, a)].clone()).collect()).collect())
}

pub fn assert_passed(r: &Report) {
    let failures: Vec<String> = r
        .failures()
        .map(|i| format!("{} [{}] {:?}", i.id, i.citation, i.witness))
        .collect();
    assert!(failures.is_empty(), "suite {} failed:\n{}", r.suite, failures.join("\n"));
}
