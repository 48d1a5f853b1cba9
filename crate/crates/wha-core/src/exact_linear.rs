//! Graded finite-dimensional spaces and grade-preserving linear maps.
//!
//! Spaces are graded by a finite abelian group `Z/n1 x ... x Z/nk`. A space
//! is a list of *atoms* (basic spaces with a labelled basis); tensoring
//! concatenates the lists, so the monoidal structure is strict. Basis
//! vectors of a tensor product are ordered left factor major.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::scalar::Scalar;

/// Signature of the grading group `Z/n1 x ... x Z/nk`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Group {
    moduli: Vec<u32>,
}

/// A group element, one residue per cyclic factor.
pub type Grade = Vec<u32>;

impl Group {
    pub fn new(moduli: Vec<u32>) -> Result<Self> {
        if moduli.contains(&0) {
            return Err(Error::Parse("cyclic factor of order 0".into()));
        }
        Ok(Group { moduli })
    }

    pub fn trivial() -> Self {
        Group { moduli: vec![] }
    }

    pub fn cyclic(n: u32) -> Self {
        Group { moduli: vec![n] }
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn order(&self) -> usize {
        self.moduli.iter().map(|&n| n as usize).product()
    }

    pub fn contains(&self, g: &[u32]) -> bool {
        g.len() == self.moduli.len() && g.iter().zip(&self.moduli).all(|(a, n)| a < n)
    }

    /// Mixed-radix code of a grade, first factor least significant.
    pub fn encode(&self, g: &[u32]) -> u32 {
        let mut code = 0u32;
        let mut stride = 1u32;
        for (a, n) in g.iter().zip(&self.moduli) {
            code += a * stride;
            stride *= n;
        }
        code
    }

    pub fn decode(&self, mut code: u32) -> Grade {
        self.moduli
            .iter()
            .map(|&n| {
                let a = code % n;
                code /= n;
                a
            })
            .collect()
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.moduli.is_empty() {
            return 0;
        }
        let (ga, gb) = (self.decode(a), self.decode(b));
        let sum: Grade = ga
            .iter()
            .zip(&gb)
            .zip(&self.moduli)
            .map(|((x, y), n)| (x + y) % n)
            .collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: u32) -> u32 {
        let g: Grade = self
            .decode(a)
            .iter()
            .zip(&self.moduli)
            .map(|(x, n)| (n - x) % n)
            .collect();
        self.encode(&g)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order() as u32
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moduli.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.moduli.iter().map(|n| format!("Z/{n}")).collect();
        f.write_str(&parts.join(" x "))
    }
}

/// A bicharacter `chi: G x G -> K^*`, stored as a full table over codes.
#[derive(Clone, Debug, PartialEq)]
pub struct Bicharacter<S> {
    group: Group,
    table: Vec<S>,
}

impl<S: Scalar> Bicharacter<S> {
    /// Build from a function on grades and verify bimultiplicativity.
    pub fn from_fn(group: Group, f: impl Fn(&[u32], &[u32]) -> S) -> Result<Self> {
        let n = group.order();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n as u32 {
            for b in 0..n as u32 {
                table.push(f(&group.decode(a), &group.decode(b)));
            }
        }
        let chi = Bicharacter { group, table };
        chi.validate()?;
        Ok(chi)
    }

    /// `chi(a, b) = prod_{i,j} q[i][j]^(a_i b_j)` for a matrix of values on generators.
    pub fn from_generator_matrix(group: Group, q: Vec<Vec<S>>) -> Result<Self> {
        let k = group.moduli().len();
        if q.len() != k || q.iter().any(|row| row.len() != k) {
            return Err(Error::InvalidBicharacter(format!(
                "generator matrix must be {k} x {k}"
            )));
        }
        Self::from_fn(group, |a, b| {
            let mut v = S::one();
            for i in 0..k {
                for j in 0..k {
                    for _ in 0..(a[i] * b[j]) {
                        v = v * q[i][j].clone();
                    }
                }
            }
            v
        })
    }

    pub fn trivial(group: Group) -> Self {
        let n = group.order();
        Bicharacter {
            group,
            table: vec![S::one(); n * n],
        }
    }

    /// The trivial bicharacter with an explicit unit, so that prime-field
    /// values carry their modulus.
    pub fn trivial_with(group: Group, one: S) -> Self {
        let n = group.order();
        Bicharacter {
            group,
            table: vec![one; n * n],
        }
    }

    /// The Koszul sign rule on `Z/2`: `chi(a, b) = (-1)^(ab)`.
    pub fn super_sign() -> Self {
        Self::from_fn(Group::cyclic(2), |a, b| {
            if a[0] * b[0] % 2 == 1 {
                -S::one()
            } else {
                S::one()
            }
        })
        .expect("sign rule is a bicharacter")
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn value(&self, a: u32, b: u32) -> &S {
        &self.table[a as usize * self.group.order() + b as usize]
    }

    /// Check nonvanishing and multiplicativity in each argument by enumeration.
    pub fn validate(&self) -> Result<()> {
        let g = &self.group;
        for a in g.elements() {
            for b in g.elements() {
                if self.value(a, b).is_zero() {
                    return Err(Error::InvalidBicharacter(format!(
                        "chi({:?}, {:?}) = 0",
                        g.decode(a),
                        g.decode(b)
                    )));
                }
                for c in g.elements() {
                    let left = self.value(g.add(a, b), c).clone();
                    if left != self.value(a, c).clone() * self.value(b, c).clone() {
                        return Err(Error::InvalidBicharacter(format!(
                            "not multiplicative in the first argument at {:?},{:?},{:?}",
                            g.decode(a),
                            g.decode(b),
                            g.decode(c)
                        )));
                    }
                    let right = self.value(a, g.add(b, c)).clone();
                    if right != self.value(a, b).clone() * self.value(a, c).clone() {
                        return Err(Error::InvalidBicharacter(format!(
                            "not multiplicative in the second argument at {:?},{:?},{:?}",
                            g.decode(a),
                            g.decode(b),
                            g.decode(c)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// True when `chi(a,b) chi(b,a) = 1` for all `a, b`.
    pub fn is_symmetric(&self) -> bool {
        let g = &self.group;
        g.elements().all(|a| {
            g.elements()
                .all(|b| (self.value(a, b).clone() * self.value(b, a).clone()).is_one())
        })
    }
}

/// A basic graded space: labelled basis with grade codes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Atom {
    labels: Vec<String>,
    grades: Vec<u32>,
}

/// A graded space, i.e. a tensor word of atoms over a fixed grading group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Space {
    group: Group,
    factors: Vec<Arc<Atom>>,
}

impl Space {
    /// A basic space from `(label, grade)` pairs.
    pub fn new(group: &Group, basis: Vec<(String, Grade)>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        let mut labels = Vec::with_capacity(basis.len());
        let mut grades = Vec::with_capacity(basis.len());
        for (label, grade) in basis {
            if !group.contains(&grade) {
                return Err(Error::GradeOutsideGroup {
                    grade: format!("{grade:?}"),
                    group: group.to_string(),
                });
            }
            if !seen.insert(label.clone()) {
                return Err(Error::Schema(format!("duplicate basis label `{label}`")));
            }
            grades.push(group.encode(&grade));
            labels.push(label);
        }
        Ok(Space {
            group: group.clone(),
            factors: vec![Arc::new(Atom { labels, grades })],
        })
    }

    /// Trivially graded space with the given labels.
    pub fn plain(group: &Group, labels: &[&str]) -> Self {
        let zero = vec![0; group.moduli().len()];
        Space::new(
            group,
            labels.iter().map(|l| (l.to_string(), zero.clone())).collect(),
        )
        .expect("distinct labels")
    }

    /// The monoidal unit: one basis vector of trivial grade.
    pub fn unit(group: &Group) -> Self {
        Space {
            group: group.clone(),
            factors: vec![],
        }
    }

    pub fn zero(group: &Group) -> Self {
        Space {
            group: group.clone(),
            factors: vec![Arc::new(Atom {
                labels: vec![],
                grades: vec![],
            })],
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|a| a.labels.len()).product()
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    /// Tensor product; the grading groups must agree.
    pub fn tensor(&self, other: &Space) -> Space {
        assert_eq!(self.group, other.group, "tensoring spaces over different groups");
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Space {
            group: self.group.clone(),
            factors,
        }
    }

    pub fn tensor_all<'a>(group: &Group, spaces: impl IntoIterator<Item = &'a Space>) -> Space {
        spaces
            .into_iter()
            .fold(Space::unit(group), |acc, s| acc.tensor(s))
    }

    fn digits(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (k, atom) in self.factors.iter().enumerate().rev() {
            let n = atom.labels.len();
            out[k] = index % n;
            index /= n;
        }
        out
    }

    pub fn label(&self, index: usize) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        let d = self.digits(index);
        let parts: Vec<&str> = self
            .factors
            .iter()
            .zip(&d)
            .map(|(a, &i)| a.labels[i].as_str())
            .collect();
        parts.join("⊗")
    }

    pub fn grade_code(&self, index: usize) -> u32 {
        if self.group.moduli().is_empty() {
            return 0;
        }
        let d = self.digits(index);
        self.factors
            .iter()
            .zip(&d)
            .fold(0, |acc, (a, &i)| self.group.add(acc, a.grades[i]))
    }

    pub fn grade(&self, index: usize) -> Grade {
        self.group.decode(self.grade_code(index))
    }

    /// Grade codes of every basis vector.
    pub fn grade_codes(&self) -> Vec<u32> {
        if self.group.moduli().is_empty() {
            return vec![0; self.dim()];
        }
        let mut codes = vec![0u32];
        for atom in &self.factors {
            let mut next = Vec::with_capacity(codes.len() * atom.grades.len());
            for &c in &codes {
                for &g in &atom.grades {
                    next.push(self.group.add(c, g));
                }
            }
            codes = next;
        }
        codes
    }

    /// Index of the basis vector with the given label, basic spaces only.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        (0..self.dim()).find(|&i| self.label(i) == label)
    }

    /// Collapse to a single atom with the same basis (labels and grades).
    pub fn flattened(&self) -> Space {
        let codes = self.grade_codes();
        Space {
            group: self.group.clone(),
            factors: vec![Arc::new(Atom {
                labels: (0..self.dim()).map(|i| self.label(i)).collect(),
                grades: codes,
            })],
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("I");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|a| format!("[{}]", a.labels.join(",")))
            .collect();
        f.write_str(&parts.join("⊗"))
    }
}

/// Sparse column storage: for each source index, `(target index, value)`
/// pairs sorted by target index, zeros never stored.
pub type Column<S> = Vec<(usize, S)>;

/// A grade-preserving linear map between graded spaces.
#[derive(Clone, Debug, PartialEq)]
pub struct LinMap<S> {
    src: Space,
    tgt: Space,
    cols: Vec<Column<S>>,
}

/// The first entry at which two parallel maps differ.
#[derive(Clone, Debug, PartialEq)]
pub struct Difference<S> {
    pub row: usize,
    pub col: usize,
    pub lhs: S,
    pub rhs: S,
}

fn normalize<S: Scalar>(mut entries: Vec<(usize, S)>) -> Column<S> {
    entries.sort_by_key(|e| e.0);
    let mut out: Column<S> = Vec::with_capacity(entries.len());
    for (r, v) in entries {
        match out.last_mut() {
            Some((lr, lv)) if *lr == r => *lv = lv.clone() + v,
            _ => out.push((r, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

impl<S: Scalar> LinMap<S> {
    pub fn zero(src: &Space, tgt: &Space) -> Self {
        LinMap {
            src: src.clone(),
            tgt: tgt.clone(),
            cols: vec![Vec::new(); src.dim()],
        }
    }

    pub fn identity(space: &Space) -> Self {
        LinMap {
            src: space.clone(),
            tgt: space.clone(),
            cols: (0..space.dim()).map(|i| vec![(i, S::one())]).collect(),
        }
    }

    /// Build from `(row, col, value)` triples, summing duplicates and
    /// checking grade preservation.
    pub fn from_entries(
        src: &Space,
        tgt: &Space,
        entries: impl IntoIterator<Item = (usize, usize, S)>,
    ) -> Result<Self> {
        let mut cols: Vec<Vec<(usize, S)>> = vec![Vec::new(); src.dim()];
        for (r, c, v) in entries {
            if r >= tgt.dim() || c >= src.dim() {
                return Err(Error::DomainMismatch(format!(
                    "entry ({r}, {c}) outside a {}x{} map",
                    tgt.dim(),
                    src.dim()
                )));
            }
            cols[c].push((r, v));
        }
        let map = LinMap {
            src: src.clone(),
            tgt: tgt.clone(),
            cols: cols.into_iter().map(normalize).collect(),
        };
        map.check_grades()?;
        Ok(map)
    }

    /// Build column by column from a function returning unsorted entries.
    pub fn from_fn(
        src: &Space,
        tgt: &Space,
        f: impl Fn(usize) -> Vec<(usize, S)>,
    ) -> Result<Self> {
        let map = LinMap {
            src: src.clone(),
            tgt: tgt.clone(),
            cols: (0..src.dim()).map(|c| normalize(f(c))).collect(),
        };
        map.check_grades()?;
        Ok(map)
    }

    /// Build from a dense matrix (rows index the target).
    pub fn from_mat(src: &Space, tgt: &Space, m: &Mat<S>) -> Result<Self> {
        assert_eq!((m.rows, m.cols), (tgt.dim(), src.dim()));
        Self::from_fn(src, tgt, |c| {
            (0..m.rows)
                .filter(|&r| !m.get(r, c).is_zero())
                .map(|r| (r, m.get(r, c).clone()))
                .collect()
        })
    }

    pub fn check_grades(&self) -> Result<()> {
        let sg = self.src.grade_codes();
        let tg = self.tgt.grade_codes();
        for (c, col) in self.cols.iter().enumerate() {
            for (r, _) in col {
                if sg[c] != tg[*r] {
                    return Err(Error::NotGradePreserving { row: *r, col: c });
                }
            }
        }
        Ok(())
    }

    pub fn src(&self) -> &Space {
        &self.src
    }

    pub fn tgt(&self) -> &Space {
        &self.tgt
    }

    pub fn column(&self, c: usize) -> &Column<S> {
        &self.cols[c]
    }

    pub fn get(&self, r: usize, c: usize) -> S {
        match self.cols[c].binary_search_by_key(&r, |e| e.0) {
            Ok(i) => self.cols[c][i].1.clone(),
            Err(_) => S::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn to_mat(&self) -> Mat<S> {
        let mut m = Mat::zeros(self.tgt.dim(), self.src.dim());
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                m.set(*r, c, v.clone());
            }
        }
        m
    }

    /// Same matrix, new boundary spaces of equal dimension and grading.
    pub fn retyped(&self, src: &Space, tgt: &Space) -> Result<Self> {
        if src.dim() != self.src.dim() || tgt.dim() != self.tgt.dim() {
            return Err(Error::DomainMismatch("retyping changes dimensions".into()));
        }
        let map = LinMap {
            src: src.clone(),
            tgt: tgt.clone(),
            cols: self.cols.clone(),
        };
        map.check_grades()?;
        Ok(map)
    }

    pub fn scale(&self, k: &S) -> Self {
        if k.is_zero() {
            return Self::zero(&self.src, &self.tgt);
        }
        LinMap {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(r, v)| (*r, v.clone() * k.clone())).collect())
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_parallel(other)?;
        Ok(LinMap {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(a, b)| normalize(a.iter().cloned().chain(b.iter().cloned()).collect()))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-S::one()))
    }

    fn check_parallel(&self, other: &Self) -> Result<()> {
        if self.src != other.src || self.tgt != other.tgt {
            return Err(Error::DomainMismatch(format!(
                "maps are not parallel: {} -> {} vs {} -> {}",
                self.src, self.tgt, other.src, other.tgt
            )));
        }
        Ok(())
    }

    /// First differing entry in column-major order, or `None` if equal.
    pub fn first_difference(&self, other: &Self) -> Result<Option<Difference<S>>> {
        self.check_parallel(other)?;
        for (c, (a, b)) in self.cols.iter().zip(&other.cols).enumerate() {
            if a == b {
                continue;
            }
            let rows: std::collections::BTreeSet<usize> =
                a.iter().chain(b.iter()).map(|e| e.0).collect();
            for r in rows {
                let (x, y) = (self.get(r, c), other.get(r, c));
                if x != y {
                    return Ok(Some(Difference { row: r, col: c, lhs: x, rhs: y }));
                }
            }
        }
        Ok(None)
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.src.dim());
        let mut out = vec![S::zero(); self.tgt.dim()];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, a) in &self.cols[c] {
                out[*r] = out[*r].clone() + a.clone() * x.clone();
            }
        }
        out
    }

    pub fn is_idempotent(&self) -> bool {
        self.src == self.tgt && compose(self, self).map(|sq| &sq == self).unwrap_or(false)
    }

    pub fn rank(&self) -> usize {
        self.to_mat().rank()
    }
}

/// `g ∘ f`.
pub fn compose<S: Scalar>(g: &LinMap<S>, f: &LinMap<S>) -> Result<LinMap<S>> {
    if f.tgt != g.src {
        return Err(Error::DomainMismatch(format!(
            "cannot compose {} -> {} after {} -> {}",
            g.src, g.tgt, f.src, f.tgt
        )));
    }
    let cols = f
        .cols
        .iter()
        .map(|col| {
            let mut acc = Vec::new();
            for (k, a) in col {
                for (r, b) in &g.cols[*k] {
                    acc.push((*r, b.clone() * a.clone()));
                }
            }
            normalize(acc)
        })
        .collect();
    Ok(LinMap {
        src: f.src.clone(),
        tgt: g.tgt.clone(),
        cols,
    })
}

/// Compose a chain listed outermost first: `chain(&[h, g, f]) = h ∘ g ∘ f`.
pub fn chain<S: Scalar>(maps: &[&LinMap<S>]) -> Result<LinMap<S>> {
    let (last, rest) = maps.split_last().expect("nonempty chain");
    rest.iter()
        .rev()
        .try_fold((*last).clone(), |acc, m| compose(m, &acc))
}

/// Kronecker product `f ⊗ g`, left factor major.
pub fn tensor<S: Scalar>(f: &LinMap<S>, g: &LinMap<S>) -> LinMap<S> {
    let gt = g.tgt.dim();
    let mut cols = Vec::with_capacity(f.src.dim() * g.src.dim());
    for fc in &f.cols {
        for gc in &g.cols {
            let mut col = Vec::with_capacity(fc.len() * gc.len());
            for (r1, v1) in fc {
                for (r2, v2) in gc {
                    col.push((r1 * gt + r2, v1.clone() * v2.clone()));
                }
            }
            cols.push(col);
        }
    }
    LinMap {
        src: f.src.tensor(&g.src),
        tgt: f.tgt.tensor(&g.tgt),
        cols,
    }
}

pub fn tensor_all<S: Scalar>(group: &Group, maps: &[&LinMap<S>]) -> LinMap<S> {
    maps.iter().fold(
        LinMap::identity(&Space::unit(group)),
        |acc, m| tensor(&acc, m),
    )
}

fn check_group<S: Scalar>(x: &Space, chi: &Bicharacter<S>) -> Result<()> {
    if x.group() != chi.group() {
        return Err(Error::GradeOutsideGroup {
            grade: format!("grades of {x} (group {})", x.group()),
            group: chi.group().to_string(),
        });
    }
    Ok(())
}

/// `c_{X,Y}: X⊗Y -> Y⊗X`, `x⊗y ↦ chi(|x|,|y|) y⊗x`.
pub fn braiding<S: Scalar>(x: &Space, y: &Space, chi: &Bicharacter<S>) -> Result<LinMap<S>> {
    check_group(x, chi)?;
    check_group(y, chi)?;
    let (gx, gy) = (x.grade_codes(), y.grade_codes());
    let (dx, dy) = (x.dim(), y.dim());
    let cols = (0..dx * dy)
        .map(|k| {
            let (i, j) = (k / dy, k % dy);
            vec![(j * dx + i, chi.value(gx[i], gy[j]).clone())]
        })
        .collect();
    Ok(LinMap {
        src: x.tensor(y),
        tgt: y.tensor(x),
        cols,
    })
}

/// `c_{X,Y}^{-1}: Y⊗X -> X⊗Y`.
pub fn braiding_inv<S: Scalar>(x: &Space, y: &Space, chi: &Bicharacter<S>) -> Result<LinMap<S>> {
    check_group(x, chi)?;
    check_group(y, chi)?;
    let (gx, gy) = (x.grade_codes(), y.grade_codes());
    let (dx, dy) = (x.dim(), y.dim());
    let cols = (0..dy * dx)
        .map(|k| {
            let (j, i) = (k / dx, k % dx);
            let v = chi.value(gx[i], gy[j]).inv().expect("bicharacter values are units");
            vec![(i * dy + j, v)]
        })
        .collect();
    Ok(LinMap {
        src: y.tensor(x),
        tgt: x.tensor(y),
        cols,
    })
}

/// Left dual `X*` with evaluation `X*⊗X -> I` and coevaluation `I -> X⊗X*`.
pub struct Dual<S> {
    pub space: Space,
    pub eval: LinMap<S>,
    pub coeval: LinMap<S>,
}

pub fn dual_space<S: Scalar>(x: &Space) -> Dual<S> {
    let g = x.group();
    let codes = x.grade_codes();
    let star = Space {
        group: g.clone(),
        factors: vec![Arc::new(Atom {
            labels: (0..x.dim()).map(|i| format!("{}*", x.label(i))).collect(),
            grades: codes.iter().map(|&c| g.neg(c)).collect(),
        })],
    };
    let unit = Space::unit(g);
    let n = x.dim();
    let eval = LinMap {
        src: star.tensor(x),
        tgt: unit.clone(),
        cols: (0..n * n)
            .map(|k| if k / n == k % n { vec![(0, S::one())] } else { vec![] })
            .collect(),
    };
    let coeval = LinMap {
        src: unit,
        tgt: x.tensor(&star),
        cols: vec![(0..n).map(|i| (i * n + i, S::one())).collect()],
    };
    Dual {
        space: star,
        eval,
        coeval,
    }
}

/// A splitting `section ∘ retract = e`, `retract ∘ section = 1_P`.
pub struct Splitting<S> {
    pub space: Space,
    pub retract: LinMap<S>,
    pub section: LinMap<S>,
}

/// Split an idempotent through its image. The basis of the image is the set
/// of pivot columns of `e`, labelled by the corresponding source vectors.
pub fn split_idempotent<S: Scalar>(e: &LinMap<S>) -> Result<Splitting<S>> {
    if !e.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let x = e.src();
    let m = e.to_mat();
    let pivots = m.clone().rref_in_place();
    let codes = x.grade_codes();
    let image = Space {
        group: x.group().clone(),
        factors: vec![Arc::new(Atom {
            labels: pivots.iter().map(|&p| x.label(p)).collect(),
            grades: pivots.iter().map(|&p| codes[p]).collect(),
        })],
    };
    let s_mat = m.select_cols(&pivots);
    let rows = s_mat.transpose().rref_in_place();
    let b_inv = s_mat
        .select_rows(&rows)
        .inverse()
        .expect("pivot rows of a full-rank matrix are independent");
    let r_mat = b_inv.mul(&m.select_rows(&rows));
    let section = LinMap::from_mat(&image, x, &s_mat)?;
    let retract = LinMap::from_mat(x, &image, &r_mat)?;
    Ok(Splitting {
        space: image,
        retract,
        section,
    })
}

/// Grade-homogeneous basis of the kernel of `f`, as columns of an inclusion.
pub fn kernel<S: Scalar>(f: &LinMap<S>, label_prefix: &str) -> Result<(Space, LinMap<S>)> {
    let x = f.src();
    let (sc, tc) = (x.grade_codes(), f.tgt().grade_codes());
    let m = f.to_mat();
    let mut vectors: Vec<(u32, Vec<S>)> = Vec::new();
    for g in x.group().elements() {
        let cols: Vec<usize> = (0..x.dim()).filter(|&i| sc[i] == g).collect();
        if cols.is_empty() {
            continue;
        }
        let rows: Vec<usize> = (0..f.tgt().dim()).filter(|&i| tc[i] == g).collect();
        let block = m.select_rows(&rows).select_cols(&cols);
        for v in block.kernel() {
            let mut full = vec![S::zero(); x.dim()];
            for (k, &c) in cols.iter().enumerate() {
                full[c] = v[k].clone();
            }
            vectors.push((g, full));
        }
    }
    let space = Space {
        group: x.group().clone(),
        factors: vec![Arc::new(Atom {
            labels: (0..vectors.len()).map(|i| format!("{label_prefix}{i}")).collect(),
            grades: vectors.iter().map(|(g, _)| *g).collect(),
        })],
    };
    let incl = LinMap::from_fn(&space, x, |c| {
        vectors[c]
            .1
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(r, v)| (r, v.clone()))
            .collect()
    })?;
    Ok((space, incl))
}

/// Equalizer of a parallel pair: the kernel of `f - g` with its inclusion.
pub fn equalizer<S: Scalar>(f: &LinMap<S>, g: &LinMap<S>) -> Result<(Space, LinMap<S>)> {
    kernel(&f.sub(g)?, "k")
}

/// True if every column of `a` lies in the column span of `b` (same target).
pub fn image_contained<S: Scalar>(a: &LinMap<S>, b: &LinMap<S>) -> bool {
    if a.tgt() != b.tgt() {
        return false;
    }
    let rb = b.rank();
    let mut joint = Mat::zeros(a.tgt().dim(), a.src().dim() + b.src().dim());
    let (ma, mb) = (a.to_mat(), b.to_mat());
    for r in 0..joint.rows {
        for c in 0..mb.cols {
            joint.set(r, c, mb.get(r, c).clone());
        }
        for c in 0..ma.cols {
            joint.set(r, mb.cols + c, ma.get(r, c).clone());
        }
    }
    joint.rank() == rb
}
