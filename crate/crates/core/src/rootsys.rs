//! Root systems of the simple types and their Weyl group data.
//!
//! Conventions (fixed once, used everywhere):
//!
//! | family | numbering                                             |
//! |--------|-------------------------------------------------------|
//! | A_l    | chain 1-2-...-l                                       |
//! | B_l    | chain, alpha_l short                                  |
//! | C_l    | chain, alpha_l long                                   |
//! | D_l    | chain 1-...-(l-2), with l-1 and l both attached to l-2 |
//! | E_l    | chain 1-3-4-5-...-l, alpha_2 attached to alpha_4      |
//! | F_4    | 1-2 => 3-4, alpha_1 and alpha_2 long                  |
//! | G_2    | alpha_1 long                                          |
//!
//! The Cartan matrix entry `a_ij` is `<alpha_j, alpha_i^vee> = 2(alpha_i,
//! alpha_j)/(alpha_i, alpha_i)`. Roots are integer vectors in the basis of
//! simple roots, and the form is normalized so that long roots (in
//! particular the highest root) have squared length 2.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactla::{rat, Rational};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.letter() == c.to_ascii_uppercase())
    }

    fn admits_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

/// A simple type such as `E8`. Construction validates the family/rank pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.admits_rank(rank) {
            return Err(Error::InvalidType {
                family: family.letter(),
                rank,
            });
        }
        Ok(Self { family, rank })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Every simple type of rank at most `max_rank`, ordered by (family,
    /// rank). `C2` is included only when `with_c2` is set, since it is
    /// isomorphic to `B2`.
    pub fn all_up_to(max_rank: usize, with_c2: bool) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for family in Family::ALL {
            for rank in 1..=max_rank {
                if family == Family::C && rank == 2 && !with_c2 {
                    continue;
                }
                if let Ok(t) = SimpleType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Standard Cartan matrix for this type.
    pub fn cartan_matrix(self) -> Vec<Vec<i32>> {
        let l = self.rank;
        let mut a = vec![vec![0i32; l]; l];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 0..l - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..l - 2 {
                    link(i, i + 1);
                }
                link(l - 3, l - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..l - 1 {
                    link(i, i + 1);
                }
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Family::G => link(0, 1),
        }
        match self.family {
            Family::B => a[l - 1][l - 2] = -2,
            Family::C => a[l - 2][l - 1] = -2,
            Family::F => a[2][1] = -2,
            Family::G => a[1][0] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl std::str::FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.trim().chars();
        let bad = || Error::InvalidCartan(format!("cannot parse simple type {s:?}"));
        let family = chars.next().and_then(Family::from_letter).ok_or_else(bad)?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        SimpleType::new(family, rank)
    }
}

/// Free-function form of [`SimpleType::cartan_matrix`].
pub fn cartan_matrix(t: SimpleType) -> Vec<Vec<i32>> {
    t.cartan_matrix()
}

/// A root in simple-root coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coords: Vec<i32>,
}

impl Root {
    pub fn new(coords: Vec<i32>) -> Self {
        Self { coords }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Self { coords }
    }

    pub fn coords(&self) -> &[i32] {
        &self.coords
    }

    pub fn height(&self) -> i32 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    /// Indices `i` with a nonzero coefficient on `alpha_i`.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
    }

    pub fn neg(&self) -> Root {
        Root::new(self.coords.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// Canonical order on positive roots: height first, then reverse
    /// lexicographic on coordinates so that `alpha_1` precedes `alpha_2`.
    pub fn canonical_cmp(&self, other: &Root) -> std::cmp::Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| other.coords.cmp(&self.coords))
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

/// An element of the Weyl group as an integer matrix on `h*`, acting on
/// column vectors of simple-root coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    matrix: Vec<Vec<i32>>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut matrix = vec![vec![0; rank]; rank];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 1;
        }
        Self { matrix }
    }

    pub fn from_matrix(matrix: Vec<Vec<i32>>) -> Self {
        Self { matrix }
    }

    pub fn matrix(&self) -> &[Vec<i32>] {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn apply(&self, v: &[i32]) -> Vec<i32> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn apply_root(&self, r: &Root) -> Root {
        Root::new(self.apply(r.coords()))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.rank();
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| self.matrix[i][k] * other.matrix[k][j]).sum())
                    .collect()
            })
            .collect();
        WeylElement { matrix }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank())
    }

    /// True iff the matrix is `-Id`.
    pub fn is_minus_identity(&self) -> bool {
        self.matrix.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, &x)| x == if i == j { -1 } else { 0 })
        })
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement{:?}", self.matrix)
    }
}

/// Free-function form of [`WeylElement::is_minus_identity`].
pub fn is_minus_identity(w: &WeylElement) -> bool {
    w.is_minus_identity()
}

/// A finite irreducible root system generated from its Cartan matrix.
///
/// `roots` lists the positive roots in canonical order followed by their
/// negatives in the same order, so root `i < P` has negative `i + P`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    simple_type: Option<SimpleType>,
    cartan: Vec<Vec<i32>>,
    roots: Vec<Root>,
    gram: Vec<Vec<Rational>>,
    index: HashMap<Vec<i32>, usize>,
}

impl RootSystem {
    pub fn new(t: SimpleType) -> Self {
        let mut rs = generate_roots(&t.cartan_matrix())
            .expect("standard Cartan matrices are of finite type");
        rs.simple_type = Some(t);
        rs
    }

    pub fn simple_type(&self) -> Option<SimpleType> {
        self.simple_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Inner products of simple roots.
    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive()]
    }

    /// Indices into [`roots`](Self::roots) of the positive roots.
    pub fn positives(&self) -> std::ops::Range<usize> {
        0..self.num_positive()
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn root_index(&self, coords: &[i32]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn is_root(&self, coords: &[i32]) -> bool {
        self.index.contains_key(coords)
    }

    /// Index of the negative of root `i`.
    pub fn negative_index(&self, i: usize) -> usize {
        let p = self.num_positive();
        if i < p {
            i + p
        } else {
            i - p
        }
    }

    pub fn highest_root(&self) -> &Root {
        &self.roots[self.num_positive() - 1]
    }

    /// Symmetric bilinear form on integer coordinate vectors.
    pub fn inner(&self, a: &[i32], b: &[i32]) -> Rational {
        let mut acc = Rational::zero();
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    acc += &self.gram[i][j] * rat(i64::from(x) * i64::from(y));
                }
            }
        }
        acc
    }

    pub fn inner_roots(&self, a: &Root, b: &Root) -> Rational {
        self.inner(a.coords(), b.coords())
    }

    pub fn inner_rat(&self, a: &[Rational], b: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    acc += &self.gram[i][j] * x * y;
                }
            }
        }
        acc
    }

    /// `<v, alpha_i^vee>`, an integer for any `v` in the root lattice.
    pub fn pairing(&self, v: &[i32], i: usize) -> i32 {
        self.cartan[i].iter().zip(v).map(|(a, x)| a * x).sum()
    }

    /// Coefficients of the coroot `phi^vee` in the basis of simple coroots.
    pub fn coroot_coeffs(&self, phi: &Root) -> Vec<i32> {
        let len = self.inner_roots(phi, phi);
        phi.coords()
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let q = rat(i64::from(c)) * &self.gram[i][i] / &len;
                assert!(q.is_integer(), "coroot coefficient must be integral");
                q.to_integer().to_i32().expect("small coroot coefficient")
            })
            .collect()
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        let l = self.rank();
        let mut w = WeylElement::identity(l);
        for j in 0..l {
            w.matrix[i][j] -= self.cartan[i][j];
        }
        w
    }

    /// The reflection `s_phi`, for `phi` a root.
    pub fn reflection(&self, phi: &Root) -> Result<WeylElement> {
        if !self.is_root(phi.coords()) {
            return Err(Error::NotARoot(phi.coords().to_vec()));
        }
        let l = self.rank();
        let len = self.inner_roots(phi, phi);
        let mut w = WeylElement::identity(l);
        for j in 0..l {
            let e = Root::simple(l, j);
            let c = rat(2) * self.inner_roots(&e, phi) / &len;
            let c = c
                .to_integer()
                .to_i32()
                .expect("integral reflection coefficient");
            for k in 0..l {
                w.matrix[k][j] -= phi.coords()[k] * c;
            }
        }
        Ok(w)
    }

    /// `s_phi(v) = v - 2(v, phi)/(phi, phi) phi` for a rational vector `v`.
    pub fn reflect(&self, phi: &Root, v: &[Rational]) -> Result<Vec<Rational>> {
        if !self.is_root(phi.coords()) {
            return Err(Error::NotARoot(phi.coords().to_vec()));
        }
        let phi_rat: Vec<Rational> = phi.coords().iter().map(|&c| rat(i64::from(c))).collect();
        let c = rat(2) * self.inner_rat(v, &phi_rat) / self.inner_roots(phi, phi);
        Ok(v.iter().zip(&phi_rat).map(|(x, p)| x - &c * p).collect())
    }

    /// The longest element `w0`, found by driving `rho` into the
    /// antidominant chamber with simple reflections.
    pub fn longest_element(&self) -> WeylElement {
        let l = self.rank();
        let mut v: Vec<i32> = vec![0; l];
        for r in self.positive_roots() {
            for (x, c) in v.iter_mut().zip(r.coords()) {
                *x += c;
            }
        }
        let mut w = WeylElement::identity(l);
        while let Some(i) = (0..l).find(|&i| self.pairing(&v, i) > 0) {
            let s = self.simple_reflection(i);
            v = s.apply(&v);
            w = s.compose(&w);
        }
        w
    }

    /// Simple roots of the subsystem `subset` (which must be closed under
    /// negation): its positive members that are not a sum of two positive
    /// members. Result is in canonical root order.
    pub fn subsystem_simples(&self, subset: &[Root]) -> Result<Vec<Root>> {
        let set: HashSet<&Root> = subset.iter().collect();
        if subset.iter().any(|r| !set.contains(&r.neg())) {
            return Err(Error::NotSymmetric);
        }
        let mut positive: Vec<&Root> = subset.iter().filter(|r| r.is_positive()).collect();
        positive.sort_by(|a, b| a.canonical_cmp(b));
        positive.dedup();
        let pos_set: HashSet<&Root> = positive.iter().copied().collect();
        let simples = positive
            .iter()
            .filter(|phi| {
                !positive
                    .iter()
                    .any(|a| a.height() < phi.height() && pos_set.contains(&phi.sub(a)))
            })
            .map(|r| (*r).clone())
            .collect();
        Ok(simples)
    }

    /// Groups `simples` into irreducible components by connectivity of the
    /// graph with an edge wherever the inner product is nonzero. Components
    /// are returned in order of their smallest member index.
    pub fn components(&self, simples: &[Root]) -> Vec<Vec<Root>> {
        let n = simples.len();
        let mut comp = vec![usize::MAX; n];
        let mut groups: Vec<Vec<Root>> = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = groups.len();
            let mut stack = vec![start];
            comp[start] = id;
            let mut members = Vec::new();
            while let Some(i) = stack.pop() {
                members.push(i);
                for j in 0..n {
                    if comp[j] == usize::MAX
                        && !self.inner_roots(&simples[i], &simples[j]).is_zero()
                    {
                        comp[j] = id;
                        stack.push(j);
                    }
                }
            }
            members.sort_unstable();
            groups.push(members.into_iter().map(|i| simples[i].clone()).collect());
        }
        groups
    }
}

/// Generates the root system of an indecomposable finite-type Cartan matrix.
pub fn generate_roots(cartan: &[Vec<i32>]) -> Result<RootSystem> {
    let l = cartan.len();
    let symmetrizer = validate_cartan(cartan)?;

    let bound = (l * l).max(120);
    let mut positives: Vec<Root> = (0..l).map(|i| Root::simple(l, i)).collect();
    let mut seen: HashSet<Vec<i32>> = positives.iter().map(|r| r.coords.clone()).collect();
    let mut layer = positives.clone();
    while !layer.is_empty() {
        let mut next: Vec<Root> = Vec::new();
        for beta in &layer {
            for i in 0..l {
                if beta.coords == Root::simple(l, i).coords {
                    continue;
                }
                // alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i.
                let mut down = beta.coords.clone();
                let mut p = 0;
                loop {
                    down[i] -= 1;
                    if !seen.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                let pair: i32 = cartan[i].iter().zip(&beta.coords).map(|(a, x)| a * x).sum();
                if p - pair > 0 {
                    let mut up = beta.coords.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(Root::new(up));
                    }
                }
            }
        }
        positives.extend(next.iter().cloned());
        if positives.len() > bound {
            return Err(Error::NotFiniteType);
        }
        layer = next;
    }
    positives.sort_by(|a, b| a.canonical_cmp(b));

    // Scale so that the highest root has squared length 2.
    let unscaled = |a: &[i32], b: &[i32]| -> Rational {
        let mut acc = Rational::zero();
        for i in 0..l {
            for j in 0..l {
                let g = &symmetrizer[i] * rat(i64::from(cartan[i][j])) / rat(2);
                acc += g * rat(i64::from(a[i]) * i64::from(b[j]));
            }
        }
        acc
    };
    let theta = positives.last().expect("rank >= 1");
    let scale = rat(2) / unscaled(&theta.coords, &theta.coords);
    let gram: Vec<Vec<Rational>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| &symmetrizer[i] * rat(i64::from(cartan[i][j])) / rat(2) * &scale)
                .collect()
        })
        .collect();

    let mut roots = positives.clone();
    roots.extend(positives.iter().map(Root::neg));
    let index = roots
        .iter()
        .enumerate()
        .map(|(i, r)| (r.coords.clone(), i))
        .collect();
    Ok(RootSystem {
        simple_type: None,
        cartan: cartan.to_vec(),
        roots,
        gram,
        index,
    })
}

/// Checks the Cartan axioms, indecomposability, symmetrizability and
/// positive definiteness. Returns squared lengths `d_i` of the simple roots
/// up to a common scale.
#[allow(clippy::needless_range_loop)]
fn validate_cartan(a: &[Vec<i32>]) -> Result<Vec<Rational>> {
    let l = a.len();
    let bad = |msg: &str| Err(Error::InvalidCartan(msg.to_string()));
    if l == 0 {
        return bad("empty matrix");
    }
    if a.iter().any(|row| row.len() != l) {
        return bad("matrix is not square");
    }
    for i in 0..l {
        if a[i][i] != 2 {
            return bad("diagonal entries must be 2");
        }
        for j in 0..l {
            if i != j && (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0)) {
                return bad("off-diagonal sign pattern");
            }
        }
    }
    // d_i a_ij = d_j a_ji, propagated along the Dynkin graph.
    let mut d: Vec<Option<Rational>> = vec![None; l];
    d[0] = Some(Rational::one());
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..l {
            if i != j && a[i][j] != 0 && d[j].is_none() {
                let di = d[i].clone().expect("visited");
                d[j] = Some(di * rat(i64::from(a[i][j])) / rat(i64::from(a[j][i])));
                stack.push(j);
            }
        }
    }
    if d.iter().any(Option::is_none) {
        return bad("matrix is decomposable");
    }
    let d: Vec<Rational> = d.into_iter().map(|x| x.expect("checked")).collect();
    for i in 0..l {
        for j in 0..l {
            if &d[i] * rat(i64::from(a[i][j])) != &d[j] * rat(i64::from(a[j][i])) {
                return bad("matrix is not symmetrizable");
            }
        }
    }
    // Sylvester: every pivot of the symmetrized matrix must be positive.
    let mut s: Vec<Vec<Rational>> = (0..l)
        .map(|i| (0..l).map(|j| &d[i] * rat(i64::from(a[i][j]))).collect())
        .collect();
    for k in 0..l {
        if !s[k][k].is_positive() {
            return Err(Error::NotFiniteType);
        }
        for i in k + 1..l {
            let f = &s[i][k] / &s[k][k];
            for j in k..l {
                let v = &f * &s[k][j];
                s[i][j] -= v;
            }
        }
    }
    Ok(d)
}
