//! Chevalley basis, structure constants and the invariant form.
//!
//! Basis layout of `g` (dimension `l + |roots|`):
//!
//! ```text
//! 0 .. l            simple coroots h_1 .. h_l
//! l + k             root vector e_phi for root index k of the RootSystem
//! ```
//!
//! Positive roots come first in the root list, so `n` occupies
//! `l .. l + P` and `n_-` occupies `l + P .. l + 2P`.
//!
//! Structure constants `[e_a, e_b] = N_{a,b} e_{a+b}` are integers with
//! `|N_{a,b}| = p + 1`. Signs are fixed by declaring `N = +(p+1)` on every
//! extraspecial pair (the pair `(a, b)`, `a ≺ b`, with `a` minimal among all
//! decompositions of `a + b`) and propagating through the usual quadratic
//! relations.

use std::collections::BTreeMap;

use num_traits::{One, ToPrimitive, Zero};

use crate::cascade::CascadeSet;
use crate::exactla::{rat, Rational};
use crate::rootsys::RootSystem;
use crate::{Error, Result};

/// Sparse element of `g` in the Chevalley basis. Zero coordinates are never
/// stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    coords: BTreeMap<usize, Rational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize) -> Self {
        Self::from_pairs([(i, Rational::one())])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut e = Self::zero();
        for (i, c) in pairs {
            e.add_term(i, c);
        }
        e
    }

    pub fn coord(&self, i: usize) -> Rational {
        self.coords.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coords.iter().map(|(&i, c)| (i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coords.keys().copied()
    }

    pub fn add_term(&mut self, i: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coords.entry(i).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coords.remove(&i);
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (i, c) in other.iter() {
            out.add_term(i, c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> AlgebraElement {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            coords: self.coords.iter().map(|(&i, c)| (i, c * s)).collect(),
        }
    }

    /// Keeps only coordinates for which `keep` holds.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> AlgebraElement {
        Self {
            coords: self
                .coords
                .iter()
                .filter(|(&i, _)| keep(i))
                .map(|(&i, c)| (i, c.clone()))
                .collect(),
        }
    }
}

/// Named pieces of the triangular decomposition `g = n_- + h + n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Part {
    NMinus,
    H,
    N,
    /// `b = h + n`
    B,
    /// `b_- = n_- + h`, identified with the dual of `b` by the form.
    BMinus,
}

/// Result of bracketing two basis vectors: at most `l` terms.
type BasisBracket = Vec<(usize, i64)>;

/// A simple Lie algebra with integer Chevalley structure constants.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    rs: RootSystem,
    /// `structure[a * R + b]` is `N_{a,b}` when `a + b` is a root.
    structure: Vec<i32>,
    /// `sums[a * R + b]` is the root index of `a + b`, if a root.
    sums: Vec<Option<usize>>,
    /// `<phi, alpha_i^vee>` for every root.
    pairings: Vec<Vec<i32>>,
    /// Coroot of each root in the simple coroot basis.
    coroots: Vec<Vec<i32>>,
}

impl LieAlgebra {
    /// Builds the algebra and runs the Jacobi self-test on every triple
    /// (generator, basis vector, basis vector), where the generators are
    /// the simple root vectors `e_{±alpha_i}`.
    pub fn build(rs: &RootSystem) -> Result<LieAlgebra> {
        let g = Self::build_unchecked(rs)?;
        let l = g.rank();
        let p = rs.num_positive();
        let generators: Vec<usize> = (0..l).flat_map(|i| [l + i, l + p + i]).collect();
        for &x in &generators {
            for y in 0..g.dim() {
                for z in y + 1..g.dim() {
                    if !g.jacobi_basis_vanishes(x, y, z) {
                        return Err(Error::Inconsistent(format!(
                            "Jacobi identity fails on basis triple ({x}, {y}, {z})"
                        )));
                    }
                }
            }
        }
        Ok(g)
    }

    /// Builds the structure-constant tables without the Jacobi self-test.
    pub fn build_unchecked(rs: &RootSystem) -> Result<LieAlgebra> {
        let l = rs.rank();
        let nroots = rs.roots().len();
        let np = rs.num_positive();
        let roots = rs.roots();

        let mut sums = vec![None; nroots * nroots];
        for a in 0..nroots {
            for b in 0..nroots {
                sums[a * nroots + b] = rs.root_index(roots[a].add(&roots[b]).coords());
            }
        }
        let len: Vec<Rational> = roots.iter().map(|r| rs.inner_roots(r, r)).collect();

        // p for the pair (a, b): largest p with b - p a a root.
        let string_p = |a: usize, b: usize| -> i64 {
            let mut v = roots[b].clone();
            let mut p = 0;
            loop {
                v = v.sub(&roots[a]);
                if !rs.is_root(v.coords()) {
                    return p;
                }
                p += 1;
            }
        };

        // Positive-pair table filled in order of increasing height of a + b.
        let mut pos = vec![None::<Rational>; np * np];
        let pos_get = |pos: &[Option<Rational>], a: usize, b: usize| -> Rational {
            pos[a * np + b]
                .clone()
                .unwrap_or_else(|| panic!("structure constant ({a},{b}) needed before it was set"))
        };
        // N_{x,y} for arbitrary roots with x + y a root, in terms of
        // already-known positive pairs.
        let general = |pos: &[Option<Rational>], x: usize, y: usize| -> Rational {
            let neg = |i: usize| rs.negative_index(i);
            let c = sums[x * nroots + y].expect("general() requires x + y to be a root");
            match (x < np, y < np) {
                (true, true) => pos_get(pos, x, y),
                (false, false) => -pos_get(pos, neg(x), neg(y)),
                (true, false) => {
                    if c < np {
                        -(&len[c] / &len[x]) * pos_get(pos, neg(y), c)
                    } else {
                        (&len[c] / &len[y]) * pos_get(pos, neg(c), x)
                    }
                }
                (false, true) => {
                    let (x, y) = (y, x);
                    let v = if c < np {
                        -(&len[c] / &len[x]) * pos_get(pos, neg(y), c)
                    } else {
                        (&len[c] / &len[y]) * pos_get(pos, neg(c), x)
                    };
                    -v
                }
            }
        };

        for xi in 0..np {
            let mut special: Vec<(usize, usize)> = (0..xi)
                .flat_map(|a| (a + 1..xi).map(move |b| (a, b)))
                .filter(|&(a, b)| sums[a * nroots + b] == Some(xi))
                .collect();
            if special.is_empty() {
                continue;
            }
            special.sort_unstable();
            let (g, d) = special[0];
            let extraspecial = rat(string_p(g, d) + 1);
            pos[g * np + d] = Some(extraspecial.clone());
            pos[d * np + g] = Some(-extraspecial.clone());
            let (ng, nd) = (rs.negative_index(g), rs.negative_index(d));
            for &(a, b) in &special[1..] {
                // Four-root relation with (a, b, -g, -d).
                let term = |u: usize, v: usize, s: usize, t: usize| -> Rational {
                    match (sums[u * nroots + v], sums[s * nroots + t]) {
                        (Some(uv), Some(_)) => general(&pos, u, v) * general(&pos, s, t) / &len[uv],
                        _ => Rational::zero(),
                    }
                };
                let bracket = term(b, ng, a, nd) + term(ng, a, b, nd);
                let val = &len[xi] / &extraspecial * bracket;
                let expected = rat(string_p(a, b) + 1);
                if val != expected && val != -expected.clone() {
                    return Err(Error::Inconsistent(format!(
                        "N({a},{b}) = {val}, expected ±{expected}"
                    )));
                }
                pos[a * np + b] = Some(val.clone());
                pos[b * np + a] = Some(-val);
            }
        }

        let mut structure = vec![0i32; nroots * nroots];
        for a in 0..nroots {
            for b in 0..nroots {
                if sums[a * nroots + b].is_some() {
                    let v = general(&pos, a, b);
                    structure[a * nroots + b] = v
                        .to_integer()
                        .to_i32()
                        .filter(|_| v.is_integer())
                        .ok_or_else(|| {
                            Error::Inconsistent(format!("non-integral N({a},{b}) = {v}"))
                        })?;
                }
            }
        }

        let pairings = roots
            .iter()
            .map(|r| (0..l).map(|i| rs.pairing(r.coords(), i)).collect())
            .collect();
        let coroots = roots.iter().map(|r| rs.coroot_coeffs(r)).collect();
        Ok(LieAlgebra {
            rs: rs.clone(),
            structure,
            sums,
            pairings,
            coroots,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn dim(&self) -> usize {
        self.rank() + self.rs.roots().len()
    }

    pub fn num_positive(&self) -> usize {
        self.rs.num_positive()
    }

    /// Basis index of `h_i`.
    pub fn h_index(&self, i: usize) -> usize {
        i
    }

    /// Basis index of `e_phi` for root index `k`.
    pub fn root_vector_index(&self, k: usize) -> usize {
        self.rank() + k
    }

    /// Root index of a basis vector, if it is a root vector.
    pub fn root_of(&self, basis: usize) -> Option<usize> {
        basis.checked_sub(self.rank())
    }

    /// Basis index of `e_phi` for `phi` given in coordinates.
    pub fn root_vector(&self, coords: &[i32]) -> Option<usize> {
        self.rs
            .root_index(coords)
            .map(|k| self.root_vector_index(k))
    }

    /// `N_{a,b}` for root indices, zero when `a + b` is not a root.
    pub fn structure_constant(&self, a: usize, b: usize) -> i32 {
        self.structure[a * self.rs.roots().len() + b]
    }

    pub fn in_part(&self, part: Part, basis: usize) -> bool {
        let l = self.rank();
        let p = self.num_positive();
        let is_h = basis < l;
        let is_n = basis >= l && basis < l + p;
        let is_nm = basis >= l + p;
        match part {
            Part::NMinus => is_nm,
            Part::H => is_h,
            Part::N => is_n,
            Part::B => is_h || is_n,
            Part::BMinus => is_h || is_nm,
        }
    }

    /// Basis indices spanning `part`, ascending.
    pub fn part_indices(&self, part: Part) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.in_part(part, i)).collect()
    }

    /// Bracket of two basis vectors.
    pub fn basis_bracket(&self, i: usize, j: usize) -> BasisBracket {
        let l = self.rank();
        match (self.root_of(i), self.root_of(j)) {
            (None, None) => Vec::new(),
            (None, Some(b)) => vec![(j, i64::from(self.pairings[b][i]))],
            (Some(a), None) => vec![(i, -i64::from(self.pairings[a][j]))],
            (Some(a), Some(b)) => {
                if b == self.rs.negative_index(a) {
                    self.coroots[a]
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(k, &c)| (k, i64::from(c)))
                        .collect()
                } else {
                    match self.sums[a * self.rs.roots().len() + b] {
                        Some(c) => vec![(l + c, i64::from(self.structure_constant(a, b)))],
                        None => Vec::new(),
                    }
                }
            }
        }
        .into_iter()
        .filter(|&(_, c)| c != 0)
        .collect()
    }

    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let ab = a * b;
                for (k, c) in self.basis_bracket(i, j) {
                    out.add_term(k, &ab * rat(c));
                }
            }
        }
        out
    }

    /// Integer-only Jacobi check on basis vectors.
    fn jacobi_basis_vanishes(&self, x: usize, y: usize, z: usize) -> bool {
        let mut acc: Vec<(usize, i64)> = Vec::new();
        for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
            for (k, s) in self.basis_bracket(b, c) {
                for (t, u) in self.basis_bracket(a, k) {
                    match acc.iter_mut().find(|(i, _)| *i == t) {
                        Some(entry) => entry.1 += s * u,
                        None => acc.push((t, s * u)),
                    }
                }
            }
        }
        acc.iter().all(|&(_, v)| v == 0)
    }

    /// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]` on basis vectors.
    pub fn jacobi_basis(&self, x: usize, y: usize, z: usize) -> AlgebraElement {
        let (ex, ey, ez) = (
            AlgebraElement::basis(x),
            AlgebraElement::basis(y),
            AlgebraElement::basis(z),
        );
        self.jacobi(&ex, &ey, &ez)
    }

    pub fn jacobi(
        &self,
        x: &AlgebraElement,
        y: &AlgebraElement,
        z: &AlgebraElement,
    ) -> AlgebraElement {
        self.bracket(x, &self.bracket(y, z))
            .add(&self.bracket(y, &self.bracket(z, x)))
            .add(&self.bracket(z, &self.bracket(x, y)))
    }

    /// Invariant form on basis vectors: `(h_i, h_j) = (alpha_i^vee,
    /// alpha_j^vee)` and `(e_phi, e_-phi) = 2/(phi, phi)`.
    pub fn basis_form(&self, i: usize, j: usize) -> Rational {
        let rs = &self.rs;
        match (self.root_of(i), self.root_of(j)) {
            (None, None) => {
                let g = rs.gram();
                rat(4) * &g[i][j] / (&g[i][i] * &g[j][j])
            }
            (Some(a), Some(b)) if b == rs.negative_index(a) => {
                let r = rs.root(a);
                rat(2) / rs.inner_roots(r, r)
            }
            _ => Rational::zero(),
        }
    }

    pub fn invariant_form(&self, x: &AlgebraElement, y: &AlgebraElement) -> Rational {
        let mut acc = Rational::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let f = self.basis_form(i, j);
                if !f.is_zero() {
                    acc += f * a * b;
                }
            }
        }
        acc
    }

    /// Coordinate projection onto `part` along the complementary pieces of
    /// the triangular decomposition.
    pub fn project(&self, part: Part, x: &AlgebraElement) -> AlgebraElement {
        x.restrict(|i| self.in_part(part, i))
    }
}

/// Free-function form of [`LieAlgebra::build`].
pub fn build_algebra(rs: &RootSystem) -> Result<LieAlgebra> {
    LieAlgebra::build(rs)
}

/// Index sets of the triangular decomposition together with the cascade
/// pieces `r = span{e_beta}` and `r_- = span{e_-beta}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub n_minus: Vec<usize>,
    pub h: Vec<usize>,
    pub n: Vec<usize>,
    pub b: Vec<usize>,
    pub b_minus: Vec<usize>,
    pub r: Vec<usize>,
    pub r_minus: Vec<usize>,
}

impl Decomposition {
    pub fn new(g: &LieAlgebra, cs: &CascadeSet) -> Self {
        let r: Vec<usize> = cs
            .iter()
            .map(|beta| {
                g.root_vector(beta.coords())
                    .expect("cascade roots are roots")
            })
            .collect();
        let r_minus = cs
            .iter()
            .map(|beta| {
                g.root_vector(beta.neg().coords())
                    .expect("cascade roots are roots")
            })
            .collect();
        Self {
            n_minus: g.part_indices(Part::NMinus),
            h: g.part_indices(Part::H),
            n: g.part_indices(Part::N),
            b: g.part_indices(Part::B),
            b_minus: g.part_indices(Part::BMinus),
            r,
            r_minus,
        }
    }
}

/// True iff `[e_beta, e_beta'] = 0` for all cascade roots.
pub fn r_is_abelian(g: &LieAlgebra, cs: &CascadeSet) -> bool {
    let idx: Vec<usize> = cs
        .iter()
        .filter_map(|b| g.root_vector(b.coords()))
        .collect();
    idx.len() == cs.m()
        && idx
            .iter()
            .all(|&i| idx.iter().all(|&j| g.basis_bracket(i, j).is_empty()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cascade::compute_cascade;
    use crate::rootsys::SimpleType;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn alg(s: &str) -> LieAlgebra {
        LieAlgebra::build(&RootSystem::new(s.parse().unwrap())).unwrap()
    }

    fn random_element(g: &LieAlgebra, rng: &mut ChaCha8Rng, max_terms: usize) -> AlgebraElement {
        let terms = rng.gen_range(1..=max_terms);
        AlgebraElement::from_pairs(
            (0..terms).map(|_| (rng.gen_range(0..g.dim()), rat(rng.gen_range(-5..=5)))),
        )
    }

    #[test]
    fn sl2_relations() {
        let g = alg("A1");
        let (h, e, f) = (0, 1, 2);
        assert_eq!(g.basis_bracket(e, f), vec![(h, 1)]);
        assert_eq!(g.basis_bracket(h, e), vec![(e, 2)]);
        assert_eq!(g.basis_bracket(h, f), vec![(f, -2)]);
        assert_eq!(g.dim(), 3);
    }

    #[test]
    fn a2_bracket_and_g2_maximum() {
        let g = alg("A2");
        let e1 = g.root_vector(&[1, 0]).unwrap();
        let e2 = g.root_vector(&[0, 1]).unwrap();
        let e12 = g.root_vector(&[1, 1]).unwrap();
        let br = g.basis_bracket(e1, e2);
        assert_eq!(br.len(), 1);
        assert_eq!(br[0].0, e12);
        assert_eq!(br[0].1.abs(), 1);

        let g2 = alg("G2");
        let n = g2.root_system().roots().len();
        let max = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| g2.structure_constant(a, b).abs())
            .max()
            .unwrap();
        assert_eq!(max, 3);
    }

    #[test]
    fn structure_constant_magnitudes_and_signs() {
        for t in SimpleType::all_up_to(8, true) {
            let g = alg(&t.to_string());
            let rs = g.root_system();
            let n = rs.roots().len();
            for a in 0..n {
                for b in 0..n {
                    let c = rs.root(a).add(rs.root(b));
                    if !rs.is_root(c.coords()) {
                        assert_eq!(g.structure_constant(a, b), 0);
                        continue;
                    }
                    let mut p = 0;
                    let mut v = rs.root(b).sub(rs.root(a));
                    while rs.is_root(v.coords()) {
                        p += 1;
                        v = v.sub(rs.root(a));
                    }
                    assert_eq!(g.structure_constant(a, b).abs(), p + 1, "{t}");
                    assert_eq!(g.structure_constant(b, a), -g.structure_constant(a, b));
                    let (na, nb) = (rs.negative_index(a), rs.negative_index(b));
                    assert_eq!(
                        g.structure_constant(na, nb),
                        -g.structure_constant(a, b),
                        "{t}"
                    );
                }
            }
        }
    }

    #[test]
    fn jacobi_and_invariance_exhaustive_rank_le_3() {
        for t in SimpleType::all_up_to(3, true) {
            let g = alg(&t.to_string());
            let d = g.dim();
            for x in 0..d {
                for y in 0..d {
                    for z in 0..d {
                        assert!(g.jacobi_basis(x, y, z).is_zero(), "{t} ({x},{y},{z})");
                        let (ex, ey, ez) = (
                            AlgebraElement::basis(x),
                            AlgebraElement::basis(y),
                            AlgebraElement::basis(z),
                        );
                        let lhs = g.invariant_form(&g.bracket(&ex, &ey), &ez)
                            + g.invariant_form(&ey, &g.bracket(&ex, &ez));
                        assert!(lhs.is_zero(), "{t} form ({x},{y},{z})");
                    }
                }
            }
        }
    }

    #[test]
    fn jacobi_and_invariance_random_rank_le_8() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for t in SimpleType::all_up_to(8, false) {
            let g = alg(&t.to_string());
            for _ in 0..50 {
                let x = random_element(&g, &mut rng, 4);
                let y = random_element(&g, &mut rng, 4);
                let z = random_element(&g, &mut rng, 4);
                assert!(g.jacobi(&x, &y, &z).is_zero(), "{t}");
                let inv = g.invariant_form(&g.bracket(&x, &y), &z)
                    - g.invariant_form(&x, &g.bracket(&y, &z));
                assert!(inv.is_zero(), "{t}");
                assert!(g.bracket(&x, &x).is_zero());
                assert_eq!(g.invariant_form(&x, &y), g.invariant_form(&y, &x));
            }
        }
    }

    #[test]
    fn form_values() {
        for t in SimpleType::all_up_to(8, true) {
            let g = alg(&t.to_string());
            let rs = g.root_system();
            let theta = rs.root_index(rs.highest_root().coords()).unwrap();
            let e = AlgebraElement::basis(g.root_vector_index(theta));
            let f = AlgebraElement::basis(g.root_vector_index(rs.negative_index(theta)));
            assert_eq!(g.invariant_form(&e, &f), Rational::one(), "{t}");
            // Restricted to h, the form is the dual of the root form: h_i
            // corresponds to alpha_i^vee = 2 alpha_i / (alpha_i, alpha_i).
            for i in 0..g.rank() {
                for j in 0..g.rank() {
                    let gram = rs.gram();
                    let expected = rat(4) * &gram[i][j] / (&gram[i][i] * &gram[j][j]);
                    assert_eq!(g.basis_form(i, j), expected);
                }
            }
        }
        let a2 = alg("A2");
        let e1 = AlgebraElement::basis(a2.root_vector(&[1, 0]).unwrap());
        let e2 = AlgebraElement::basis(a2.root_vector(&[0, 1]).unwrap());
        assert!(a2.invariant_form(&e1, &e2).is_zero());
    }

    #[test]
    fn form_is_nondegenerate() {
        for t in ["A2", "B3", "G2", "F4"] {
            let g = alg(t);
            let gram =
                crate::exactla::RatMatrix::from_fn(g.dim(), g.dim(), |i, j| g.basis_form(i, j));
            assert_eq!(gram.rank(), g.dim(), "{t}");
        }
    }

    #[test]
    fn dimensions() {
        for (t, d) in [
            ("A2", 8),
            ("G2", 14),
            ("F4", 52),
            ("E8", 248),
            ("B3", 21),
            ("C4", 36),
            ("D5", 45),
        ] {
            assert_eq!(alg(t).dim(), d, "{t}");
        }
    }

    #[test]
    fn cartan_action_on_root_vectors() {
        let g = alg("B3");
        let rs = g.root_system().clone();
        for (k, phi) in rs.roots().iter().enumerate() {
            let h = AlgebraElement::from_pairs([(0, rat(2)), (2, rat(-1))]);
            let e = AlgebraElement::basis(g.root_vector_index(k));
            let value = 2 * rs.pairing(phi.coords(), 0) - rs.pairing(phi.coords(), 2);
            assert_eq!(g.bracket(&h, &e), e.scale(&rat(i64::from(value))));
        }
    }

    #[test]
    fn projections() {
        let g = alg("A2");
        let ea = g.root_vector(&[1, 0]).unwrap();
        let eb = g.root_vector(&[0, -1]).unwrap();
        let x = AlgebraElement::from_pairs([(ea, rat(1)), (0, rat(1)), (eb, rat(1))]);
        assert_eq!(g.project(Part::H, &x), AlgebraElement::basis(0));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let x = random_element(&g, &mut rng, 6);
            let b_minus = g.project(Part::BMinus, &x);
            assert_eq!(
                b_minus,
                g.project(Part::NMinus, &x).add(&g.project(Part::H, &x))
            );
            let total = g
                .project(Part::NMinus, &x)
                .add(&g.project(Part::H, &x))
                .add(&g.project(Part::N, &x));
            assert_eq!(total, x);
            assert_eq!(g.project(Part::BMinus, &b_minus), b_minus);
            assert!(g.project(Part::NMinus, &g.project(Part::B, &x)).is_zero());
        }
    }

    #[test]
    fn decomposition_sizes_and_abelian_r() {
        for t in SimpleType::all_up_to(8, true) {
            let g = alg(&t.to_string());
            let cs = compute_cascade(g.root_system()).to_set();
            let d = Decomposition::new(&g, &cs);
            assert_eq!(d.n_minus.len() + d.h.len() + d.n.len(), g.dim());
            assert_eq!(d.b.len(), g.rank() + g.num_positive());
            assert_eq!(d.r.len(), cs.m());
            assert_eq!(d.r_minus.len(), cs.m());
            assert!(r_is_abelian(&g, &cs), "{t}");
            let neg = CascadeSet::new(cs.iter().map(|b| b.neg()).collect());
            assert!(r_is_abelian(&g, &neg), "{t}");
        }
        let e8 = alg("E8");
        let cs = compute_cascade(e8.root_system()).to_set();
        assert_eq!(cs.m() * (cs.m() - 1) / 2, 28);
    }
}
