//! Coadjoint actions of `b` and `n`, their isotropy algebras, and the
//! verifiers built on them.
//!
//! The dual of `b` is identified with `b_- = n_- + h` through the invariant
//! form, and the dual of `n` with `n_-`. Under this identification the
//! infinitesimal coadjoint action of `x ∈ b` on `w ∈ b_-` is
//! `Φ_{b_-}[x, w]`, so every isotropy algebra is the kernel of an exact
//! linear map `x ↦ Φ([x, w])`. Group-level statements are checked through
//! these Lie algebra kernels: orbit dimension is the rank of the map, orbit
//! codimension is the dimension of the dual minus that rank.

mod classify;
mod verify;

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cascade::CascadeSet;
use crate::chevalley::{AlgebraElement, LieAlgebra, Part};
use crate::exactla::{rat, RatMatrix, Rational, Subspace};
use crate::rootsys::SimpleType;
use crate::{Error, Result};

pub use classify::{classify, classify_type, ClassificationRow};
pub use verify::{
    verify_borel_isotropy, verify_cascade_oracle, verify_codim_bounds, verify_fixed_set,
    verify_nilradical_isotropy, verify_nminus_isotropy, verify_shift_invariance,
    verify_torus_transitivity, verify_w0_factorization, CodimSampling,
};

/// Which infinitesimal action a matrix or isotropy algebra refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionKind {
    /// Coadjoint action of `n` on `n* ≅ n_-`: `x ↦ Φ_{n_-}[x, w]`.
    CoadN,
    /// Coadjoint action of `b` on `b* ≅ b_-`: `x ↦ Φ_{b_-}[x, w]`.
    CoadB,
    /// The `n_-` action of `b` extending `CoadN`: `x ↦ Φ_{n_-}[x, w]`, `x ∈ b`.
    NMinusAction,
}

impl ActionKind {
    pub fn domain(self) -> Part {
        match self {
            ActionKind::CoadN => Part::N,
            ActionKind::CoadB | ActionKind::NMinusAction => Part::B,
        }
    }

    pub fn target(self) -> Part {
        match self {
            ActionKind::CoadB => Part::BMinus,
            ActionKind::CoadN | ActionKind::NMinusAction => Part::NMinus,
        }
    }

    /// Where points acted upon must live.
    pub fn point_part(self) -> Part {
        self.target()
    }

    pub fn name(self) -> &'static str {
        match self {
            ActionKind::CoadN => "coad_N",
            ActionKind::CoadB => "coad_B",
            ActionKind::NMinusAction => "nminus_action",
        }
    }
}

/// A point of `b_-`, split as `w = v + x` with `v ∈ n_-` and `x ∈ h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoadPoint {
    element: AlgebraElement,
}

impl CoadPoint {
    pub fn new(g: &LieAlgebra, element: AlgebraElement) -> Result<Self> {
        if element.support().any(|i| !g.in_part(Part::BMinus, i)) {
            return Err(Error::SupportViolation("b_-"));
        }
        Ok(Self { element })
    }

    pub fn element(&self) -> &AlgebraElement {
        &self.element
    }

    /// `v = Φ_{n_-} w`
    pub fn nilpotent_part(&self, g: &LieAlgebra) -> AlgebraElement {
        g.project(Part::NMinus, &self.element)
    }

    /// `x = Φ_h w`
    pub fn toral_part(&self, g: &LieAlgebra) -> AlgebraElement {
        g.project(Part::H, &self.element)
    }

    /// `w + z` for `z ∈ h`.
    pub fn shifted(&self, g: &LieAlgebra, z: &AlgebraElement) -> Result<CoadPoint> {
        if z.support().any(|i| !g.in_part(Part::H, i)) {
            return Err(Error::SupportViolation("h"));
        }
        CoadPoint::new(g, self.element.add(z))
    }

    pub fn is_zero(&self) -> bool {
        self.element.is_zero()
    }
}

/// A point `Σ a_β e_{-β}` of `r_-` with every coefficient nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMinusCrossPoint {
    coeffs: Vec<Rational>,
}

impl RMinusCrossPoint {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.iter().any(Zero::is_zero) {
            return Err(Error::InvalidArgument(
                "r_- cross points need nonzero coefficients".into(),
            ));
        }
        Ok(Self { coeffs })
    }

    /// Coefficients `a_β`, in cascade order.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn to_point(&self, g: &LieAlgebra, cs: &CascadeSet) -> Result<CoadPoint> {
        if self.coeffs.len() != cs.m() {
            return Err(Error::DimensionMismatch {
                expected: cs.m(),
                found: self.coeffs.len(),
            });
        }
        let element = AlgebraElement::from_pairs(cs.iter().zip(&self.coeffs).map(|(beta, a)| {
            let idx = g
                .root_vector(beta.neg().coords())
                .expect("cascade roots are roots");
            (idx, a.clone())
        }));
        CoadPoint::new(g, element)
    }
}

/// The point `Σ_β e_{-β}`.
pub fn standard_point(cs: &CascadeSet) -> RMinusCrossPoint {
    RMinusCrossPoint {
        coeffs: vec![rat(1); cs.m()],
    }
}

/// Coefficients drawn uniformly from `[-99, 99] \ {0}`.
pub fn random_rx_point(cs: &CascadeSet, seed: u64) -> RMinusCrossPoint {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs = (0..cs.m()).map(|_| rat(nonzero_coeff(&mut rng))).collect();
    RMinusCrossPoint { coeffs }
}

/// The standard point followed by `count` random points with seeds
/// `seed, seed + 1, ...`.
pub fn sample_rx_points(cs: &CascadeSet, count: usize, seed: u64) -> Vec<RMinusCrossPoint> {
    std::iter::once(standard_point(cs))
        .chain((0..count as u64).map(|i| random_rx_point(cs, seed.wrapping_add(i))))
        .collect()
}

pub(crate) const COEFF_RANGE: i64 = 99;

fn nonzero_coeff(rng: &mut ChaCha8Rng) -> i64 {
    loop {
        let a = rng.gen_range(-COEFF_RANGE..=COEFF_RANGE);
        if a != 0 {
            return a;
        }
    }
}

/// Random nonzero integer point supported in `part`, coordinates in
/// `[-99, 99]`.
pub fn random_point_in(g: &LieAlgebra, part: Part, rng: &mut ChaCha8Rng) -> AlgebraElement {
    loop {
        let e = AlgebraElement::from_pairs(
            g.part_indices(part)
                .into_iter()
                .map(|i| (i, rat(rng.gen_range(-COEFF_RANGE..=COEFF_RANGE)))),
        );
        if !e.is_zero() {
            return e;
        }
    }
}

/// Position of each basis vector inside `part`'s coordinate list.
fn positions(g: &LieAlgebra, part: Part) -> (Vec<usize>, Vec<Option<usize>>) {
    let idx = g.part_indices(part);
    let mut rev = vec![None; g.dim()];
    for (pos, &i) in idx.iter().enumerate() {
        rev[i] = Some(pos);
    }
    (idx, rev)
}

/// Matrix of `x ↦ Φ_target([x, w])` from the domain of `kind` to its
/// target, both in their basis-index order.
pub fn action_matrix(g: &LieAlgebra, kind: ActionKind, w: &CoadPoint) -> Result<RatMatrix> {
    if w.element()
        .support()
        .any(|i| !g.in_part(kind.point_part(), i))
    {
        return Err(Error::SupportViolation(match kind.point_part() {
            Part::NMinus => "n_-",
            _ => "b_-",
        }));
    }
    let (domain, _) = positions(g, kind.domain());
    let (target, rev) = positions(g, kind.target());
    let mut m = RatMatrix::zeros(target.len(), domain.len());
    for (col, &x) in domain.iter().enumerate() {
        for (k, c) in w.element().iter() {
            for (t, v) in g.basis_bracket(x, k) {
                if let Some(row) = rev[t] {
                    let cur = m.get(row, col) + c * rat(v);
                    m.set(row, col, cur);
                }
            }
        }
    }
    Ok(m)
}

/// Isotropy algebra of a point with its orbit dimension and codimension.
#[derive(Clone, Debug)]
pub struct IsotropyResult {
    pub kind: ActionKind,
    pub point: CoadPoint,
    /// Kernel of the action map, in the coordinates of `kind.domain()`.
    pub isotropy: Subspace,
    pub acting_dim: usize,
    pub orbit_dim: usize,
    pub codim: usize,
}

pub fn isotropy(g: &LieAlgebra, kind: ActionKind, w: &CoadPoint) -> Result<IsotropyResult> {
    let m = action_matrix(g, kind, w)?;
    let kernel = m.kernel();
    let acting_dim = m.cols();
    let orbit_dim = acting_dim - kernel.dim();
    Ok(IsotropyResult {
        kind,
        point: w.clone(),
        isotropy: kernel,
        acting_dim,
        orbit_dim,
        codim: m.rows() - orbit_dim,
    })
}

/// Orbit codimension from the rank alone, skipping the kernel basis.
pub fn orbit_codim(g: &LieAlgebra, kind: ActionKind, w: &CoadPoint) -> Result<usize> {
    let m = action_matrix(g, kind, w)?;
    Ok(m.rows() - m.rank())
}

/// `h° = {h ∈ h : β(h) = 0 for all β in the cascade}`, in the coordinates
/// of the simple coroots.
pub fn h_naught(g: &LieAlgebra, cs: &CascadeSet) -> Subspace {
    let rs = g.root_system();
    let pairing = RatMatrix::from_fn(cs.m(), g.rank(), |r, i| {
        rat(i64::from(rs.pairing(cs.roots()[r].coords(), i)))
    });
    pairing.kernel()
}

/// `r = span{e_β}` in the coordinates of `part` (which must contain `n`).
pub fn r_subspace(g: &LieAlgebra, cs: &CascadeSet, part: Part) -> Subspace {
    let (idx, rev) = positions(g, part);
    Subspace::coordinate(
        idx.len(),
        cs.iter().map(|b| {
            rev[g.root_vector(b.coords()).expect("cascade roots are roots")]
                .expect("part contains n")
        }),
    )
}

/// `h` (or a subspace of it in coroot coordinates) inside the coordinates
/// of `part`, which must contain `h`.
pub fn embed_h(g: &LieAlgebra, sub: &Subspace, part: Part) -> Subspace {
    let (idx, rev) = positions(g, part);
    sub.map_coords(idx.len(), |i| rev[g.h_index(i)])
}

/// Outcome of a verifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One checked fact inside a report.
#[derive(Clone, Debug)]
pub struct Witness {
    pub label: String,
    pub holds: bool,
    pub dims: BTreeMap<String, usize>,
    pub subspace: Option<Subspace>,
}

impl Witness {
    pub fn new(label: impl Into<String>, holds: bool) -> Self {
        Self {
            label: label.into(),
            holds,
            dims: BTreeMap::new(),
            subspace: None,
        }
    }

    pub fn dim(mut self, key: &str, value: usize) -> Self {
        self.dims.insert(key.to_string(), value);
        self
    }

    pub fn with_subspace(mut self, s: Subspace) -> Self {
        self.subspace = Some(s);
        self
    }
}

/// Result of a verifier: summary dimensions plus the witnesses the pass
/// flag is computed from.
#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub id: String,
    pub simple_type: Option<SimpleType>,
    pub dims: BTreeMap<String, usize>,
    pub witnesses: Vec<Witness>,
    pub skipped: Option<String>,
}

impl TheoremReport {
    pub fn new(id: &str, simple_type: Option<SimpleType>) -> Self {
        Self {
            id: id.to_string(),
            simple_type,
            dims: BTreeMap::new(),
            witnesses: Vec::new(),
            skipped: None,
        }
    }

    pub fn status(&self) -> Status {
        if self.skipped.is_some() {
            Status::Skipped
        } else if !self.witnesses.is_empty() && self.witnesses.iter().all(|w| w.holds) {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    /// True unless some witness failed; skipped reports count as passing.
    pub fn pass(&self) -> bool {
        self.status() != Status::Fail
    }

    pub fn set_dim(&mut self, key: &str, value: usize) {
        self.dims.insert(key.to_string(), value);
    }

    pub fn push(&mut self, w: Witness) {
        self.witnesses.push(w);
    }
}

#[cfg(test)]
mod tests;
