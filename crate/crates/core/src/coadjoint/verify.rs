//! Verifiers. Each returns a [`TheoremReport`] whose pass flag is derived
//! from its witnesses.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::ActionKind;
use super::{
    action_matrix, embed_h, h_naught, isotropy, orbit_codim, positions, r_subspace,
    random_point_in, CoadPoint, RMinusCrossPoint, TheoremReport, Witness,
};
use crate::cascade::{
    cascade_independence, compute_cascade, compute_cascade_with_order,
    max_strongly_orthogonal_bruteforce, strongly_orthogonal, verify_w0_product, CascadeSet,
    ComponentOrder,
};
use crate::chevalley::{LieAlgebra, Part};
use crate::exactla::{rat, RatMatrix, Subspace};
use crate::rootsys::RootSystem;
use crate::{Error, Result};

fn points_of(
    g: &LieAlgebra,
    cs: &CascadeSet,
    points: &[RMinusCrossPoint],
) -> Result<Vec<CoadPoint>> {
    points.iter().map(|p| p.to_point(g, cs)).collect()
}

fn label(i: usize) -> String {
    format!("point-{i}")
}

/// Cascade size against the brute-force maximum of strongly orthogonal
/// sets, plus pairwise strong orthogonality, independence and
/// order-independence of the construction. Skipped above `rank_limit`.
pub fn verify_cascade_oracle(rs: &RootSystem, rank_limit: usize) -> TheoremReport {
    let mut report = TheoremReport::new("cascade-oracle", rs.simple_type());
    let cs = compute_cascade(rs).to_set();
    report.set_dim("m", cs.m());
    report.set_dim("ell", rs.rank());
    let pairwise = cs.iter().enumerate().all(|(i, a)| {
        cs.roots()[i + 1..].iter().all(|b| {
            strongly_orthogonal(a, b, rs).unwrap_or(false)
                && num_traits::Zero::is_zero(&rs.inner_roots(a, b))
        })
    });
    report.push(Witness::new("pairwise-strongly-orthogonal", pairwise));
    report.push(Witness::new(
        "linearly-independent",
        cascade_independence(&cs),
    ));
    let reversed = compute_cascade_with_order(rs, ComponentOrder::Reversed).to_set();
    report.push(Witness::new("order-independent", cs.same_set(&reversed)));
    match max_strongly_orthogonal_bruteforce(rs, rank_limit) {
        Ok(max) => {
            report.set_dim("bruteforce_max", max);
            report.push(
                Witness::new("m-equals-bruteforce", max == cs.m()).dim("bruteforce_max", max),
            );
        }
        Err(Error::BudgetExceeded { rank, limit }) => {
            report.skipped = Some(format!("rank {rank} exceeds oracle rank limit {limit}"));
        }
        Err(e) => report.push(Witness::new(format!("oracle-error: {e}"), false)),
    }
    report
}

/// Product of the cascade reflections equals `w0`, and `m = l` exactly when
/// `w0 = -1`.
pub fn verify_w0_factorization(rs: &RootSystem, cs: &CascadeSet) -> TheoremReport {
    let mut report = TheoremReport::new("w0-factorization", rs.simple_type());
    let w0 = rs.longest_element();
    report.set_dim("m", cs.m());
    report.set_dim("ell", rs.rank());
    report.push(Witness::new("product-equals-w0", verify_w0_product(rs, cs)));
    report.push(Witness::new(
        "minus-one-iff-m-equals-ell",
        w0.is_minus_identity() == (cs.m() == rs.rank()),
    ));
    report
}

/// Isotropy of `CoadN` at each `tau ∈ r_-^×` is `r = span{e_β}`.
pub fn verify_nilradical_isotropy(
    g: &LieAlgebra,
    cs: &CascadeSet,
    points: &[RMinusCrossPoint],
) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("nilradical-isotropy", g.root_system().simple_type());
    let r = r_subspace(g, cs, Part::N);
    report.set_dim("m", cs.m());
    report.set_dim("dim_n", g.num_positive());
    report.set_dim("points", points.len());
    for (i, tau) in points_of(g, cs, points)?.iter().enumerate() {
        let iso = isotropy(g, ActionKind::CoadN, tau)?;
        let holds = iso.isotropy.equals(&r)? && iso.isotropy.dim() == cs.m();
        report.push(
            Witness::new(label(i), holds)
                .dim("isotropy_dim", iso.isotropy.dim())
                .dim("codim", iso.codim)
                .with_subspace(iso.isotropy),
        );
    }
    Ok(report)
}

/// Isotropy of the `n_-` action of `b` at each `w ∈ r_-^×` is `h° + r`, of
/// dimension `l`.
pub fn verify_nminus_isotropy(
    g: &LieAlgebra,
    cs: &CascadeSet,
    points: &[RMinusCrossPoint],
) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("nminus-action-isotropy", g.root_system().simple_type());
    let h0 = embed_h(g, &h_naught(g, cs), Part::B);
    let expected = h0.sum(&r_subspace(g, cs, Part::B))?;
    report.set_dim("ell", g.rank());
    report.set_dim("h_naught_dim", h0.dim());
    report.set_dim("points", points.len());
    for (i, w) in points_of(g, cs, points)?.iter().enumerate() {
        let iso = isotropy(g, ActionKind::NMinusAction, w)?;
        let holds = iso.isotropy.equals(&expected)? && iso.isotropy.dim() == g.rank();
        report.push(
            Witness::new(label(i), holds)
                .dim("isotropy_dim", iso.isotropy.dim())
                .with_subspace(iso.isotropy),
        );
    }
    Ok(report)
}

/// Isotropy of `CoadB` at each `w ∈ r_-^×` is `h°`; it sits inside the
/// `n_-`-action isotropy; the map `r → h, x ↦ Φ_h[x, w]` is injective; and
/// the orbit has codimension `l - m`.
pub fn verify_borel_isotropy(
    g: &LieAlgebra,
    cs: &CascadeSet,
    points: &[RMinusCrossPoint],
) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("borel-isotropy", g.root_system().simple_type());
    let h0 = embed_h(g, &h_naught(g, cs), Part::B);
    let dim_b = g.rank() + g.num_positive();
    let bound = g.rank() - cs.m();
    report.set_dim("ell", g.rank());
    report.set_dim("m", cs.m());
    report.set_dim("h_naught_dim", h0.dim());
    report.set_dim("dim_b", dim_b);
    report.set_dim("points", points.len());
    let r_idx: Vec<usize> = cs
        .iter()
        .map(|b| g.root_vector(b.coords()).expect("cascade roots are roots"))
        .collect();
    for (i, w) in points_of(g, cs, points)?.iter().enumerate() {
        let b_iso = isotropy(g, ActionKind::CoadB, w)?;
        let c_iso = isotropy(g, ActionKind::NMinusAction, w)?;
        let equals = b_iso.isotropy.equals(&h0)?;
        let nested = b_iso.isotropy.is_subspace_of(&c_iso.isotropy)?;
        // Φ_h[e_β, w] for each cascade root, as columns in coroot coordinates.
        let r_to_h = RatMatrix::from_fn(g.rank(), r_idx.len(), |row, col| {
            let mut acc = rat(0);
            for (k, c) in w.element().iter() {
                for (t, v) in g.basis_bracket(r_idx[col], k) {
                    if t == g.h_index(row) {
                        acc += c * rat(v);
                    }
                }
            }
            acc
        });
        let injective_rank = r_to_h.rank();
        let holds = equals
            && nested
            && injective_rank == cs.m()
            && b_iso.codim == bound
            && b_iso.orbit_dim == dim_b - bound;
        report.push(
            Witness::new(label(i), holds)
                .dim("isotropy_dim", b_iso.isotropy.dim())
                .dim("orbit_dim", b_iso.orbit_dim)
                .dim("codim", b_iso.codim)
                .dim("r_to_h_rank", injective_rank)
                .with_subspace(b_iso.isotropy),
        );
    }
    Ok(report)
}

/// Sampling parameters for the codimension checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodimSampling {
    pub samples: usize,
    pub seed: u64,
    /// Minimum share of samples, in percent, that must attain the bound.
    pub min_equality_percent: u32,
}

impl CodimSampling {
    pub fn new(samples: usize, seed: u64) -> Self {
        Self {
            samples,
            seed,
            min_equality_percent: 95,
        }
    }
}

/// Random integer points of `n_-` (`CoadN`, bound `m`) or `b_-` (`CoadB`,
/// bound `l - m`): every orbit codimension must be at least the bound and
/// the configured share must attain it.
pub fn verify_codim_bounds(
    g: &LieAlgebra,
    cs: &CascadeSet,
    kind: ActionKind,
    sampling: CodimSampling,
) -> Result<TheoremReport> {
    let (id, part, bound) = match kind {
        ActionKind::CoadN => ("nilradical-codim", Part::NMinus, cs.m()),
        ActionKind::CoadB => ("borel-codim", Part::BMinus, g.rank() - cs.m()),
        ActionKind::NMinusAction => {
            return Err(Error::InvalidArgument(
                "codimension bounds are stated for coad_N and coad_B".into(),
            ))
        }
    };
    if sampling.samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    let mut report = TheoremReport::new(id, g.root_system().simple_type());
    let mut rng = ChaCha8Rng::seed_from_u64(sampling.seed);
    let mut equal = 0;
    let mut min_codim = usize::MAX;
    for i in 0..sampling.samples {
        let w = CoadPoint::new(g, random_point_in(g, part, &mut rng))?;
        let codim = orbit_codim(g, kind, &w)?;
        min_codim = min_codim.min(codim);
        if codim == bound {
            equal += 1;
        }
        report.push(Witness::new(format!("sample-{i}"), codim >= bound).dim("codim", codim));
    }
    let rate_ok = equal * 100 >= sampling.min_equality_percent as usize * sampling.samples;
    report.push(Witness::new("equality-rate", rate_ok).dim("equal", equal));
    report.set_dim("bound", bound);
    report.set_dim("samples", sampling.samples);
    report.set_dim("equal", equal);
    report.set_dim("min_codim", min_codim);
    Ok(report)
}

/// `CoadB` isotropy at `w` equals that at `w + z` for random `w ∈ b_-`,
/// `z ∈ h`.
pub fn verify_shift_invariance(g: &LieAlgebra, samples: usize, seed: u64) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("shift-invariance", g.root_system().simple_type());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    report.set_dim("samples", samples);
    for i in 0..samples {
        let w = CoadPoint::new(g, random_point_in(g, Part::BMinus, &mut rng))?;
        let z = random_point_in(g, Part::H, &mut rng);
        let shifted = w.shifted(g, &z)?;
        let a = isotropy(g, ActionKind::CoadB, &w)?;
        let b = isotropy(g, ActionKind::CoadB, &shifted)?;
        report.push(
            Witness::new(format!("pair-{i}"), a.isotropy.equals(&b.isotropy)?)
                .dim("isotropy_dim", a.isotropy.dim()),
        );
    }
    Ok(report)
}

/// The joint kernel of `w ↦ Φ_{b_-}[x, w]` over a basis of `b` is exactly `h`.
pub fn verify_fixed_set(g: &LieAlgebra) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("fixed-set", g.root_system().simple_type());
    let (domain, _) = positions(g, Part::BMinus);
    let (target, rev) = positions(g, Part::BMinus);
    let mut fixed = Subspace::full(domain.len());
    for x in g.part_indices(Part::B) {
        // Matrix of w ↦ Φ_{b_-}[x, w] on b_- coordinates.
        let mut m = RatMatrix::zeros(target.len(), domain.len());
        for (col, &j) in domain.iter().enumerate() {
            for (t, v) in g.basis_bracket(x, j) {
                if let Some(row) = rev[t] {
                    m.set(row, col, rat(v));
                }
            }
        }
        fixed = fixed.restrict_kernel(&m)?;
    }
    let h = embed_h(g, &Subspace::full(g.rank()), Part::BMinus);
    report.set_dim("ell", g.rank());
    report.set_dim("fixed_dim", fixed.dim());
    report.push(
        Witness::new("fixed-set-equals-h", fixed.equals(&h)?)
            .dim("fixed_dim", fixed.dim())
            .with_subspace(fixed),
    );
    Ok(report)
}

/// The map `h → r_-`, `x ↦ (r_- part of [x, τ])` has rank `m` at each `τ`.
pub fn verify_torus_transitivity(
    g: &LieAlgebra,
    cs: &CascadeSet,
    points: &[RMinusCrossPoint],
) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("torus-transitivity", g.root_system().simple_type());
    let r_minus: Vec<usize> = cs
        .iter()
        .map(|b| {
            g.root_vector(b.neg().coords())
                .expect("cascade roots are roots")
        })
        .collect();
    report.set_dim("m", cs.m());
    report.set_dim("points", points.len());
    for (i, tau) in points_of(g, cs, points)?.iter().enumerate() {
        let m = RatMatrix::from_fn(r_minus.len(), g.rank(), |row, col| {
            let mut acc = rat(0);
            for (k, c) in tau.element().iter() {
                for (t, v) in g.basis_bracket(g.h_index(col), k) {
                    if t == r_minus[row] {
                        acc += c * rat(v);
                    }
                }
            }
            acc
        });
        let rank = m.rank();
        report.push(Witness::new(label(i), rank == cs.m()).dim("rank", rank));
    }
    // Keeps the action-matrix path honest: the h-block of the n_- action
    // at τ has the same rank.
    if let Some(tau) = points.first() {
        let w = tau.to_point(g, cs)?;
        let full = action_matrix(g, ActionKind::NMinusAction, &w)?;
        let h_cols = RatMatrix::from_fn(full.rows(), g.rank(), |r, c| full.get(r, c).clone());
        report
            .push(Witness::new("h-block-rank", h_cols.rank() == cs.m()).dim("rank", h_cols.rank()));
    }
    Ok(report)
}
