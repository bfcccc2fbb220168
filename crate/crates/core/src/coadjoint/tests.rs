use super::*;
use crate::cascade::compute_cascade;
use crate::rootsys::RootSystem;

fn setup(name: &str) -> (LieAlgebra, CascadeSet) {
    let rs = RootSystem::new(name.parse().unwrap());
    let cs = compute_cascade(&rs).to_set();
    (LieAlgebra::build(&rs).unwrap(), cs)
}

fn std_point(g: &LieAlgebra, cs: &CascadeSet) -> CoadPoint {
    standard_point(cs).to_point(g, cs).unwrap()
}

#[test]
fn zero_point_gives_zero_matrix() {
    let (g, _) = setup("B2");
    let w = CoadPoint::new(&g, AlgebraElement::zero()).unwrap();
    for kind in [
        ActionKind::CoadN,
        ActionKind::CoadB,
        ActionKind::NMinusAction,
    ] {
        let m = action_matrix(&g, kind, &w).unwrap();
        assert!(m.is_zero());
        let iso = isotropy(&g, kind, &w).unwrap();
        assert_eq!(iso.isotropy.dim(), iso.acting_dim);
    }
}

#[test]
fn a1_coad_n_is_zero() {
    let (g, cs) = setup("A1");
    let w = std_point(&g, &cs);
    let m = action_matrix(&g, ActionKind::CoadN, &w).unwrap();
    assert_eq!((m.rows(), m.cols()), (1, 1));
    assert!(m.is_zero());
    let iso = isotropy(&g, ActionKind::CoadN, &w).unwrap();
    assert_eq!((iso.isotropy.dim(), iso.orbit_dim, iso.codim), (1, 0, 1));
}

#[test]
fn a2_theta_point() {
    let (g, cs) = setup("A2");
    let w = std_point(&g, &cs);
    assert_eq!(
        w.element().support().collect::<Vec<_>>(),
        vec![g.root_vector(&[-1, -1]).unwrap()]
    );
    let m = action_matrix(&g, ActionKind::CoadN, &w).unwrap();
    assert_eq!(m.rank(), 2);
    let iso = isotropy(&g, ActionKind::CoadN, &w).unwrap();
    assert_eq!((iso.orbit_dim, iso.codim), (2, 1));
    let c = isotropy(&g, ActionKind::NMinusAction, &w).unwrap();
    assert_eq!(c.isotropy.dim(), 2);
    let b = isotropy(&g, ActionKind::CoadB, &w).unwrap();
    assert_eq!((b.isotropy.dim(), b.orbit_dim, b.acting_dim), (1, 4, 5));
}

#[test]
fn b2_open_orbit_at_standard_point() {
    let (g, cs) = setup("B2");
    let iso = isotropy(&g, ActionKind::CoadB, &std_point(&g, &cs)).unwrap();
    assert_eq!((iso.isotropy.dim(), iso.codim), (0, 0));
}

#[test]
fn points_of_h_are_fixed() {
    let (g, _) = setup("A3");
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let w = CoadPoint::new(&g, random_point_in(&g, Part::H, &mut rng)).unwrap();
    let iso = isotropy(&g, ActionKind::CoadB, &w).unwrap();
    assert_eq!(iso.isotropy.dim(), g.rank() + g.num_positive());
    assert_eq!(iso.codim, iso.acting_dim);
}

#[test]
fn support_is_checked() {
    let (g, cs) = setup("A2");
    let e = AlgebraElement::basis(g.root_vector(&[1, 0]).unwrap());
    assert_eq!(
        CoadPoint::new(&g, e).unwrap_err(),
        Error::SupportViolation("b_-")
    );
    let h = CoadPoint::new(&g, AlgebraElement::basis(g.h_index(0))).unwrap();
    assert!(matches!(
        action_matrix(&g, ActionKind::CoadN, &h),
        Err(Error::SupportViolation(_))
    ));
    let w = std_point(&g, &cs);
    let bad_z = AlgebraElement::basis(g.root_vector(&[-1, 0]).unwrap());
    assert!(w.shifted(&g, &bad_z).is_err());
    assert!(RMinusCrossPoint::new(vec![rat(0)]).is_err());
    assert!(matches!(
        RMinusCrossPoint::new(vec![rat(1), rat(2)])
            .unwrap()
            .to_point(&g, &cs),
        Err(Error::DimensionMismatch {
            expected: 1,
            found: 2
        })
    ));
}

#[test]
fn point_split_is_exact() {
    let (g, _) = setup("C3");
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let w = CoadPoint::new(&g, random_point_in(&g, Part::BMinus, &mut rng)).unwrap();
    assert_eq!(w.nilpotent_part(&g).add(&w.toral_part(&g)), *w.element());
    assert!(w
        .nilpotent_part(&g)
        .support()
        .all(|i| g.in_part(Part::NMinus, i)));
}

#[test]
fn standard_points() {
    let (g, cs) = setup("A3");
    let w = std_point(&g, &cs);
    let mut expect = vec![
        g.root_vector(&[-1, -1, -1]).unwrap(),
        g.root_vector(&[0, -1, 0]).unwrap(),
    ];
    expect.sort();
    assert_eq!(w.element().support().collect::<Vec<_>>(), expect);
    assert!(standard_point(&cs).coeffs().iter().all(|a| *a == rat(1)));
}

#[test]
fn random_points_are_deterministic() {
    let (g, cs) = setup("B2");
    let p = random_rx_point(&cs, 7);
    assert_eq!(p, random_rx_point(&cs, 7));
    assert!(p
        .coeffs()
        .iter()
        .all(|a| !a.is_zero() && a.numer().magnitude() <= &99u32.into()));
    let iso = isotropy(&g, ActionKind::CoadN, &p.to_point(&g, &cs).unwrap()).unwrap();
    assert!(iso.isotropy.equals(&r_subspace(&g, &cs, Part::N)).unwrap());
    let pts = sample_rx_points(&cs, 3, 5);
    assert_eq!(pts.len(), 4);
    assert_eq!(pts[0], standard_point(&cs));
    assert_eq!(pts[2], random_rx_point(&cs, 6));
}

#[test]
fn h_naught_dims() {
    for (name, d) in [
        ("A2", 1),
        ("A3", 1),
        ("B2", 0),
        ("A4", 2),
        ("E6", 2),
        ("E8", 0),
    ] {
        let (g, cs) = setup(name);
        assert_eq!(h_naught(&g, &cs).dim(), d, "{name}");
    }
}

#[test]
fn isotropy_verifiers_on_examples() {
    for (name, n_dim, c_dim, b_dim) in [
        ("A1", 1, 1, 0),
        ("A2", 1, 2, 1),
        ("G2", 2, 2, 0),
        ("C3", 3, 3, 0),
        ("A4", 2, 4, 2),
    ] {
        let (g, cs) = setup(name);
        let pts = sample_rx_points(&cs, 5, 1);
        let n = verify_nilradical_isotropy(&g, &cs, &pts).unwrap();
        assert!(n.pass(), "{name}");
        assert!(n
            .witnesses
            .iter()
            .all(|w| w.subspace.as_ref().unwrap().dim() == n_dim));
        let c = verify_nminus_isotropy(&g, &cs, &pts).unwrap();
        assert!(c.pass(), "{name}");
        assert!(c
            .witnesses
            .iter()
            .all(|w| w.subspace.as_ref().unwrap().dim() == c_dim));
        let b = verify_borel_isotropy(&g, &cs, &pts).unwrap();
        assert!(b.pass(), "{name}");
        assert!(b
            .witnesses
            .iter()
            .all(|w| w.subspace.as_ref().unwrap().dim() == b_dim));
        assert_eq!(b.status(), Status::Pass);
    }
}

#[test]
fn wrong_expectation_fails() {
    let (g, cs) = setup("A2");
    // A non-generic point of r_- is impossible, but a point off r_- is not:
    // the nilradical isotropy at e_{-α1} is not r.
    let w = CoadPoint::new(&g, AlgebraElement::basis(g.root_vector(&[-1, 0]).unwrap())).unwrap();
    let iso = isotropy(&g, ActionKind::CoadN, &w).unwrap();
    assert!(!iso.isotropy.equals(&r_subspace(&g, &cs, Part::N)).unwrap());
    let empty = verify_nilradical_isotropy(&g, &cs, &[]).unwrap();
    assert_eq!(empty.status(), Status::Fail);
}

#[test]
fn e7_and_f4_isotropy() {
    let (g, cs) = setup("E7");
    let pts = sample_rx_points(&cs, 3, 2);
    let n = verify_nilradical_isotropy(&g, &cs, &pts).unwrap();
    assert!(n.pass());
    assert_eq!(n.witnesses[0].dims["isotropy_dim"], 7);
    let (g, cs) = setup("F4");
    let c = verify_nminus_isotropy(&g, &cs, &sample_rx_points(&cs, 20, 9)).unwrap();
    assert!(c.pass());
    assert_eq!(c.witnesses[20].dims["isotropy_dim"], 4);
}

#[test]
fn codim_sampling() {
    let (g, cs) = setup("A1");
    let r = verify_codim_bounds(&g, &cs, ActionKind::CoadN, CodimSampling::new(10, 1)).unwrap();
    assert!(r.pass());
    assert_eq!(r.dims["min_codim"], 1);
    let (g, cs) = setup("A2");
    let r = verify_codim_bounds(&g, &cs, ActionKind::CoadN, CodimSampling::new(100, 42)).unwrap();
    assert!(r.pass());
    assert_eq!(r.dims["min_codim"], 1);
    assert!(r.dims["equal"] >= 95);
    let (g, cs) = setup("B2");
    let r = verify_codim_bounds(&g, &cs, ActionKind::CoadB, CodimSampling::new(100, 42)).unwrap();
    assert!(r.pass() && r.dims["equal"] >= 95 && r.dims["bound"] == 0);
    assert!(
        verify_codim_bounds(&g, &cs, ActionKind::NMinusAction, CodimSampling::new(1, 0)).is_err()
    );
    assert!(verify_codim_bounds(&g, &cs, ActionKind::CoadB, CodimSampling::new(0, 0)).is_err());
}

#[test]
fn shift_and_fixed_set() {
    let (g, cs) = setup("A2");
    assert!(verify_shift_invariance(&g, 50, 3).unwrap().pass());
    let w = std_point(&g, &cs);
    let a = isotropy(&g, ActionKind::CoadB, &w).unwrap();
    let b = isotropy(
        &g,
        ActionKind::CoadB,
        &w.shifted(&g, &AlgebraElement::zero()).unwrap(),
    )
    .unwrap();
    assert!(a.isotropy.equals(&b.isotropy).unwrap());
    for (name, d) in [("A1", 1), ("A2", 2), ("D4", 4)] {
        let (g, _) = setup(name);
        let r = verify_fixed_set(&g).unwrap();
        assert!(r.pass(), "{name}");
        assert_eq!(r.dims["fixed_dim"], d);
    }
}

#[test]
fn torus_transitivity_ranks() {
    for (name, rank) in [("A1", 1), ("A3", 2), ("E8", 8)] {
        let (g, cs) = setup(name);
        let r = verify_torus_transitivity(&g, &cs, &sample_rx_points(&cs, 2, 4)).unwrap();
        assert!(r.pass(), "{name}");
        assert_eq!(r.witnesses[0].dims["rank"], rank);
    }
}

#[test]
fn cascade_and_w0_reports() {
    let rs = RootSystem::new("F4".parse().unwrap());
    let r = verify_cascade_oracle(&rs, 4);
    assert_eq!(r.status(), Status::Pass);
    assert_eq!(r.dims["bruteforce_max"], 4);
    let rs = RootSystem::new("E6".parse().unwrap());
    let r = verify_cascade_oracle(&rs, 4);
    assert_eq!(r.status(), Status::Skipped);
    assert!(r.pass());
    assert!(verify_w0_factorization(&rs, &compute_cascade(&rs).to_set()).pass());
}

#[test]
fn classification_small_ranks() {
    assert!(classify(1).is_err());
    let rows = classify(2).unwrap();
    let names: Vec<String> = rows.iter().map(|r| r.simple_type.to_string()).collect();
    assert_eq!(names, ["A1", "A2", "B2", "G2"]);
    let open: Vec<String> = rows
        .iter()
        .filter(|r| r.open_coadjoint_orbit)
        .map(|r| r.simple_type.to_string())
        .collect();
    assert_eq!(open, ["A1", "B2", "G2"]);
    assert!(rows.iter().all(ClassificationRow::consistent));
}

#[test]
fn classification_of_exceptional_and_d() {
    for (name, open) in [("D5", false), ("D6", true), ("E6", false), ("E7", true)] {
        let row = classify_type(name.parse().unwrap()).unwrap();
        assert_eq!(row.open_coadjoint_orbit, open, "{name}");
        assert!(row.consistent());
    }
}
