//! Acceptance suite. Prints one line per criterion and exits non-zero if
//! any fails.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lieorbit::cascade::{compute_cascade, max_strongly_orthogonal_bruteforce, verify_w0_product};
use lieorbit::coadjoint::{
    classify, sample_rx_points, verify_borel_isotropy, verify_codim_bounds, verify_fixed_set,
    verify_nilradical_isotropy, verify_nminus_isotropy, verify_shift_invariance, CodimSampling,
};
use lieorbit::{ActionKind, AlgebraElement, LieAlgebra, RootSystem, SimpleType};

const SEED: u64 = 42;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, ok: String) -> Outcome {
    if failures.is_empty() {
        Outcome {
            pass: true,
            detail: ok,
        }
    } else {
        Outcome {
            pass: false,
            detail: failures.join("; "),
        }
    }
}

fn types(max_rank: usize) -> Vec<SimpleType> {
    SimpleType::all_up_to(max_rank, true)
}

fn algebra(t: SimpleType) -> (RootSystem, LieAlgebra) {
    let rs = RootSystem::new(t);
    let g = LieAlgebra::build(&rs).expect("algebra builds");
    (rs, g)
}

fn cascade_oracle() -> Outcome {
    let list: Vec<SimpleType> = [
        "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect();
    let mut failures = Vec::new();
    for &t in &list {
        let rs = RootSystem::new(t);
        let m = compute_cascade(&rs).m();
        match max_strongly_orthogonal_bruteforce(&rs, 4) {
            Ok(best) if best == m => {}
            Ok(best) => failures.push(format!("{t}: cascade {m}, brute force {best}")),
            Err(e) => failures.push(format!("{t}: {e}")),
        }
    }
    outcome(failures, format!("{} types", list.len()))
}

fn w0_factorization() -> Outcome {
    let list = types(8);
    let failures = list
        .iter()
        .filter(|&&t| {
            let rs = RootSystem::new(t);
            !verify_w0_product(&rs, &compute_cascade(&rs).to_set())
        })
        .map(|t| t.to_string())
        .collect();
    outcome(failures, format!("{} types", list.len()))
}

fn classification() -> Outcome {
    let expected = [
        "A1", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "C3", "C4", "C5", "C6", "C7", "C8", "D4",
        "D6", "D8", "E7", "E8", "F4", "G2",
    ];
    let rows = match classify(8) {
        Ok(rows) => rows,
        Err(e) => return outcome(vec![e.to_string()], String::new()),
    };
    let mut failures = Vec::new();
    let mut open: Vec<String> = Vec::new();
    for row in &rows {
        let by_m = row.m == row.ell;
        if by_m != row.minus_one_in_weyl || by_m != row.open_coadjoint_orbit {
            failures.push(format!("{}: columns disagree", row.simple_type));
        }
        if row.open_coadjoint_orbit {
            open.push(row.simple_type.to_string());
        }
    }
    open.sort();
    let mut want: Vec<String> = expected.iter().map(|s| s.to_string()).collect();
    want.sort();
    if open != want {
        failures.push(format!("open-orbit types {open:?}"));
    }
    outcome(
        failures,
        format!("{} rows, {} with open orbit", rows.len(), open.len()),
    )
}

fn isotropy_criteria() -> (Outcome, Outcome) {
    let mut fail_n = Vec::new();
    let mut fail_b = Vec::new();
    let mut points = 0;
    for t in types(8) {
        let (rs, g) = algebra(t);
        let cs = compute_cascade(&rs).to_set();
        let pts = sample_rx_points(&cs, 20, SEED);
        points += pts.len();
        let check = |r: lieorbit::Result<lieorbit::TheoremReport>, fails: &mut Vec<String>| match r
        {
            Ok(rep) if rep.pass() => {}
            Ok(rep) => fails.push(format!("{t} {}", rep.id)),
            Err(e) => fails.push(format!("{t}: {e}")),
        };
        check(verify_nilradical_isotropy(&g, &cs, &pts), &mut fail_n);
        check(verify_nminus_isotropy(&g, &cs, &pts), &mut fail_b);
        check(verify_borel_isotropy(&g, &cs, &pts), &mut fail_b);
    }
    (
        outcome(fail_n, format!("{points} points")),
        outcome(fail_b, format!("{points} points")),
    )
}

fn codim_bounds() -> Outcome {
    let mut failures = Vec::new();
    let mut runs = 0;
    let mut list = types(6);
    list.extend(
        ["E7", "E8"]
            .iter()
            .map(|s| s.parse::<SimpleType>().unwrap()),
    );
    for t in list {
        let samples = if t.rank() > 6 { 20 } else { 100 };
        let (rs, g) = algebra(t);
        let cs = compute_cascade(&rs).to_set();
        for kind in [ActionKind::CoadN, ActionKind::CoadB] {
            runs += 1;
            match verify_codim_bounds(&g, &cs, kind, CodimSampling::new(samples, SEED)) {
                Ok(rep) if rep.pass() => {}
                Ok(rep) => failures.push(format!(
                    "{t} {}: {} of {samples} equal",
                    kind.name(),
                    rep.dims["equal"]
                )),
                Err(e) => failures.push(format!("{t}: {e}")),
            }
        }
    }
    outcome(failures, format!("{runs} sampled runs"))
}

fn random_element(g: &LieAlgebra, rng: &mut ChaCha8Rng) -> AlgebraElement {
    let mut x = AlgebraElement::zero();
    for _ in 0..3 {
        let i = rng.gen_range(0..g.dim());
        x.add_term(i, lieorbit::exactla::rat(rng.gen_range(-9..=9)));
    }
    x
}

fn structure_self_tests() -> Outcome {
    let mut failures = Vec::new();
    for t in types(3) {
        let (_, g) = algebra(t);
        let d = g.dim();
        'outer: for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let (ex, ey, ez) = (
                        AlgebraElement::basis(x),
                        AlgebraElement::basis(y),
                        AlgebraElement::basis(z),
                    );
                    let inv = g.invariant_form(&g.bracket(&ex, &ey), &ez)
                        - g.invariant_form(&ex, &g.bracket(&ey, &ez));
                    if !g.jacobi_basis(x, y, z).is_zero() || !num_traits::Zero::is_zero(&inv) {
                        failures.push(format!("{t} basis ({x},{y},{z})"));
                        break 'outer;
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for t in types(8) {
        let (_, g) = algebra(t);
        for _ in 0..1000 {
            let (x, y, z) = (
                random_element(&g, &mut rng),
                random_element(&g, &mut rng),
                random_element(&g, &mut rng),
            );
            let inv =
                g.invariant_form(&g.bracket(&x, &y), &z) - g.invariant_form(&x, &g.bracket(&y, &z));
            if !g.jacobi(&x, &y, &z).is_zero() || !num_traits::Zero::is_zero(&inv) {
                failures.push(format!("{t} random triple"));
                break;
            }
        }
    }
    for (name, dim) in [("A2", 8), ("G2", 14), ("F4", 52), ("E8", 248)] {
        let (rs, g) = algebra(name.parse().unwrap());
        if g.dim() != dim || g.dim() != rs.rank() + rs.roots().len() {
            failures.push(format!("{name}: dim {}", g.dim()));
        }
    }
    outcome(
        failures,
        "exhaustive rank <= 3, 1000 triples per type, dims 8/14/52/248".into(),
    )
}

fn shift_and_fixed() -> Outcome {
    let mut failures = Vec::new();
    for t in types(8) {
        let (_, g) = algebra(t);
        if t.rank() <= 6 {
            match verify_shift_invariance(&g, 50, SEED) {
                Ok(rep) if rep.pass() => {}
                Ok(_) => failures.push(format!("{t} shift")),
                Err(e) => failures.push(format!("{t}: {e}")),
            }
        }
        match verify_fixed_set(&g) {
            Ok(rep) if rep.pass() => {}
            Ok(_) => failures.push(format!("{t} fixed set")),
            Err(e) => failures.push(format!("{t}: {e}")),
        }
    }
    outcome(
        failures,
        "50 pairs per type rank <= 6, fixed set rank <= 8".into(),
    )
}

fn report(name: &str, start: Instant, o: &Outcome) {
    println!(
        "{} {name}: {} ({:.1}s)",
        if o.pass { "PASS" } else { "FAIL" },
        o.detail,
        start.elapsed().as_secs_f64()
    );
}

fn timed(name: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let o = f();
    report(name, start, &o);
    o.pass
}

fn main() -> ExitCode {
    let mut results = vec![
        timed(
            "1 cascade size equals strongly orthogonal maximum",
            cascade_oracle,
        ),
        timed("2 cascade reflections multiply to w0", w0_factorization),
        timed("3 open coadjoint orbit classification", classification),
    ];
    let start = Instant::now();
    let (n, b) = isotropy_criteria();
    report("4 nilradical isotropy equals r", start, &n);
    report("5 borel and n_- isotropy", start, &b);
    results.extend([n.pass, b.pass]);
    results.push(timed("6 orbit codimension bounds", codim_bounds));
    results.push(timed(
        "7 structure constants self-tests",
        structure_self_tests,
    ));
    results.push(timed("8 shift invariance and fixed set", shift_and_fixed));
    if results.iter().all(|&p| p) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
