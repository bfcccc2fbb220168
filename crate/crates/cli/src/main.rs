mod args;
mod render;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use rayon::prelude::*;

use lieorbit::cascade::compute_cascade;
use lieorbit::coadjoint::{
    classify_type, sample_rx_points, verify_borel_isotropy, verify_cascade_oracle,
    verify_codim_bounds, verify_fixed_set, verify_nilradical_isotropy, verify_nminus_isotropy,
    verify_shift_invariance, verify_torus_transitivity, verify_w0_factorization, CodimSampling,
};
use lieorbit::{
    ActionKind, CascadeSet, Family, LieAlgebra, RMinusCrossPoint, RootSystem, SimpleType,
    TheoremReport,
};

use args::{expand_suites, Cli, Command, Format, Suite, TypeArgs, VerifyArgs};
use report::{
    cascade_entries, AlgebraInfoReport, CascadeReport, ClassifyReport, Input, Row, SuiteEntry,
    VerifyReport, SCHEMA_VERSION,
};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<lieorbit::Error> for Failure {
    fn from(e: lieorbit::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

fn simple_type(ty: &TypeArgs) -> Result<SimpleType, Failure> {
    let family = Family::from_letter(ty.family.to_ascii_uppercase())
        .ok_or_else(|| Failure::Usage(format!("unknown family '{}'", ty.family)))?;
    SimpleType::new(family, ty.rank as usize).map_err(|e| Failure::Usage(e.to_string()))
}

fn type_input(t: SimpleType) -> Input {
    Input {
        family: Some(t.family().letter().to_string()),
        rank: Some(t.rank()),
        ..Input::default()
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn cmd_cascade(ty: &TypeArgs, format: Format) -> Result<bool, Failure> {
    let t = simple_type(ty)?;
    let rs = RootSystem::new(t);
    let tree = compute_cascade(&rs);
    let row = Row::from(&classify_type(t)?);
    match format {
        Format::Json => println!(
            "{}",
            json(&CascadeReport {
                schema_version: SCHEMA_VERSION,
                command: "cascade",
                input: type_input(t),
                row: row.clone(),
                cascade: cascade_entries(&tree),
            })
        ),
        Format::Text => print!("{}", render::cascade(&row, &tree)),
    }
    Ok(row.consistent)
}

struct Context<'a> {
    rs: &'a RootSystem,
    g: &'a LieAlgebra,
    cs: &'a CascadeSet,
    points: &'a [RMinusCrossPoint],
    args: &'a VerifyArgs,
}

fn run_suite(suite: Suite, cx: &Context) -> Result<Vec<TheoremReport>, lieorbit::Error> {
    let (g, cs, pts) = (cx.g, cx.cs, cx.points);
    let samples = cx.args.samples as usize;
    Ok(match suite {
        Suite::Cascade => vec![verify_cascade_oracle(cx.rs, cx.args.oracle_rank_limit)],
        Suite::W0 => vec![verify_w0_factorization(cx.rs, cs)],
        Suite::Isotropy => vec![
            verify_nilradical_isotropy(g, cs, pts)?,
            verify_nminus_isotropy(g, cs, pts)?,
            verify_borel_isotropy(g, cs, pts)?,
        ],
        Suite::Codim => [ActionKind::CoadN, ActionKind::CoadB]
            .into_iter()
            .map(|k| verify_codim_bounds(g, cs, k, CodimSampling::new(samples, cx.args.seed)))
            .collect::<Result<_, _>>()?,
        Suite::Shift => vec![verify_shift_invariance(g, samples, cx.args.seed)?],
        Suite::Fixed => vec![verify_fixed_set(g)?],
        Suite::Transitivity => vec![verify_torus_transitivity(g, cs, pts)?],
        Suite::All => unreachable!("expanded before dispatch"),
    })
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool, Failure> {
    let t = simple_type(&args.ty)?;
    let rs = RootSystem::new(t);
    let tree = compute_cascade(&rs);
    let cs = tree.to_set();
    let g = LieAlgebra::build(&rs)?;
    let points = sample_rx_points(&cs, args.samples as usize, args.seed);
    let suites = expand_suites(&args.suite);
    let cx = Context {
        rs: &rs,
        g: &g,
        cs: &cs,
        points: &points,
        args,
    };
    let results: Vec<(Suite, Vec<TheoremReport>, u64)> = suites
        .par_iter()
        .map(|&s| {
            let start = Instant::now();
            run_suite(s, &cx).map(|r| (s, r, start.elapsed().as_millis() as u64))
        })
        .collect::<Result<_, _>>()?;
    let row = Row::from(&classify_type(t)?);
    let entries: Vec<SuiteEntry> = results
        .iter()
        .flat_map(|(s, reports, ms)| {
            reports
                .iter()
                .map(|r| SuiteEntry::new(s.name(), r, args.witnesses, args.timings.then_some(*ms)))
        })
        .collect();
    let pass = row.consistent && entries.iter().all(|e| e.pass);
    let mut input = type_input(t);
    input.suites = Some(suites.iter().map(|s| s.name().to_string()).collect());
    input.samples = Some(args.samples as usize);
    input.seed = Some(args.seed);
    input.oracle_rank_limit = Some(args.oracle_rank_limit);
    match args.out.format {
        Format::Json => println!(
            "{}",
            json(&VerifyReport {
                schema_version: SCHEMA_VERSION,
                command: "verify",
                input,
                row,
                cascade: cascade_entries(&tree),
                suites: entries,
                pass,
            })
        ),
        Format::Text => print!("{}", render::verify(&row, &entries, pass)),
    }
    Ok(pass)
}

fn cmd_classify(max_rank: usize, format: Format) -> Result<bool, Failure> {
    let rows: Vec<Row> = SimpleType::all_up_to(max_rank, false)
        .into_par_iter()
        .map(|t| classify_type(t).map(|r| Row::from(&r)))
        .collect::<Result<_, _>>()?;
    let pass = rows.iter().all(|r| r.consistent);
    match format {
        Format::Json => println!(
            "{}",
            json(&ClassifyReport {
                schema_version: SCHEMA_VERSION,
                command: "classify",
                input: Input {
                    max_rank: Some(max_rank),
                    ..Input::default()
                },
                rows,
                pass,
            })
        ),
        Format::Text => print!("{}", render::classify(&rows)),
    }
    Ok(pass)
}

fn cmd_algebra_info(ty: &TypeArgs, format: Format) -> Result<bool, Failure> {
    let t = simple_type(ty)?;
    let rs = RootSystem::new(t);
    let g = LieAlgebra::build(&rs)?;
    let info = AlgebraInfoReport::new(type_input(t), &rs, g.dim());
    match format {
        Format::Json => println!("{}", json(&info)),
        Format::Text => print!("{}", render::algebra_info(&info)),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let result = match &cli.command {
        Command::Cascade { ty, out } => cmd_cascade(ty, out.format),
        Command::Verify(args) => cmd_verify(args),
        Command::Classify { max_rank, out } => cmd_classify(*max_rank as usize, out.format),
        Command::AlgebraInfo { ty, out } => cmd_algebra_info(ty, out.format),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}
