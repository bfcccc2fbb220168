//! Fixed-width text output.

use lieorbit::CascadeTree;

use crate::report::{AlgebraInfoReport, Row, SuiteEntry};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn coords(c: &[i32]) -> String {
    let parts: Vec<String> = c.iter().map(i32::to_string).collect();
    format!("({})", parts.join(","))
}

/// Left-aligned columns separated by two spaces, trailing space trimmed.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.iter().map(|s| s.to_string()).collect());
    for r in rows {
        out += &line(r.clone());
    }
    out
}

fn summary(row: &Row) -> String {
    format!(
        "{}: ell = {}, m = {}, -1 in W: {}, open orbit: {}\n",
        row.type_name,
        row.ell,
        row.m,
        yes_no(row.minus_one_in_weyl),
        yes_no(row.open_coadjoint_orbit)
    )
}

pub fn cascade(row: &Row, tree: &CascadeTree) -> String {
    let rows: Vec<Vec<String>> = tree
        .nodes()
        .iter()
        .enumerate()
        .map(|(i, n)| {
            vec![
                i.to_string(),
                coords(n.root.coords()),
                n.parent.map_or("-".to_string(), |p| p.to_string()),
                n.depth.to_string(),
            ]
        })
        .collect();
    summary(row) + &table(&["#", "root", "parent", "depth"], &rows)
}

pub fn verify(row: &Row, suites: &[SuiteEntry], pass: bool) -> String {
    let rows: Vec<Vec<String>> = suites
        .iter()
        .map(|s| {
            let dims: Vec<String> = s.dims.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let mut note = dims.join(" ");
            if let Some(reason) = &s.skipped_reason {
                note = reason.clone();
            } else if !s.failed.is_empty() {
                note += &format!(" failed: {}", s.failed.join(","));
            }
            vec![s.suite.clone(), s.id.clone(), s.status.to_string(), note]
        })
        .collect();
    let passed = suites.iter().filter(|s| s.pass).count();
    format!(
        "{}{}{passed} of {} reports pass: {}\n",
        summary(row),
        table(&["suite", "report", "status", "details"], &rows),
        suites.len(),
        if pass { "PASS" } else { "FAIL" }
    )
}

pub fn classify(rows: &[Row]) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.type_name.clone(),
                r.ell.to_string(),
                r.m.to_string(),
                yes_no(r.minus_one_in_weyl).to_string(),
                yes_no(r.open_coadjoint_orbit).to_string(),
                yes_no(r.consistent).to_string(),
            ]
        })
        .collect();
    let mut out = table(
        &["type", "ell", "m", "-1 in W", "open orbit", "consistent"],
        &cells,
    );
    if rows.iter().any(|r| r.type_name == "B2") {
        out += "B2 and C2 are isomorphic; only B2 is listed.\n";
    }
    out
}

pub fn algebra_info(info: &AlgebraInfoReport) -> String {
    let cartan: Vec<String> = info
        .cartan
        .iter()
        .map(|r| r.iter().map(|v| format!("{v:>3}")).collect::<String>())
        .collect();
    format!(
        "{}: dim g = {}, roots = {}, positive = {}, dim b = {}\nhighest root {}\nsimple root lengths squared {}\nCartan matrix\n{}\n",
        info.type_name,
        info.dim,
        info.num_roots,
        info.num_positive,
        info.dim_b,
        coords(&info.highest_root),
        info.simple_root_lengths.join(" "),
        cartan.join("\n")
    )
}
