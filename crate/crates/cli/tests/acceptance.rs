//! One PASS/FAIL line per acceptance criterion, with wall-clock limits.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use frw_core::classify::{classify_dimension, factorize, Outcome};
use frw_core::corpus;
use frw_core::enumeration::{golden_types_90, solve_diophantine, DEFAULT_BUDGET};
use frw_core::fpdim::{certified_square, certify_integer_dim, fp_dim_vector, fpdim_ring};
use frw_core::modular::{check_all, SMatrixData};
use frw_core::ring::validate_ring;
use frw_core::structure::{
    adjoint_subring, nichols_richmond, stabilizer, type_of, universal_grading, NrCase,
    DEFAULT_SEARCH_BUDGET,
};
use frw_core::FusionRing;
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const TOL: f64 = 1e-10;

struct Outcomes(Vec<(u32, bool)>);

impl Outcomes {
    fn record(
        &mut self,
        id: u32,
        title: &str,
        limit: Duration,
        body: impl FnOnce() -> Result<String, String>,
    ) {
        let start = Instant::now();
        let result = body();
        let elapsed = start.elapsed();
        let (pass, detail) = match result {
            Ok(d) if elapsed <= limit => (true, d),
            Ok(d) => (false, format!("{d}; too slow: {elapsed:.2?} > {limit:?}")),
            Err(e) => (false, e),
        };
        let status = if pass { "PASS" } else { "FAIL" };
        // Bypasses libtest output capture.
        let line = format!("{status} criterion {id} ({title}) [{elapsed:.2?}]: {detail}\n");
        std::io::stdout().lock().write_all(line.as_bytes()).unwrap();
        self.0.push((id, pass));
    }
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn criterion_1() -> Result<String, String> {
    let golden = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../core/golden/types-90.golden"
    );
    let out = Command::new(env!("CARGO_BIN_EXE_frw"))
        .args(["enumerate", "90", "--preset", "base", "--golden", golden])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(
        out.status.code() == Some(0),
        format!("exit {:?}", out.status.code()),
    )?;
    let text = String::from_utf8_lossy(&out.stdout);
    ensure(
        text.contains("contains_golden: true"),
        "golden types missing from the enumeration",
    )?;
    let types = golden_types_90();
    ensure(types.len() == 20, format!("{} golden types", types.len()))?;
    for t in &types {
        let sum: u64 = t.entries().iter().map(|&(d, n)| n * d * d).sum();
        ensure(sum == 90, format!("{t} sums to {sum}"))?;
        ensure(
            text.contains(&format!("  - {t}\n")),
            format!("{t} not listed"),
        )?;
    }
    Ok("all 20 types enumerated, each with sum n_i d_i^2 = 90 exactly".into())
}

fn criterion_2() -> Result<String, String> {
    let c = [6, 14, 21, 42];
    let got = solve_diophantine(78, &c, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let expected: BTreeSet<Vec<u64>> = [
        vec![13, 0, 0, 0],
        vec![6, 3, 0, 0],
        vec![6, 0, 2, 0],
        vec![6, 0, 0, 1],
    ]
    .into_iter()
    .collect();
    let got_set: BTreeSet<Vec<u64>> = got.iter().cloned().collect();
    ensure(
        got.len() == 4 && got_set == expected,
        format!("solver returned {got:?}"),
    )?;
    let mut oracle = BTreeSet::new();
    for a in 0..=78 / 6 {
        for b in 0..=78 / 14 {
            for x in 0..=78 / 21 {
                for y in 0..=78 / 42 {
                    if 6 * a + 14 * b + 21 * x + 42 * y == 78 {
                        oracle.insert(vec![a, b, x, y]);
                    }
                }
            }
        }
    }
    ensure(oracle == got_set, "nested-loop oracle disagrees")?;
    let firsts: BTreeSet<u64> = got.iter().map(|s| s[0]).collect();
    let min = *firsts.first().unwrap();
    ensure(min == 6, format!("min a1 = {min}"))?;
    let unreproduced = !firsts.contains(&8);
    ensure(unreproduced, "a1 = 8 appeared")?;
    Ok(format!(
        "solutions match the oracle; a1 takes values {firsts:?}, min a1 = 6; \"a1 = 6 or 8\" is UNREPRODUCED (8 is not a solution value)"
    ))
}

fn criterion_3() -> Result<String, String> {
    let tables = [
        corpus::s3_table(),
        corpus::dihedral_table(4),
        corpus::q8_table(),
        corpus::dihedral_table(5),
        corpus::a4_table(),
        corpus::a5_table(),
    ];
    let mut names = Vec::new();
    for t in &tables {
        let r = t.ring();
        let dims = fp_dim_vector(&r, TOL).map_err(|e| e.to_string())?;
        for (i, d) in t.degrees().into_iter().enumerate() {
            ensure(
                (dims.get(i) - d as f64).abs() <= 1e-9,
                format!("{} index {i}: {}", t.name, dims.get(i)),
            )?;
            ensure(
                certify_integer_dim(&r, i, d),
                format!("{} index {i}: certificate failed", t.name),
            )?;
        }
        let global = fpdim_ring(&r).map_err(|e| e.to_string())?;
        ensure(
            (global - t.order() as f64).abs() <= 1e-8,
            format!("{}: FPdim {global}", t.name),
        )?;
        names.push(t.name.clone());
    }
    Ok(format!(
        "degrees and group orders recovered for {}",
        names.join(", ")
    ))
}

fn full_corpus() -> Vec<(String, FusionRing)> {
    let mut out: Vec<(String, FusionRing)> = vec![
        ("trivial".into(), corpus::trivial()),
        ("Ising".into(), corpus::ising()),
        ("Fibonacci".into(), corpus::fibonacci()),
    ];
    out.extend(
        corpus::groups_up_to_order_8()
            .into_iter()
            .map(|(n, g)| (format!("Z[{n}]"), corpus::group_ring(&g))),
    );
    out.extend(
        corpus::character_tables()
            .into_iter()
            .map(|t| (format!("Rep({})", t.name), t.ring())),
    );
    out
}

fn criterion_4() -> Result<String, String> {
    let ising = corpus::ising();
    let dims = fp_dim_vector(&ising, TOL).map_err(|e| e.to_string())?;
    let g = universal_grading(&ising, &dims).map_err(|e| e.to_string())?;
    ensure(g.blocks.len() == 2, format!("{} blocks", g.blocks.len()))?;
    ensure(
        g.block_dimensions.iter().all(|d| (d - 2.0).abs() <= 1e-9),
        format!("block dimensions {:?}", g.block_dimensions),
    )?;
    let product = g.order() as f64 * g.block_dimensions[0];
    ensure(
        (product - 4.0).abs() <= 1e-9,
        format!("|U| FPdim(ad) = {product}"),
    )?;
    for (name, group) in corpus::groups_up_to_order_8() {
        let r = corpus::group_ring(&group);
        ensure(
            adjoint_subring(&r).members() == [r.unit()],
            format!("adjoint of Z[{name}]"),
        )?;
    }
    let mut checked = 0;
    let mut irrational = 0;
    for (name, r) in full_corpus() {
        let dims = fp_dim_vector(&r, TOL).map_err(|e| e.to_string())?;
        for i in 0..r.rank() {
            let order = stabilizer(&r, i).len() as u64;
            let square = dims.get(i) * dims.get(i);
            let Some(sq) = certified_square(&r, &dims, i) else {
                // Irrational FPdim^2 (Fibonacci): only the size bound is checkable here.
                ensure(
                    order as f64 <= square,
                    format!("{name} {i}: |G| = {order} exceeds {square}"),
                )?;
                irrational += 1;
                continue;
            };
            ensure(
                sq % order == 0,
                format!("{name} {i}: |G| = {order} does not divide {sq}"),
            )?;
            checked += 1;
        }
    }
    Ok(format!(
        "Ising: 2 components of dimension 2, |U| FPdim(ad) = 4; adjoint of every Z[G] is trivial; stabilizer orders divide the certified FPdim^2 for {checked} basis elements ({irrational} with irrational FPdim^2 only bounded)"
    ))
}

fn criterion_5() -> Result<String, String> {
    for (name, r) in [
        ("Rep(S3)", corpus::rep_s3()),
        ("Rep(D5)", corpus::dihedral_table(5).ring()),
    ] {
        let dims = fp_dim_vector(&r, TOL).map_err(|e| e.to_string())?;
        let mut seen = 0;
        for x in (0..r.rank()).filter(|&x| dims.certified_integers[x] == Some(2)) {
            let rep =
                nichols_richmond(&r, &dims, x, DEFAULT_SEARCH_BUDGET).map_err(|e| e.to_string())?;
            ensure(
                matches!(rep.cases.as_slice(), [NrCase::NontrivialStabilizer { .. }]),
                format!("{name} {}: cases {:?}", r.label(x), rep.cases),
            )?;
            seen += 1;
        }
        ensure(seen > 0, format!("{name} has no 2-dimensional simple"))?;
    }
    let a5 = corpus::rep_a5();
    let dims = fp_dim_vector(&a5, TOL).map_err(|e| e.to_string())?;
    let t = type_of(&dims, &(0..a5.rank()).collect::<Vec<_>>()).to_string();
    ensure(t == "(1,1;3,2;4,1;5,1)", format!("type of Rep(A5) is {t}"))?;
    Ok("Rep(S3), Rep(D5): case (1) for every 2-dimensional simple; type of Rep(A5) = (1,1;3,2;4,1;5,1)".into())
}

fn criterion_6() -> Result<String, String> {
    let verdict =
        |n: u64| classify_dimension(&factorize(n).unwrap().with_flags(None, Some(true), None));
    for n in 1..=119 {
        let v = verdict(n);
        ensure(
            matches!(
                v.outcome,
                Outcome::Solvable | Outcome::SolvableOrGroupTheoretical
            ),
            format!("N = {n}: {}", v.outcome),
        )?;
        let primes = factorize(n).unwrap().factorization.len();
        if primes <= 2 {
            ensure(
                v.outcome == Outcome::Solvable && v.trace.iter().any(|r| r.id == "R1"),
                format!("N = {n} is p^a q^b but R1 did not decide it"),
            )?;
        }
    }
    ensure(verdict(90).outcome == Outcome::Solvable, "N = 90")?;
    ensure(
        verdict(84).outcome == Outcome::SolvableOrGroupTheoretical,
        "N = 84",
    )?;
    Ok("N = 1..119 all decided; 90 Solvable; 84 SolvableOrGroupTheoretical; p^a q^b Solvable via R1".into())
}

fn criterion_7() -> Result<String, String> {
    let mut perturbed = 0;
    for n in 1..=12 {
        let m = SMatrixData::cyclic(n);
        ensure(
            check_all(&m, None, 1e-9).map_err(|e| e.to_string())?.pass(),
            format!("Z_{n} fails"),
        )?;
        for a in 0..n {
            for b in 0..n {
                for eps in [1e-3, -1e-3] {
                    let mut p = m.clone();
                    p.entries[a][b] += Complex64::new(eps, 0.0);
                    ensure(
                        !check_all(&p, None, 1e-9).map_err(|e| e.to_string())?.pass(),
                        format!("Z_{n}: ({a},{b}) += {eps} passes"),
                    )?;
                    perturbed += 1;
                }
            }
        }
    }
    Ok(format!(
        "Z_1..Z_12 pass at tol 1e-9; all {perturbed} single-entry perturbations of size 1e-3 fail"
    ))
}

fn criterion_8() -> Result<String, String> {
    let mut rings: Vec<FusionRing> = full_corpus()
        .into_iter()
        .map(|(_, r)| r)
        .filter(|r| r.rank() <= 12)
        .collect();
    rings.push(corpus::ising().tensor(&corpus::fibonacci()));
    let mut rng = StdRng::seed_from_u64(8);
    let mut done = 0;
    while done < 1000 {
        let r = &rings[rng.gen_range(0..rings.len())];
        let n = r.rank();
        let mut p = r.clone();
        if n > 1 && rng.gen_bool(0.15) {
            let (i, d) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if d == r.dual(i) {
                continue;
            }
            p.set_dual(i, d);
        } else {
            let (i, j, k) = (
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
            );
            let orbit: BTreeSet<_> = [(i, j, k), (r.dual(i), k, j), (k, r.dual(j), i)]
                .into_iter()
                .collect();
            if ![i, j, k].contains(&r.unit()) && orbit.len() == 1 {
                continue;
            }
            let v = r.nconst(i, j, k);
            p.set_nconst(
                i,
                j,
                k,
                if v == 0 || rng.gen_bool(0.5) {
                    v + 1
                } else {
                    v - 1
                },
            );
        }
        ensure(
            !validate_ring(&p).is_empty(),
            format!("perturbation {done} went undetected"),
        )?;
        done += 1;
    }
    for (name, g) in corpus::groups_up_to_order_8() {
        ensure(
            validate_ring(&corpus::group_ring(&g)).is_empty(),
            format!("Z[{name}] reports violations"),
        )?;
    }
    Ok("1000 perturbations (unit/dual-touching or Frobenius-linked entries, dual maps) all rejected; 14 group rings of order <= 8 clean".into())
}

#[test]
fn acceptance_criteria() {
    let mut o = Outcomes(Vec::new());
    let ms = Duration::from_millis;
    o.record(1, "dimension-90 type list", ms(1000), criterion_1);
    o.record(2, "Diophantine step for 78", ms(100), criterion_2);
    o.record(3, "FP dimensions of character rings", ms(2000), criterion_3);
    o.record(4, "structural suite", ms(1000), criterion_4);
    o.record(5, "two-dimensional simples", ms(1000), criterion_5);
    o.record(6, "classifier coverage", ms(500), criterion_6);
    o.record(7, "S-matrix checks", ms(500), criterion_7);
    o.record(8, "axiom perturbations", ms(5000), criterion_8);
    let failed: Vec<u32> = o.0.iter().filter(|(_, p)| !p).map(|(id, _)| *id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
