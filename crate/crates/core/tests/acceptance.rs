//! One PASS/FAIL line per acceptance criterion. All checks are exact; each
//! criterion also has a wall-clock budget, and running over it fails the line.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use chromsym::analogs::{
    ab_rho, corollary36_checks, corollary36_sharpness, d_tilde_lambda_positive, lemma33_closed_forms,
    lemma33_sums, verify_thm31,
};
use chromsym::combinatorics::Partition;
use chromsym::graphs::{csf_powersum, SimpleGraph, DEFAULT_MAX_EDGES};
use chromsym::rational::{q, Q};
use chromsym::sym::{positivity_report, PositivityClass, SymBasis, SymElement};
use chromsym::yamanouchi::{
    build_xy_at, build_xy_with, verify_lemma41, verify_lemma42, verify_lemma45, verify_prop10,
    XyFixture, XReading,
};

type Outcome = Result<String, String>;

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn elem(basis: SymBasis, terms: &[(&[usize], i64)]) -> SymElement {
    let n = terms[0].0.iter().sum();
    let mut f = SymElement::zero(n, basis);
    for (lam, c) in terms {
        f.add_term(part(lam), q(*c));
    }
    f
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn claw() -> Outcome {
    let g = SimpleGraph::spider(&part(&[1, 1, 1])).map_err(|e| e.to_string())?;
    let got = csf_powersum(&g, DEFAULT_MAX_EDGES)
        .map_err(|e| e.to_string())?
        .to_basis(SymBasis::S);
    let want = elem(
        SymBasis::S,
        &[(&[3, 1], 1), (&[2, 2], -1), (&[2, 1, 1], 5), (&[1, 1, 1, 1], 8)],
    );
    ensure(got == want, || format!("got {got}"))?;
    Ok(got.to_string())
}

fn ab_tables() -> Outcome {
    let table: [(usize, &[(&[usize], i64)], &[(&[usize], i64)]); 5] = [
        (2, &[(&[2], 1)], &[(&[2], 2)]),
        (3, &[(&[3], 2)], &[(&[3], 3)]),
        (4, &[(&[4], 3), (&[2, 2], 1)], &[(&[4], 4), (&[2, 2], 2)]),
        (5, &[(&[5], 4), (&[3, 2], 4)], &[(&[5], 5), (&[3, 2], 7)]),
        (
            6,
            &[(&[6], 5), (&[4, 2], 6), (&[3, 3], 4), (&[2, 2, 2], 1)],
            &[(&[6], 6), (&[4, 2], 10), (&[3, 3], 6), (&[2, 2, 2], 2)],
        ),
    ];
    for (n, a, b) in table {
        let (ga, gb) = ab_rho(n).map_err(|e| e.to_string())?;
        ensure(ga == elem(SymBasis::E, a), || format!("A_{n} = {ga}"))?;
        ensure(gb == elem(SymBasis::E, b), || format!("B_{n} = {gb}"))?;
    }
    Ok("n = 2..6".into())
}

fn thm31() -> Outcome {
    for n in 1..=10 {
        let r = verify_thm31(n).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("n={n}: {r:?}"))?;
        ensure(n > 7 || r.matches_colorings == Some(true), || format!("n={n}: colorings unchecked"))?;
    }
    Ok("n <= 10, colorings n <= 7".into())
}

fn lemma33() -> Outcome {
    for n in 2..=20 {
        let got = lemma33_sums(n).map_err(|e| e.to_string())?;
        ensure(got == lemma33_closed_forms(n), || format!("n={n}: {got:?}"))?;
    }
    Ok("n <= 20".into())
}

fn cor36() -> Outcome {
    for n in 2..=10 {
        for k in 1..n {
            ensure(d_tilde_lambda_positive(n, k).map_err(|e| e.to_string())?, || {
                format!("D({n},{k}) not Lambda-positive")
            })?;
            let r = corollary36_checks(n, k).map_err(|e| e.to_string())?;
            ensure(r.e_positive, || format!("n={n} k={k}: {}", r.difference))?;
        }
    }
    for k in 1..=5 {
        let s = corollary36_sharpness(k).map_err(|e| e.to_string())?;
        ensure(s == q(-(k as i64)), || format!("sharpness k={k}: {s}"))?;
    }
    Ok("n <= 10, k < n; sharpness k <= 5".into())
}

fn lemma41() -> Outcome {
    let mut printed = Vec::new();
    for (n, k) in [(6, 3), (8, 3), (10, 5), (11, 5)] {
        let r = verify_lemma41(n, k).map_err(|e| e.to_string())?;
        ensure(r.ribbon_coefficients_match, || format!("({n},{k}) ribbon coefficients"))?;
        ensure(r.classes_match, || format!("({n},{k}) class decomposition"))?;
        if !r.printed_match {
            printed.push(format!("({n},{k})"));
        }
    }
    Ok(format!("six-term form differs at {}", printed.join(" ")))
}

fn maps() -> Outcome {
    let a = verify_lemma42(9).map_err(|e| e.to_string())?;
    let b = verify_lemma45(9, 7).map_err(|e| e.to_string())?;
    for r in a.iter().chain(&b) {
        ensure(r.passed(), || format!("{} kappa={}: {:?}", r.name, r.kappa, r.failures))?;
    }
    Ok(format!("{} + {} maps", a.len(), b.len()))
}

fn norm_pair(mu: &[usize], t: u8, reading: XReading) -> Result<(Q, Q), String> {
    let d = build_xy_with(&part(mu), 10, reading).map_err(|e| e.to_string())?;
    let s = d.split(t);
    Ok((s.x_lt.norm(), s.x_ge.norm()))
}

fn prop10() -> Outcome {
    let r = verify_prop10(Some(&XyFixture::bundled())).map_err(|e| e.to_string())?;
    ensure(r.failures.is_empty(), || format!("inequality fails: {:?}", r.failures[0]))?;
    for (reading, contents) in &r.nonempty_contents {
        ensure(contents.len() == 27, || format!("{reading:?}: {} nonempty", contents.len()))?;
    }
    ensure(r.fixture_records == 54, || format!("{} fixture records", r.fixture_records))?;
    ensure(r.fixture_mismatches.is_empty(), || format!("{:?}", r.fixture_mismatches[0]))?;
    let (_, x_ge) = norm_pair(&[5, 4, 1], 1, XReading::Full)?;
    ensure(x_ge == q(3), || format!("541: {x_ge}"))?;
    let (_, x_ge) = norm_pair(&[5, 3, 2], 1, XReading::Full)?;
    ensure(x_ge == q(6), || format!("532: {x_ge}"))?;
    let (x_lt, x_ge) = norm_pair(&[2, 2, 2, 2, 2], 5, XReading::Full)?;
    ensure(x_lt == q(36) && x_ge == q(15), || format!("2^5: {x_lt}, {x_ge}"))?;
    let s = build_xy_at(&part(&[4, 3, 2]), 9).map_err(|e| e.to_string())?.split(2);
    ensure(s.x_lt.norm() == q(6) && s.y_lt.norm() == q(4), || {
        format!("432: {} vs {}", s.x_lt.norm(), s.y_lt.norm())
    })?;
    Ok("54 records, 27 contents, 432 gives 6 > 4".into())
}

fn spiders() -> Outcome {
    let mut summary = Vec::new();
    for (b, range, e_set) in [(2, 2..=14, &[3, 6][..]), (4, 4..=12, &[5, 8, 10, 12][..])] {
        let mut e_pos = Vec::new();
        for a in range {
            let g = SimpleGraph::spider(&part(&[a, b, 1])).map_err(|e| e.to_string())?;
            let x = csf_powersum(&g, DEFAULT_MAX_EDGES).map_err(|e| e.to_string())?;
            let r = positivity_report(&x);
            ensure(r.class != PositivityClass::NotSchurPositive, || {
                format!("S({a},{b},1): {:?}", r.witness)
            })?;
            if r.class == PositivityClass::EPositive {
                e_pos.push(a);
            }
        }
        ensure(e_pos == e_set, || format!("b={b}: e-positive at {e_pos:?}"))?;
        summary.push(format!("b={b}: {e_pos:?}"));
    }
    Ok(summary.join("; "))
}

const DETERMINISM_RUNS: &[&[&str]] = &[
    &["expand", "--graph", "spider:1,1,1", "--basis", "s"],
    &["expand", "--graph", "spider:4,2,1", "--basis", "e"],
    &["classify", "--family", "2,1", "--a-min", "2", "--a-max", "8"],
    &["verify", "thm31", "--n", "8"],
    &["verify", "lemma33", "--n", "20"],
    &["verify", "cor36"],
    &["verify", "lemma41", "--n", "10", "--k", "5"],
    &["verify", "lemma42", "--n", "8"],
    &["verify", "lemma45", "--n", "8"],
    &["verify", "prop10"],
    &["verify", "spider", "--a", "6", "--b", "4"],
    &["analogs", "de", "--n", "7", "--k", "3", "--check-oracle"],
];

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_chromsym");
    for args in DETERMINISM_RUNS {
        let mut outs = Vec::new();
        for threads in ["1", "4"] {
            let o = Command::new(bin)
                .args(["--json", "--threads", threads])
                .args(*args)
                .output()
                .map_err(|e| e.to_string())?;
            ensure(o.status.code() == Some(0), || {
                format!("{args:?} exited {:?}: {}", o.status.code(), String::from_utf8_lossy(&o.stderr))
            })?;
            outs.push(o.stdout);
        }
        ensure(outs[0] == outs[1], || format!("{args:?} differs between 1 and 4 threads"))?;
    }
    Ok(format!("{} commands, threads 1 vs 4", DETERMINISM_RUNS.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("claw Schur expansion", 1, claw),
        ("A/B tables n=2..6", 5, ab_tables),
        ("path analog triple agreement", 60, thm31),
        ("composition sum closed forms", 1, lemma33),
        ("D Lambda-positivity and path e-positivity", 60, cor36),
        ("E_{n,k} norm formula vs commutative oracle", 300, lemma41),
        ("multi-injections for contents of size <= 9", 120, maps),
        ("size-10 inequalities and fixture table", 600, prop10),
        ("S(a,2,1) and S(a,4,1) positivity", 1800, spiders),
        ("JSON determinism across thread counts", 600, determinism),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(budget);
        let (tag, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("over budget; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!(
            "{tag} {:>2} {name} [{:.2}s / {budget}s] {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
