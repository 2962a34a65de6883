//! Acceptance criteria, one line each. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use koornwinder::asep::cross_validate;
use koornwinder::exactalg::{parse_scalar, Scalar};
use koornwinder::hecke::{verify_hecke_relations, verify_operator_lemmas, HeckeContext};
use koornwinder::koornwinder::{
    asep_poly_f_latin, koornwinder_k, koornwinder_k_via_ek, orbit_of, rank_one_partition, verify_eigen,
    verify_invariants, verify_q1, verify_qkz, verify_qkz_numeric,
};
use koornwinder::suite::q1_cases;
use koornwinder::tableaux::{
    gen_r, gen_rtilde, verify_matrix_ansatz, verify_matrix_ansatz_tilde, Letter, RhombicDiagram, Tableau, Word,
};
use koornwinder::Report;

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn from_report(r: &Report) -> Outcome {
        let detail = match r.failures().next() {
            None => format!("{} checks", r.entries.len()),
            Some(f) => format!("{} of {} failed, first: {} {}", r.failed(), r.entries.len(), f.name, f.detail),
        };
        Outcome { passed: r.all_passed(), detail }
    }
}

fn word(s: &str) -> Word {
    s.parse().expect("valid word")
}

fn scalar(s: &str) -> Scalar {
    parse_scalar(s).expect("valid scalar")
}

/// The filled tableau of type (•,∗,○,∗,•,•,○) with weight α²β²δ²γ³t^14;
/// tile centres doubled.
fn figure_tableau() -> Tableau {
    const LETTERS: [((i32, i32), Letter); 9] = [
        ((-1, -1), Letter::Alpha),
        ((-5, -5), Letter::Gamma),
        ((-6, -1), Letter::Gamma),
        ((-9, -7), Letter::Beta),
        ((-9, -9), Letter::Delta),
        ((-10, -3), Letter::Alpha),
        ((-11, -11), Letter::Delta),
        ((-13, -13), Letter::Gamma),
        ((-3, -2), Letter::Beta),
    ];
    let d = Arc::new(RhombicDiagram::new(&word("bsosbbo")).expect("nonempty word"));
    let mut content = vec![Letter::Empty; d.tile_count()];
    for (c, l) in LETTERS {
        content[d.tile_at(c).expect("tile exists").id] = l;
    }
    Tableau::new(d, content)
}

fn criterion_1() -> Outcome {
    let checks = [
        (
            "R(bb)",
            gen_r(&word("bb")) == scalar("alpha*delta*(1+t+alpha+beta+gamma+delta)+alpha^2*t+delta^2"),
        ),
        ("R(os)", gen_r(&word("os")) == scalar("beta*t^2+gamma*t+beta*gamma*t+gamma*delta")),
        (
            "figure tableau weight",
            figure_tableau().weight() == scalar("alpha^2*beta^2*delta^2*gamma^3*t^14"),
        ),
    ];
    let bad: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    Outcome { passed: bad.is_empty(), detail: if bad.is_empty() { "3 values".into() } else { format!("wrong: {bad:?}") } }
}

fn criterion_2() -> Outcome {
    let mut bad = Vec::new();
    for r in 0..=5 {
        if !gen_rtilde(&Word::new(vec![0; r]).expect("zeros")).is_one() {
            bad.push(format!("s^{r}"));
        }
    }
    if gen_rtilde(&word("b")) != scalar("(t-1)*(alpha+delta)/(alpha*beta-gamma*delta)") {
        bad.push("b".into());
    }
    if gen_rtilde(&word("os")) != scalar("(t-1)*(beta*t^2+gamma*t+gamma*beta*t+delta*gamma)/(alpha*beta*t^2-gamma*delta)") {
        bad.push("os".into());
    }
    Outcome { passed: bad.is_empty(), detail: if bad.is_empty() { "8 values".into() } else { format!("wrong: {bad:?}") } }
}

fn criterion_3() -> Outcome {
    let mut r = verify_matrix_ansatz(3);
    r.extend(verify_matrix_ansatz_tilde(3));
    let instances: usize = r
        .entries
        .iter()
        .filter_map(|e| e.detail.split_whitespace().next()?.parse::<usize>().ok())
        .sum();
    let mut o = Outcome::from_report(&r);
    if o.passed {
        o.detail = format!("{instances} relation instances in 10 families");
    }
    o
}

fn criterion_4() -> Outcome {
    let mut r = Report::new();
    for n in [2, 3] {
        r.extend(verify_hecke_relations(n, 25, 2, 0));
        r.extend(verify_operator_lemmas(n));
    }
    Outcome::from_report(&r)
}

fn criterion_5() -> Outcome {
    let mut r = Report::new();
    let start = Instant::now();
    for n in 1..=3 {
        for k in 0..=n {
            match verify_qkz(&rank_one_partition(n, k).expect("k ≤ n")) {
                Ok(rep) => r.extend(rep),
                Err(e) => r.push(format!("N={n} r={k}"), false, e.to_string()),
            }
        }
    }
    let symbolic = start.elapsed();
    let start = Instant::now();
    for k in 0..=4 {
        match verify_qkz_numeric(&rank_one_partition(4, k).expect("k ≤ 4"), 3, 0) {
            Ok(rep) => r.extend(rep),
            Err(e) => r.push(format!("N=4 r={k}"), false, e.to_string()),
        }
    }
    let numeric = start.elapsed();
    let mut o = Outcome::from_report(&r);
    let within = symbolic < Duration::from_secs(600) && numeric < Duration::from_secs(60);
    o.passed &= within;
    o.detail = format!("{}; symbolic N<=3 {:.2?} (< 10 min), numeric N=4 {:.2?} (< 1 min)", o.detail, symbolic, numeric);
    o
}

fn criterion_6() -> Outcome {
    let mut r = Report::new();
    for n in 1..=3 {
        for k in 0..=n {
            let delta = orbit_of(&rank_one_partition(n, k).expect("k ≤ n")).expect("partition").antidominant;
            match verify_eigen(&delta) {
                Ok(rep) => r.extend(rep),
                Err(e) => r.push(format!("delta={}", delta.to_signs()), false, e.to_string()),
            }
        }
    }
    let h = HeckeContext::symbolic(2);
    let worked = asep_poly_f_latin(&word("os"))
        .and_then(|f| Ok(h.cherednik_y(1, &f)? == f.scale(&scalar("1/q"))))
        .unwrap_or(false);
    r.push("Y1 F(os) = q^-1 F(os)", worked, "");
    Outcome::from_report(&r)
}

fn criterion_7() -> Outcome {
    let mut r = Report::new();
    for n in 1..=4usize {
        for k in 0..=n {
            let ok = rank_one_partition(n, k)
                .and_then(|l| Ok(koornwinder_k_via_ek(n, k)? == koornwinder_k(&l)?))
                .unwrap_or(false);
            r.push(format!("N={n} r={k}"), ok, "");
        }
    }
    Outcome::from_report(&r)
}

fn criterion_8() -> Outcome {
    Outcome::from_report(&verify_q1(&q1_cases(3)))
}

fn criterion_9() -> Outcome {
    let mut r = Report::new();
    for n in 1..=5 {
        for k in 0..=n {
            match cross_validate(n, k, 3, 0) {
                Ok(rep) => r.extend(rep),
                Err(e) => r.push(format!("N={n} r={k}"), false, e.to_string()),
            }
        }
    }
    Outcome::from_report(&r)
}

fn criterion_10() -> Outcome {
    Outcome::from_report(&verify_invariants(4))
}

fn main() -> ExitCode {
    type Check = fn() -> Outcome;
    let criteria: [(&str, Duration, Check); 10] = [
        ("1 worked tableaux values", Duration::from_secs(1), criterion_1),
        ("2 normalized Rtilde values", Duration::from_secs(1), criterion_2),
        ("3 matrix ansatz, |x|+|y| <= 3", Duration::from_secs(30), criterion_3),
        ("4 Hecke relations and operator lemmas, N in {2,3}", Duration::from_secs(120), criterion_4),
        ("5 qKZ family, symbolic N <= 3 and numeric N = 4", Duration::from_secs(660), criterion_5),
        ("6 eigenvalues and leading coefficient, N <= 3", Duration::from_secs(300), criterion_6),
        ("7 e_k expansion equals orbit sum, N <= 4", Duration::from_secs(120), criterion_7),
        ("8 q = 1 double sum equals product", Duration::from_secs(120), criterion_8),
        ("9 ASEP stationary distribution, N <= 5", Duration::from_secs(300), criterion_9),
        ("10 structural invariants of F, N <= 4", Duration::from_secs(60), criterion_10),
    ];
    let mut all = true;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let passed = outcome.passed && elapsed <= limit;
        all &= passed;
        println!(
            "{} criterion {name}: {} [{:.2?}, limit {:?}]",
            if passed { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed,
            limit
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
