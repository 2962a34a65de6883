//! The combined verification suites behind `verify-all` and the acceptance
//! harness.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::asep::cross_validate;
use crate::exactalg::{parse_scalar, Param, Scalar, Substitution};
use crate::hecke::{random_laurent, verify_cherednik_commute, verify_hecke_relations, verify_operator_lemmas};
use crate::koornwinder::{
    orbit_of, rank_one_partition, verify_eigen, verify_invariants, verify_q1, verify_qkz, verify_qkz_numeric,
    verify_via_ek,
};
use crate::report::Report;
use crate::tableaux::{gen_r, gen_rtilde, verify_matrix_ansatz, verify_matrix_ansatz_tilde, verify_symmetry, Word};

/// Largest `N` at which qKZ relations and eigenvalues are checked with
/// symbolic parameters; beyond it random rational points are used.
pub const SYMBOLIC_MAX_N: usize = 3;

const SMALL: [Param; 4] = [Param::A, Param::T, Param::Alpha, Param::Q];

/// A random element of the field with small numerator and denominator.
pub fn random_scalar(rng: &mut impl Rng) -> Scalar {
    let poly = |rng: &mut ChaCha8Rng| -> Scalar {
        let mut s = Scalar::zero();
        for _ in 0..rng.gen_range(1..=3) {
            let mut m = Scalar::from_i64(rng.gen_range(-4i64..=4));
            for p in SMALL {
                m = m.mul(&Scalar::param(p).pow(rng.gen_range(0..=1)).expect("nonnegative power"));
            }
            s = s.add(&m);
        }
        s
    };
    let mut inner = ChaCha8Rng::seed_from_u64(rng.gen());
    let num = poly(&mut inner);
    loop {
        let den = poly(&mut inner);
        if !den.is_zero() {
            return num.div(&den).expect("nonzero denominator");
        }
    }
}

/// Field axioms, canonical-form round trips and substitution on seeded random
/// elements.
pub fn exactalg_checks(trials: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = [0usize; 7];
    let names = [
        "addition and multiplication are associative and commutative",
        "multiplication distributes over addition",
        "x * (1/x) = 1 for nonzero x",
        "text form parses back to the same value",
        "JSON form round-trips",
        "substitution is a ring homomorphism",
        "exact Laurent division inverts multiplication",
    ];
    let sub = Substitution::new()
        .with(Param::A, parse_scalar("t + 1").expect("valid"))
        .with(Param::Alpha, parse_scalar("2/3").expect("valid"));
    for _ in 0..trials {
        let (x, y, z) = (random_scalar(&mut rng), random_scalar(&mut rng), random_scalar(&mut rng));
        let ok = [
            x.add(&y).add(&z) == x.add(&y.add(&z))
                && x.mul(&y).mul(&z) == x.mul(&y.mul(&z))
                && x.add(&y) == y.add(&x)
                && x.mul(&y) == y.mul(&x),
            x.mul(&y.add(&z)) == x.mul(&y).add(&x.mul(&z)),
            x.is_zero() || x.mul(&x.inv().expect("nonzero")).is_one(),
            parse_scalar(&x.to_string()).is_ok_and(|v| v == x),
            Scalar::from_json(&x.to_json()).is_ok_and(|v| v == x),
            match (sub.apply(&x), sub.apply(&y), sub.apply(&x.mul(&y)), sub.apply(&x.add(&y))) {
                (Ok(a), Ok(b), Ok(ab), Ok(s)) => a.mul(&b) == ab && a.add(&b) == s,
                // a random denominator may vanish under the substitution
                _ => true,
            },
            {
                let f = random_laurent(&mut rng, 2, 2).scale(&x);
                let g = random_laurent(&mut rng, 2, 2);
                f.mul(&g).and_then(|fg| fg.divide_exact(&g)).is_ok_and(|q| q == f)
            },
        ];
        for (c, ok) in counts.iter_mut().zip(ok) {
            *c += ok as usize;
        }
    }
    let mut report = Report::new();
    for (name, c) in names.iter().zip(counts) {
        report.push(*name, c == trials, format!("{c} of {trials} random cases"));
    }
    report
}

fn word(s: &str) -> Word {
    s.parse().expect("valid word literal")
}

/// The worked values of `R` and `R̃`.
pub fn paper_values() -> Report {
    let mut report = Report::new();
    let mut check = |name: &str, got: Scalar, want: &str| {
        let want = parse_scalar(want).expect("valid literal");
        let detail = if got == want { String::new() } else { format!("got {got}") };
        report.push(name, got == want, detail);
    };
    check(
        "R(bb) = alpha*delta*(1+t+alpha+beta+gamma+delta) + alpha^2*t + delta^2",
        gen_r(&word("bb")),
        "alpha*delta*(1+t+alpha+beta+gamma+delta) + alpha^2*t + delta^2",
    );
    check("R(os) = beta*t^2 + gamma*t + beta*gamma*t + gamma*delta", gen_r(&word("os")), "beta*t^2 + gamma*t + beta*gamma*t + gamma*delta");
    for r in 0..=5 {
        let w = Word::new(vec![0; r]).expect("valid");
        check(&format!("Rtilde(s^{r}) = 1"), gen_rtilde(&w), "1");
    }
    check("Rtilde(b) = (t-1)(alpha+delta)/(alpha*beta-gamma*delta)", gen_rtilde(&word("b")), "(t-1)*(alpha+delta)/(alpha*beta-gamma*delta)");
    check(
        "Rtilde(os) = (t-1)(beta*t^2+gamma*t+gamma*beta*t+delta*gamma)/(alpha*beta*t^2-gamma*delta)",
        gen_rtilde(&word("os")),
        "(t-1)*(beta*t^2+gamma*t+gamma*beta*t+delta*gamma)/(alpha*beta*t^2-gamma*delta)",
    );
    report
}

pub fn hecke_suite(max_n: usize, trials: usize, seed: u64) -> Report {
    let mut report = Report::new();
    for n in 2..=max_n.max(2) {
        report.extend(verify_hecke_relations(n, trials, 2, seed));
        report.extend(verify_operator_lemmas(n));
        report.extend(verify_cherednik_commute(n, 3, 1, seed));
    }
    report
}

/// qKZ relations for every rank-one orbit with `N ≤ max_n`: symbolic up to
/// [`SYMBOLIC_MAX_N`], then at `points` random rational points.
pub fn qkz_suite(max_n: usize, points: usize, seed: u64) -> Report {
    let mut report = Report::new();
    for n in 1..=max_n {
        for r in 0..=n {
            let lambda = rank_one_partition(n, r).expect("r ≤ n");
            let tag = format!("lambda={} ", lambda.to_signs());
            let res = if n <= SYMBOLIC_MAX_N {
                verify_qkz(&lambda)
            } else {
                verify_qkz_numeric(&lambda, points, seed)
            };
            match res {
                Ok(rep) => {
                    for e in rep.entries {
                        report.push(format!("{tag}{}", e.name), e.passed, e.detail);
                    }
                }
                Err(e) => report.push(format!("{tag}qKZ family"), false, e.to_string()),
            }
        }
    }
    report
}

pub fn eigen_suite(max_n: usize) -> Report {
    let mut report = Report::new();
    for n in 1..=max_n.min(SYMBOLIC_MAX_N) {
        for r in 0..=n {
            let delta = orbit_of(&rank_one_partition(n, r).expect("r ≤ n")).expect("partition").antidominant;
            match verify_eigen(&delta) {
                Ok(rep) => report.extend(rep),
                Err(e) => report.push(format!("eigenvalues of F({})", delta.to_letters()), false, e.to_string()),
            }
        }
    }
    report
}

/// The partitions and ranks of the `q = 1` check.
pub fn q1_cases(max_n: usize) -> Vec<(Vec<usize>, usize)> {
    let shapes = [vec![2], vec![1, 1], vec![2, 1], vec![2, 2]];
    let mut out = Vec::new();
    for s in shapes {
        for n in 2..=max_n.clamp(2, 3) {
            out.push((s.clone(), n));
        }
    }
    out
}

pub fn expansion_suite(max_n: usize) -> Report {
    let mut report = verify_via_ek(max_n);
    report.extend(verify_q1(&q1_cases(max_n)));
    report
}

pub fn asep_suite(max_n: usize, trials: usize, seed: u64) -> Report {
    let mut report = Report::new();
    for n in 1..=max_n {
        for r in 0..=n {
            match cross_validate(n, r, trials, seed) {
                Ok(rep) => report.extend(rep),
                Err(e) => report.push(format!("N={n} r={r} cross-validation"), false, e.to_string()),
            }
        }
    }
    report
}

/// One named suite and whether its failures count.
pub struct Suite {
    pub name: &'static str,
    pub report: Report,
    pub informational: bool,
}

/// Every suite in dependency order, each computed independently.
pub fn verify_all(max_n: usize, seed: u64) -> Vec<Suite> {
    let max_n = max_n.max(1);
    let suite = |name, report| Suite { name, report, informational: false };
    vec![
        suite("exactalg", exactalg_checks(200, seed)),
        suite("tableaux values", paper_values()),
        suite("matrix ansatz", {
            let mut r = verify_matrix_ansatz(max_n);
            r.extend(verify_matrix_ansatz_tilde(max_n));
            r
        }),
        Suite { name: "left/right symmetry", report: verify_symmetry(max_n), informational: true },
        suite("hecke relations", hecke_suite(max_n, 25, seed)),
        suite("qKZ family", qkz_suite(max_n, 3, seed)),
        suite("eigenvalues", eigen_suite(max_n)),
        suite("symmetric expansions", expansion_suite(max_n)),
        suite("ASEP polynomial invariants", verify_invariants(max_n)),
        suite("ASEP stationary distribution", asep_suite(max_n, 3, seed)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_scalars_are_reproducible() {
        let a: Vec<Scalar> = {
            let mut rng = ChaCha8Rng::seed_from_u64(3);
            (0..5).map(|_| random_scalar(&mut rng)).collect()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let b: Vec<Scalar> = (0..5).map(|_| random_scalar(&mut rng)).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn exactalg_smoke() {
        let r = exactalg_checks(20, 0);
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn worked_values() {
        assert!(paper_values().all_passed());
    }
}
