//! Exact stationary distributions, the tableaux cross-check, and Monte Carlo
//! sampling.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::chain::{build_generator, AsepParams, ChainSector};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::tableaux::{gen_r, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StationaryDist {
    pub probs: BTreeMap<Word, BigRational>,
}

impl StationaryDist {
    /// State keys written as space-separated letters, e.g. `"b s o"`.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .probs
            .iter()
            .map(|(w, p)| (spaced(w), serde_json::Value::String(p.to_string())))
            .collect();
        serde_json::Value::Object(map)
    }
}

/// Letters separated by spaces, the state format of the JSON output.
pub fn spaced(w: &Word) -> String {
    w.to_letters().chars().map(String::from).collect::<Vec<_>>().join(" ")
}

/// Solves `A x = b` over the rationals, or `None` when `A` is singular.
fn solve(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let m = b.len();
    for col in 0..m {
        let pivot = (col..m).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = BigRational::one() / &a[col][col];
        for k in col..m {
            a[col][k] = &a[col][k] * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..m {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for k in col..m {
                let sub = &f * &a[col][k];
                a[r][k] -= sub;
            }
            let sub = &f * &b[col];
            b[r] -= sub;
        }
    }
    Some(b)
}

/// The unique `π` with `πP = π` and `Σπ = 1`.
pub fn stationary_exact(sector: &ChainSector) -> Result<StationaryDist> {
    let m = sector.len();
    // rows of (P − I)ᵀ, with the last equation replaced by normalization
    let mut a = vec![vec![BigRational::zero(); m]; m];
    for i in 0..m {
        for (j, v) in sector.row(i) {
            a[*j][i] += v;
        }
        a[i][i] -= BigRational::one();
    }
    a[m - 1] = vec![BigRational::one(); m];
    let mut b = vec![BigRational::zero(); m];
    b[m - 1] = BigRational::one();
    let pi = solve(a, b).ok_or(Error::Reducible)?;
    if pi.iter().any(|p| p.is_negative()) {
        return Err(Error::Reducible);
    }
    Ok(StationaryDist { probs: sector.states.iter().cloned().zip(pi).collect() })
}

/// Random positive rates `p/q` with `1 ≤ p, q ≤ 10` and `t ∈ [0, 1)`.
pub fn random_params(rng: &mut impl Rng) -> AsepParams {
    let mut pos = || BigRational::new(rng.gen_range(1i64..=10).into(), rng.gen_range(1i64..=10).into());
    let (alpha, beta, gamma, delta) = (pos(), pos(), pos(), pos());
    let den = rng.gen_range(2i64..=10);
    let t = BigRational::new(rng.gen_range(0..den).into(), den.into());
    AsepParams::new(alpha, beta, gamma, delta, t)
}

/// Scales `params` down until every row of the chain is substochastic.
fn make_stochastic(n: usize, mut params: AsepParams) -> AsepParams {
    let two = BigRational::from_integer(2.into());
    loop {
        let worst = [&params.alpha, &params.beta, &params.gamma, &params.delta]
            .into_iter()
            .fold(BigRational::zero(), |m, v| if *v > m { v.clone() } else { m });
        let total = BigRational::from_integer((n as i64).into()) + &worst * &two;
        if total <= BigRational::from_integer((n as i64 + 1).into()) {
            return params;
        }
        for v in [&mut params.alpha, &mut params.beta, &mut params.gamma, &mut params.delta] {
            *v = &*v / &two;
        }
    }
}

/// `{R(μ)/Z_{N,r}}` evaluated at `params`.
pub fn tableaux_distribution(n: usize, r: usize, params: &AsepParams) -> Result<StationaryDist> {
    let sub = params.substitution();
    let states = Word::with_zeros(n, r);
    let weights: Vec<BigRational> = states
        .iter()
        .map(|w| {
            sub.apply(&gen_r(w))?
                .to_rational()
                .ok_or_else(|| Error::Parse("weight did not evaluate to a number".into()))
        })
        .collect::<Result<_>>()?;
    let z: BigRational = weights.iter().cloned().sum();
    if z.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(StationaryDist { probs: states.into_iter().zip(weights.into_iter().map(|x| x / &z)).collect() })
}

/// Exact stationary distribution against `R(μ)/Z_{N,r}` at `trials` seeded
/// random parameter points.
pub fn cross_validate(n: usize, r: usize, trials: usize, seed: u64) -> Result<Report> {
    if r > n {
        return Err(Error::InvalidSector { n: n as i64, r: r as i64 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<AsepParams> = (0..trials).map(|_| make_stochastic(n, random_params(&mut rng))).collect();
    let results: Vec<Result<(bool, String)>> = points
        .par_iter()
        .map(|p| {
            let exact = stationary_exact(&build_generator(n, r, p)?)?;
            let formula = tableaux_distribution(n, r, p)?;
            let bad = exact.probs.iter().find(|(w, v)| formula.probs.get(*w) != Some(*v));
            Ok(match bad {
                None => (true, String::new()),
                Some((w, v)) => (false, format!("state {}: chain {v}, tableaux {}", w.to_letters(), formula.probs[w])),
            })
        })
        .collect();
    let mut report = Report::new();
    for (k, (p, res)) in points.iter().zip(results).enumerate() {
        let name = format!("N={n} r={r} point {} ({})", k + 1, p.describe());
        match res {
            Ok((ok, detail)) => report.push(name, ok, detail),
            Err(e) => report.push(name, false, e.to_string()),
        }
    }
    Ok(report)
}

/// Visit frequencies of a seeded trajectory, counted after a burn-in of
/// `steps / 2` steps. The walk starts from the first state.
pub fn sample_trajectory(sector: &ChainSector, steps: u64, seed: u64) -> BTreeMap<Word, f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<Vec<(usize, f64)>> = (0..sector.len())
        .map(|i| {
            let mut acc = 0.0;
            sector
                .row(i)
                .iter()
                .map(|(j, p)| {
                    acc += p.to_f64().unwrap_or(0.0);
                    (*j, acc)
                })
                .collect()
        })
        .collect();
    let burn = steps / 2;
    let mut counts = vec![0u64; sector.len()];
    let mut state = 0usize;
    for step in 0..steps {
        let u: f64 = rng.gen();
        let row = &rows[state];
        state = row.iter().find(|(_, c)| u < *c).map_or(row.last().map_or(state, |x| x.0), |x| x.0);
        if step >= burn {
            counts[state] += 1;
        }
    }
    let kept = (steps - burn).max(1) as f64;
    sector.states.iter().cloned().zip(counts.into_iter().map(|c| c as f64 / kept)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn two_state_balance() {
        let p = AsepParams::new(q(1, 2), q(1, 3), q(1, 5), q(1, 7), q(1, 11));
        let pi = stationary_exact(&build_generator(1, 0, &p).unwrap()).unwrap();
        let expect = (q(1, 2) + q(1, 7)) / (q(1, 2) + q(1, 3) + q(1, 5) + q(1, 7));
        assert_eq!(pi.probs[&w("b")], expect);
    }

    #[test]
    fn frozen_and_uniform() {
        let pi = stationary_exact(&build_generator(3, 3, &AsepParams::uniform(q(1, 2))).unwrap()).unwrap();
        assert_eq!(pi.probs.len(), 1);
        assert!(pi.probs[&w("sss")].is_one());
        let pi = stationary_exact(&build_generator(2, 0, &AsepParams::uniform(q(1, 1))).unwrap()).unwrap();
        assert!(pi.probs.values().all(|v| *v == q(1, 4)));
    }

    #[test]
    fn small_cross_validation() {
        for (n, r) in [(1, 0), (2, 1), (3, 0)] {
            let rep = cross_validate(n, r, 3, 1).unwrap();
            assert!(rep.all_passed(), "{rep}");
        }
    }

    #[test]
    fn json_keys() {
        let pi = stationary_exact(&build_generator(1, 1, &AsepParams::uniform(q(1, 2))).unwrap()).unwrap();
        assert_eq!(pi.to_json(), serde_json::json!({"s": "1"}));
    }
}
