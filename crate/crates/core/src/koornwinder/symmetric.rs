//! Symmetric Koornwinder polynomials of rank-one partitions and the `q = 1`
//! product formula.

use rayon::prelude::*;

use super::family::asep_poly_f;
use super::orbit::{as_exponent, orbit_of, order_preceq, rank_one_partition};
use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, Scalar};
use crate::report::Report;
use crate::tableaux::{gen_rtilde, partition_ztilde, Word};

/// `K_λ = Σ_{μ ∈ W_0·λ} F_μ` over the Greek parameters.
pub fn koornwinder_k(lambda: &Word) -> Result<LaurentPoly> {
    let orbit = orbit_of(lambda)?;
    let parts: Vec<LaurentPoly> = orbit.members.par_iter().map(asep_poly_f).collect();
    let mut out = LaurentPoly::zero(lambda.len());
    for p in &parts {
        out = out.add(p)?;
    }
    Ok(out)
}

/// `e_0, …, e_N` evaluated at `y_i = z_i + 1/z_i − 2`.
pub fn elementary_y(n: usize) -> Vec<LaurentPoly> {
    let mut e = vec![LaurentPoly::zero(n); n + 1];
    e[0] = LaurentPoly::one(n);
    for i in 1..=n {
        let y = LaurentPoly::var(n, i)
            .add(&LaurentPoly::var_pow(n, i, -1))
            .and_then(|s| s.sub(&LaurentPoly::constant(n, Scalar::from_i64(2))))
            .expect("same arity");
        for k in (1..=i).rev() {
            let add = e[k - 1].mul(&y).expect("same arity");
            e[k] = e[k].add(&add).expect("same arity");
        }
    }
    e
}

/// `Σ_{k=0}^{N−r} Z̃_{N−k, r} e_k(y)`.
pub fn koornwinder_k_via_ek(n: usize, r: usize) -> Result<LaurentPoly> {
    if r > n {
        return Err(Error::InvalidSector { n: n as i64, r: r as i64 });
    }
    let e = elementary_y(n);
    let mut out = LaurentPoly::zero(n);
    for (k, ek) in e.iter().enumerate().take(n - r + 1) {
        out = out.add(&ek.scale(&partition_ztilde(n - k, r)?))?;
    }
    Ok(out)
}

/// Invariance under `z_i ↔ z_{i+1}` for `1 ≤ i < N` and `z_N ↦ 1/z_N`.
pub fn is_symmetric(f: &LaurentPoly) -> bool {
    let n = f.nvars();
    let swap = |i: usize| {
        f.map_terms(|e, c| {
            let mut e = e.to_vec();
            e.swap(i - 1, i);
            (e, c.clone())
        })
    };
    let invert_last = f.map_terms(|e, c| {
        let mut e = e.to_vec();
        if let Some(x) = e.last_mut() {
            *x = -*x;
        }
        (e, c.clone())
    });
    (1..n).all(|i| swap(i) == *f) && invert_last == *f
}

/// Column lengths `λ'` of a partition.
pub fn conjugate(lambda: &[usize]) -> Vec<usize> {
    let first = lambda.first().copied().unwrap_or(0);
    (1..=first).map(|j| lambda.iter().filter(|&&p| p >= j).count()).collect()
}

fn check_shape(lambda: &[usize], n: usize) -> Result<Vec<usize>> {
    if lambda.is_empty() || lambda.windows(2).any(|w| w[0] < w[1]) || lambda.contains(&0) {
        return Err(Error::NotAPartition(format!("{lambda:?}")));
    }
    let cols = conjugate(lambda);
    if cols[0] > n {
        return Err(Error::InvalidShape(format!(
            "partition {lambda:?} has {} rows, more than N = {n}",
            cols[0]
        )));
    }
    Ok(cols)
}

/// `K_λ(z; 1, t) = Σ_μ e_μ(y) ∏_i Z̃_{N−μ_i, N−λ'_i}` over compositions
/// `0 ≤ μ_i ≤ λ'_i`, with `e_μ = ∏_i e_{μ_i}`.
pub fn koornwinder_q1(lambda: &[usize], n: usize) -> Result<LaurentPoly> {
    let cols = check_shape(lambda, n)?;
    let e = elementary_y(n);
    let mut ztilde = std::collections::HashMap::new();
    for &c in &cols {
        for m in 0..=c {
            if let std::collections::hash_map::Entry::Vacant(v) = ztilde.entry((n - m, n - c)) {
                v.insert(partition_ztilde(n - m, n - c)?);
            }
        }
    }
    let mut out = LaurentPoly::zero(n);
    let mut mu = vec![0usize; cols.len()];
    loop {
        let mut term = LaurentPoly::one(n);
        let mut coeff = Scalar::one();
        for (i, &m) in mu.iter().enumerate() {
            term = term.mul(&e[m])?;
            coeff = coeff.mul(&ztilde[&(n - m, n - cols[i])]);
        }
        out = out.add(&term.scale(&coeff))?;
        // next composition in the box ∏[0, λ'_i]
        let mut i = 0;
        while i < mu.len() && mu[i] == cols[i] {
            mu[i] = 0;
            i += 1;
        }
        if i == mu.len() {
            break;
        }
        mu[i] += 1;
    }
    Ok(out)
}

/// `∏_i K_{1^{λ'_i}}`, each factor from the `e_k` expansion.
pub fn q1_product(lambda: &[usize], n: usize) -> Result<LaurentPoly> {
    let cols = check_shape(lambda, n)?;
    let mut out = LaurentPoly::one(n);
    for c in cols {
        out = out.mul(&koornwinder_k_via_ek(n, n - c)?)?;
    }
    Ok(out)
}

/// The `q = 1` double sum against the product formula.
pub fn verify_q1(cases: &[(Vec<usize>, usize)]) -> Report {
    let results: Vec<(String, Result<bool>)> = cases
        .par_iter()
        .map(|(lambda, n)| {
            let name = format!("q=1 expansion lambda={lambda:?} N={n}");
            let ok = koornwinder_q1(lambda, *n).and_then(|s| Ok(s == q1_product(lambda, *n)?));
            (name, ok)
        })
        .collect();
    let mut report = Report::new();
    for (name, res) in results {
        match res {
            Ok(ok) => report.push(name, ok, ""),
            Err(e) => report.push(name, false, e.to_string()),
        }
    }
    report
}

/// `Σ_k Z̃_{N−k,r} e_k(y) = Σ_{μ ∈ W_0·λ} F_μ` for all `0 ≤ r ≤ N ≤ max_n`,
/// together with the symmetry of the orbit sum.
pub fn verify_via_ek(max_n: usize) -> Report {
    let cases: Vec<(usize, usize)> = (1..=max_n).flat_map(|n| (0..=n).map(move |r| (n, r))).collect();
    let results: Vec<(usize, usize, Result<(bool, bool)>)> = cases
        .par_iter()
        .map(|&(n, r)| {
            let res = rank_one_partition(n, r).and_then(|l| {
                let k = koornwinder_k(&l)?;
                Ok((k == koornwinder_k_via_ek(n, r)?, is_symmetric(&k)))
            });
            (n, r, res)
        })
        .collect();
    let mut report = Report::new();
    for (n, r, res) in results {
        match res {
            Ok((eq, sym)) => {
                report.push(format!("N={n} r={r} e_k expansion equals orbit sum"), eq, "");
                report.push(format!("N={n} r={r} orbit sum is symmetric"), sym, "");
            }
            Err(e) => report.push(format!("N={n} r={r} e_k expansion"), false, e.to_string()),
        }
    }
    report
}

/// Leading coefficient, triangular support and the `z = 1` specialization of
/// `F_μ` for every word of length `1..=max_n`.
pub fn verify_invariants(max_n: usize) -> Report {
    let words: Vec<Word> = (1..=max_n).flat_map(Word::all).collect();
    let results: Vec<(bool, bool, bool)> = words
        .par_iter()
        .map(|mu| {
            let f = asep_poly_f(mu);
            let exp = as_exponent(mu);
            let lead = f.coefficient_of(&exp).is_ok_and(|c| c.is_one());
            let support = f.terms().keys().all(|nu| order_preceq(nu, &exp).unwrap_or(false));
            let ones = vec![Scalar::one(); mu.len()];
            let special = f.eval(&ones).is_ok_and(|v| v == gen_rtilde(mu));
            (lead, support, special)
        })
        .collect();
    let mut report = Report::new();
    let summarize = |pick: fn(&(bool, bool, bool)) -> bool| -> (bool, String) {
        let bad: Vec<&Word> = words.iter().zip(&results).filter(|(_, r)| !pick(r)).map(|(w, _)| w).collect();
        match bad.first() {
            None => (true, format!("{} words", words.len())),
            Some(w) => (false, format!("{} of {} fail, first {}", bad.len(), words.len(), w.to_letters())),
        }
    };
    for (name, pick) in [
        ("coefficient of z^mu in F_mu is 1", (|r: &(bool, bool, bool)| r.0) as fn(&_) -> bool),
        ("support of F_mu lies below mu", |r| r.1),
        ("F_mu(1,...,1) = Rtilde(mu)", |r| r.2),
    ] {
        let (ok, detail) = summarize(pick);
        report.push(format!("N<={max_n} {name}"), ok, detail);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_laurent;
    use crate::tableaux::partition_ztilde;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_cases() {
        assert!(koornwinder_k(&w("00")).unwrap().as_constant().unwrap().is_one());
        assert!(koornwinder_k_via_ek(3, 3).unwrap().as_constant().unwrap().is_one());
        let k1 = koornwinder_k_via_ek(1, 0).unwrap();
        let expect = LaurentPoly::constant(1, partition_ztilde(1, 0).unwrap())
            .add(&parse_laurent("z1 + z1^-1 - 2", 1).unwrap())
            .unwrap();
        assert_eq!(k1, expect);
        assert_eq!(k1, asep_poly_f(&w("+")).add(&asep_poly_f(&w("-"))).unwrap());
        assert!(koornwinder_k_via_ek(1, 2).is_err());
    }

    #[test]
    fn two_sites() {
        for r in 0..=2 {
            let l = rank_one_partition(2, r).unwrap();
            let k = koornwinder_k(&l).unwrap();
            assert!(is_symmetric(&k));
            assert_eq!(k, koornwinder_k_via_ek(2, r).unwrap());
        }
    }

    #[test]
    fn conjugates_and_shapes() {
        assert_eq!(conjugate(&[2, 1]), vec![2, 1]);
        assert_eq!(conjugate(&[2]), vec![1, 1]);
        assert_eq!(conjugate(&[1, 1]), vec![2]);
        assert_eq!(conjugate(&[3, 1, 1]), vec![3, 1, 1]);
        assert!(matches!(koornwinder_q1(&[1, 1, 1], 2), Err(Error::InvalidShape(_))));
        assert_eq!(koornwinder_q1(&[1], 3).unwrap(), koornwinder_k_via_ek(3, 2).unwrap());
        assert_eq!(koornwinder_q1(&[1, 1], 2).unwrap(), koornwinder_k_via_ek(2, 0).unwrap());
        let single = koornwinder_k_via_ek(2, 1).unwrap();
        assert_eq!(koornwinder_q1(&[2], 2).unwrap(), single.mul(&single).unwrap());
    }

    #[test]
    fn invariants_small() {
        let r = verify_invariants(2);
        assert!(r.all_passed(), "{r}");
    }
}
