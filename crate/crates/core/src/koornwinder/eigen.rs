//! Eigenvalues of the Cherednik elements on `F_δ` for antidominant `δ`.

use rayon::prelude::*;

use super::family::asep_poly_f_latin;
use super::orbit::as_exponent;
use crate::error::{Error, Result};
use crate::exactalg::Scalar;
use crate::hecke::HeckeContext;
use crate::report::Report;
use crate::tableaux::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenData {
    pub delta: Word,
    /// Multiplicities of the distinct negative values, left to right.
    pub blocks: Vec<usize>,
    pub rho: Vec<i32>,
    /// `y_1, …, y_N` in the Latin parameters.
    pub y: Vec<Scalar>,
}

pub fn eigen_data(delta: &Word) -> Result<EigenData> {
    let e = delta.entries();
    if e.iter().any(|&x| x > 0) || e.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::NotAntidominant(delta.to_signs()));
    }
    let n = e.len();
    let mut blocks: Vec<usize> = Vec::new();
    for (i, &x) in e.iter().enumerate() {
        if x < 0 {
            if i > 0 && e[i - 1] == x {
                *blocks.last_mut().expect("block open") += 1;
            } else {
                blocks.push(1);
            }
        }
    }
    let k: usize = blocks.iter().sum();
    let mut rho = Vec::with_capacity(n);
    let mut before = 0usize;
    for &kj in &blocks {
        for i in before + 1..=before + kj {
            rho.push(-(n as i32) - i as i32 + 1 + 2 * before as i32 + kj as i32);
        }
        before += kj;
    }
    rho.extend((k + 1..=n).map(|i| (n - i) as i32));

    let h = HeckeContext::symbolic(n);
    let t0tn = h.t0().mul(&h.tn());
    let y = (1..=n)
        .map(|i| {
            let tpow = h.t.pow(n as i32 - i as i32 + rho[i - 1]).expect("t is nonzero");
            let d = e[i - 1] as i32;
            if d < 0 {
                h.q.pow(d).expect("q is nonzero").mul(&tpow)
            } else {
                t0tn.mul(&tpow)
            }
        })
        .collect();
    Ok(EigenData { delta: delta.clone(), blocks, rho, y })
}

/// `Y_i F_δ = y_i F_δ` for every `i` and the leading coefficient of `F_δ`.
pub fn verify_eigen(delta: &Word) -> Result<Report> {
    let data = eigen_data(delta)?;
    let n = delta.len();
    let h = HeckeContext::symbolic(n);
    let f = asep_poly_f_latin(delta)?;
    let mut report = Report::new();
    let lead = f.coefficient_of(&as_exponent(delta))?;
    report.push(
        format!("F({}) coefficient of z^delta is 1", delta.to_letters()),
        lead.is_one(),
        if lead.is_one() { String::new() } else { format!("found {lead}") },
    );
    let results: Vec<(String, bool, String)> = (1..=n)
        .into_par_iter()
        .map(|i| {
            let name = format!("Y{i} F({}) = ({}) F", delta.to_letters(), data.y[i - 1]);
            match h.cherednik_y(i, &f) {
                Ok(g) => (name, g == f.scale(&data.y[i - 1]), String::new()),
                Err(e) => (name, false, e.to_string()),
            }
        })
        .collect();
    for (name, ok, detail) in results {
        report.push(name, ok, detail);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_scalar;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn block_formula() {
        let d = eigen_data(&w("--")).unwrap();
        assert_eq!(d.rho, vec![0, -1]);
        assert_eq!(d.y, vec![parse_scalar("t/q").unwrap(), parse_scalar("1/(q*t)").unwrap()]);
        let d = eigen_data(&w("-0")).unwrap();
        assert_eq!(d.rho, vec![-1, 0]);
        assert_eq!(d.y[0], parse_scalar("1/q").unwrap());
        let d = eigen_data(&w("00")).unwrap();
        assert_eq!(d.y[0], parse_scalar("a*b*c*d*t^2/q").unwrap());
        assert_eq!(d.y[1], parse_scalar("a*b*c*d/q").unwrap());
        assert!(eigen_data(&w("0-")).is_err());
        assert!(eigen_data(&w("+0")).is_err());
    }

    #[test]
    fn worked_example_holds() {
        let r = verify_eigen(&w("-0")).unwrap();
        assert!(r.all_passed(), "{r}");
        assert!(verify_eigen(&w("--")).unwrap().all_passed());
    }
}
