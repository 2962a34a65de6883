//! Generating polynomials `R`, `R̃` and partition functions `Z`, `Z̃`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use rayon::prelude::*;

use super::tableau::{weight_counts, weight_monomial};
use super::word::Word;
use crate::error::{Error, Result};
use crate::exactalg::{Param, Scalar, ZPoly};

type Memo = RwLock<HashMap<Word, Scalar>>;

fn memo_r() -> &'static Memo {
    static M: OnceLock<Memo> = OnceLock::new();
    M.get_or_init(Default::default)
}

fn memo_rtilde() -> &'static Memo {
    static M: OnceLock<Memo> = OnceLock::new();
    M.get_or_init(Default::default)
}

fn memoized(memo: &Memo, w: &Word, compute: impl FnOnce() -> Scalar) -> Scalar {
    if let Some(v) = memo.read().expect("memo lock").get(w) {
        return v.clone();
    }
    let v = compute();
    memo.write().expect("memo lock").entry(w.clone()).or_insert(v).clone()
}

fn p(x: Param) -> Scalar {
    Scalar::param(x)
}

/// `λ_n = αβt^{n−1} − γδ`.
pub fn lambda(n: usize) -> Scalar {
    assert!(n >= 1, "λ_n needs n ≥ 1");
    let t = p(Param::T).pow(n as i32 - 1).expect("nonnegative power");
    p(Param::Alpha).mul(&p(Param::Beta)).mul(&t).sub(&p(Param::Gamma).mul(&p(Param::Delta)))
}

/// `R(μ) = Σ_T wt(T)` over the tableaux of type `μ`; `R(∅) = 1`.
pub fn gen_r(word: &Word) -> Scalar {
    if word.is_empty() {
        return Scalar::one();
    }
    memoized(memo_r(), word, || {
        let counts = weight_counts(word);
        let poly = ZPoly::from_terms(
            counts
                .into_iter()
                .map(|(e, n)| (weight_monomial(&e), BigInt::from(n))),
        );
        Scalar::from_zpoly(poly)
    })
}

/// The prefactor `(t−1)^{N−r} / ∏_{i=2r}^{N+r−1}(αβt^i − γδ)`.
pub fn rtilde_prefactor(n: usize, r: usize) -> Scalar {
    let t = p(Param::T);
    let mut num = t.sub(&Scalar::one()).pow((n - r) as i32).expect("nonnegative power");
    let mut den = Scalar::one();
    for i in 2 * r..n + r {
        den = den.mul(&lambda(i + 1));
    }
    num = num.div(&den).expect("nonzero product");
    num
}

/// `R̃(μ)`, normalized so that `R̃(∗^r) = 1`.
pub fn gen_rtilde(word: &Word) -> Scalar {
    if word.is_empty() {
        return Scalar::one();
    }
    memoized(memo_rtilde(), word, || {
        rtilde_prefactor(word.len(), word.zeros()).mul(&gen_r(word))
    })
}

/// `Z_{N,r} = Σ R(σ)` over words of length `N` with `r` zeros.
pub fn partition_z(n: usize, r: usize) -> Result<Scalar> {
    if r > n {
        return Err(Error::InvalidSector { n: n as i64, r: r as i64 });
    }
    let parts: Vec<Scalar> = Word::with_zeros(n, r).par_iter().map(gen_r).collect();
    Ok(parts.into_iter().sum())
}

/// `Z̃_{N,r}`, the partition function with the `R̃` prefactor.
pub fn partition_ztilde(n: usize, r: usize) -> Result<Scalar> {
    Ok(rtilde_prefactor(n, r).mul(&partition_z(n, r)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_scalar;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            gen_r(&w("bb")),
            parse_scalar("alpha*delta*(1+t+alpha+beta+gamma+delta) + alpha^2*t + delta^2").unwrap()
        );
        assert_eq!(gen_r(&w("os")), parse_scalar("beta*t^2 + gamma*t + beta*gamma*t + gamma*delta").unwrap());
        assert_eq!(gen_r(&w("b")), parse_scalar("alpha + delta").unwrap());
    }

    #[test]
    fn rtilde_examples() {
        for r in 0..=5 {
            assert!(gen_rtilde(&Word::new(vec![0; r]).unwrap()).is_one());
        }
        assert_eq!(
            gen_rtilde(&w("b")),
            parse_scalar("(t-1)*(alpha+delta)/(alpha*beta-gamma*delta)").unwrap()
        );
        assert_eq!(
            gen_rtilde(&w("os")),
            parse_scalar("(t-1)*(beta*t^2+gamma*t+gamma*beta*t+delta*gamma)/(alpha*beta*t^2-gamma*delta)").unwrap()
        );
    }

    #[test]
    fn partition_functions() {
        assert_eq!(partition_z(1, 0).unwrap(), parse_scalar("alpha+beta+gamma+delta").unwrap());
        assert!(partition_z(3, 3).unwrap().is_one());
        assert!(partition_z(1, 2).is_err());
    }
}
