//! Signed-permutation orbits and the orders on compositions.

use crate::error::{Error, Result};
use crate::tableaux::Word;

/// The orbit `W_0·λ` of a partition `λ ∈ {1, 0}^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub lambda: Word,
    /// Every word of length `N` with the same number of zeros, in
    /// lexicographic order.
    pub members: Vec<Word>,
    /// The antidominant member `(−1^{N−r}, 0^r)`.
    pub antidominant: Word,
}

fn check_partition(lambda: &Word) -> Result<()> {
    let e = lambda.entries();
    let ok = e.iter().all(|&x| x >= 0) && e.windows(2).all(|w| w[0] >= w[1]);
    if ok {
        Ok(())
    } else {
        Err(Error::NotAPartition(lambda.to_signs()))
    }
}

/// `λ = (1^{N−r}, 0^r)`.
pub fn rank_one_partition(n: usize, r: usize) -> Result<Word> {
    if r > n {
        return Err(Error::InvalidSector { n: n as i64, r: r as i64 });
    }
    let mut v = vec![1i8; n - r];
    v.resize(n, 0);
    Word::new(v)
}

pub fn orbit_of(lambda: &Word) -> Result<Orbit> {
    check_partition(lambda)?;
    let n = lambda.len();
    let r = lambda.zeros();
    let mut anti = vec![-1i8; n - r];
    anti.resize(n, 0);
    Ok(Orbit {
        lambda: lambda.clone(),
        members: Word::with_zeros(n, r),
        antidominant: Word::new(anti)?,
    })
}

/// `μ⁺`: absolute values sorted decreasingly.
pub fn dominant(mu: &[i32]) -> Vec<i32> {
    let mut v: Vec<i32> = mu.iter().map(|x| x.abs()).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Dominance order `ν ≤ μ`: every partial sum of `μ − ν` is nonnegative.
pub fn dominance_le(nu: &[i32], mu: &[i32]) -> Result<bool> {
    if nu.len() != mu.len() {
        return Err(Error::LengthMismatch(nu.len(), mu.len()));
    }
    let mut s = 0i64;
    for (a, b) in mu.iter().zip(nu) {
        s += (*a - *b) as i64;
        if s < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ν ⪯ μ`: `ν⁺ < μ⁺` in dominance, or `ν⁺ = μ⁺` and `ν ≤ μ`.
pub fn order_preceq(nu: &[i32], mu: &[i32]) -> Result<bool> {
    if nu.len() != mu.len() {
        return Err(Error::LengthMismatch(nu.len(), mu.len()));
    }
    let (np, mp) = (dominant(nu), dominant(mu));
    if np == mp {
        dominance_le(nu, mu)
    } else {
        dominance_le(&np, &mp)
    }
}

pub(crate) fn as_exponent(w: &Word) -> Vec<i32> {
    w.entries().iter().map(|&e| e as i32).collect()
}
