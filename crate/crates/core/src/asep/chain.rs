//! The two-species open-boundary ASEP as an explicit lazy Markov chain.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{parse_rational, Param, Scalar, Substitution};
use crate::tableaux::Word;

/// Rational rates `α, β, γ, δ` and the bulk asymmetry `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsepParams {
    pub alpha: BigRational,
    pub beta: BigRational,
    pub gamma: BigRational,
    pub delta: BigRational,
    pub t: BigRational,
}

impl AsepParams {
    pub fn new(alpha: BigRational, beta: BigRational, gamma: BigRational, delta: BigRational, t: BigRational) -> Self {
        AsepParams { alpha, beta, gamma, delta, t }
    }

    /// All five parameters equal to `v`.
    pub fn uniform(v: BigRational) -> Self {
        AsepParams::new(v.clone(), v.clone(), v.clone(), v.clone(), v)
    }

    /// Parses `alpha=1/2,beta=1/3,...`. Keys may also be `a, b, c, d` for
    /// `α, β, γ, δ` or the Greek letters themselves; missing keys default
    /// to 1.
    pub fn parse(s: &str) -> Result<Self> {
        let mut p = AsepParams::uniform(BigRational::one());
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, found '{item}'")))?;
            let v = parse_rational(v.trim())?;
            match k.trim() {
                "alpha" | "a" | "α" => p.alpha = v,
                "beta" | "b" | "β" => p.beta = v,
                "gamma" | "c" | "γ" => p.gamma = v,
                "delta" | "d" | "δ" => p.delta = v,
                "t" => p.t = v,
                other => return Err(Error::Parse(format!("unknown parameter '{other}'"))),
            }
        }
        Ok(p)
    }

    /// Rejects nonpositive boundary rates and negative `t`; returns
    /// warnings for values outside the usual domain `0 ≤ t < 1`.
    pub fn validate(&self) -> Result<Vec<String>> {
        for (name, v) in [("alpha", &self.alpha), ("beta", &self.beta), ("gamma", &self.gamma), ("delta", &self.delta)] {
            if !v.is_positive() {
                return Err(Error::NonpositiveParam(format!("{name} = {v}")));
            }
        }
        if self.t.is_negative() {
            return Err(Error::NonpositiveParam(format!("t = {}", self.t)));
        }
        let mut warnings = Vec::new();
        if self.t >= BigRational::one() {
            warnings.push(format!("t = {} lies outside [0, 1)", self.t));
        }
        Ok(warnings)
    }

    /// Substitution of these values for `α, β, γ, δ, t`.
    pub fn substitution(&self) -> Substitution {
        let s = Scalar::from_rational;
        Substitution::new()
            .with(Param::Alpha, s(&self.alpha))
            .with(Param::Beta, s(&self.beta))
            .with(Param::Gamma, s(&self.gamma))
            .with(Param::Delta, s(&self.delta))
            .with(Param::T, s(&self.t))
    }

    pub fn describe(&self) -> String {
        format!(
            "alpha={} beta={} gamma={} delta={} t={}",
            self.alpha, self.beta, self.gamma, self.delta, self.t
        )
    }
}

/// The states with `r` particles `∗` on `N` sites and the lazy transition
/// matrix between them.
#[derive(Clone, Debug)]
pub struct ChainSector {
    pub n: usize,
    pub r: usize,
    pub params: AsepParams,
    /// States in lexicographic order.
    pub states: Vec<Word>,
    index: HashMap<Word, usize>,
    /// Sparse rows `(target, probability)`, self-loop included, sorted by
    /// target.
    rows: Vec<Vec<(usize, BigRational)>>,
}

/// Outgoing moves of `state` with unnormalized rates (before dividing by
/// `N + 1`).
fn moves(state: &Word, p: &AsepParams) -> Vec<(Word, BigRational)> {
    let e = state.entries();
    let n = e.len();
    let one = BigRational::one();
    let mut out = Vec::new();
    let with = |f: &dyn Fn(&mut Vec<i8>)| {
        let mut v = e.to_vec();
        f(&mut v);
        Word::new(v).expect("valid entries")
    };
    for i in 0..n.saturating_sub(1) {
        let (x, y) = (e[i], e[i + 1]);
        if x == y {
            continue;
        }
        // a larger species to the left of a smaller one jumps right at rate
        // t; the reverse exchange has rate 1
        let rate = if x > y { p.t.clone() } else { one.clone() };
        if !rate.is_zero() {
            out.push((with(&|v| v.swap(i, i + 1)), rate));
        }
    }
    if n > 0 {
        match e[0] {
            -1 => out.push((with(&|v| v[0] = 1), p.alpha.clone())),
            1 => out.push((with(&|v| v[0] = -1), p.gamma.clone())),
            _ => {}
        }
        match e[n - 1] {
            1 => out.push((with(&|v| v[n - 1] = -1), p.beta.clone())),
            -1 => out.push((with(&|v| v[n - 1] = 1), p.delta.clone())),
            _ => {}
        }
    }
    out
}

pub fn build_generator(n: usize, r: usize, params: &AsepParams) -> Result<ChainSector> {
    if r > n {
        return Err(Error::InvalidSector { n: n as i64, r: r as i64 });
    }
    params.validate()?;
    let states = Word::with_zeros(n, r);
    let index: HashMap<Word, usize> = states.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let scale = BigRational::from_integer((n as i64 + 1).into());
    let mut rows = Vec::with_capacity(states.len());
    for (i, s) in states.iter().enumerate() {
        let mut row: Vec<(usize, BigRational)> = Vec::new();
        let mut out = BigRational::zero();
        for (target, rate) in moves(s, params) {
            let prob = rate / &scale;
            out += &prob;
            let j = index[&target];
            match row.iter_mut().find(|(k, _)| *k == j) {
                Some((_, v)) => *v += prob,
                None => row.push((j, prob)),
            }
        }
        if out > BigRational::one() {
            return Err(Error::NotStochastic(format!(
                "state {} leaves with total probability {out}",
                s.to_letters()
            )));
        }
        let stay = BigRational::one() - out;
        if !stay.is_zero() {
            row.push((i, stay));
        }
        row.sort_by_key(|(k, _)| *k);
        rows.push(row);
    }
    Ok(ChainSector { n, r, params: params.clone(), states, index, rows })
}

impl ChainSector {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn row(&self, i: usize) -> &[(usize, BigRational)] {
        &self.rows[i]
    }

    /// `P(from → to)`.
    pub fn probability(&self, from: &Word, to: &Word) -> BigRational {
        let (Some(i), Some(j)) = (self.index_of(from), self.index_of(to)) else {
            return BigRational::zero();
        };
        self.rows[i]
            .iter()
            .find(|(k, _)| *k == j)
            .map_or_else(BigRational::zero, |(_, v)| v.clone())
    }

    pub fn dense(&self) -> Vec<Vec<BigRational>> {
        let m = self.len();
        let mut out = vec![vec![BigRational::zero(); m]; m];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                out[i][*j] = v.clone();
            }
        }
        out
    }
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
    fn one_site() {
        let p = AsepParams::new(q(1, 2), q(1, 3), q(1, 5), q(1, 7), q(1, 11));
        let c = build_generator(1, 0, &p).unwrap();
        assert_eq!(c.probability(&w("o"), &w("b")), (q(1, 2) + q(1, 7)) / q(2, 1));
        assert_eq!(c.probability(&w("b"), &w("o")), (q(1, 5) + q(1, 3)) / q(2, 1));
    }

    #[test]
    fn rows_sum_to_one() {
        let p = AsepParams::new(q(1, 2), q(1, 3), q(1, 5), q(1, 7), q(1, 11));
        for r in 0..=3 {
            let c = build_generator(3, r, &p).unwrap();
            for i in 0..c.len() {
                let s: BigRational = c.row(i).iter().map(|(_, v)| v.clone()).sum();
                assert!(s.is_one());
            }
        }
    }

    #[test]
    fn frozen_and_bulk() {
        let p = AsepParams::new(q(1, 2), q(1, 3), q(1, 5), q(1, 7), q(1, 11));
        let c = build_generator(2, 2, &p).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c.probability(&w("ss"), &w("ss")).is_one());
        let c = build_generator(2, 1, &p).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c.probability(&w("bs"), &w("sb")), q(1, 33));
        assert_eq!(c.probability(&w("sb"), &w("bs")), q(1, 3));
        assert_eq!(c.probability(&w("so"), &w("os")), q(1, 33));
        assert!(c.probability(&w("sb"), &w("so")) == p.beta / q(3, 1));
        assert!(c.probability(&w("bs"), &w("os")) == p.gamma / q(3, 1));
    }

    #[test]
    fn parameter_errors() {
        let mut p = AsepParams::uniform(q(1, 2));
        p.alpha = q(0, 1);
        assert!(matches!(build_generator(1, 0, &p), Err(Error::NonpositiveParam(_))));
        let p = AsepParams::uniform(q(3, 1));
        assert!(matches!(build_generator(2, 0, &p), Err(Error::NotStochastic(_))));
        assert!(matches!(build_generator(1, 2, &AsepParams::uniform(q(1, 2))), Err(Error::InvalidSector { .. })));
        let p = AsepParams::parse("a=1/2, beta=1/3,γ=2,d=1/5,t=0").unwrap();
        assert_eq!(p.gamma, q(2, 1));
        assert_eq!(p.delta, q(1, 5));
        assert!(AsepParams::parse("x=1").is_err());
    }
}
