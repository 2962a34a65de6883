//! Parameter substitution, including the Greek-to-Latin change of variables.

use super::laurent::LaurentPoly;
use super::param::{Param, NPARAMS};
use super::poly::{Poly, ZPoly};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// An assignment of [`Scalar`] values to a subset of the parameters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution {
    values: [Option<Scalar>; NPARAMS],
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, p: Param, v: Scalar) -> Self {
        self.set(p, v);
        self
    }

    pub fn set(&mut self, p: Param, v: Scalar) {
        self.values[p.index()] = Some(v);
    }

    pub fn get(&self, p: Param) -> Option<&Scalar> {
        self.values[p.index()].as_ref()
    }

    pub fn is_empty(&self) -> bool {
        self.values.iter().all(Option::is_none)
    }

    /// The change of variables expressing `α, β, γ, δ` through `a, b, c, d, t`:
    ///
    /// `α = −ac(1−t)/((a−1)(c−1))`, `γ = (1−t)/((a−1)(c−1))`,
    /// `β = −bd(1−t)/((b−1)(d−1))`, `δ = (1−t)/((b−1)(d−1))`.
    pub fn change_of_variables() -> Self {
        let one = Scalar::one();
        let t = Scalar::param(Param::T);
        let omt = one.sub(&t);
        let side = |x: Param, y: Param| {
            let x = Scalar::param(x);
            let y = Scalar::param(y);
            let den = x.sub(&one).mul(&y.sub(&one));
            let small = omt.div(&den).expect("nonzero symbolic denominator");
            let big = x.mul(&y).mul(&small).neg();
            (big, small)
        };
        let (alpha, gamma) = side(Param::A, Param::C);
        let (beta, delta) = side(Param::B, Param::D);
        Substitution::new()
            .with(Param::Alpha, alpha)
            .with(Param::Gamma, gamma)
            .with(Param::Beta, beta)
            .with(Param::Delta, delta)
    }

    /// Composes with `self` applied first: `(self ∘ then)`; each value of
    /// `self` is rewritten by `then`, and `then`'s own entries are kept for
    /// parameters `self` leaves alone.
    pub fn then(&self, then: &Substitution) -> Result<Substitution> {
        let mut out = then.clone();
        for p in Param::ALL {
            if let Some(v) = self.get(p) {
                out.set(p, then.apply(v)?);
            }
        }
        Ok(out)
    }

    pub fn apply(&self, x: &Scalar) -> Result<Scalar> {
        if self.is_empty() {
            return Ok(x.clone());
        }
        let support = x.znum().support() | x.zden().support();
        if !self.touches(support) {
            return Ok(x.clone());
        }
        let (nn, nd) = self.apply_zpoly(x.znum());
        let (dn, dd) = self.apply_zpoly(x.zden());
        if dn.is_zero() {
            return Err(Error::SubstitutionSingular);
        }
        let top = Scalar::from_zfraction(nn, nd)?;
        let bottom = Scalar::from_zfraction(dn, dd)?;
        top.div(&bottom)
    }

    pub fn apply_laurent(&self, f: &LaurentPoly) -> Result<LaurentPoly> {
        f.map_coeffs(|c| self.apply(c))
    }

    fn touches(&self, support: u16) -> bool {
        (0..NPARAMS).any(|i| support & (1 << i) != 0 && self.values[i].is_some())
    }

    /// Returns `(N, D)` with `p(values) = N / D`, where `D` is the product of
    /// the value denominators raised to the degrees of `p`.
    fn apply_zpoly(&self, p: &ZPoly) -> (ZPoly, ZPoly) {
        let mut degs = [0u16; NPARAMS];
        for (i, d) in degs.iter_mut().enumerate() {
            if self.values[i].is_some() {
                *d = p.degree_in_idx(i);
            }
        }
        // powers[i][k] = (n_i^k, d_i^k)
        let mut num_pows: Vec<Vec<ZPoly>> = vec![Vec::new(); NPARAMS];
        let mut den_pows: Vec<Vec<ZPoly>> = vec![Vec::new(); NPARAMS];
        let mut total_den = ZPoly::one();
        for i in 0..NPARAMS {
            if let Some(v) = &self.values[i] {
                let dmax = degs[i] as usize;
                let mut np = vec![ZPoly::one()];
                let mut dp = vec![ZPoly::one()];
                for k in 1..=dmax {
                    np.push(np[k - 1].mul(v.znum()));
                    dp.push(dp[k - 1].mul(v.zden()));
                }
                total_den = total_den.mul(&dp[dmax]);
                num_pows[i] = np;
                den_pows[i] = dp;
            }
        }
        let mut acc: Vec<ZPoly> = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            let mut rest = *m;
            let mut term = ZPoly::one();
            for i in 0..NPARAMS {
                if self.values[i].is_none() {
                    continue;
                }
                let e = m.exp_idx(i) as usize;
                rest.0[i] = 0;
                let dmax = degs[i] as usize;
                if e > 0 {
                    term = term.mul(&num_pows[i][e]);
                }
                if dmax > e {
                    term = term.mul(&den_pows[i][dmax - e]);
                }
            }
            acc.push(term.mul_term(&rest, c));
        }
        (sum_zpolys(acc), total_den)
    }
}

fn sum_zpolys(mut v: Vec<ZPoly>) -> ZPoly {
    while v.len() > 1 {
        let mut next = Vec::with_capacity(v.len().div_ceil(2));
        let mut it = v.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a.add(&b)),
                None => next.push(a),
            }
        }
        v = next;
    }
    v.pop().unwrap_or_else(Poly::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: Param) -> Scalar {
        Scalar::param(x)
    }

    fn n(k: i64) -> Scalar {
        Scalar::from_i64(k)
    }

    #[test]
    fn change_of_variables_identities() {
        let cv = Substitution::change_of_variables();
        let alpha = cv.apply(&p(Param::Alpha)).unwrap();
        let expect = p(Param::A)
            .mul(&p(Param::C))
            .mul(&n(1).sub(&p(Param::T)))
            .neg()
            .div(&p(Param::A).sub(&n(1)).mul(&p(Param::C).sub(&n(1))))
            .unwrap();
        assert_eq!(alpha, expect);
        let gamma = cv.apply(&p(Param::Gamma)).unwrap();
        let beta = cv.apply(&p(Param::Beta)).unwrap();
        let delta = cv.apply(&p(Param::Delta)).unwrap();
        let ac = p(Param::A).mul(&p(Param::C));
        assert!(ac.mul(&gamma).add(&alpha).is_zero());
        let bd = p(Param::B).mul(&p(Param::D));
        assert_eq!(bd, beta.neg().div(&delta).unwrap());
        let one_t = n(1).sub(&p(Param::T));
        let a_plus_c = one_t.add(&alpha).sub(&gamma).neg().div(&gamma).unwrap();
        assert_eq!(a_plus_c, p(Param::A).add(&p(Param::C)));
        let b_plus_d = one_t.add(&beta).sub(&delta).neg().div(&delta).unwrap();
        assert_eq!(b_plus_d, p(Param::B).add(&p(Param::D)));
    }

    #[test]
    fn empty_substitution_is_identity() {
        let x = p(Param::T).add(&n(3)).div(&p(Param::Alpha)).unwrap();
        assert_eq!(Substitution::new().apply(&x).unwrap(), x);
    }

    #[test]
    fn singular_substitution() {
        let x = n(1).div(&p(Param::T).sub(&n(1))).unwrap();
        let s = Substitution::new().with(Param::T, n(1));
        assert_eq!(s.apply(&x), Err(Error::SubstitutionSingular));
    }

    #[test]
    fn partial_rational_values() {
        // (a t + 1) / (t - a) at t = 1/2
        let x = p(Param::A)
            .mul(&p(Param::T))
            .add(&n(1))
            .div(&p(Param::T).sub(&p(Param::A)))
            .unwrap();
        let s = Substitution::new().with(Param::T, Scalar::from_ratio(1, 2).unwrap());
        let expect = p(Param::A)
            .add(&n(2))
            .div(&n(1).sub(&p(Param::A).scale_int(2)))
            .unwrap();
        assert_eq!(s.apply(&x).unwrap(), expect);
    }
}
