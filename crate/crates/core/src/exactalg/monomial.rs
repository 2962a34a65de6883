use std::cmp::Ordering;

use super::param::{Param, NPARAMS};

/// A monomial in the parameter alphabet, stored as one exponent per symbol.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of `a`, then `b`, and so on through `δ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial(pub(crate) [u16; NPARAMS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NPARAMS]);

    pub fn from_exponents(exps: [u16; NPARAMS]) -> Self {
        Monomial(exps)
    }

    pub fn var(p: Param) -> Self {
        Self::var_pow(p, 1)
    }

    pub fn var_pow(p: Param, e: u16) -> Self {
        let mut m = Self::ONE;
        m.0[p.index()] = e;
        m
    }

    pub fn exponents(&self) -> &[u16; NPARAMS] {
        &self.0
    }

    pub fn exp(&self, p: Param) -> u16 {
        self.0[p.index()]
    }

    #[inline]
    pub(crate) fn exp_idx(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = [0u16; NPARAMS];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(other.0.iter())) {
            *o = a.checked_add(*b).expect("monomial exponent overflow");
        }
        Monomial(out)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = [0u16; NPARAMS];
        for i in 0..NPARAMS {
            out[i] = other.0[i].checked_sub(self.0[i])?;
        }
        Some(Monomial(out))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = [0u16; NPARAMS];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.0[i].min(other.0[i]);
        }
        Monomial(out)
    }

    /// Bitmask of the symbols that occur with nonzero exponent.
    pub(crate) fn support(&self) -> u16 {
        let mut mask = 0u16;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Splits into the part supported on `mask` and the rest.
    pub(crate) fn split(&self, mask: u16) -> (Monomial, Monomial) {
        let mut inside = [0u16; NPARAMS];
        let mut outside = [0u16; NPARAMS];
        for i in 0..NPARAMS {
            if mask & (1 << i) != 0 {
                inside[i] = self.0[i];
            } else {
                outside[i] = self.0[i];
            }
        }
        (Monomial(inside), Monomial(outside))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let bt2 = Monomial::var(Param::Beta).mul(&Monomial::var_pow(Param::T, 2));
        let bgt = Monomial::var(Param::Beta)
            .mul(&Monomial::var(Param::Gamma))
            .mul(&Monomial::var(Param::T));
        let gt = Monomial::var(Param::Gamma).mul(&Monomial::var(Param::T));
        let gd = Monomial::var(Param::Gamma).mul(&Monomial::var(Param::Delta));
        assert!(bt2 > bgt);
        assert!(bgt > gt);
        assert!(gt > gd);
        assert!(gd > Monomial::var(Param::A));
        assert!(Monomial::var(Param::A) > Monomial::var(Param::B));
    }

    #[test]
    fn division() {
        let m = Monomial::var_pow(Param::Q, 3).mul(&Monomial::var(Param::A));
        let d = Monomial::var(Param::Q);
        assert_eq!(
            d.quotient_of(&m),
            Some(Monomial::var_pow(Param::Q, 2).mul(&Monomial::var(Param::A)))
        );
        assert_eq!(m.quotient_of(&d), None);
    }
}
