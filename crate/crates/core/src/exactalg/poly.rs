//! Sparse multivariate polynomials over the parameter alphabet.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;
use std::ops::{AddAssign, MulAssign, Neg, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::param::{Param, NPARAMS};

/// Coefficient ring of a [`Poly`].
pub trait Coeff:
    Clone
    + PartialEq
    + Eq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + Send
    + Sync
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + Eq
        + Debug
        + Zero
        + One
        + Neg<Output = T>
        + for<'a> AddAssign<&'a T>
        + for<'a> SubAssign<&'a T>
        + for<'a> MulAssign<&'a T>
        + Send
        + Sync
{
}

/// Sparse polynomial; terms sorted by descending [`Monomial`] order, no zero
/// coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Poly<C> {
    pub(crate) terms: Vec<(Monomial, C)>,
}

/// Polynomial with arbitrary-precision rational coefficients.
pub type ParamPoly = Poly<BigRational>;
/// Polynomial with integer coefficients; the internal workhorse.
pub type ZPoly = Poly<BigInt>;

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn var(p: Param) -> Self {
        Self::monomial(Monomial::var(p), C::one())
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(v) => *v += &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, C>) -> Self {
        let mut terms: Vec<(Monomial, C)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    /// Terms that are already sorted descending and free of zeros.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, C)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms
            .binary_search_by(|(k, _)| m.cmp(k))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| C::zero())
    }

    pub fn degree_in(&self, p: Param) -> u16 {
        self.degree_in_idx(p.index())
    }

    pub(crate) fn degree_in_idx(&self, i: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exp_idx(i)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Bitmask of the symbols that occur.
    pub(crate) fn support(&self) -> u16 {
        self.terms.iter().fold(0, |acc, (m, _)| acc | m.support())
    }

    pub fn params(&self) -> Vec<Param> {
        let s = self.support();
        Param::ALL.iter().copied().filter(|p| s & (1 << p.index()) != 0).collect()
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let first = match it.next() {
            Some((m, _)) => *m,
            None => return Monomial::ONE,
        };
        it.fold(first, |acc, (m, _)| acc.gcd(m))
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let mut c = a[i].1.clone();
                    if negate {
                        c -= &b[j].1;
                    } else {
                        c += &b[j].1;
                    }
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for (m, c) in &b[j..] {
            out.push((*m, if negate { -c.clone() } else { c.clone() }));
        }
        Poly { terms: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        let mut acc: HashMap<Monomial, C> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let mut c = ca.clone();
                c *= cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    /// Multiplication by a single term; order is preserved.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| {
                    let mut v = v.clone();
                    v *= c;
                    (k.mul(m), v)
                })
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.mul_term(&Monomial::ONE, c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Divides every exponent by the monomial `m` (which must divide all terms).
    pub(crate) fn div_monomial(&self, m: &Monomial) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (m.quotient_of(k).expect("monomial does not divide"), c.clone()))
                .collect(),
        }
    }

    /// Groups terms by their exponents on the symbols in `mask`.
    ///
    /// Returns `(exponent part on mask, coefficient polynomial free of mask)`.
    pub(crate) fn coefficients_wrt(&self, mask: u16) -> Vec<(Monomial, Poly<C>)> {
        let mut groups: BTreeMap<Monomial, Vec<(Monomial, C)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (inside, outside) = m.split(mask);
            groups.entry(inside).or_default().push((outside, c.clone()));
        }
        groups
            .into_iter()
            .rev()
            .map(|(k, ts)| {
                // splitting off a fixed part preserves the relative order
                (k, Poly::from_sorted_unchecked(ts))
            })
            .collect()
    }
}

impl ZPoly {
    /// Gcd of the integer coefficients, always non-negative.
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn leading_is_negative(&self) -> bool {
        self.terms.first().is_some_and(|(_, c)| c.is_negative())
    }

    /// Exact division by an integer.
    pub fn div_integer(&self, d: &BigInt) -> Self {
        if d.is_one() {
            return self.clone();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let (q, r) = c.div_rem(d);
                    debug_assert!(r.is_zero(), "inexact integer division");
                    (*m, q)
                })
                .collect(),
        }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.integer_content();
        if self.leading_is_negative() {
            c = -c;
        }
        self.div_integer(&c)
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.terms.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                let q = dm.quotient_of(m)?;
                let (qc, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                out.push((q, qc));
            }
            return Some(Poly { terms: out });
        }
        for i in 0..NPARAMS {
            if d.degree_in_idx(i) > self.degree_in_idx(i) {
                return None;
            }
        }
        let (dm, dc) = d.terms[0].clone();
        let mut rem: BTreeMap<Monomial, BigInt> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((rm, rc)) = rem.pop_last() {
            let qm = dm.quotient_of(&rm)?;
            let (qc, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            for (m, c) in &d.terms[1..] {
                let key = m.mul(&qm);
                let prod = c * &qc;
                match rem.get_mut(&key) {
                    Some(v) => {
                        *v -= &prod;
                        if v.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -prod);
                    }
                }
            }
            quot.push((qm, qc));
        }
        Some(Poly { terms: quot })
    }

    pub fn to_rational(&self) -> ParamPoly {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }
}

impl ParamPoly {
    /// Splits into `content * primitive` with the primitive part integral and
    /// its leading coefficient positive.
    pub fn to_integer_parts(&self) -> (BigRational, ZPoly) {
        if self.is_zero() {
            return (BigRational::zero(), ZPoly::zero());
        }
        let mut lcm_den = BigInt::one();
        for (_, c) in &self.terms {
            lcm_den = lcm_den.lcm(c.denom());
        }
        let ints: ZPoly = Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.numer() * (&lcm_den / c.denom())))
                .collect(),
        };
        let prim = ints.primitive();
        let cont = BigRational::new(
            ints.terms[0].1.clone(),
            lcm_den * &prim.terms[0].1,
        );
        (cont, prim)
    }

    /// Evaluates at rational values for every symbol that occurs.
    pub fn eval(&self, values: &[Option<BigRational>; NPARAMS]) -> Option<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    let x = values[i].as_ref()?;
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += v;
        }
        Some(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(p: Param) -> ZPoly {
        ZPoly::var(p)
    }

    #[test]
    fn exact_division_roundtrip() {
        let f = z(Param::A).add(&ZPoly::constant(BigInt::from(-1)));
        let g = z(Param::T).mul(&z(Param::B)).sub(&z(Param::C).scale(&BigInt::from(3)));
        let p = f.mul(&g).mul(&g);
        assert_eq!(p.div_exact(&g).unwrap(), f.mul(&g));
        assert_eq!(p.div_exact(&f).unwrap(), g.mul(&g));
        assert!(p.div_exact(&z(Param::Q)).is_none());
        assert!(f.div_exact(&g).is_none());
    }

    #[test]
    fn integer_parts() {
        let p = ParamPoly::from_terms([
            (Monomial::var(Param::A), BigRational::new(3.into(), 4.into())),
            (Monomial::ONE, BigRational::new((-1).into(), 2.into())),
        ]);
        let (c, prim) = p.to_integer_parts();
        assert_eq!(c, BigRational::new(1.into(), 4.into()));
        assert_eq!(
            prim,
            z(Param::A).scale(&BigInt::from(3)).sub(&ZPoly::constant(BigInt::from(2)))
        );
    }

    #[test]
    fn coefficient_grouping() {
        // (a + 1) * t^2 + b
        let p = z(Param::A)
            .add(&ZPoly::one())
            .mul(&z(Param::T).pow(2))
            .add(&z(Param::B));
        let groups = p.coefficients_wrt(1 << Param::T.index());
        assert_eq!(groups.len(), 2);
        assert_eq!(groups[0].0, Monomial::var_pow(Param::T, 2));
        assert_eq!(groups[0].1, z(Param::A).add(&ZPoly::one()));
        assert_eq!(groups[1].1, z(Param::B));
    }
}
