//! Canonical rational functions in the parameter alphabet.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd::gcd;
use super::param::Param;
use super::poly::{ParamPoly, Poly, ZPoly};
use crate::error::{Error, Result};

/// A rational function `num / den` with integer-coefficient polynomials.
///
/// Canonical form: `num` and `den` share no polynomial factor and no integer
/// factor, the leading coefficient of `den` is positive, and zero is `0/1`.
/// Two scalars are equal exactly when their fields are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    num: ZPoly,
    den: ZPoly,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { num: ZPoly::zero(), den: ZPoly::one() }
    }

    pub fn one() -> Self {
        Scalar { num: ZPoly::one(), den: ZPoly::one() }
    }

    pub fn from_i64(n: i64) -> Self {
        Scalar { num: ZPoly::constant(BigInt::from(n)), den: ZPoly::one() }
    }

    pub fn from_ratio(n: i64, d: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_rational(&BigRational::new(n.into(), d.into())))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Scalar::canonical_unchecked(ZPoly::constant(r.numer().clone()), ZPoly::constant(r.denom().clone()))
    }

    pub fn param(p: Param) -> Self {
        Scalar { num: ZPoly::var(p), den: ZPoly::one() }
    }

    pub fn from_zpoly(p: ZPoly) -> Self {
        Scalar { num: p, den: ZPoly::one() }
    }

    pub fn from_poly(p: &ParamPoly) -> Self {
        let (c, prim) = p.to_integer_parts();
        Scalar::canonical_unchecked(prim.scale(c.numer()), ZPoly::constant(c.denom().clone()))
    }

    /// Builds `num / den`, reducing to canonical form.
    pub fn from_fraction(num: &ParamPoly, den: &ParamPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (cn, pn) = num.to_integer_parts();
        let (cd, pd) = den.to_integer_parts();
        let k = cn / cd;
        Ok(Scalar::reduce(pn.scale(k.numer()), pd.scale(k.denom())))
    }

    /// Builds `num / den` from integer polynomials, reducing to canonical form.
    pub fn from_zfraction(num: ZPoly, den: ZPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::reduce(num, den))
    }

    /// Full reduction: polynomial gcd, then integer content and sign.
    pub(crate) fn reduce(num: ZPoly, den: ZPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Scalar::zero();
        }
        let g = gcd(&num, &den);
        if g.is_one() {
            Scalar::canonical_unchecked(num, den)
        } else {
            Scalar::canonical_unchecked(
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        }
    }

    /// Normalizes integer content and sign of an already coprime pair.
    fn canonical_unchecked(num: ZPoly, den: ZPoly) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        let cn = num.integer_content();
        let cd = den.integer_content();
        let mut g = cn.gcd(&cd);
        if den.leading_is_negative() {
            g = -g;
        }
        if g.is_one() {
            Scalar { num, den }
        } else {
            Scalar { num: num.div_integer(&g), den: den.div_integer(&g) }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_integral_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// True when the denominator is an integer constant.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        match (self.num.constant_value(), self.den.constant_value()) {
            (Some(n), Some(d)) => Some(BigRational::new(n, d)),
            _ => None,
        }
    }

    /// Integer numerator polynomial of the canonical pair.
    pub fn znum(&self) -> &ZPoly {
        &self.num
    }

    /// Integer denominator polynomial of the canonical pair.
    pub fn zden(&self) -> &ZPoly {
        &self.den
    }

    /// Numerator with rational coefficients, paired with a primitive
    /// denominator (see [`Scalar::denominator`]).
    pub fn numerator(&self) -> ParamPoly {
        let c = self.den.integer_content();
        self.num
            .map_coeffs(|v| BigRational::new(v.clone(), c.clone()))
    }

    /// Primitive integer denominator with positive leading coefficient.
    pub fn denominator(&self) -> ParamPoly {
        self.den.primitive().to_rational()
    }

    /// The numerator as a polynomial, if the denominator is constant.
    pub fn as_poly(&self) -> Option<ParamPoly> {
        let d = self.den.constant_value()?;
        Some(self.num.map_coeffs(|v| BigRational::new(v.clone(), d.clone())))
    }

    pub fn params(&self) -> Vec<Param> {
        let s = self.num.support() | self.den.support();
        Param::ALL.iter().copied().filter(|p| s & (1 << p.index()) != 0).collect()
    }

    pub fn neg(&self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.add_signed(other, false)
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add_signed(other, true)
    }

    fn add_signed(&self, other: &Scalar, negate: bool) -> Scalar {
        let combine = |x: &ZPoly, y: &ZPoly| if negate { x.sub(y) } else { x.add(y) };
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { other.neg() } else { other.clone() };
        }
        if self.den == other.den {
            let n = combine(&self.num, &other.num);
            if self.den.is_one() {
                return Scalar::canonical_unchecked(n, ZPoly::one());
            }
            return Scalar::reduce_against(n, self.den.clone(), &self.den);
        }
        if self.den.is_constant() && other.den.is_constant() {
            let b = self.den.constant_value().expect("constant");
            let d = other.den.constant_value().expect("constant");
            let l = b.lcm(&d);
            let n = combine(&self.num.scale(&(&l / &b)), &other.num.scale(&(&l / &d)));
            return Scalar::canonical_unchecked(n, ZPoly::constant(l));
        }
        let g = gcd(&self.den, &other.den);
        if g.is_constant() {
            let n = combine(&self.num.mul(&other.den), &other.num.mul(&self.den));
            return Scalar::canonical_unchecked(n, self.den.mul(&other.den));
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = other.den.div_exact(&g).expect("gcd divides");
        let n = combine(&self.num.mul(&d1), &other.num.mul(&b1));
        let den = b1.mul(&other.den);
        Scalar::reduce_against(n, den, &g)
    }

    /// Reduces `n / den` where any common factor must divide `g`.
    fn reduce_against(n: ZPoly, den: ZPoly, g: &ZPoly) -> Scalar {
        if n.is_zero() {
            return Scalar::zero();
        }
        let g2 = gcd(&n, g);
        if g2.is_constant() {
            Scalar::canonical_unchecked(n, den)
        } else {
            Scalar::canonical_unchecked(
                n.div_exact(&g2).expect("gcd divides"),
                den.div_exact(&g2).expect("gcd divides"),
            )
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let (a, b) = (&self.num, &self.den);
        let (c, d) = (&other.num, &other.den);
        let (a1, d1) = cancel(a, d);
        let (c1, b1) = cancel(c, b);
        Scalar::canonical_unchecked(a1.mul(&c1), b1.mul(&d1))
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::canonical_unchecked(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(Scalar::canonical_unchecked(base.num.pow(k), base.den.pow(k)))
    }

    pub fn scale_int(&self, k: i64) -> Scalar {
        self.mul(&Scalar::from_i64(k))
    }

    /// `{"num": [[e_a, …, e_δ, "p/q"], …], "den": […]}` with the denominator
    /// primitive.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "num": poly_to_json(&self.numerator()),
            "den": poly_to_json(&self.denominator()),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Scalar> {
        let num = v
            .get("num")
            .ok_or_else(|| Error::Parse("missing \"num\"".into()))
            .and_then(poly_from_json)?;
        let den = match v.get("den") {
            Some(d) => poly_from_json(d)?,
            None => ParamPoly::one(),
        };
        Scalar::from_fraction(&num, &den)
    }
}

/// Cancels the gcd of `x` and `y` out of both.
fn cancel(x: &ZPoly, y: &ZPoly) -> (ZPoly, ZPoly) {
    if y.is_constant() || x.is_constant() {
        return (x.clone(), y.clone());
    }
    let g = gcd(x, y);
    if g.is_constant() {
        (x.clone(), y.clone())
    } else {
        (
            x.div_exact(&g).expect("gcd divides"),
            y.div_exact(&g).expect("gcd divides"),
        )
    }
}

pub(crate) fn poly_to_json(p: &ParamPoly) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut row: Vec<serde_json::Value> =
                m.exponents().iter().map(|&e| serde_json::Value::from(e)).collect();
            row.push(serde_json::Value::from(format!("{}/{}", c.numer(), c.denom())));
            serde_json::Value::Array(row)
        })
        .collect();
    serde_json::Value::Array(terms)
}

pub(crate) fn poly_from_json(v: &serde_json::Value) -> Result<ParamPoly> {
    use super::monomial::Monomial;
    use super::param::NPARAMS;
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Parse("polynomial must be an array of terms".into()))?;
    let mut terms = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row
            .as_array()
            .filter(|r| r.len() == NPARAMS + 1)
            .ok_or_else(|| Error::Parse(format!("term must have {} entries", NPARAMS + 1)))?;
        let mut exps = [0u16; NPARAMS];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = row[i]
                .as_u64()
                .and_then(|x| u16::try_from(x).ok())
                .ok_or_else(|| Error::Parse("exponent must be a small non-negative integer".into()))?;
        }
        let c = parse_rational(
            row[NPARAMS]
                .as_str()
                .ok_or_else(|| Error::Parse("coefficient must be a \"p/q\" string".into()))?,
        )?;
        terms.push((Monomial::from_exponents(exps), c));
    }
    Ok(Poly::from_terms(terms))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        // a bare power like `q^2` needs no parentheses
        let single_factor = self.den.len() == 1
            && self.den.terms()[0].1.is_one()
            && self.den.terms()[0].0.exponents().iter().filter(|&&e| e > 0).count() <= 1;
        if self.den.is_constant() || single_factor {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_i64(n)
    }
}

impl From<Param> for Scalar {
    fn from(p: Param) -> Self {
        Scalar::param(p)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar::$method(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar::$method(&self, &rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar::$method(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a.add(&b))
    }
}

impl std::iter::Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |a, b| a.mul(&b))
    }
}

// Display for polynomials lives here so that Scalar and Poly print alike.

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &super::monomial::Monomial) -> fmt::Result {
    let mut first = true;
    for p in Param::PRINT_ORDER {
        let e = m.exp(p);
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{p}")?;
        } else {
            write!(f, "{p}^{e}")?;
        }
    }
    Ok(())
}

fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (&'a super::monomial::Monomial, bool, String, bool)>,
{
    // items: (monomial, negative, |coefficient| as text, |coefficient| == 1)
    let mut any = false;
    for (m, neg, abs, unit) in terms {
        if any {
            f.write_str(if neg { " - " } else { " + " })?;
        } else if neg {
            f.write_str("-")?;
        }
        any = true;
        if m.is_one() {
            f.write_str(&abs)?;
        } else {
            if !unit {
                write!(f, "{abs}*")?;
            }
            write_monomial(f, m)?;
        }
    }
    if !any {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for Poly<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms().iter().map(|(m, c)| {
                let a = c.abs();
                let unit = a.is_one();
                (m, c.is_negative(), a.to_string(), unit)
            }),
        )
    }
}

impl fmt::Display for Poly<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms().iter().map(|(m, c)| {
                let a = c.abs();
                let unit = a.is_one();
                (m, c.is_negative(), a.to_string(), unit)
            }),
        )
    }
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
    fn canonical_collapse() {
        let tm1 = p(Param::T) - n(1);
        let x = tm1.div(&tm1).unwrap().mul(&n(1));
        assert!(x.is_one());
        assert!((p(Param::Alpha) + p(Param::Alpha).neg()).is_zero());
        let lam = p(Param::Alpha) * p(Param::Beta) - p(Param::Gamma) * p(Param::Delta);
        let y = tm1.div(&lam).unwrap().mul(&lam);
        assert_eq!(y, tm1);
    }

    #[test]
    fn rational_constants() {
        let half = Scalar::from_ratio(1, 2).unwrap();
        assert!((half.clone() + half.clone()).is_one());
        assert_eq!(Scalar::from_ratio(-2, -4).unwrap(), half);
        assert_eq!(half.to_string(), "1/2");
        assert_eq!(Scalar::from_ratio(3, -6).unwrap().to_string(), "-1/2");
    }

    #[test]
    fn sign_and_content_normalization() {
        // (2a) / (-4b) = -a / (2b)
        let x = (n(2) * p(Param::A)).div(&(n(-4) * p(Param::B))).unwrap();
        assert_eq!(x.to_string(), "-a/(2*b)");
        assert!(x.zden().leading().unwrap().1.is_positive());
    }

    #[test]
    fn henrici_addition() {
        let a = p(Param::A);
        let one = n(1);
        // 1/(a-1) - 1/(a+1) = 2/(a^2-1)
        let x = one.div(&(a.clone() - one.clone())).unwrap()
            - one.div(&(a.clone() + one.clone())).unwrap();
        let y = n(2).div(&(a.clone() * a.clone() - one.clone())).unwrap();
        assert_eq!(x, y);
        // 1/(a(a-1)) - 1/(a(a+1)) = 2/(a(a^2-1))
        let x = one.div(&(a.clone() * (a.clone() - one.clone()))).unwrap()
            - one.div(&(a.clone() * (a.clone() + one.clone()))).unwrap();
        assert_eq!(x, y.div(&a).unwrap());
    }

    #[test]
    fn print_order() {
        let x = p(Param::Beta) * p(Param::T).pow(2).unwrap()
            + p(Param::Gamma) * p(Param::T)
            + p(Param::Beta) * p(Param::Gamma) * p(Param::T)
            + p(Param::Gamma) * p(Param::Delta);
        assert_eq!(x.to_string(), "beta*t^2 + beta*gamma*t + gamma*t + gamma*delta");
    }

    #[test]
    fn json_roundtrip() {
        let x = (p(Param::T) - n(1))
            .div(&(n(3) * p(Param::Alpha) * p(Param::Beta) - p(Param::Gamma)))
            .unwrap()
            .mul(&Scalar::from_ratio(5, 7).unwrap());
        let j = x.to_json();
        assert_eq!(Scalar::from_json(&j).unwrap(), x);
    }
}
