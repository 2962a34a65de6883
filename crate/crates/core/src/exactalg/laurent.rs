//! Laurent polynomials in `z_1, …, z_N` with [`Scalar`] coefficients.

use std::collections::BTreeMap;
use std::fmt;

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Exponent vector of a Laurent monomial.
pub type Exponent = Vec<i32>;

/// A finitely supported map from `ℤ^N` to nonzero [`Scalar`]s.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, Scalar>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::one())
    }

    /// `c · z^exp`; the arity is `exp.len()`.
    pub fn monomial(exp: Exponent, c: Scalar) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { nvars, terms }
    }

    /// `z_i^e` for a 1-based index `i`.
    pub fn var_pow(nvars: usize, i: usize, e: i32) -> Self {
        assert!(i >= 1 && i <= nvars, "variable index out of range");
        let mut exp = vec![0; nvars];
        exp[i - 1] = e;
        Self::monomial(exp, Scalar::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::var_pow(nvars, i, 1)
    }

    /// Builds from arbitrary terms, summing repeats and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Exponent, Scalar)>>(nvars: usize, terms: I) -> Result<Self> {
        let mut out = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::ArityMismatch { expected: nvars, found: e.len() });
            }
            out.add_term(e, &c);
        }
        Ok(out)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Scalar> {
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

    /// The coefficient if this is a constant.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().expect("one term");
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub(crate) fn add_term(&mut self, exp: Exponent, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                let s = v.add(c);
                if s.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(exp, c.clone());
            }
        }
    }

    fn check_arity(&self, other: &LaurentPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch { expected: self.nvars, found: other.nvars });
        }
        Ok(())
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), &c.neg());
        }
        Ok(out)
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_arity(other)?;
        let mut acc: BTreeMap<Exponent, Vec<Scalar>> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                acc.entry(e).or_default().push(ca.mul(cb));
            }
        }
        let terms = acc
            .into_iter()
            .filter_map(|(e, cs)| {
                let s = sum_scalars(cs);
                (!s.is_zero()).then_some((e, s))
            })
            .collect();
        Ok(LaurentPoly { nvars: self.nvars, terms })
    }

    pub fn scale(&self, c: &Scalar) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        if c.is_one() {
            return self.clone();
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v.mul(c))).collect(),
        }
    }

    /// Multiplication by `z^shift`.
    pub fn shift(&self, shift: &[i32]) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(x, y)| x + y).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self).expect("same arity");
        }
        out
    }

    pub fn coefficient_of(&self, exp: &[i32]) -> Result<Scalar> {
        if exp.len() != self.nvars {
            return Err(Error::ArityMismatch { expected: self.nvars, found: exp.len() });
        }
        Ok(self.terms.get(exp).cloned().unwrap_or_else(Scalar::zero))
    }

    /// Applies `f` to every term and re-collects; `f` maps an exponent and
    /// coefficient to a new exponent and coefficient.
    pub fn map_terms(&self, f: impl Fn(&[i32], &Scalar) -> (Exponent, Scalar)) -> LaurentPoly {
        let mut acc: BTreeMap<Exponent, Vec<Scalar>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let (e2, c2) = f(e, c);
            acc.entry(e2).or_default().push(c2);
        }
        let terms = acc
            .into_iter()
            .filter_map(|(e, cs)| {
                let s = sum_scalars(cs);
                (!s.is_zero()).then_some((e, s))
            })
            .collect();
        LaurentPoly { nvars: self.nvars, terms }
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<LaurentPoly> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let v = f(c)?;
            if !v.is_zero() {
                terms.insert(e.clone(), v);
            }
        }
        Ok(LaurentPoly { nvars: self.nvars, terms })
    }

    /// Embeds into a ring with more variables (new ones get exponent 0).
    pub fn extend_vars(&self, nvars: usize) -> LaurentPoly {
        assert!(nvars >= self.nvars);
        LaurentPoly {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2.resize(nvars, 0);
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    /// Evaluates at `z_i = values[i]`.
    pub fn eval(&self, values: &[Scalar]) -> Result<Scalar> {
        if values.len() != self.nvars {
            return Err(Error::ArityMismatch { expected: self.nvars, found: values.len() });
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (x, &k) in values.iter().zip(e) {
                if k != 0 {
                    v = v.mul(&x.pow(k)?);
                }
            }
            parts.push(v);
        }
        Ok(sum_scalars(parts))
    }

    /// Exact quotient in the Laurent ring.
    pub fn divide_exact(&self, den: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_arity(den)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        if den.terms.len() == 1 {
            let (e, c) = den.terms.iter().next().expect("one term");
            let inv = c.inv()?;
            let neg: Vec<i32> = e.iter().map(|x| -x).collect();
            return Ok(self.shift(&neg).scale(&inv));
        }
        let n = self.nvars;
        let mn = self.min_exponents();
        let md = den.min_exponents();
        let neg_mn: Vec<i32> = mn.iter().map(|x| -x).collect();
        let neg_md: Vec<i32> = md.iter().map(|x| -x).collect();
        let mut rem = self.shift(&neg_mn).terms;
        let d = den.shift(&neg_md);
        let (dl_exp, dl_coeff) = d.terms.iter().next_back().expect("nonzero");
        let dl_inv = dl_coeff.inv()?;
        let mut quot: BTreeMap<Exponent, Scalar> = BTreeMap::new();
        while let Some((re, rc)) = rem.pop_last() {
            let qe: Exponent = re.iter().zip(dl_exp).map(|(a, b)| a - b).collect();
            if qe.iter().any(|&x| x < 0) {
                return Err(Error::NotDivisible);
            }
            let qc = rc.mul(&dl_inv);
            for (de, dc) in d.terms.iter().rev().skip(1) {
                let e: Exponent = de.iter().zip(&qe).map(|(a, b)| a + b).collect();
                let prod = dc.mul(&qc);
                match rem.get_mut(&e) {
                    Some(v) => {
                        let s = v.sub(&prod);
                        if s.is_zero() {
                            rem.remove(&e);
                        } else {
                            *v = s;
                        }
                    }
                    None => {
                        rem.insert(e, prod.neg());
                    }
                }
            }
            quot.insert(qe, qc);
        }
        let q = LaurentPoly { nvars: n, terms: quot };
        let offset: Vec<i32> = mn.iter().zip(&md).map(|(a, b)| a - b).collect();
        Ok(q.shift(&offset))
    }

    fn min_exponents(&self) -> Vec<i32> {
        let mut m = vec![i32::MAX; self.nvars];
        for e in self.terms.keys() {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
        }
        m.iter().map(|&x| if x == i32::MAX { 0 } else { x }).collect()
    }

    /// `{"nvars": N, "terms": [{"exp": [...], "coeff": Scalar-JSON}, ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| serde_json::json!({"exp": e, "coeff": c.to_json()}))
            .collect();
        serde_json::json!({"nvars": self.nvars, "terms": terms})
    }

    pub fn from_json(v: &serde_json::Value) -> Result<LaurentPoly> {
        let nvars = v
            .get("nvars")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| Error::Parse("missing \"nvars\"".into()))? as usize;
        let rows = v
            .get("terms")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::Parse("missing \"terms\"".into()))?;
        let mut out = Vec::with_capacity(rows.len());
        for row in rows {
            let exp: Exponent = row
                .get("exp")
                .and_then(|x| x.as_array())
                .ok_or_else(|| Error::Parse("term without \"exp\"".into()))?
                .iter()
                .map(|x| {
                    x.as_i64()
                        .and_then(|k| i32::try_from(k).ok())
                        .ok_or_else(|| Error::Parse("exponent must be an integer".into()))
                })
                .collect::<Result<_>>()?;
            let c = Scalar::from_json(
                row.get("coeff").ok_or_else(|| Error::Parse("term without \"coeff\"".into()))?,
            )?;
            out.push((exp, c));
        }
        LaurentPoly::from_terms(nvars, out)
    }
}

/// Sums scalars pairwise, which keeps intermediate denominators small.
pub(crate) fn sum_scalars(mut v: Vec<Scalar>) -> Scalar {
    match v.len() {
        0 => return Scalar::zero(),
        1 => return v.pop().expect("one element"),
        _ => {}
    }
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
    v.pop().expect("one element")
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let is_const = e.iter().all(|&x| x == 0);
            let simple = c.znum().len() == 1;
            let negative = simple && c.znum().leading_is_negative();
            let abs = if negative { c.neg() } else { c.clone() };
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let coeff_text = if simple { abs.to_string() } else { format!("({abs})") };
            if is_const {
                f.write_str(&coeff_text)?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{coeff_text}*")?;
            }
            let mut first_var = true;
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !first_var {
                    f.write_str("*")?;
                }
                first_var = false;
                if k == 1 {
                    write!(f, "z{}", i + 1)?;
                } else {
                    write!(f, "z{}^{}", i + 1, k)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Param;

    fn z(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var(n, i)
    }

    fn c(n: usize, k: i64) -> LaurentPoly {
        LaurentPoly::constant(n, Scalar::from_i64(k))
    }

    #[test]
    fn product_with_inverse() {
        let a = z(1, 1).sub(&c(1, 1)).unwrap();
        let b = LaurentPoly::var_pow(1, 1, -1).sub(&c(1, 1)).unwrap();
        let p = a.mul(&b).unwrap();
        let expect = z(1, 1)
            .neg()
            .sub(&LaurentPoly::var_pow(1, 1, -1))
            .unwrap()
            .add(&c(1, 2))
            .unwrap();
        assert_eq!(p, expect);
        assert_eq!(p.to_string(), "-z1 + 2 - z1^-1");
    }

    #[test]
    fn exact_division() {
        let diff = z(2, 1).sub(&z(2, 2)).unwrap();
        let num = z(2, 1).pow(2).sub(&z(2, 2).pow(2)).unwrap();
        assert_eq!(num.divide_exact(&diff).unwrap(), z(2, 1).add(&z(2, 2)).unwrap());
        assert!(diff.divide_exact(&diff).unwrap().as_constant().unwrap().is_one());
        let d = z(1, 1).sub(&LaurentPoly::var_pow(1, 1, -1)).unwrap();
        assert!(d.divide_exact(&d).unwrap().as_constant().unwrap().is_one());
        assert_eq!(z(2, 1).divide_exact(&diff), Err(Error::NotDivisible));
    }

    #[test]
    fn division_with_symbolic_coefficients() {
        let q = Scalar::param(Param::Q);
        let den = z(1, 1).sub(&LaurentPoly::var_pow(1, 1, -1).scale(&q)).unwrap();
        let other = z(1, 1).add(&c(1, 3)).unwrap().scale(&Scalar::param(Param::Alpha));
        let num = den.mul(&other).unwrap();
        assert_eq!(num.divide_exact(&den).unwrap(), other);
    }

    #[test]
    fn arity_is_checked() {
        assert!(z(1, 1).add(&z(2, 1)).is_err());
        assert!(z(2, 1).coefficient_of(&[1]).is_err());
    }
}
