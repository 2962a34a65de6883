//! Multivariate polynomial gcd over the integers.
//!
//! The strategy is layered: monomial and integer content are stripped first,
//! variables that occur in only one argument are eliminated by taking the gcd
//! of coefficients, and a modular degree bound in each variable detects the
//! (very common) coprime case cheaply. Only what survives reaches the
//! subresultant pseudo-remainder sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::monomial::Monomial;
use super::param::NPARAMS;
use super::poly::{Poly, ZPoly};

const PRIME: u64 = (1 << 61) - 1;

/// Gcd of two integer polynomials, primitive with positive leading
/// coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let m = ma.gcd(&mb);
    let a = a.div_monomial(&ma).primitive();
    let b = b.div_monomial(&mb).primitive();
    let g = gcd_stripped(&a, &b);
    g.mul_term(&m, &BigInt::one())
}

/// Gcd of many polynomials, stopping as soon as it reaches 1.
pub fn gcd_many<'a, I: IntoIterator<Item = &'a ZPoly>>(polys: I) -> ZPoly {
    let mut items: Vec<&ZPoly> = polys.into_iter().filter(|p| !p.is_zero()).collect();
    items.sort_by_key(|p| (p.len(), p.total_degree()));
    let mut acc = ZPoly::zero();
    for p in items {
        acc = gcd(&acc, p);
        if acc.is_one() {
            break;
        }
    }
    acc
}

/// Both arguments primitive and free of monomial content.
fn gcd_stripped(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_constant() || b.is_constant() {
        return ZPoly::one();
    }
    if a == b {
        return a.clone();
    }
    let sa = a.support();
    let sb = b.support();
    if sa != sb {
        let only_a = sa & !sb;
        let only_b = sb & !sa;
        let mut parts: Vec<ZPoly> = Vec::new();
        if only_a != 0 {
            parts.extend(a.coefficients_wrt(only_a).into_iter().map(|(_, c)| c));
        } else {
            parts.push(a.clone());
        }
        if only_b != 0 {
            parts.extend(b.coefficients_wrt(only_b).into_iter().map(|(_, c)| c));
        } else {
            parts.push(b.clone());
        }
        return gcd_many(parts.iter());
    }

    let vars: Vec<usize> = (0..NPARAMS).filter(|i| sa & (1 << i) != 0).collect();
    let bounds = degree_bounds(a, b, &vars);

    // A variable the gcd cannot involve: reduce to its coefficients.
    for (k, &x) in vars.iter().enumerate() {
        if bounds[k] == 0 {
            let mask = 1u16 << x;
            let mut parts: Vec<ZPoly> = a.coefficients_wrt(mask).into_iter().map(|(_, c)| c).collect();
            parts.extend(b.coefficients_wrt(mask).into_iter().map(|(_, c)| c));
            return gcd_many(parts.iter());
        }
    }

    // If the bounds match one argument's degrees it is probably the gcd.
    let (small, large) = if b.len() <= a.len() { (b, a) } else { (a, b) };
    if vars
        .iter()
        .enumerate()
        .all(|(k, &x)| bounds[k] == small.degree_in_idx(x))
        && large.div_exact(small).is_some()
    {
        return small.clone();
    }

    // Main variable: smallest maximal degree keeps the PRS short.
    let x = *vars
        .iter()
        .min_by_key(|&&x| (a.degree_in_idx(x).max(b.degree_in_idx(x)), x))
        .expect("nonconstant polynomial has a variable");
    prs_gcd(a, b, x)
}

/// Upper bounds on the degree of the gcd in each variable, from univariate
/// images modulo a prime. A bound is exact enough to certify a zero degree.
fn degree_bounds(a: &ZPoly, b: &ZPoly, vars: &[usize]) -> Vec<u16> {
    let ar = reduce_mod(a);
    let br = reduce_mod(b);
    let mut rng = SplitMix(0x9e37_79b9_7f4a_7c15 ^ (a.len() as u64) << 32 ^ b.len() as u64);
    let mut out = Vec::with_capacity(vars.len());
    for &x in vars {
        let da = a.degree_in_idx(x);
        let db = b.degree_in_idx(x);
        let mut bound = da.min(db);
        for _attempt in 0..4 {
            let mut point = [0u64; NPARAMS];
            for (i, v) in point.iter_mut().enumerate() {
                if i != x {
                    *v = 2 + rng.next() % (PRIME - 3);
                }
            }
            let ua = univariate_image(&ar, x, da, &point);
            let ub = univariate_image(&br, x, db, &point);
            // leading coefficients must survive for the bound to be valid
            if ua[da as usize] == 0 || ub[db as usize] == 0 {
                continue;
            }
            bound = bound.min(uni_gcd_degree(ua, ub));
            break;
        }
        out.push(bound);
    }
    out
}

fn reduce_mod(p: &ZPoly) -> Vec<(Monomial, u64)> {
    let big_p = BigInt::from(PRIME);
    p.terms()
        .iter()
        .map(|(m, c)| {
            let r = c.mod_floor(&big_p);
            (*m, r.to_u64().expect("reduced residue fits"))
        })
        .collect()
}

fn univariate_image(p: &[(Monomial, u64)], x: usize, deg: u16, point: &[u64; NPARAMS]) -> Vec<u64> {
    let mut out = vec![0u64; deg as usize + 1];
    for (m, c) in p {
        let mut v = *c;
        for i in 0..NPARAMS {
            let e = m.exp_idx(i);
            if i != x && e > 0 {
                v = mulmod(v, powmod(point[i], u64::from(e)));
            }
        }
        let slot = &mut out[m.exp_idx(x) as usize];
        *slot = addmod(*slot, v);
    }
    out
}

fn uni_gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> u16 {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = uni_rem(&a, &b);
        a = b;
        b = r;
    }
    (a.len().saturating_sub(1)) as u16
}

fn uni_rem(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = powmod(b[db], PRIME - 2);
    while r.len() > db {
        let top = r.len() - 1;
        let f = mulmod(r[top], inv);
        if f != 0 {
            for j in 0..=db {
                let idx = top - db + j;
                r[idx] = submod(r[idx], mulmod(f, b[j]));
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

#[inline]
fn mulmod(a: u64, b: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(PRIME)) as u64
}

#[inline]
fn addmod(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= PRIME {
        s - PRIME
    } else {
        s
    }
}

#[inline]
fn submod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + PRIME - b
    }
}

fn powmod(mut base: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base);
        }
        base = mulmod(base, base);
        e >>= 1;
    }
    acc
}

struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
}

/// Dense coefficient list in variable `x`; coefficients are free of `x`.
fn to_dense(p: &ZPoly, x: usize) -> Vec<ZPoly> {
    let deg = p.degree_in_idx(x) as usize;
    let mut out = vec![ZPoly::zero(); deg + 1];
    for (k, c) in p.coefficients_wrt(1 << x) {
        out[k.exp_idx(x) as usize] = c;
    }
    out
}

fn from_dense(coeffs: &[ZPoly], x: usize) -> ZPoly {
    let mut terms = Vec::new();
    for (k, c) in coeffs.iter().enumerate() {
        let mut xm = [0u16; NPARAMS];
        xm[x] = k as u16;
        let xm = Monomial::from_exponents(xm);
        terms.extend(c.terms().iter().map(|(m, v)| (m.mul(&xm), v.clone())));
    }
    Poly::from_terms(terms)
}

fn dense_content(p: &[ZPoly]) -> ZPoly {
    gcd_many(p.iter())
}

fn dense_div(p: &[ZPoly], d: &ZPoly) -> Vec<ZPoly> {
    if d.is_one() {
        return p.to_vec();
    }
    p.iter()
        .map(|c| c.div_exact(d).expect("content divides coefficient"))
        .collect()
}

fn pseudo_rem(a: &[ZPoly], b: &[ZPoly]) -> Vec<ZPoly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut steps = 0usize;
    let total = a.len() - b.len() + 1;
    while r.len() > db && !r.is_empty() {
        let top = r.len() - 1;
        let lr = r[top].clone();
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for j in 0..db {
            let idx = top - db + j;
            r[idx] = r[idx].sub(&lr.mul(&b[j]));
        }
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        steps += 1;
    }
    if steps < total {
        let f = lb.pow((total - steps) as u32);
        for c in r.iter_mut() {
            *c = c.mul(&f);
        }
    }
    r
}

/// Subresultant PRS gcd in main variable `x`.
fn prs_gcd(a: &ZPoly, b: &ZPoly, x: usize) -> ZPoly {
    let mut da = to_dense(a, x);
    let mut db = to_dense(b, x);
    if da.len() < db.len() {
        std::mem::swap(&mut da, &mut db);
    }
    let ca = dense_content(&da);
    let cb = dense_content(&db);
    let cont = gcd(&ca, &cb);
    let mut big = dense_div(&da, &ca);
    let mut small = dense_div(&db, &cb);

    let mut g = ZPoly::one();
    let mut h = ZPoly::one();
    let prim = loop {
        let delta = (big.len() - small.len()) as u32;
        let r = pseudo_rem(&big, &small);
        if r.is_empty() {
            // the content is primitive, so integer content may remain
            let c = dense_content(&small);
            break from_dense(&dense_div(&small, &c), x).primitive();
        }
        if r.len() == 1 {
            break ZPoly::one();
        }
        big = small;
        let divisor = g.mul(&h.pow(delta));
        small = dense_div(&r, &divisor);
        g = big.last().expect("nonzero").clone();
        h = if delta == 0 {
            h
        } else {
            let num = g.pow(delta);
            let den = h.pow(delta - 1);
            num.div_exact(&den).expect("subresultant exact division")
        };
    };
    let out = cont.mul(&prim);
    normalize_sign(out)
}

fn normalize_sign(p: ZPoly) -> ZPoly {
    if p.leading().is_some_and(|(_, c)| c.is_negative()) {
        p.neg()
    } else {
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Param;

    fn v(p: Param) -> ZPoly {
        ZPoly::var(p)
    }

    fn c(n: i64) -> ZPoly {
        ZPoly::constant(BigInt::from(n))
    }

    #[test]
    fn common_factor_is_found() {
        let f = v(Param::A).mul(&v(Param::C)).sub(&c(1));
        let g = v(Param::T).sub(&c(1));
        let h = v(Param::Alpha).mul(&v(Param::Beta)).sub(&v(Param::Gamma).mul(&v(Param::Delta)));
        let x = f.mul(&g).mul(&h.pow(2));
        let y = g.mul(&h).mul(&v(Param::Q).add(&c(2)));
        assert_eq!(gcd(&x, &y), g.mul(&h).primitive());
    }

    #[test]
    fn coprime_and_monomial_content() {
        let x = v(Param::A).pow(2).mul(&v(Param::T).add(&c(1)));
        let y = v(Param::A).mul(&v(Param::T).sub(&c(1))).scale(&BigInt::from(6));
        assert_eq!(gcd(&x, &y), v(Param::A));
    }

    #[test]
    fn same_variables_nontrivial() {
        // (t^2 + a t + 1)(t - a) and (t^2 + a t + 1)(t + a + 1)
        let common = v(Param::T).pow(2).add(&v(Param::A).mul(&v(Param::T))).add(&c(1));
        let x = common.mul(&v(Param::T).sub(&v(Param::A)));
        let y = common.mul(&v(Param::T).add(&v(Param::A)).add(&c(1)));
        assert_eq!(gcd(&x, &y), common);
        let z = v(Param::T).pow(3).sub(&v(Param::A).pow(2)).add(&c(5));
        assert_eq!(gcd(&x, &z), ZPoly::one());
    }

    #[test]
    fn result_has_no_integer_content() {
        // α(2αa + t)(2at − 3) and (2αa + t)(2αa + 2α + 3)
        let common = v(Param::Alpha).mul(&v(Param::A)).scale(&BigInt::from(2)).add(&v(Param::T));
        let x = v(Param::Alpha)
            .mul(&common)
            .mul(&v(Param::A).mul(&v(Param::T)).scale(&BigInt::from(2)).sub(&c(3)));
        let y = common.mul(
            &v(Param::Alpha).mul(&v(Param::A)).scale(&BigInt::from(2)).add(&v(Param::Alpha).scale(&BigInt::from(2))).add(&c(3)),
        );
        assert_eq!(gcd(&x, &y), common);
    }
}
