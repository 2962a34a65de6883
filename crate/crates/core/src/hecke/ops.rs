//! Weyl group action, Noumi operators and Cherednik elements.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, Param, Scalar};

/// Parameters of the polynomial representation on `N` variables.
///
/// Operators act on Laurent polynomials with at least `N` variables; any
/// further variables are left untouched, which lets them stand for
/// placeholder factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeContext {
    n: usize,
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub d: Scalar,
    pub q: Scalar,
    pub t: Scalar,
}

/// A generator occurring in an operator word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    T(usize),
    TInv(usize),
    S(usize),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::T(i) => write!(f, "T{i}"),
            Generator::TInv(i) => write!(f, "T{i}^-1"),
            Generator::S(i) => write!(f, "s{i}"),
        }
    }
}

/// A product of generators, applied right to left.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct OperatorExpr(pub Vec<Generator>);

impl OperatorExpr {
    /// `Y_i = (T_i⋯T_{N−1})(T_N⋯T_0)(T_1^{−1}⋯T_{i−1}^{−1})`.
    pub fn cherednik(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        let mut w = Vec::new();
        w.extend((i..n).map(Generator::T));
        w.extend((0..=n).rev().map(Generator::T));
        w.extend((1..i).map(Generator::TInv));
        Ok(OperatorExpr(w))
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl HeckeContext {
    /// Fully symbolic parameters `a, b, c, d, q, t`.
    pub fn symbolic(n: usize) -> Self {
        HeckeContext {
            n,
            a: Scalar::param(Param::A),
            b: Scalar::param(Param::B),
            c: Scalar::param(Param::C),
            d: Scalar::param(Param::D),
            q: Scalar::param(Param::Q),
            t: Scalar::param(Param::T),
        }
    }

    pub fn with_params(n: usize, a: Scalar, b: Scalar, c: Scalar, d: Scalar, q: Scalar, t: Scalar) -> Self {
        HeckeContext { n, a, b, c, d, q, t }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `t_0 = −ac/q`.
    pub fn t0(&self) -> Scalar {
        self.a.mul(&self.c).div(&self.q).expect("q is nonzero").neg()
    }

    /// `t_N = −bd`.
    pub fn tn(&self) -> Scalar {
        self.b.mul(&self.d).neg()
    }

    /// `t_i`: `t_0`, `t` or `t_N` depending on `i`.
    pub fn t_index(&self, i: usize) -> Scalar {
        if i == 0 {
            self.t0()
        } else if i == self.n {
            self.tn()
        } else {
            self.t.clone()
        }
    }

    fn check(&self, i: usize, f: &LaurentPoly) -> Result<()> {
        if i > self.n {
            return Err(Error::IndexOutOfRange { index: i, max: self.n });
        }
        if f.nvars() < self.n {
            return Err(Error::ArityMismatch { expected: self.n, found: f.nvars() });
        }
        Ok(())
    }

    fn z(&self, f: &LaurentPoly, i: usize, e: i32) -> LaurentPoly {
        LaurentPoly::var_pow(f.nvars(), i, e)
    }

    fn konst(&self, f: &LaurentPoly, c: Scalar) -> LaurentPoly {
        LaurentPoly::constant(f.nvars(), c)
    }

    /// `s_i f`: swap `z_i, z_{i+1}`; `s_0: z_1 ↦ q/z_1`; `s_N: z_N ↦ 1/z_N`.
    pub fn weyl_act(&self, i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
        self.check(i, f)?;
        let n = self.n;
        if i == 0 {
            let q = &self.q;
            let mut out = LaurentPoly::zero(f.nvars());
            for (e, c) in f.terms() {
                let mut e2 = e.clone();
                e2[0] = -e[0];
                out.add_term(e2, &c.mul(&q.pow(e[0])?));
            }
            Ok(out)
        } else if i == n {
            Ok(f.map_terms(|e, c| {
                let mut e2 = e.to_vec();
                e2[n - 1] = -e[n - 1];
                (e2, c.clone())
            }))
        } else {
            Ok(f.map_terms(|e, c| {
                let mut e2 = e.to_vec();
                e2.swap(i - 1, i);
                (e2, c.clone())
            }))
        }
    }

    /// `(f − s_i f) / D_i` with `D_0 = z_1 − q/z_1`, `D_i = z_i − z_{i+1}`,
    /// `D_N = z_N − 1/z_N`, computed as an exact Laurent division.
    pub fn divided_difference(&self, i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
        let diff = f.sub(&self.weyl_act(i, f)?)?;
        if diff.is_zero() {
            return Ok(diff);
        }
        let den = if i == 0 {
            self.z(f, 1, 1).sub(&self.z(f, 1, -1).scale(&self.q))?
        } else if i == self.n {
            self.z(f, self.n, 1).sub(&self.z(f, self.n, -1))?
        } else {
            self.z(f, i, 1).sub(&self.z(f, i + 1, 1))?
        };
        diff.divide_exact(&den)
    }

    /// The Noumi operator `T̃_i`.
    pub fn noumi_t(&self, i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
        self.check(i, f)?;
        let n = self.n;
        let dd = self.divided_difference(i, f)?;
        if i == 0 {
            // −(ac/q) f − (z_1 − (a+c) + ac z_1^{-1}) · dd
            let ac = self.a.mul(&self.c);
            let coeff = self
                .z(f, 1, 1)
                .sub(&self.konst(f, self.a.add(&self.c)))?
                .add(&self.z(f, 1, -1).scale(&ac))?;
            f.scale(&self.t0()).sub(&coeff.mul(&dd)?)
        } else if i == n {
            // −bd f + (bd z_N − (b+d) + z_N^{-1}) · dd
            let bd = self.b.mul(&self.d);
            let coeff = self
                .z(f, n, 1)
                .scale(&bd)
                .sub(&self.konst(f, self.b.add(&self.d)))?
                .add(&self.z(f, n, -1))?;
            f.scale(&self.tn()).add(&coeff.mul(&dd)?)
        } else {
            // t f − (t z_i − z_{i+1}) · dd
            let coeff = self.z(f, i, 1).scale(&self.t).sub(&self.z(f, i + 1, 1))?;
            f.scale(&self.t).sub(&coeff.mul(&dd)?)
        }
    }

    /// `T̃_i^{−1} = t^{−1}(T̃_i − t + 1)` for `1 ≤ i ≤ N−1`.
    pub fn noumi_t_inverse(&self, i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, max: self.n.saturating_sub(1) });
        }
        let tf = self.noumi_t(i, f)?;
        let one_minus_t = Scalar::one().sub(&self.t);
        let inv_t = self.t.inv()?;
        tf.add(&f.scale(&one_minus_t))?.map_coeffs(|c| Ok(c.mul(&inv_t)))
    }

    /// Applies an operator word, rightmost generator first.
    pub fn apply(&self, expr: &OperatorExpr, f: &LaurentPoly) -> Result<LaurentPoly> {
        let mut g = f.clone();
        for gen in expr.0.iter().rev() {
            g = match *gen {
                Generator::T(i) => self.noumi_t(i, &g)?,
                Generator::TInv(i) => self.noumi_t_inverse(i, &g)?,
                Generator::S(i) => self.weyl_act(i, &g)?,
            };
        }
        Ok(g)
    }

    /// The Cherednik element `Y_i` applied to `f`.
    pub fn cherednik_y(&self, i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
        self.apply(&OperatorExpr::cherednik(self.n, i)?, f)
    }
}
