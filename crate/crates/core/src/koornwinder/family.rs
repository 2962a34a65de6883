//! The ASEP polynomials `F_μ` and the qKZ exchange relations.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::orbit::{orbit_of, Orbit};
use crate::error::Result;
use crate::exactalg::{LaurentPoly, Param, Scalar, Substitution};
use crate::hecke::HeckeContext;
use crate::report::Report;
use crate::tableaux::{gen_rtilde, Word};

/// Which parameters the coefficients of a family are written in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Field {
    /// `α, β, γ, δ, t`.
    Greek,
    /// `a, b, c, d, t` through the change of variables.
    Latin,
    /// Rational values of `a, b, c, d, q, t`.
    Point(ParamPoint),
}

/// A rational specialization of the Latin parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamPoint {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
    pub q: BigRational,
    pub t: BigRational,
}

impl ParamPoint {
    /// Random values `p/q` with `1 ≤ p, q ≤ 30`, avoiding the points where
    /// the change of variables or `q` degenerate (`a, b, c, d, t ≠ 1`).
    pub fn random(rng: &mut impl Rng) -> ParamPoint {
        let mut draw = || loop {
            let num = rng.gen_range(1i64..=30);
            let den = rng.gen_range(1i64..=30);
            let v = BigRational::new(num.into(), den.into());
            if v != BigRational::from_integer(1.into()) {
                return v;
            }
        };
        ParamPoint { a: draw(), b: draw(), c: draw(), d: draw(), q: draw(), t: draw() }
    }

    /// Sets `a, b, c, d, q, t`.
    pub fn latin_substitution(&self) -> Substitution {
        let s = |v: &BigRational| Scalar::from_rational(v);
        Substitution::new()
            .with(Param::A, s(&self.a))
            .with(Param::B, s(&self.b))
            .with(Param::C, s(&self.c))
            .with(Param::D, s(&self.d))
            .with(Param::Q, s(&self.q))
            .with(Param::T, s(&self.t))
    }

    /// Sets `α, β, γ, δ` via the change of variables, and `a, b, c, d, q, t`.
    pub fn greek_substitution(&self) -> Result<Substitution> {
        Substitution::change_of_variables().then(&self.latin_substitution())
    }

    pub fn hecke(&self, n: usize) -> HeckeContext {
        let s = |v: &BigRational| Scalar::from_rational(v);
        HeckeContext::with_params(n, s(&self.a), s(&self.b), s(&self.c), s(&self.d), s(&self.q), s(&self.t))
    }

    pub fn describe(&self) -> String {
        format!(
            "a={} b={} c={} d={} q={} t={}",
            self.a, self.b, self.c, self.d, self.q, self.t
        )
    }
}

fn latin_rtilde(w: &Word) -> Result<Scalar> {
    type Memo = RwLock<HashMap<Word, Scalar>>;
    static M: OnceLock<Memo> = OnceLock::new();
    let memo = M.get_or_init(Default::default);
    if let Some(v) = memo.read().expect("memo lock").get(w) {
        return Ok(v.clone());
    }
    let v = Substitution::change_of_variables().apply(&gen_rtilde(w))?;
    Ok(memo.write().expect("memo lock").entry(w.clone()).or_insert(v).clone())
}

/// `F_μ = Σ_{S ⊆ V} R̃(μ|_{S̄}) ∏_{i∈S}(z_i^{μ_i} − 1)`, `V = {i : μ_i ≠ 0}`,
/// with `R̃` supplied by `rtilde`.
pub fn asep_poly_f_with(mu: &Word, rtilde: &mut impl FnMut(&Word) -> Result<Scalar>) -> Result<LaurentPoly> {
    let n = mu.len();
    let v: Vec<usize> = (0..n).filter(|&i| mu.get(i) != 0).collect();
    let one = LaurentPoly::one(n);
    let factors: Vec<LaurentPoly> = v
        .iter()
        .map(|&i| LaurentPoly::var_pow(n, i + 1, mu.get(i) as i32).sub(&one))
        .collect::<Result<_>>()?;
    let mut out = LaurentPoly::zero(n);
    for mask in 0u32..(1 << v.len()) {
        let in_s = |i: usize| v.iter().position(|&j| j == i).is_some_and(|k| mask & (1 << k) != 0);
        let coeff = rtilde(&mu.restrict(|i| !in_s(i)))?;
        if coeff.is_zero() {
            continue;
        }
        let mut term = LaurentPoly::constant(n, coeff);
        for (k, f) in factors.iter().enumerate() {
            if mask & (1 << k) != 0 {
                term = term.mul(f)?;
            }
        }
        out = out.add(&term)?;
    }
    Ok(out)
}

/// `F_μ` over the Greek parameters `α, β, γ, δ, t`.
pub fn asep_poly_f(mu: &Word) -> LaurentPoly {
    asep_poly_f_with(mu, &mut |w| Ok(gen_rtilde(w))).expect("Greek R̃ is always defined")
}

/// `F_μ` with coefficients rewritten in `a, b, c, d, t`.
pub fn asep_poly_f_latin(mu: &Word) -> Result<LaurentPoly> {
    asep_poly_f_with(mu, &mut latin_rtilde)
}

/// `F_μ` at a rational parameter point.
pub fn asep_poly_f_at(mu: &Word, point: &ParamPoint) -> Result<LaurentPoly> {
    let sub = point.greek_substitution()?;
    let mut cache: HashMap<Word, Scalar> = HashMap::new();
    asep_poly_f_with(mu, &mut |w| {
        if let Some(v) = cache.get(w) {
            return Ok(v.clone());
        }
        let v = sub.apply(&gen_rtilde(w))?;
        cache.insert(w.clone(), v.clone());
        Ok(v)
    })
}

/// The polynomials `F_μ` for every member of an orbit.
#[derive(Clone, Debug)]
pub struct QkzFamily {
    pub orbit: Orbit,
    pub polys: BTreeMap<Word, LaurentPoly>,
    pub field: Field,
}

impl QkzFamily {
    pub fn new(lambda: &Word, field: Field) -> Result<QkzFamily> {
        let orbit = orbit_of(lambda)?;
        let polys: Vec<(Word, LaurentPoly)> = orbit
            .members
            .par_iter()
            .map(|mu| {
                let f = match &field {
                    Field::Greek => Ok(asep_poly_f(mu)),
                    Field::Latin => asep_poly_f_latin(mu),
                    Field::Point(p) => asep_poly_f_at(mu, p),
                }?;
                Ok((mu.clone(), f))
            })
            .collect::<Result<_>>()?;
        Ok(QkzFamily { orbit, polys: polys.into_iter().collect(), field })
    }

    pub fn get(&self, mu: &Word) -> &LaurentPoly {
        &self.polys[mu]
    }

    /// The operator context matching this family's field.
    pub fn hecke(&self) -> HeckeContext {
        let n = self.orbit.lambda.len();
        match &self.field {
            Field::Point(p) => p.hecke(n),
            _ => HeckeContext::symbolic(n),
        }
    }

    /// Every applicable exchange relation for every member of the orbit.
    pub fn verify(&self) -> Report {
        let h = self.hecke();
        let n = self.orbit.lambda.len();
        let jobs: Vec<(Word, usize)> = self
            .orbit
            .members
            .iter()
            .flat_map(|mu| (0..=n).map(move |i| (mu.clone(), i)))
            .collect();
        let results: Vec<Option<(String, bool, String)>> =
            jobs.par_iter().map(|(mu, i)| self.check_relation(&h, mu, *i)).collect();
        let mut report = Report::new();
        for (name, ok, detail) in results.into_iter().flatten() {
            report.push(name, ok, detail);
        }
        report
    }

    /// Checks the relation for `T̃_i F_μ`, or `None` when no relation applies.
    fn check_relation(&self, h: &HeckeContext, mu: &Word, i: usize) -> Option<(String, bool, String)> {
        let n = mu.len();
        let f = self.get(mu);
        let e = mu.entries();
        let swapped = |k: usize| {
            let mut v = e.to_vec();
            v.swap(k - 1, k);
            Word::new(v).expect("valid entries")
        };
        let flipped = |k: usize| {
            let mut v = e.to_vec();
            v[k] = -v[k];
            Word::new(v).expect("valid entries")
        };
        let (rhs_name, rhs): (String, Result<LaurentPoly>) = if i == 0 {
            match e[0] {
                x if x < 0 => {
                    let other = flipped(0);
                    let qpow = h.q.pow(x as i32).expect("q is nonzero");
                    (format!("q^{x} F({})", other.to_letters()), Ok(self.get(&other).scale(&qpow)))
                }
                0 => ("t0 F".into(), Ok(f.scale(&h.t0()))),
                _ => return None,
            }
        } else if i < n {
            if e[i - 1] == e[i] {
                ("t F".into(), Ok(f.scale(&h.t)))
            } else if e[i - 1] > e[i] {
                let other = swapped(i);
                (format!("F({})", other.to_letters()), Ok(self.get(&other).clone()))
            } else {
                return None;
            }
        } else {
            match e[n - 1] {
                0 => (format!("t{n} F"), Ok(f.scale(&h.tn()))),
                x if x > 0 => {
                    let other = flipped(n - 1);
                    (format!("F({})", other.to_letters()), Ok(self.get(&other).clone()))
                }
                _ => return None,
            }
        };
        let name = format!("T{i} F({}) = {rhs_name}", mu.to_letters());
        let result = rhs.and_then(|r| Ok(h.noumi_t(i, f)? == r));
        Some(match result {
            Ok(ok) => (name, ok, String::new()),
            Err(err) => (name, false, err.to_string()),
        })
    }
}

/// All qKZ relations for the orbit of `λ`, symbolically in the Latin field.
pub fn verify_qkz(lambda: &Word) -> Result<Report> {
    Ok(QkzFamily::new(lambda, Field::Latin)?.verify())
}

/// Draws parameter points until the family is defined at one of them.
pub fn random_family(lambda: &Word, rng: &mut ChaCha8Rng) -> Result<QkzFamily> {
    loop {
        let p = ParamPoint::random(rng);
        match QkzFamily::new(lambda, Field::Point(p)) {
            Err(crate::Error::SubstitutionSingular) | Err(crate::Error::DivisionByZero) => continue,
            other => return other,
        }
    }
}

/// The qKZ relations at `points` seeded random rational parameter points.
pub fn verify_qkz_numeric(lambda: &Word, points: usize, seed: u64) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new();
    for k in 0..points {
        let fam = random_family(lambda, &mut rng)?;
        let Field::Point(p) = &fam.field else { unreachable!() };
        let tag = format!("point {} ({})", k + 1, p.describe());
        for e in fam.verify().entries {
            report.push(format!("{} at {tag}", e.name), e.passed, e.detail);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_laurent;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn small_examples() {
        assert!(asep_poly_f(&w("00")).as_constant().unwrap().is_one());
        let f10 = asep_poly_f(&w("+0"));
        let expect = LaurentPoly::constant(2, gen_rtilde(&w("bs")))
            .add(&parse_laurent("z1 - 1", 2).unwrap())
            .unwrap();
        assert_eq!(f10, expect);
        let f11 = asep_poly_f(&w("++"));
        let expect = LaurentPoly::constant(2, gen_rtilde(&w("bb")))
            .add(&parse_laurent("z1 + z2 - 2", 2).unwrap().scale(&gen_rtilde(&w("b"))))
            .unwrap()
            .add(&parse_laurent("(z1 - 1)*(z2 - 1)", 2).unwrap())
            .unwrap();
        assert_eq!(f11, expect);
    }

    #[test]
    fn qkz_rank_one_two_sites() {
        for l in ["10", "00", "11"] {
            let r = verify_qkz(&w(l)).unwrap();
            assert!(r.all_passed(), "{r}");
        }
        let r = verify_qkz(&w("10")).unwrap();
        assert!(r.entries.iter().any(|e| e.name == "T1 F(bs) = F(sb)"), "{r}");
    }

    #[test]
    fn qkz_numeric_matches() {
        let r = verify_qkz_numeric(&w("10"), 2, 7).unwrap();
        assert!(r.all_passed(), "{r}");
    }
}
