//! Randomized and symbolic checks of the Hecke relations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::ops::HeckeContext;
use crate::error::Result;
use crate::exactalg::{LaurentPoly, Param, Scalar, Substitution};
use crate::report::Report;

/// Random Laurent polynomial in `n` variables with exponents in
/// `[−bound, bound]`, integer coefficients in `[−bound, bound]` and up to
/// `bound + 1` terms.
pub fn random_laurent(rng: &mut impl Rng, n: usize, bound: i32) -> LaurentPoly {
    let bound = bound.max(1);
    loop {
        let nterms = rng.gen_range(1..=bound as usize + 1);
        let mut f = LaurentPoly::zero(n);
        for _ in 0..nterms {
            let exp: Vec<i32> = (0..n).map(|_| rng.gen_range(-bound..=bound)).collect();
            let mut c = 0;
            while c == 0 {
                c = rng.gen_range(-bound..=bound) as i64;
            }
            f = f
                .add(&LaurentPoly::monomial(exp, Scalar::from_i64(c)))
                .expect("same arity");
        }
        if !f.is_zero() {
            return f;
        }
    }
}

fn random_polys(n: usize, trials: usize, degree_bound: i32, seed: u64) -> Vec<LaurentPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).map(|_| random_laurent(&mut rng, n, degree_bound)).collect()
}

type Check = Box<dyn Fn(&HeckeContext, &LaurentPoly) -> Result<bool> + Sync + Send>;

fn t_word(h: &HeckeContext, word: &[usize], f: &LaurentPoly) -> Result<LaurentPoly> {
    let mut g = f.clone();
    for &i in word.iter().rev() {
        g = h.noumi_t(i, &g)?;
    }
    Ok(g)
}

fn relation_list(n: usize) -> Vec<(String, Check)> {
    let mut out: Vec<(String, Check)> = Vec::new();
    for i in 0..=n {
        out.push((
            format!("quadratic (T{i} - t{i})(T{i} + 1) = 0"),
            Box::new(move |h, f| {
                let ti = h.t_index(i);
                let g = h.noumi_t(i, f)?;
                let gg = h.noumi_t(i, &g)?;
                let lhs = gg.add(&g.scale(&Scalar::one().sub(&ti)))?.sub(&f.scale(&ti))?;
                Ok(lhs.is_zero())
            }),
        ));
    }
    for i in 0..=n {
        for j in i + 2..=n {
            out.push((
                format!("commuting T{i} T{j} = T{j} T{i}"),
                Box::new(move |h, f| Ok(t_word(h, &[i, j], f)? == t_word(h, &[j, i], f)?)),
            ));
        }
    }
    for i in 1..n.saturating_sub(1) {
        let j = i + 1;
        out.push((
            format!("braid T{i} T{j} T{i} = T{j} T{i} T{j}"),
            Box::new(move |h, f| Ok(t_word(h, &[i, j, i], f)? == t_word(h, &[j, i, j], f)?)),
        ));
    }
    out.push((
        "end braid T0 T1 T0 T1 = T1 T0 T1 T0".into(),
        Box::new(|h, f| Ok(t_word(h, &[0, 1, 0, 1], f)? == t_word(h, &[1, 0, 1, 0], f)?)),
    ));
    let m = n - 1;
    out.push((
        format!("end braid T{n} T{m} T{n} T{m} = T{m} T{n} T{m} T{n}"),
        Box::new(move |h, f| Ok(t_word(h, &[n, m, n, m], f)? == t_word(h, &[m, n, m, n], f)?)),
    ));
    out
}

/// Checks the quadratic, commuting, braid and both end-braid relations of
/// the Noumi operators on `trials` seeded random Laurent polynomials, with
/// symbolic parameters `a, b, c, d, q, t`.
pub fn verify_hecke_relations(n: usize, trials: usize, degree_bound: i32, seed: u64) -> Report {
    assert!(n >= 2, "the relations need N ≥ 2");
    let h = HeckeContext::symbolic(n);
    let polys = random_polys(n, trials, degree_bound, seed);
    let rels = relation_list(n);
    let jobs: Vec<(usize, usize)> = (0..rels.len()).flat_map(|r| (0..polys.len()).map(move |p| (r, p))).collect();
    let results: Vec<std::result::Result<bool, String>> = jobs
        .par_iter()
        .map(|&(r, p)| (rels[r].1)(&h, &polys[p]).map_err(|e| e.to_string()))
        .collect();
    let mut report = Report::new();
    for (r, (name, _)) in rels.iter().enumerate() {
        let res = &results[r * polys.len()..(r + 1) * polys.len()];
        let failed = res.iter().filter(|x| !matches!(x, Ok(true))).count();
        let detail = match res.iter().find_map(|x| x.as_ref().err()) {
            Some(e) => format!("{failed} of {} failed: {e}", polys.len()),
            None if failed > 0 => format!("{failed} of {} failed", polys.len()),
            None => format!("{} random polynomials", polys.len()),
        };
        report.push(format!("N={n} {name}"), failed == 0, detail);
    }
    report
}

/// `Y_i Y_j f = Y_j Y_i f` for all `i < j` on seeded random polynomials.
pub fn verify_cherednik_commute(n: usize, trials: usize, degree_bound: i32, seed: u64) -> Report {
    let h = HeckeContext::symbolic(n);
    let polys = random_polys(n, trials, degree_bound, seed ^ 0x5951);
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let jobs: Vec<(usize, usize)> = (0..pairs.len()).flat_map(|k| (0..polys.len()).map(move |p| (k, p))).collect();
    let results: Vec<bool> = jobs
        .par_iter()
        .map(|&(k, p)| {
            let (i, j) = pairs[k];
            let f = &polys[p];
            let ij = h.cherednik_y(j, f).and_then(|g| h.cherednik_y(i, &g));
            let ji = h.cherednik_y(i, f).and_then(|g| h.cherednik_y(j, &g));
            matches!((ij, ji), (Ok(x), Ok(y)) if x == y)
        })
        .collect();
    let mut report = Report::new();
    for (k, (i, j)) in pairs.iter().enumerate() {
        let res = &results[k * polys.len()..(k + 1) * polys.len()];
        let failed = res.iter().filter(|x| !**x).count();
        report.push(
            format!("N={n} Y{i} Y{j} = Y{j} Y{i}"),
            failed == 0,
            format!("{} random polynomials, {failed} failed", polys.len()),
        );
    }
    report
}

/// The operator lemmas for placeholder factors `G`, checked symbolically.
///
/// `G` is an extra variable `z_{N+1}` that the operators never touch, so an
/// identity proved for it holds for every `G` independent of the variables
/// the operator acts on.
pub fn verify_operator_lemmas(n: usize) -> Report {
    let mut report = Report::new();
    let m = n + 1;
    let h = HeckeContext::symbolic(n);
    let z = |i: usize, e: i32| LaurentPoly::var_pow(m, i, e);
    let one = LaurentPoly::one(m);
    let g = z(m, 1);
    let tm1 = LaurentPoly::constant(m, h.t.sub(&Scalar::one()));
    let mut push = |name: String, res: Result<bool>| match res {
        Ok(ok) => report.push(name, ok, ""),
        Err(e) => report.push(name, false, e.to_string()),
    };
    let mul = |a: &LaurentPoly, b: &LaurentPoly| a.mul(b).expect("same arity");
    let sub = |a: &LaurentPoly, b: &LaurentPoly| a.sub(b).expect("same arity");
    for i in 1..n {
        let zi = sub(&z(i, 1), &one);
        let zj = sub(&z(i + 1, 1), &one);
        let zi_inv = sub(&z(i, -1), &one);
        let zj_inv = sub(&z(i + 1, -1), &one);
        let lhs = h.noumi_t(i, &mul(&mul(&zi, &zj_inv), &g));
        push(
            format!("N={n} T{i}((z{i}-1)(1/z{}-1)G) = (z{}-1)(1/z{i}-1)G", i + 1, i + 1),
            lhs.map(|l| l == mul(&mul(&zj, &zi_inv), &g)),
        );
        let lhs = h.noumi_t(i, &mul(&zi, &g));
        push(
            format!("N={n} T{i}((z{i}-1)G) = ((z{}-1)-(t-1))G", i + 1),
            lhs.map(|l| l == mul(&sub(&zj, &tm1), &g)),
        );
        let lhs = h.noumi_t(i, &mul(&zj_inv, &g));
        push(
            format!("N={n} T{i}((1/z{}-1)G) = ((1/z{i}-1)-(t-1))G", i + 1),
            lhs.map(|l| l == mul(&sub(&zi_inv, &tm1), &g)),
        );
        push(
            format!("N={n} T{i}(G) = tG"),
            h.noumi_t(i, &g).map(|l| l == g.scale(&h.t)),
        );
    }

    let cv = Substitution::change_of_variables();
    let one_minus_t = Scalar::one().sub(&Scalar::param(Param::T));
    let over = |p: Param| -> Scalar {
        let v = one_minus_t.div(&Scalar::param(p)).expect("nonzero");
        cv.apply(&v).expect("regular substitution")
    };
    let z1 = sub(&z(1, 1), &one);
    let z1_inv = sub(&z(1, -1), &one);
    let lhs = h.noumi_t(0, &mul(&z1_inv, &g)).map(|l| l.scale(&h.q));
    let rhs = mul(&z1, &g).add(&g.scale(&over(Param::Gamma))).expect("same arity");
    push(format!("N={n} qT0((1/z1-1)G) = (z1-1)G + (1-t)/gamma G"), lhs.map(|l| l == rhs));
    push(format!("N={n} T0(G) = t0 G"), h.noumi_t(0, &g).map(|l| l == g.scale(&h.t0())));
    let zn = sub(&z(n, 1), &one);
    let zn_inv = sub(&z(n, -1), &one);
    let lhs = h.noumi_t(n, &mul(&zn, &g));
    let rhs = mul(&zn_inv, &g).add(&g.scale(&over(Param::Delta))).expect("same arity");
    push(format!("N={n} T{n}((z{n}-1)G) = (1/z{n}-1)G + (1-t)/delta G"), lhs.map(|l| l == rhs));
    push(format!("N={n} T{n}(G) = tN G"), h.noumi_t(n, &g).map(|l| l == g.scale(&h.tn())));
    report
}
