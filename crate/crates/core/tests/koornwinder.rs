use koornwinder::exactalg::{parse_laurent, parse_scalar, LaurentPoly};
use koornwinder::koornwinder::*;
use koornwinder::tableaux::{gen_rtilde, partition_ztilde, Word};

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

#[test]
fn orbit_examples() {
    let o = orbit_of(&w("10")).unwrap();
    assert_eq!(o.members.len(), 4);
    assert_eq!(o.antidominant, w("-0"));
    assert_eq!(orbit_of(&w("00")).unwrap().members, vec![w("00")]);
    let o = orbit_of(&w("110")).unwrap();
    assert_eq!(o.members.len(), 12);
    assert!(o.members.iter().all(|m| m.zeros() == 1));
}

#[test]
fn f_examples() {
    assert!(asep_poly_f(&w("00")).as_constant().unwrap().is_one());
    let expect = LaurentPoly::constant(2, gen_rtilde(&w("bs"))).add(&parse_laurent("z1 - 1", 2).unwrap()).unwrap();
    assert_eq!(asep_poly_f(&w("+0")), expect);
}

#[test]
fn qkz_examples_by_name() {
    let r = verify_qkz(&w("10")).unwrap();
    assert!(r.entries.iter().any(|e| e.name == "T1 F(bs) = F(sb)" && e.passed));
    let r = verify_qkz(&w("00")).unwrap();
    assert!(r.entries.iter().any(|e| e.name == "T0 F(ss) = t0 F" && e.passed));
    assert!(r.entries.iter().any(|e| e.name == "T2 F(ss) = t2 F" && e.passed));
    let r = verify_qkz(&w("11")).unwrap();
    assert!(r.entries.iter().any(|e| e.name == "T1 F(bb) = t F" && e.passed));
    assert!(r.entries.iter().any(|e| e.name == "T0 F(ob) = q^-1 F(bb)" && e.passed));
}

#[test]
fn qkz_symbolic_up_to_three_sites() {
    for n in 1..=3 {
        for r in 0..=n {
            let rep = verify_qkz(&rank_one_partition(n, r).unwrap()).unwrap();
            assert!(rep.all_passed(), "{rep}");
        }
    }
}

#[test]
fn qkz_numeric_four_sites() {
    for r in 0..=4 {
        let rep = verify_qkz_numeric(&rank_one_partition(4, r).unwrap(), 3, 11).unwrap();
        assert!(rep.all_passed(), "{rep}");
    }
}

#[test]
fn eigen_examples() {
    let d = eigen_data(&w("--")).unwrap();
    assert_eq!(d.rho, vec![0, -1]);
    assert_eq!(d.y[0], parse_scalar("t/q").unwrap());
    assert_eq!(d.y[1], parse_scalar("1/(q*t)").unwrap());
    let d = eigen_data(&w("-0")).unwrap();
    assert_eq!(d.y[0], parse_scalar("1/q").unwrap());
    let d = eigen_data(&w("000")).unwrap();
    for i in 1..=3 {
        let t0tn = parse_scalar("a*b*c*d/q").unwrap();
        let tpow = parse_scalar("t").unwrap().pow(6 - 2 * i as i32).unwrap();
        assert_eq!(d.y[i - 1], t0tn.mul(&tpow));
    }
    for n in 1..=3 {
        for r in 0..=n {
            let delta = orbit_of(&rank_one_partition(n, r).unwrap()).unwrap().antidominant;
            let rep = verify_eigen(&delta).unwrap();
            assert!(rep.all_passed(), "{rep}");
        }
    }
}

#[test]
fn k_examples() {
    let k = koornwinder_k(&w("11")).unwrap();
    let sum = ["++", "+-", "-+", "--"]
        .iter()
        .fold(LaurentPoly::zero(2), |a, m| a.add(&asep_poly_f(&w(m))).unwrap());
    assert_eq!(k, sum);
    assert!(is_symmetric(&k));
    assert!(koornwinder_k(&w("000")).unwrap().as_constant().unwrap().is_one());
    let e = elementary_y(2);
    let via = LaurentPoly::constant(2, partition_ztilde(2, 0).unwrap())
        .add(&e[1].scale(&partition_ztilde(1, 0).unwrap()))
        .unwrap()
        .add(&e[2])
        .unwrap();
    assert_eq!(koornwinder_k_via_ek(2, 0).unwrap(), via);
    assert_eq!(via, k);
}

#[test]
fn expansions_and_q1() {
    let r = verify_via_ek(4);
    assert!(r.all_passed(), "{r}");
    let cases: Vec<(Vec<usize>, usize)> = [vec![2], vec![1, 1], vec![2, 1], vec![2, 2]]
        .into_iter()
        .flat_map(|l| [2, 3].map(|n| (l.clone(), n)))
        .collect();
    let r = verify_q1(&cases);
    assert!(r.all_passed(), "{r}");
}

#[test]
fn order_examples() {
    assert!(order_preceq(&[0, 0], &[-2, 0]).unwrap());
    assert!(order_preceq(&[1, 1], &[-2, 0]).unwrap());
    assert!(order_preceq(&[1, -1, 0], &[1, -1, 0]).unwrap());
    assert!(!order_preceq(&[-2, 0], &[1, 1]).unwrap());
}

#[test]
fn structural_invariants() {
    let r = verify_invariants(4);
    assert!(r.all_passed(), "{r}");
}
