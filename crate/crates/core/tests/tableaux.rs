use std::sync::Arc;

use koornwinder::exactalg::parse_scalar;
use koornwinder::tableaux::*;

/// The filled tableau of type (•,∗,○,∗,•,•,○) drawn with its tile weights.
/// Positions are tile centres, doubled.
const FIG_LETTERS: [((i32, i32), Letter); 9] = [
    ((-1, -1), Letter::Alpha),
    ((-5, -5), Letter::Gamma),
    ((-6, -1), Letter::Gamma),
    ((-9, -7), Letter::Beta),
    ((-9, -9), Letter::Delta),
    ((-10, -3), Letter::Alpha),
    ((-11, -11), Letter::Delta),
    ((-13, -13), Letter::Gamma),
    ((-3, -2), Letter::Beta),
];

const FIG_T_WEIGHTS: [((i32, i32), u16); 12] = [
    ((-8, -3), 1),
    ((-10, -3), 1),
    ((-8, -1), 2),
    ((-3, -2), 1),
    ((-5, -3), 1),
    ((-7, -4), 2),
    ((-7, -6), 1),
    ((-9, -5), 1),
    ((-11, -5), 1),
    ((-13, -5), 1),
    ((-11, -7), 1),
    ((-13, -7), 1),
];

fn word(s: &str) -> Word {
    s.parse().unwrap()
}

fn figure_tableau() -> Tableau {
    let d = Arc::new(RhombicDiagram::new(&word("bsosbbo")).unwrap());
    let mut content = vec![Letter::Empty; d.tile_count()];
    for (c, l) in FIG_LETTERS {
        let tile = d.tile_at(c).unwrap_or_else(|| panic!("no tile centred at {c:?}"));
        content[tile.id] = l;
    }
    Tableau::new(d, content)
}

#[test]
fn figure_tableau_weight() {
    let t = figure_tableau();
    assert!(validate(&t).is_empty(), "{:?}", validate(&t));
    assert_eq!(
        t.weight(),
        parse_scalar("alpha^2*beta^2*delta^2*gamma^3*t^14").unwrap()
    );
    let tw = t.t_weights();
    for tile in &t.diagram.tiles {
        let expected = FIG_T_WEIGHTS
            .iter()
            .find(|(c, _)| *c == tile.centre2())
            .map_or(0, |(_, w)| *w);
        assert_eq!(tw[tile.id], expected, "tile at {:?}", tile.centre());
    }
}

#[test]
fn figure_diagram_shape() {
    let d = RhombicDiagram::new(&word("bsosbbo")).unwrap();
    assert_eq!(d.size(), (7, 2));
    for j in [1, 3, 5, 6, 7] {
        assert_eq!(d.border_tile(j).unwrap().kind, TileKind::Square);
    }
    for j in [2, 4] {
        assert_ne!(d.border_tile(j).unwrap().kind, TileKind::Square);
    }
}

#[test]
fn single_letter_polynomials() {
    assert_eq!(gen_r(&word("b")), parse_scalar("alpha + delta").unwrap());
    assert_eq!(gen_r(&word("o")), parse_scalar("beta + gamma").unwrap());
    assert!(gen_r(&word("s")).is_one());
    let empty = enumerate_tableaux(&word("ss"));
    assert_eq!(empty.len(), 1);
    assert!(empty[0].weight().is_one());
}

#[test]
fn first_term_of_os() {
    let ts = enumerate_tableaux(&word("os"));
    let beta_first = ts
        .iter()
        .find(|t| t.content[0] == Letter::Beta)
        .expect("tableau with β in the border square");
    assert_eq!(beta_first.weight(), parse_scalar("beta*t^2").unwrap());
}

#[test]
fn enumeration_is_deterministic_and_sorted() {
    let a = enumerate_tableaux(&word("bsob"));
    let b = enumerate_tableaux(&word("bsob"));
    assert_eq!(a, b);
    let keys: Vec<Vec<Letter>> = a.iter().map(|t| t.content.clone()).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn r_is_a_nonnegative_integer_polynomial() {
    for w in Word::all(4) {
        let r = gen_r(&w);
        assert!(r.is_integral_polynomial(), "{w}");
        assert!(r.znum().terms().iter().all(|(_, c)| c > &0.into()), "{w}");
    }
}

#[test]
fn z20_is_the_sum_of_four_words() {
    let expect = ["bb", "bo", "ob", "oo"]
        .iter()
        .map(|s| gen_r(&word(s)))
        .fold(koornwinder::exactalg::Scalar::zero(), |a, b| a.add(&b));
    assert_eq!(partition_z(2, 0).unwrap(), expect);
}

#[test]
fn validator_catches_violations() {
    let d = Arc::new(RhombicDiagram::new(&word("bb")).unwrap());
    let empty = Tableau::new(d.clone(), vec![Letter::Empty; d.tile_count()]);
    assert!(!validate(&empty).is_empty());
}

#[test]
fn full_matrix_ansatz_range() {
    let r = verify_matrix_ansatz(3);
    assert!(r.all_passed(), "{r}");
    let r = verify_matrix_ansatz_tilde(3);
    assert!(r.all_passed(), "{r}");
}
