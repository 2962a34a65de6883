//! Rhombic staircase tableaux: enumeration, weights and an independent
//! validator.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use super::diagram::{Point, RhombicDiagram, TileKind};
use super::word::Word;
use crate::exactalg::{Monomial, Param, Scalar, ZPoly, NPARAMS};

/// Content of a tile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Empty,
    Alpha,
    Beta,
    Gamma,
    Delta,
}

impl Letter {
    pub const ALL: [Letter; 5] = [Letter::Empty, Letter::Alpha, Letter::Beta, Letter::Gamma, Letter::Delta];

    pub fn name(self) -> &'static str {
        match self {
            Letter::Empty => "",
            Letter::Alpha => "alpha",
            Letter::Beta => "beta",
            Letter::Gamma => "gamma",
            Letter::Delta => "delta",
        }
    }

    pub fn param(self) -> Option<Param> {
        match self {
            Letter::Empty => None,
            Letter::Alpha => Some(Param::Alpha),
            Letter::Beta => Some(Param::Beta),
            Letter::Gamma => Some(Param::Gamma),
            Letter::Delta => Some(Param::Delta),
        }
    }

    /// Blocks the rest of its north-strip.
    fn blocks_north(self) -> bool {
        matches!(self, Letter::Alpha | Letter::Gamma)
    }

    /// Blocks the rest of its west-strip.
    fn blocks_west(self) -> bool {
        matches!(self, Letter::Beta | Letter::Delta)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if *self == Letter::Empty { "-" } else { self.name() })
    }
}

/// Exponents of `α, β, γ, δ, t` in a tableau weight.
pub type WeightExponents = [u16; 5];

/// Power of `t` earned by a tile, given its content and the nearest nonempty
/// tile to its right (west-strip) and below (north-strip).
fn t_power(kind: TileKind, letter: Letter, right: Option<Letter>, below: Option<Letter>) -> u16 {
    use Letter::*;
    match (kind, letter) {
        (TileKind::HorizontalRhombus, Alpha) => 1,
        (TileKind::VerticalRhombus, Beta) => 1,
        (TileKind::Square, Empty) => {
            let sees_ag = matches!(right, Some(Alpha | Gamma));
            let sees_ad_below = matches!(below, Some(Alpha | Delta));
            if (sees_ag && sees_ad_below) || right == Some(Beta) {
                1
            } else {
                0
            }
        }
        (TileKind::VerticalRhombus, Empty) => match right {
            Some(Beta) => 2,
            Some(Alpha | Gamma) => 1,
            _ => 0,
        },
        (TileKind::HorizontalRhombus, Empty) => match below {
            Some(Alpha) => 2,
            Some(Beta | Delta) => 1,
            _ => 0,
        },
        _ => 0,
    }
}

fn letter_slot(l: Letter) -> Option<usize> {
    match l {
        Letter::Empty => None,
        Letter::Alpha => Some(0),
        Letter::Beta => Some(1),
        Letter::Gamma => Some(2),
        Letter::Delta => Some(3),
    }
}

/// Converts weight exponents to a monomial in the parameter alphabet.
pub fn weight_monomial(e: &WeightExponents) -> Monomial {
    let mut exps = [0u16; NPARAMS];
    exps[Param::Alpha.index()] = e[0];
    exps[Param::Beta.index()] = e[1];
    exps[Param::Gamma.index()] = e[2];
    exps[Param::Delta.index()] = e[3];
    exps[Param::T.index()] = e[4];
    Monomial::from_exponents(exps)
}

/// A filled diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    pub diagram: Arc<RhombicDiagram>,
    /// Letter per tile id.
    pub content: Vec<Letter>,
}

impl Tableau {
    pub fn new(diagram: Arc<RhombicDiagram>, content: Vec<Letter>) -> Self {
        assert_eq!(diagram.tiles.len(), content.len());
        Tableau { diagram, content }
    }

    /// Per-tile powers of `t`.
    pub fn t_weights(&self) -> Vec<u16> {
        let d = &self.diagram;
        let mut last_west: Vec<Option<Letter>> = vec![None; d.west_strips.len()];
        let mut last_north: Vec<Option<Letter>> = vec![None; d.north_strips.len()];
        // Tiles are created in strip order, so scanning by id sees every
        // strip from its border end outward.
        let mut out = Vec::with_capacity(d.tiles.len());
        for tile in &d.tiles {
            let letter = self.content[tile.id];
            let right = tile.west_strip.and_then(|(s, _)| last_west[s]);
            let below = tile.north_strip.and_then(|(s, _)| last_north[s]);
            out.push(t_power(tile.kind, letter, right, below));
            if letter != Letter::Empty {
                if let Some((s, _)) = tile.west_strip {
                    last_west[s] = Some(letter);
                }
                if let Some((s, _)) = tile.north_strip {
                    last_north[s] = Some(letter);
                }
            }
        }
        out
    }

    pub fn weight_exponents(&self) -> WeightExponents {
        let mut e = [0u16; 5];
        for &l in &self.content {
            if let Some(k) = letter_slot(l) {
                e[k] += 1;
            }
        }
        e[4] = self.t_weights().iter().sum();
        e
    }

    /// `wt(T)` as a scalar.
    pub fn weight(&self) -> Scalar {
        Scalar::from_zpoly(ZPoly::monomial(weight_monomial(&self.weight_exponents()), BigInt::from(1)))
    }

    /// `{"word", "tiles": [{"id", "kind", "label", "letter"}], "weight"}`.
    pub fn to_json(&self) -> serde_json::Value {
        let tiles: Vec<serde_json::Value> = self
            .diagram
            .tiles
            .iter()
            .map(|t| {
                let (x, y) = t.centre();
                serde_json::json!({
                    "id": t.id,
                    "kind": t.kind.name(),
                    "label": t.label,
                    "letter": self.content[t.id].name(),
                    "centre": [x, y],
                })
            })
            .collect();
        serde_json::json!({
            "word": self.diagram.word.to_letters(),
            "tiles": tiles,
            "weight": self.weight().to_json(),
        })
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.content.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}] weight {}", letters.join(" "), self.weight())
    }
}

/// Allowed letters for a tile, in enumeration order.
fn allowed_letters(kind: TileKind, border: Option<i8>) -> &'static [Letter] {
    use Letter::*;
    match (kind, border) {
        (TileKind::Square, Some(1)) => &[Alpha, Delta],
        (TileKind::Square, Some(-1)) => &[Beta, Gamma],
        (TileKind::Square, _) => &[Empty, Alpha, Beta, Gamma, Delta],
        (TileKind::HorizontalRhombus, _) => &[Empty, Alpha, Gamma],
        (TileKind::VerticalRhombus, _) => &[Empty, Beta, Delta],
    }
}

struct Search<'a, F: FnMut(&[Letter], &WeightExponents)> {
    d: &'a RhombicDiagram,
    allowed: Vec<&'static [Letter]>,
    content: Vec<Letter>,
    last_west: Vec<Option<Letter>>,
    last_north: Vec<Option<Letter>>,
    exps: WeightExponents,
    visit: F,
}

impl<F: FnMut(&[Letter], &WeightExponents)> Search<'_, F> {
    fn go(&mut self, i: usize) {
        if i == self.d.tiles.len() {
            (self.visit)(&self.content, &self.exps);
            return;
        }
        let tile = &self.d.tiles[i];
        let right = tile.west_strip.and_then(|(s, _)| self.last_west[s]);
        let below = tile.north_strip.and_then(|(s, _)| self.last_north[s]);
        let forced_empty = below.is_some_and(Letter::blocks_north) || right.is_some_and(Letter::blocks_west);
        for &letter in self.allowed[i] {
            if forced_empty && letter != Letter::Empty {
                continue;
            }
            let tp = t_power(tile.kind, letter, right, below);
            let slot = letter_slot(letter);
            self.content[i] = letter;
            self.exps[4] += tp;
            if let Some(k) = slot {
                self.exps[k] += 1;
            }
            let saved = (
                tile.west_strip.map(|(s, _)| self.last_west[s]),
                tile.north_strip.map(|(s, _)| self.last_north[s]),
            );
            if letter != Letter::Empty {
                if let Some((s, _)) = tile.west_strip {
                    self.last_west[s] = Some(letter);
                }
                if let Some((s, _)) = tile.north_strip {
                    self.last_north[s] = Some(letter);
                }
            }
            self.go(i + 1);
            if let (Some((s, _)), Some(v)) = (tile.west_strip, saved.0) {
                self.last_west[s] = v;
            }
            if let (Some((s, _)), Some(v)) = (tile.north_strip, saved.1) {
                self.last_north[s] = v;
            }
            if let Some(k) = slot {
                self.exps[k] -= 1;
            }
            self.exps[4] -= tp;
        }
        self.content[i] = Letter::Empty;
    }
}

/// Calls `visit` with the content and weight exponents of every tableau of
/// the diagram, in lexicographic order of (tile id, letter).
pub fn for_each_tableau<F: FnMut(&[Letter], &WeightExponents)>(d: &RhombicDiagram, visit: F) {
    let allowed = d
        .tiles
        .iter()
        .map(|t| allowed_letters(t.kind, t.label.map(|j| d.word.get(j - 1))))
        .collect();
    let mut s = Search {
        d,
        allowed,
        content: vec![Letter::Empty; d.tiles.len()],
        last_west: vec![None; d.west_strips.len()],
        last_north: vec![None; d.north_strips.len()],
        exps: [0; 5],
        visit,
    };
    s.go(0);
}

/// All tableaux of type `word`.
pub fn enumerate_tableaux(word: &Word) -> Vec<Tableau> {
    let d = Arc::new(RhombicDiagram::build(word));
    let mut out = Vec::new();
    for_each_tableau(&d, |content, _| out.push(Tableau::new(d.clone(), content.to_vec())));
    out
}

/// Number of tableaux of type `word`.
pub fn count_tableaux(word: &Word) -> u64 {
    let d = RhombicDiagram::build(word);
    let mut n = 0u64;
    for_each_tableau(&d, |_, _| n += 1);
    n
}

/// Weight multiset of all tableaux of type `word`.
pub fn weight_counts(word: &Word) -> HashMap<WeightExponents, u64> {
    let d = RhombicDiagram::build(word);
    let mut acc: HashMap<WeightExponents, u64> = HashMap::new();
    for_each_tableau(&d, |_, e| *acc.entry(*e).or_insert(0) += 1);
    acc
}

/// Checks a tableau against the definition using strips recomputed from the
/// tile geometry alone. Returns the list of violations.
pub fn validate(t: &Tableau) -> Vec<String> {
    let d = &t.diagram;
    let mut problems = Vec::new();
    let n = d.tiles.len();

    // Edges as unordered point pairs.
    let norm = |a: Point, b: Point| if a <= b { (a, b) } else { (b, a) };
    let mut vertical: BTreeMap<(Point, Point), Vec<usize>> = BTreeMap::new();
    let mut horizontal: BTreeMap<(Point, Point), Vec<usize>> = BTreeMap::new();
    for tile in &d.tiles {
        for k in 0..4 {
            let a = tile.vertices[k];
            let b = tile.vertices[(k + 1) % 4];
            if a.0 == b.0 {
                vertical.entry(norm(a, b)).or_default().push(tile.id);
            } else if a.1 == b.1 {
                horizontal.entry(norm(a, b)).or_default().push(tile.id);
            }
        }
    }
    let west = components(n, &vertical, |id| d.tiles[id].kind != TileKind::HorizontalRhombus);
    let north = components(n, &horizontal, |id| d.tiles[id].kind != TileKind::VerticalRhombus);

    // Order strips geometrically: west-strips east to west, north-strips
    // bottom to top.
    let order_by = |mut strip: Vec<usize>, key: &dyn Fn(Point) -> i32| {
        strip.sort_by_key(|&id| key(d.tiles[id].centre2()));
        strip
    };
    let west: Vec<Vec<usize>> = west.into_iter().map(|s| order_by(s, &|c| -c.0)).collect();
    let north: Vec<Vec<usize>> = north.into_iter().map(|s| order_by(s, &|c| c.1)).collect();

    // Distinguished tiling: squares below horizontal rhombi in north-strips.
    for strip in &north {
        let kinds: Vec<TileKind> = strip.iter().map(|&id| d.tiles[id].kind).collect();
        if let Some(p) = kinds.iter().position(|&k| k == TileKind::HorizontalRhombus) {
            if kinds[p..].contains(&TileKind::Square) {
                problems.push(format!("north-strip {strip:?} has a square above a horizontal rhombus"));
            }
        }
    }

    // Border squares.
    for tile in &d.tiles {
        let letter = t.content[tile.id];
        if let Some(j) = tile.label {
            let w = d.word.get(j - 1);
            let square = tile.kind == TileKind::Square;
            if square != (w != 0) {
                problems.push(format!("border tile {j} has the wrong kind"));
            }
            match w {
                1 if !matches!(letter, Letter::Alpha | Letter::Delta) => {
                    problems.push(format!("border square {j} for • holds {letter}"))
                }
                -1 if !matches!(letter, Letter::Beta | Letter::Gamma) => {
                    problems.push(format!("border square {j} for ○ holds {letter}"))
                }
                _ => {}
            }
        }
        let ok = match tile.kind {
            TileKind::HorizontalRhombus => matches!(letter, Letter::Empty | Letter::Alpha | Letter::Gamma),
            TileKind::VerticalRhombus => matches!(letter, Letter::Empty | Letter::Beta | Letter::Delta),
            TileKind::Square => true,
        };
        if !ok {
            problems.push(format!("tile {} ({}) holds {letter}", tile.id, tile.kind.name()));
        }
    }
    // With no square at all there is no tile to label.
    let expected_labels = if d.word.zeros() == d.word.len() { 0 } else { d.word.len() };
    if d.tiles.iter().filter(|x| x.label.is_some()).count() != expected_labels {
        problems.push("border labels do not cover the word".into());
    }

    // Emptiness beyond α/γ (north) and β/δ (west).
    for strip in &north {
        if let Some(p) = strip.iter().position(|&id| t.content[id].blocks_north()) {
            if strip[p + 1..].iter().any(|&id| t.content[id] != Letter::Empty) {
                problems.push(format!("north-strip {strip:?} is not empty above α/γ"));
            }
        }
    }
    for strip in &west {
        if let Some(p) = strip.iter().position(|&id| t.content[id].blocks_west()) {
            if strip[p + 1..].iter().any(|&id| t.content[id] != Letter::Empty) {
                problems.push(format!("west-strip {strip:?} is not empty left of β/δ"));
            }
        }
    }

    // Geometric strips must agree with the constructed ones.
    let mut built_west = d.west_strips.clone();
    let mut built_north = d.north_strips.clone();
    let mut geo_west = west;
    let mut geo_north = north;
    built_west.sort();
    built_north.sort();
    geo_west.sort();
    geo_north.sort();
    if built_west != geo_west {
        problems.push("west-strips disagree with tile geometry".into());
    }
    if built_north != geo_north {
        problems.push("north-strips disagree with tile geometry".into());
    }
    problems
}

/// Connected components of tiles glued along the given edges.
fn components(
    n: usize,
    edges: &BTreeMap<(Point, Point), Vec<usize>>,
    member: impl Fn(usize) -> bool,
) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for ids in edges.values() {
        for w in ids.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a] = b;
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for id in 0..n {
        if member(id) {
            let r = find(&mut parent, id);
            groups.entry(r).or_default().push(id);
        }
    }
    groups.into_values().collect()
}
