//! Rhombic diagrams and their distinguished tilings.
//!
//! The southeast border of `Γ(μ)` is read off the word (a south step then a
//! west step for `○` or `•`, a southwest step for `∗`); the northwest border
//! is `W^{N−r} D^r S^{N−r}`. Tiles are produced by exchanging adjacent border
//! steps one at a time, which sweeps the southeast border onto the northwest
//! one. All south steps are first pushed to the end (creating squares and
//! vertical rhombi), then diagonal steps are pushed past west steps
//! (creating horizontal rhombi); this order yields the distinguished tiling.

use super::word::Word;
use crate::error::{Error, Result};

/// Lattice point; `x` grows east, `y` grows north.
pub type Point = (i32, i32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TileKind {
    Square,
    HorizontalRhombus,
    VerticalRhombus,
}

impl TileKind {
    pub fn name(self) -> &'static str {
        match self {
            TileKind::Square => "square",
            TileKind::HorizontalRhombus => "horizontal-rhombus",
            TileKind::VerticalRhombus => "vertical-rhombus",
        }
    }
}

/// Position of a tile within a strip: `(strip id, index)` where index 0 is
/// the tile on the southeast border (east end of a west-strip, bottom of a
/// north-strip).
pub type StripSlot = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tile {
    pub id: usize,
    pub kind: TileKind,
    /// Corners in boundary order.
    pub vertices: [Point; 4],
    /// `1..=N` for the tile on the southeast border at letter `j`.
    pub label: Option<usize>,
    pub west_strip: Option<StripSlot>,
    pub north_strip: Option<StripSlot>,
}

impl Tile {
    /// Centre of the tile, doubled so that it stays integral.
    pub fn centre2(&self) -> Point {
        let (x, y) = self
            .vertices
            .iter()
            .fold((0, 0), |(ax, ay), (x, y)| (ax + x, ay + y));
        (x / 2, y / 2)
    }

    pub fn centre(&self) -> (f64, f64) {
        let (x, y) = self.centre2();
        (f64::from(x) / 2.0, f64::from(y) / 2.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Step {
    S,
    W,
    D,
}

impl Step {
    fn vector(self) -> Point {
        match self {
            Step::S => (0, -1),
            Step::W => (-1, 0),
            Step::D => (-1, -1),
        }
    }
}

/// The tiled diagram `Γ(μ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhombicDiagram {
    pub word: Word,
    pub tiles: Vec<Tile>,
    /// Tile ids per west-strip, from east to west.
    pub west_strips: Vec<Vec<usize>>,
    /// Tile ids per north-strip, from bottom to top.
    pub north_strips: Vec<Vec<usize>>,
}

impl RhombicDiagram {
    pub fn new(word: &Word) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Self::build(word))
    }

    /// Also accepts the empty word, giving an empty diagram.
    pub(crate) fn build(word: &Word) -> Self {
        // (step, letter index, strip id)
        let mut path: Vec<(Step, usize, usize)> = Vec::new();
        let mut strip_of_letter = vec![usize::MAX; word.len()];
        let mut nstrips = 0;
        for (j, &e) in word.entries().iter().enumerate() {
            if e == 0 {
                path.push((Step::D, j, usize::MAX));
            } else {
                strip_of_letter[j] = nstrips;
                path.push((Step::S, j, nstrips));
                path.push((Step::W, j, nstrips));
                nstrips += 1;
            }
        }
        let mut tiles: Vec<Tile> = Vec::new();
        let mut west_strips: Vec<Vec<usize>> = vec![Vec::new(); nstrips];
        let mut north_strips: Vec<Vec<usize>> = vec![Vec::new(); nstrips];
        let mut labelled = vec![false; word.len()];

        let mut flip = |path: &mut Vec<(Step, usize, usize)>, k: usize| {
            let origin = path[..k].iter().fold((0, 0), |(x, y), (s, _, _)| {
                let (dx, dy) = s.vector();
                (x + dx, y + dy)
            });
            let (e1, l1, s1) = path[k];
            let (e2, l2, s2) = path[k + 1];
            let (v1, v2) = (e1.vector(), e2.vector());
            let vertices = [
                origin,
                (origin.0 + v1.0, origin.1 + v1.1),
                (origin.0 + v1.0 + v2.0, origin.1 + v1.1 + v2.1),
                (origin.0 + v2.0, origin.1 + v2.1),
            ];
            let id = tiles.len();
            let kind = match (e1, e2) {
                (Step::S, Step::W) => TileKind::Square,
                (Step::S, Step::D) => TileKind::VerticalRhombus,
                (Step::D, Step::W) => TileKind::HorizontalRhombus,
                _ => unreachable!("only S·W, S·D and D·W are exchanged"),
            };
            let mut west = None;
            let mut north = None;
            if e1 == Step::S {
                west = Some((s1, west_strips[s1].len()));
                west_strips[s1].push(id);
            }
            if e2 == Step::W {
                north = Some((s2, north_strips[s2].len()));
                north_strips[s2].push(id);
            }
            // The first tile touching a letter's south (or diagonal) step
            // sits on the southeast border.
            let border_letter = match e1 {
                Step::S | Step::D => Some(l1),
                Step::W => None,
            }
            .filter(|&l| !labelled[l])
            .or_else(|| (e2 == Step::D && !labelled[l2]).then_some(l2));
            let label = border_letter.map(|l| {
                labelled[l] = true;
                l + 1
            });
            tiles.push(Tile { id, kind, vertices, label, west_strip: west, north_strip: north });
            path.swap(k, k + 1);
        };

        loop {
            let k = path
                .windows(2)
                .position(|w| w[0].0 == Step::S && matches!(w[1].0, Step::W | Step::D));
            match k {
                Some(k) => flip(&mut path, k),
                None => break,
            }
        }
        loop {
            let k = path.windows(2).position(|w| w[0].0 == Step::D && w[1].0 == Step::W);
            match k {
                Some(k) => flip(&mut path, k),
                None => break,
            }
        }
        RhombicDiagram { word: word.clone(), tiles, west_strips, north_strips }
    }

    /// `(N, r)`.
    pub fn size(&self) -> (usize, usize) {
        (self.word.len(), self.word.zeros())
    }

    pub fn tile_count(&self) -> usize {
        self.tiles.len()
    }

    /// The tile carrying border label `j` (1-based).
    pub fn border_tile(&self, j: usize) -> Option<&Tile> {
        self.tiles.iter().find(|t| t.label == Some(j))
    }

    pub fn count_kind(&self, kind: TileKind) -> usize {
        self.tiles.iter().filter(|t| t.kind == kind).count()
    }

    /// Tile whose doubled centre is `c2`.
    pub fn tile_at(&self, c2: Point) -> Option<&Tile> {
        self.tiles.iter().find(|t| t.centre2() == c2)
    }
}
