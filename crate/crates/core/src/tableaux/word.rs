//! Words over `{○, ∗, •} = {−1, 0, +1}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A word in `{−1, 0, +1}^N`; `−1 = ○`, `0 = ∗`, `+1 = •`.
///
/// Doubles as an ASEP state and as a composition `μ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Word(Vec<i8>);

impl Word {
    pub fn new(entries: Vec<i8>) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&e| !(-1..=1).contains(&e)) {
            return Err(Error::Parse(format!("word entry {bad} is not in {{-1, 0, 1}}")));
        }
        Ok(Word(entries))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    /// `N`, the number of letters.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `r`, the number of `∗`.
    pub fn zeros(&self) -> usize {
        self.0.iter().filter(|&&e| e == 0).count()
    }

    /// `‖μ‖ = N + r`.
    pub fn norm(&self) -> usize {
        self.len() + self.zeros()
    }

    pub fn get(&self, i: usize) -> i8 {
        self.0[i]
    }

    pub fn concat(parts: &[&Word]) -> Word {
        Word(parts.iter().flat_map(|w| w.0.iter().copied()).collect())
    }

    pub fn push(&mut self, e: i8) {
        assert!((-1..=1).contains(&e));
        self.0.push(e);
    }

    /// The entries at the given positions, in order.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> Word {
        Word(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| keep(*i))
                .map(|(_, &e)| e)
                .collect(),
        )
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Swaps `○` and `•`.
    pub fn negated(&self) -> Word {
        Word(self.0.iter().map(|e| -e).collect())
    }

    /// All `3^n` words of length `n`, in lexicographic order of entries.
    pub fn all(n: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|w| {
                    [-1i8, 0, 1].into_iter().map(move |e| {
                        let mut v = w.0.clone();
                        v.push(e);
                        Word(v)
                    })
                })
                .collect();
        }
        out
    }

    /// All words of length `n` with exactly `r` zeros, in lexicographic order.
    pub fn with_zeros(n: usize, r: usize) -> Vec<Word> {
        Word::all(n).into_iter().filter(|w| w.zeros() == r).collect()
    }

    /// Letter string using `b`, `s`, `o` for `•`, `∗`, `○`.
    pub fn to_letters(&self) -> String {
        self.0
            .iter()
            .map(|&e| match e {
                1 => 'b',
                0 => 's',
                _ => 'o',
            })
            .collect()
    }

    /// Letter string using `+`, `0`, `-`.
    pub fn to_signs(&self) -> String {
        self.0
            .iter()
            .map(|&e| match e {
                1 => '+',
                0 => '0',
                _ => '-',
            })
            .collect()
    }

    /// Letter string using the symbols `•`, `∗`, `○`.
    pub fn to_symbols(&self) -> String {
        self.0
            .iter()
            .map(|&e| match e {
                1 => '•',
                0 => '∗',
                _ => '○',
            })
            .collect()
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `b/s/o`, `+/0/-`, `•/∗/○`, and `1`, `-1`, `0`; spaces,
    /// commas and brackets are ignored. A `-` directly followed by `1` reads
    /// as the single entry `−1`.
    fn from_str(s: &str) -> Result<Word> {
        let chars: Vec<char> = s.chars().collect();
        let mut out = Vec::with_capacity(chars.len());
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            i += 1;
            match c {
                'b' | 'B' | '+' | '1' | '•' | '●' => out.push(1),
                's' | 'S' | '0' | '*' | '∗' => out.push(0),
                'o' | 'O' | '○' | '◦' => out.push(-1),
                '-' | '−' => {
                    if chars.get(i) == Some(&'1') {
                        i += 1;
                    }
                    out.push(-1);
                }
                ' ' | ',' | '(' | ')' | '[' | ']' | '\t' => {}
                _ => return Err(Error::Parse(format!("unexpected character {c:?} in word"))),
            }
        }
        Ok(Word(out))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_letters())
    }
}
