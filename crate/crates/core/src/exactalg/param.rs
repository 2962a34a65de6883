use std::fmt;

/// Number of symbols in the parameter alphabet.
pub const NPARAMS: usize = 10;

/// The fixed, ordered parameter alphabet `a, b, c, d, q, t, α, β, γ, δ`.
///
/// The Latin letters parameterize the Hecke operators, the Greek letters the
/// ASEP boundary rates. The two families are independent symbols and only
/// meet through an explicit [`Substitution`](super::Substitution).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    A,
    B,
    C,
    D,
    Q,
    T,
    Alpha,
    Beta,
    Gamma,
    Delta,
}

impl Param {
    pub const ALL: [Param; NPARAMS] = [
        Param::A,
        Param::B,
        Param::C,
        Param::D,
        Param::Q,
        Param::T,
        Param::Alpha,
        Param::Beta,
        Param::Gamma,
        Param::Delta,
    ];

    /// Order in which factors are written inside a printed monomial.
    pub(crate) const PRINT_ORDER: [Param; NPARAMS] = [
        Param::Alpha,
        Param::Beta,
        Param::Gamma,
        Param::Delta,
        Param::A,
        Param::B,
        Param::C,
        Param::D,
        Param::Q,
        Param::T,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Param> {
        Self::ALL.get(i).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            Param::A => "a",
            Param::B => "b",
            Param::C => "c",
            Param::D => "d",
            Param::Q => "q",
            Param::T => "t",
            Param::Alpha => "alpha",
            Param::Beta => "beta",
            Param::Gamma => "gamma",
            Param::Delta => "delta",
        }
    }

    /// Accepts the ASCII names and the Greek glyphs.
    pub fn from_name(s: &str) -> Option<Param> {
        Some(match s {
            "a" => Param::A,
            "b" => Param::B,
            "c" => Param::C,
            "d" => Param::D,
            "q" => Param::Q,
            "t" => Param::T,
            "alpha" | "α" => Param::Alpha,
            "beta" | "β" => Param::Beta,
            "gamma" | "γ" => Param::Gamma,
            "delta" | "δ" => Param::Delta,
            _ => return None,
        })
    }

    pub fn is_greek(self) -> bool {
        self.index() >= Param::Alpha.index()
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
