//! Positive roots of sl(4,ℂ) and the shifted Weyl action on Harish-Chandra triples.
//!
//! Weights are stored as ρ-shifted HC triples `(m1, m2, m3)`, the pairings with
//! the three simple coroots. In the 4-vector picture `λ` with
//! `m_i = λ_i − λ_{i+1}`, the simple reflection `σ_i` swaps `λ_i` and `λ_{i+1}`.

use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::symexpr::{LinExpr, Symbol};
use crate::Error;

/// HC triple `(m1, m2, m3)` of a weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct HcTriple(pub [LinExpr; 3]);

impl HcTriple {
    pub fn new(m1: LinExpr, m2: LinExpr, m3: LinExpr) -> Self {
        HcTriple([m1, m2, m3])
    }

    /// The dominant triple `(p, ν, n)`.
    pub fn dominant() -> Self {
        HcTriple::new(LinExpr::p(), LinExpr::nu(), LinExpr::n())
    }

    pub fn map(&self, f: impl Fn(&LinExpr) -> LinExpr) -> HcTriple {
        HcTriple([f(&self.0[0]), f(&self.0[1]), f(&self.0[2])])
    }

    pub fn substitute(&self, zeros: &[Symbol]) -> HcTriple {
        self.map(|e| e.substitute(zeros))
    }

    pub fn render(&self, ascii: bool) -> String {
        let [a, b, c] = &self.0;
        format!(
            "({}, {}, {})",
            a.render(ascii),
            b.render(ascii),
            c.render(ascii)
        )
    }
}

impl Index<usize> for HcTriple {
    type Output = LinExpr;

    fn index(&self, i: usize) -> &LinExpr {
        &self.0[i]
    }
}

impl fmt::Display for HcTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// A positive root of A₃.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Root {
    #[serde(rename = "a1")]
    A1,
    #[serde(rename = "a2")]
    A2,
    #[serde(rename = "a3")]
    A3,
    #[serde(rename = "a12")]
    A12,
    #[serde(rename = "a23")]
    A23,
    #[serde(rename = "a13")]
    A13,
}

impl Root {
    pub const ALL: [Root; 6] = [
        Root::A1,
        Root::A2,
        Root::A3,
        Root::A12,
        Root::A23,
        Root::A13,
    ];

    /// Roots of the nilradical directions that carry invariant differential operators.
    pub const M_NONCOMPACT: [Root; 5] = [Root::A1, Root::A3, Root::A12, Root::A23, Root::A13];

    pub const K_COMPACT: [Root; 2] = [Root::A1, Root::A3];

    pub const K_NONCOMPACT: [Root; 4] = [Root::A2, Root::A12, Root::A23, Root::A13];

    /// Simple roots (1-based) summing to this root.
    pub fn simple_support(self) -> &'static [u8] {
        match self {
            Root::A1 => &[1],
            Root::A2 => &[2],
            Root::A3 => &[3],
            Root::A12 => &[1, 2],
            Root::A23 => &[2, 3],
            Root::A13 => &[1, 2, 3],
        }
    }

    pub fn simple_index(self) -> Option<u8> {
        match self.simple_support() {
            [i] => Some(*i),
            _ => None,
        }
    }

    pub fn is_m_compact(self) -> bool {
        self == Root::A2
    }

    pub fn is_k_compact(self) -> bool {
        Root::K_COMPACT.contains(&self)
    }

    /// Subscript digits, e.g. `"12"` for α12.
    pub fn subscript(self) -> &'static str {
        match self {
            Root::A1 => "1",
            Root::A2 => "2",
            Root::A3 => "3",
            Root::A12 => "12",
            Root::A23 => "23",
            Root::A13 => "13",
        }
    }

    pub fn render(self, ascii: bool) -> String {
        if ascii {
            format!("a{}", self.subscript())
        } else {
            format!("α{}", self.subscript())
        }
    }

    /// Simple-reflection word realizing `s_β`, applied left to right.
    pub fn reflection_word(self) -> &'static [u8] {
        match self {
            Root::A1 => &[1],
            Root::A2 => &[2],
            Root::A3 => &[3],
            Root::A12 => &[1, 2, 1],
            Root::A23 => &[2, 3, 2],
            Root::A13 => &[1, 2, 3, 2, 1],
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// Shifted action of the simple reflection `σ_i`, `i ∈ {1, 2, 3}`.
pub fn reflect_simple(t: &HcTriple, i: u8) -> Result<HcTriple, Error> {
    let [a, b, c] = t.0;
    match i {
        1 => Ok(HcTriple::new(-a, a + b, c)),
        2 => Ok(HcTriple::new(a + b, -b, b + c)),
        3 => Ok(HcTriple::new(a, b + c, -c)),
        _ => Err(Error::InvalidIndex(i)),
    }
}

/// Applies `word` left to right: `[i1, …, it]` gives `σ_it ⋯ σ_i1 · t`.
pub fn apply_word(t: &HcTriple, word: &[u8]) -> Result<HcTriple, Error> {
    word.iter().try_fold(*t, |acc, &i| reflect_simple(&acc, i))
}

/// Reflection `s_β` in closed form.
pub fn reflect_root(t: &HcTriple, beta: Root) -> HcTriple {
    let [a, b, c] = t.0;
    match beta {
        Root::A1 => HcTriple::new(-a, a + b, c),
        Root::A2 => HcTriple::new(a + b, -b, b + c),
        Root::A3 => HcTriple::new(a, b + c, -c),
        Root::A12 => HcTriple::new(-b, -a, a + b + c),
        Root::A23 => HcTriple::new(a + b + c, -c, -b),
        Root::A13 => HcTriple::new(-b - c, b, -a - b),
    }
}

/// `(Λ+ρ, β∨)`: the sum of the triple over the simple support of `β`.
pub fn hc_parameter(t: &HcTriple, beta: Root) -> LinExpr {
    beta.simple_support()
        .iter()
        .fold(LinExpr::ZERO, |acc, &i| acc + t.0[usize::from(i) - 1])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ParabolicKind {
    /// Minimal.
    P0,
    /// Maximal cuspidal.
    P1,
    /// Maximal non-cuspidal.
    P2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParabolicInfo {
    pub name: ParabolicKind,
    pub dim_a: u32,
    pub dim_n: u32,
    pub levi_description: String,
}

/// The three non-conjugate parabolic subalgebras of so(n,2).
pub fn parabolic_table(n: u32) -> Result<Vec<ParabolicInfo>, Error> {
    if n < 3 {
        return Err(Error::InvalidRank(n));
    }
    let m = n - 2;
    Ok(vec![
        ParabolicInfo {
            name: ParabolicKind::P0,
            dim_a: 2,
            dim_n: 2 * (n - 1),
            levi_description: format!("so({m})"),
        },
        ParabolicInfo {
            name: ParabolicKind::P1,
            dim_a: 1,
            dim_n: 2 * n - 3,
            levi_description: format!("so({m}) ⊕ sl(2,ℝ)"),
        },
        ParabolicInfo {
            name: ParabolicKind::P2,
            dim_a: 1,
            dim_n: n,
            levi_description: format!("so({},1)", n - 1),
        },
    ])
}
