//! Multiplet members and their parametrizations.
//!
//! A member is recorded by its HC triple and the canonical Weyl word that
//! produces it from the dominant weight. From the triple we derive the HC
//! sextuple and the P₁-induced signature `{n′, k, ε, ν′}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::roots::{apply_word, HcTriple};
use crate::symexpr::LinExpr;
use crate::Error;

/// Sequence of simple reflections, applied left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct WeylWord(pub Vec<u8>);

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&self, i: u8) -> WeylWord {
        let mut v = self.0.clone();
        v.push(i);
        WeylWord(v)
    }

    pub fn apply(&self, t: &HcTriple) -> HcTriple {
        apply_word(t, &self.0).expect("Weyl words only hold indices 1..=3")
    }

    /// Shortlex key: length first, then lexicographic.
    pub fn shortlex(&self) -> (usize, &[u8]) {
        (self.0.len(), &self.0)
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.0 {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for WeylWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        s.chars()
            .map(|c| match c {
                '1' => Ok(1),
                '2' => Ok(2),
                '3' => Ok(3),
                _ => Err(Error::Parse(format!("bad Weyl word `{s}`"))),
            })
            .collect::<Result<_, _>>()
            .map(WeylWord)
    }
}

impl From<WeylWord> for String {
    fn from(w: WeylWord) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for WeylWord {
    type Error = Error;

    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightNode {
    pub hc: HcTriple,
    pub word: WeylWord,
    pub label: Option<String>,
}

impl WeightNode {
    pub fn new(hc: HcTriple, word: WeylWord) -> Self {
        WeightNode {
            hc,
            word,
            label: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// `(m1, m2, m3, m12, m23, m13)`.
    pub fn hc_sextuple(&self) -> [LinExpr; 6] {
        hc_sextuple(&self.hc)
    }

    pub fn to_p1_signature(&self) -> P1Signature {
        to_p1_signature(&self.hc)
    }
}

pub fn hc_sextuple(t: &HcTriple) -> [LinExpr; 6] {
    let [a, b, c] = t.0;
    [a, b, c, a + b, b + c, a + b + c]
}

pub fn render_sextuple(s: &[LinExpr; 6], ascii: bool) -> String {
    let r: Vec<String> = s.iter().map(|e| e.render(ascii)).collect();
    format!(
        "({}, {}, {}; {}, {}, {})",
        r[0], r[1], r[2], r[3], r[4], r[5]
    )
}

/// Signature `{n′, k, ε, ν′}` of a representation induced from the maximal
/// cuspidal parabolic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct P1Signature {
    pub n_prime: LinExpr,
    pub k: LinExpr,
    pub nu_prime: LinExpr,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<i8>,
}

impl P1Signature {
    pub fn new(n_prime: LinExpr, k: LinExpr, nu_prime: LinExpr) -> Self {
        P1Signature {
            n_prime,
            k,
            nu_prime,
            epsilon: None,
        }
    }

    pub fn render(&self, ascii: bool) -> String {
        format!(
            "{{{}, {}, {}}}",
            self.n_prime.render(ascii),
            self.k.render(ascii),
            self.nu_prime.render(ascii)
        )
    }
}

/// Inverts `m1 = (k−ν′+n′)/2, m2 = −k, m3 = (k−ν′−n′)/2`.
///
/// The usual statement `k = m2` refers to the Dynkin label of the dominant
/// weight; in terms of a node's own triple it reads `k = −m2`, which is why
/// members (whose middle entry is never positive) have `k ≥ 0`.
pub fn to_p1_signature(t: &HcTriple) -> P1Signature {
    let [m1, m2, m3] = t.0;
    P1Signature::new(m1 - m3, -m2, -(m1 + m2 + m3))
}

pub fn from_p1_signature(s: &P1Signature) -> Result<HcTriple, Error> {
    let plus = s.k - s.nu_prime + s.n_prime;
    let minus = s.k - s.nu_prime - s.n_prime;
    let m1 = plus.half().ok_or(Error::Parity(plus))?;
    let m3 = minus.half().ok_or(Error::Parity(minus))?;
    Ok(HcTriple::new(m1, -s.k, m3))
}
