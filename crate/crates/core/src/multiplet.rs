//! Shifted Weyl orbits of the dominant weight and their multiplet members.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::roots::{reflect_simple, HcTriple};
use crate::symexpr::{LinExpr, SignClass, Symbol};
use crate::weights::{WeightNode, WeylWord};
use crate::Error;

/// Which parameters are set formally to zero, plus an optional numeric
/// assignment for the others.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipletSpec {
    pub zeros: BTreeSet<Symbol>,
    pub numeric: BTreeMap<Symbol, i64>,
    pub strict_k: bool,
}

impl MultipletSpec {
    /// Normalizes numeric zeros into `zeros` and applies the default for
    /// `strict_k` (strict only for the main multiplet).
    pub fn new(
        zeros: impl IntoIterator<Item = Symbol>,
        numeric: impl IntoIterator<Item = (Symbol, i64)>,
        strict_k: Option<bool>,
    ) -> Result<Self, Error> {
        let mut zeros: BTreeSet<Symbol> = zeros.into_iter().collect();
        let mut values = BTreeMap::new();
        for (s, v) in numeric {
            if v < 0 {
                return Err(Error::Spec(format!("{s} must be nonnegative, got {v}")));
            }
            if values.insert(s, v).is_some_and(|old| old != v) {
                return Err(Error::Spec(format!("conflicting values for {s}")));
            }
        }
        for (s, v) in std::mem::take(&mut values) {
            if v == 0 {
                zeros.insert(s);
            } else if zeros.contains(&s) {
                return Err(Error::Spec(format!("{s} is both zeroed and assigned {v}")));
            } else {
                values.insert(s, v);
            }
        }
        let strict_k = strict_k.unwrap_or(zeros.is_empty());
        Ok(MultipletSpec {
            zeros,
            numeric: values,
            strict_k,
        })
    }

    /// Fully symbolic, with the listed parameters set to zero.
    pub fn reduced(zeros: &[Symbol]) -> Self {
        Self::new(zeros.iter().copied(), [], None).expect("symbolic spec is always valid")
    }

    pub fn generic() -> Self {
        Self::reduced(&[])
    }

    pub fn zeros_vec(&self) -> Vec<Symbol> {
        self.zeros.iter().copied().collect()
    }

    pub fn reduction(&self) -> Reduction {
        Reduction::from_zeros(&self.zeros)
    }

    /// Value of `s` if fixed, either formally zero or numerically assigned.
    pub fn value_of(&self, s: Symbol) -> Option<i64> {
        if self.zeros.contains(&s) {
            Some(0)
        } else {
            self.numeric.get(&s).copied()
        }
    }

    /// Specializes an expression written in the unreduced parameters.
    pub fn specialize(&self, e: &LinExpr) -> LinExpr {
        e.substitute(&self.zeros_vec()).assign(&self.numeric)
    }

    pub fn specialize_triple(&self, t: &HcTriple) -> HcTriple {
        t.map(|e| self.specialize(e))
    }

    /// Λ₀ = (p, ν, n) after reduction and assignment.
    pub fn dominant(&self) -> HcTriple {
        self.specialize_triple(&HcTriple::dominant())
    }
}

impl Default for MultipletSpec {
    fn default() -> Self {
        Self::generic()
    }
}

/// Degeneracy pattern of `(p, ν, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reduction {
    Generic,
    NuZero,
    PZero,
    NZero,
    PNZero,
    PNuZero,
    NuNZero,
    AllZero,
}

impl Reduction {
    pub const ALL: [Reduction; 8] = [
        Reduction::Generic,
        Reduction::NuZero,
        Reduction::PZero,
        Reduction::NZero,
        Reduction::PNZero,
        Reduction::PNuZero,
        Reduction::NuNZero,
        Reduction::AllZero,
    ];

    pub fn from_zeros(zeros: &BTreeSet<Symbol>) -> Reduction {
        let has = |s| zeros.contains(&s);
        match (has(Symbol::P), has(Symbol::Nu), has(Symbol::N)) {
            (false, false, false) => Reduction::Generic,
            (false, true, false) => Reduction::NuZero,
            (true, false, false) => Reduction::PZero,
            (false, false, true) => Reduction::NZero,
            (true, false, true) => Reduction::PNZero,
            (true, true, false) => Reduction::PNuZero,
            (false, true, true) => Reduction::NuNZero,
            (true, true, true) => Reduction::AllZero,
        }
    }

    pub fn zeros(self) -> &'static [Symbol] {
        use Symbol::*;
        match self {
            Reduction::Generic => &[],
            Reduction::NuZero => &[Nu],
            Reduction::PZero => &[P],
            Reduction::NZero => &[N],
            Reduction::PNZero => &[P, N],
            Reduction::PNuZero => &[P, Nu],
            Reduction::NuNZero => &[Nu, N],
            Reduction::AllZero => &[P, Nu, N],
        }
    }
}

impl fmt::Display for Reduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reduction::Generic => "main 12-plet",
            Reduction::NuZero => "septuplet (ν=0)",
            Reduction::PZero => "septuplet (p=0)",
            Reduction::NZero => "septuplet (n=0)",
            Reduction::PNZero => "quartet (p=n=0)",
            Reduction::PNuZero => "triplet (p=ν=0)",
            Reduction::NuNZero => "triplet (ν=n=0)",
            Reduction::AllZero => "trivial (p=ν=n=0)",
        })
    }
}

/// Display labels of the published diagrams, each keyed by a Weyl word whose
/// image of the (reduced) dominant weight is the labeled member. Listed in
/// diagram order.
pub fn figure_labels(r: Reduction) -> &'static [(&'static str, &'static str)] {
    match r {
        Reduction::Generic => &[
            ("Λ⁻₀", "2"),
            ("Λ⁻a", "12"),
            ("Λ⁻b", "32"),
            ("Λ⁻c", "121"),
            ("Λ⁻d", "132"),
            ("Λ⁻e", "232"),
            ("Λ⁺e", "1232"),
            ("Λ⁺d", "2132"),
            ("Λ⁺c", "1321"),
            ("Λ⁺b", "12132"),
            ("Λ⁺a", "21321"),
            ("Λ⁺₀", "121321"),
        ],
        Reduction::NuZero => &[
            ("Λ⁻₀", "2"),
            ("Λ⁻a", "12"),
            ("Λ⁻b", "32"),
            ("Λc", "132"),
            ("Λ⁺b", "1232"),
            ("Λ⁺a", "3212"),
            ("Λ⁺₀", "213213"),
        ],
        Reduction::PZero => &[
            ("Λ⁻₀", "2"),
            ("Λ⁻b", "32"),
            ("Λ⁻d", "212"),
            ("Λe", "232"),
            ("Λ⁺d", "3212"),
            ("Λ⁺b", "2132"),
            ("Λ⁺₀", "23212"),
        ],
        Reduction::NZero => &[
            ("Λ⁻₀", "2"),
            ("Λ⁻a", "12"),
            ("Λ⁻e", "232"),
            ("Λd", "212"),
            ("Λ⁺e", "1232"),
            ("Λ⁺a", "23212"),
            ("Λ⁺₀", "213213"),
        ],
        Reduction::PNZero => &[("Λ⁻₀", "2"), ("Λd", "212"), ("Λe", "232"), ("Λ⁺₀", "2132")],
        // The published list repeats the minus label on the last row; the
        // diagram pairs it with the first under the highest-root reflection.
        Reduction::PNuZero => &[("Λ⁻₀", "2"), ("Λb", "32"), ("Λ⁺₀", "3212")],
        Reduction::NuNZero => &[("Λ⁻₀", "2"), ("Λa", "12"), ("Λ⁺₀", "121321")],
        Reduction::AllZero => &[],
    }
}

/// Breadth-first closure of Λ₀ under the simple reflections. Each node keeps
/// its shortlex-minimal word.
pub fn generate_orbit(spec: &MultipletSpec) -> Vec<WeightNode> {
    let start = spec.dominant();
    let mut seen: HashSet<HcTriple> = HashSet::from([start]);
    let mut out = vec![WeightNode::new(start, WeylWord::identity())];
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        // Frontier is in shortlex order, so the first hit of a node comes
        // from the smallest parent word with the smallest appended letter.
        let mut next = Vec::new();
        for idx in frontier {
            let (hc, word) = (out[idx].hc, out[idx].word.clone());
            for i in 1..=3 {
                let image = reflect_simple(&hc, i).expect("index in range");
                if seen.insert(image) {
                    next.push(out.len());
                    out.push(WeightNode::new(image, word.push(i)));
                }
            }
        }
        frontier = next;
    }
    out
}

/// Orbit members that are multiplet members: `k = −m2` positive (or zero
/// when limits of discrete series are admitted). Labeled, and in diagram
/// order when every member carries a label.
pub fn members(spec: &MultipletSpec) -> Result<Vec<WeightNode>, Error> {
    let mut out = Vec::new();
    for node in generate_orbit(spec) {
        match (-node.hc[1]).sign_class() {
            SignClass::Positive => out.push(node),
            SignClass::Zero if !spec.strict_k => out.push(node),
            SignClass::Zero | SignClass::Negative => {}
            SignClass::Indefinite => return Err(Error::IndefiniteSign(node.hc)),
        }
    }
    let table = figure_labels(spec.reduction());
    let dominant = spec.dominant();
    let by_triple: HashMap<HcTriple, (usize, &str)> = table
        .iter()
        .enumerate()
        .map(|(i, (label, word))| {
            let w: WeylWord = word.parse().expect("static word");
            (w.apply(&dominant), (i, *label))
        })
        .collect();
    for node in &mut out {
        if let Some((_, label)) = by_triple.get(&node.hc) {
            node.label = Some((*label).to_string());
        }
    }
    if !out.is_empty() && out.iter().all(|n| n.label.is_some()) {
        out.sort_by_key(|n| by_triple[&n.hc].0);
    } else {
        out.sort_by(|a, b| a.word.shortlex().cmp(&b.word.shortlex()));
    }
    Ok(out)
}

/// `λ(Λ₀) = (p+ν+n, ν+n, n, 0)`: the 4-vector whose consecutive differences
/// are the dominant triple.
fn lambda_vector(spec: &MultipletSpec) -> [LinExpr; 4] {
    let [a, b, c] = spec.dominant().0;
    [a + b + c, b + c, c, LinExpr::ZERO]
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let idx = [a, b, c, d];
                    if idx.iter().collect::<BTreeSet<_>>().len() == 4 {
                        out.push(idx);
                    }
                }
            }
        }
    }
    out
}

/// Brute-force orbit: HC triples of all 24 rearrangements of `λ(Λ₀)`,
/// deduplicated in first-seen order. Independent of the reflection formulas.
pub fn permutation_oracle(spec: &MultipletSpec) -> Vec<HcTriple> {
    let lambda = lambda_vector(spec);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for perm in permutations4() {
        let l = perm.map(|i| lambda[i]);
        let t = HcTriple::new(l[0] - l[1], l[1] - l[2], l[2] - l[3]);
        if seen.insert(t) {
            out.push(t);
        }
    }
    out
}

/// Order of the stabilizer of `λ(Λ₀)` in S₄.
pub fn stabilizer_order(spec: &MultipletSpec) -> usize {
    let lambda = lambda_vector(spec);
    permutations4()
        .into_iter()
        .filter(|perm| perm.map(|i| lambda[i]) == lambda)
        .count()
}
