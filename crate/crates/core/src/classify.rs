//! Representation-theoretic and physical tags for multiplet members.

use serde::{Deserialize, Serialize};

use crate::multiplet::{MultipletSpec, Reduction};
use crate::roots::{hc_parameter, HcTriple, Root};
use crate::symexpr::{SignClass, Symbol};
use crate::weights::{WeightNode, WeylWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DiscreteSeries {
    Holomorphic,
    Antiholomorphic,
    LimitHolo,
    LimitAntiholo,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeTags {
    pub discrete_series: DiscreteSeries,
    pub p2_label: Option<String>,
    pub physics: Vec<String>,
}

/// K-criterion: K-compact parameters positive, K-noncompact negative. Zero
/// entries turn a pass into a limit. `epsilon` selects holomorphic (+1, the
/// default) or antiholomorphic (−1).
pub fn discrete_series_tag(w: &WeightNode, epsilon: Option<i8>) -> DiscreteSeries {
    let mut limit = false;
    for beta in Root::ALL {
        let wanted = if beta.is_k_compact() {
            SignClass::Positive
        } else {
            SignClass::Negative
        };
        match hc_parameter(&w.hc, beta).sign_class() {
            s if s == wanted => {}
            SignClass::Zero => limit = true,
            _ => return DiscreteSeries::None,
        }
    }
    let holo = epsilon.unwrap_or(1) >= 0;
    match (limit, holo) {
        (false, true) => DiscreteSeries::Holomorphic,
        (false, false) => DiscreteSeries::Antiholomorphic,
        (true, true) => DiscreteSeries::LimitHolo,
        (true, false) => DiscreteSeries::LimitAntiholo,
    }
}

/// Coincidences with representations induced from the maximal non-cuspidal
/// parabolic, per reduction: `(word, [aliases…])`. The word's image of the
/// reduced dominant weight identifies the member; aliases are listed in
/// published order, the last being the most specific.
pub fn p2_table(r: Reduction) -> &'static [(&'static str, &'static [&'static str])] {
    match r {
        Reduction::Generic => &[
            ("2", &["χ′⁻_{pνn}"]),
            ("12", &["χ″⁻_{pνn}"]),
            ("32", &["χ″⁺_{pνn}"]),
            ("132", &["χ′⁺_{pνn}"]),
            ("2132", &["χ⁺_{pνn}"]),
        ],
        Reduction::NuZero => &[
            ("2", &["χ′⁻_{p0n}", "₂χ⁻_{pn}"]),
            ("12", &["χ″⁻_{p0n}"]),
            ("32", &["χ″⁺_{p0n}"]),
            ("132", &["χ′⁺_{p0n}", "χ⁺_{p0n}", "₂χ⁺_{pn}"]),
        ],
        Reduction::PZero => &[
            ("2", &["χ′⁻_{0νn}", "χ″⁻_{0νn}", "₁χ⁻_{νn}"]),
            ("32", &["χ″⁺_{0νn}", "χ′⁺_{0νn}", "₁χ⁺_{νn}"]),
            ("2132", &["χ⁺_{0νn}"]),
        ],
        Reduction::NZero => &[
            ("2", &["χ′⁻_{pν0}", "χ″⁺_{pν0}", "₃χ⁻_{pν}"]),
            ("12", &["χ″⁻_{pν0}", "χ′⁺_{pν0}", "₃χ⁺_{pν}"]),
            ("23212", &["χ⁺_{pν0}"]),
        ],
        Reduction::PNZero => &[
            (
                "2",
                &["χ′⁻_{0ν0}", "χ″⁻_{0ν0}", "χ″⁺_{0ν0}", "χ′⁺_{0ν0}", "χˢ_ν"],
            ),
            ("2132", &["χ⁺_{0ν0}"]),
        ],
        Reduction::PNuZero => &[
            ("2", &["χ′⁻_{00n}", "χ″⁻_{00n}"]),
            ("32", &["χ″⁺_{00n}", "χ′⁺_{00n}", "χ⁺_{00n}"]),
        ],
        Reduction::NuNZero => &[
            ("2", &["χ′⁻_{p00}", "χ″⁺_{p00}"]),
            ("12", &["χ″⁻_{p00}", "χ′⁺_{p00}", "χ⁺_{p00}"]),
        ],
        Reduction::AllZero => &[],
    }
}

fn table_word_matches(word: &str, w: &WeightNode, spec: &MultipletSpec) -> bool {
    let word: WeylWord = word.parse().expect("static word");
    word.apply(&spec.dominant()) == w.hc
}

/// All recorded identifications of `w`, in published order.
pub fn p2_aliases(w: &WeightNode, spec: &MultipletSpec) -> Vec<&'static str> {
    p2_table(spec.reduction())
        .iter()
        .find(|(word, _)| table_word_matches(word, w, spec))
        .map(|(_, aliases)| aliases.to_vec())
        .unwrap_or_default()
}

pub fn p2_label(w: &WeightNode, spec: &MultipletSpec) -> Option<String> {
    p2_aliases(w, spec).last().map(|s| s.to_string())
}

fn is_at(w: &WeightNode, spec: &MultipletSpec, word: &str) -> bool {
    table_word_matches(word, w, spec)
}

fn fixed(spec: &MultipletSpec, s: Symbol, v: i64) -> bool {
    spec.value_of(s) == Some(v)
}

/// `(x+1)/2` for the spin formula, rendered exactly.
fn half_of_succ(spec: &MultipletSpec, s: Symbol) -> String {
    match spec.value_of(s) {
        Some(v) if (v + 1) % 2 == 0 => ((v + 1) / 2).to_string(),
        Some(v) => format!("{}/2", v + 1),
        None => format!("({}+1)/2", s.name(false)),
    }
}

fn one_plus(spec: &MultipletSpec, s: Symbol) -> String {
    match spec.value_of(s) {
        Some(v) if (v + 3) % 2 == 0 => ((v + 3) / 2).to_string(),
        Some(v) => format!("{}/2", v + 3),
        None => format!("1 + ({}+1)/2", s.name(false)),
    }
}

fn massless_spin(spec: &MultipletSpec, s: Symbol) -> String {
    format!(
        "massless, spin {}, d = {}",
        half_of_succ(spec, s),
        one_plus(spec, s)
    )
}

pub const SCALAR_MASSLESS: &str = "scalar massless, d = 1";
pub const SPIN_HALF_MASSLESS: &str = "massless, spin 1/2, d = 3/2";
pub const SCALAR_POSITIVE_ENERGY: &str =
    "Lorentz scalar, d=2, above unitarity threshold d=1, below limit of holomorphic discrete series d=3";

/// Physical remarks that hold at special parameter values.
pub fn physics_tags(w: &WeightNode, spec: &MultipletSpec) -> Vec<String> {
    use Symbol::*;
    let mut out = Vec::new();
    match spec.reduction() {
        Reduction::Generic => {
            if is_at(w, spec, "12") && fixed(spec, Nu, 1) && fixed(spec, N, 1) {
                out.push(massless_spin(spec, P));
            }
            if is_at(w, spec, "32") && fixed(spec, P, 1) && fixed(spec, Nu, 1) {
                out.push(massless_spin(spec, N));
            }
        }
        Reduction::NuZero if is_at(w, spec, "2") && fixed(spec, P, 1) && fixed(spec, N, 1) => {
            out.push(SCALAR_MASSLESS.to_string());
        }
        Reduction::PZero
            if (is_at(w, spec, "2") || is_at(w, spec, "32"))
                && fixed(spec, Nu, 1)
                && fixed(spec, N, 1) =>
        {
            out.push(SPIN_HALF_MASSLESS.to_string());
        }
        Reduction::NZero
            if (is_at(w, spec, "2") || is_at(w, spec, "12"))
                && fixed(spec, P, 1)
                && fixed(spec, Nu, 1) =>
        {
            out.push(SPIN_HALF_MASSLESS.to_string());
        }
        Reduction::PNZero if is_at(w, spec, "2") && fixed(spec, Nu, 1) => {
            out.push(SCALAR_POSITIVE_ENERGY.to_string());
        }
        _ => {}
    }
    out
}

pub fn classify(w: &WeightNode, spec: &MultipletSpec, epsilon: Option<i8>) -> NodeTags {
    NodeTags {
        discrete_series: discrete_series_tag(w, epsilon),
        p2_label: p2_label(w, spec),
        physics: physics_tags(w, spec),
    }
}

/// Whether `t` passes the K-criterion strictly (no zero entries).
pub fn is_discrete_series(t: &HcTriple) -> bool {
    let node = WeightNode::new(*t, WeylWord::identity());
    matches!(
        discrete_series_tag(&node, None),
        DiscreteSeries::Holomorphic | DiscreteSeries::Antiholomorphic
    )
}
