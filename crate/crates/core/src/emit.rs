//! Text serializations of a [`MultipletGraph`]: DOT, JSON, CSV and aligned tables.
//!
//! All emitters are pure and deterministic: output order follows member order,
//! then edge order, then KS order.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::classify::{classify, p2_aliases, DiscreteSeries, NodeTags};
use crate::graph::{DiffOpEdge, KsKind, KsPair, MultipletGraph};
use crate::multiplet::MultipletSpec;
use crate::roots::{HcTriple, Root};
use crate::symexpr::LinExpr;
use crate::weights::{hc_sextuple, render_sextuple, to_p1_signature, WeightNode, WeylWord};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    Dot,
    Json,
    Csv,
    #[default]
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum LabelStyle {
    #[value(name = "word")]
    WeylWord,
    #[default]
    #[value(name = "figure")]
    FigureLabel,
    #[value(name = "signature")]
    Signature,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderOptions {
    pub format: Format,
    pub reduced_edges: bool,
    pub show_ks: bool,
    pub label_style: LabelStyle,
    pub ascii: bool,
    pub epsilon: Option<i8>,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            format: Format::Text,
            reduced_edges: false,
            show_ks: true,
            label_style: LabelStyle::FigureLabel,
            ascii: false,
            epsilon: None,
        }
    }
}

/// Replaces the Greek letters, super- and subscripts used in labels.
pub fn asciify(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            'Λ' => out.push('L'),
            'ν' => out.push_str("nu"),
            'χ' => out.push_str("chi"),
            'α' => out.push('a'),
            '⁻' | '\u{2212}' => out.push('-'),
            '⁺' => out.push('+'),
            '′' => out.push('\''),
            '″' => out.push_str("''"),
            'ˢ' => out.push_str("^s"),
            '₀' => out.push('0'),
            '₁' => out.push('1'),
            '₂' => out.push('2'),
            '₃' => out.push('3'),
            '↦' => out.push_str("->"),
            c => out.push(c),
        }
    }
    out
}

fn text(s: &str, ascii: bool) -> String {
    if ascii {
        asciify(s)
    } else {
        s.to_string()
    }
}

/// Word as shown in tables and as a node key; the identity prints as `e`.
pub fn word_key(w: &WeylWord) -> String {
    if w.is_empty() {
        "e".to_string()
    } else {
        w.to_string()
    }
}

fn compact_triple(t: &HcTriple, ascii: bool) -> String {
    let [a, b, c] = &t.0;
    format!(
        "({},{},{})",
        a.render(ascii),
        b.render(ascii),
        c.render(ascii)
    )
}

/// Stable node identifier: the diagram label when present, else `Λ_word`.
fn node_id(n: &WeightNode, ascii: bool) -> String {
    match &n.label {
        Some(l) => text(l, ascii),
        None => text(&format!("Λ_{}", word_key(&n.word)), ascii),
    }
}

fn node_label(n: &WeightNode, style: LabelStyle, ascii: bool) -> String {
    match style {
        LabelStyle::WeylWord => text(&format!("Λ_{}", word_key(&n.word)), ascii),
        LabelStyle::FigureLabel => node_id(n, ascii),
        LabelStyle::Signature => compact_triple(&n.hc, ascii),
    }
}

pub fn describe_spec(spec: &MultipletSpec, ascii: bool) -> String {
    let mut parts = Vec::new();
    for s in crate::symexpr::Symbol::ALL {
        let v = match spec.value_of(s) {
            Some(v) => v.to_string(),
            None => s.name(ascii).to_string(),
        };
        parts.push(format!("{}={v}", s.name(ascii)));
    }
    text(
        &format!("{} [{}]", spec.reduction(), parts.join(", ")),
        ascii,
    )
}

fn effective(g: &MultipletGraph, opts: &RenderOptions) -> Result<MultipletGraph, Error> {
    if opts.reduced_edges {
        g.transitive_reduction()
    } else {
        Ok(g.clone())
    }
}

fn edge_label(e: &DiffOpEdge, ascii: bool) -> String {
    format!("{} {}", e.degree.render(ascii), e.root.render(ascii))
}

/// Length of the longest arrow path ending at each node. Arrows strictly
/// lower `m13`, so relaxing `n` times reaches the fixed point.
fn longest_path_levels(n: usize, edges: &[DiffOpEdge]) -> Vec<usize> {
    let mut level = vec![0usize; n];
    for _ in 0..n {
        let mut changed = false;
        for e in edges {
            if level[e.target] < level[e.source] + 1 {
                level[e.target] = level[e.source] + 1;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    level
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn to_dot(g: &MultipletGraph, opts: &RenderOptions) -> Result<String, Error> {
    let g = effective(g, opts)?;
    let ascii = opts.ascii;
    let ids: Vec<String> = g.nodes.iter().map(|n| quote(&node_id(n, ascii))).collect();
    let mut out = String::new();
    writeln!(out, "digraph multiplet {{").unwrap();
    writeln!(out, "  label={};", quote(&describe_spec(&g.spec, ascii))).unwrap();
    writeln!(out, "  labelloc=t;").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for (id, n) in ids.iter().zip(&g.nodes) {
        writeln!(
            out,
            "  {id} [label={}];",
            quote(&node_label(n, opts.label_style, ascii))
        )
        .unwrap();
    }
    for e in &g.edges {
        writeln!(
            out,
            "  {} -> {} [label={}];",
            ids[e.source],
            ids[e.target],
            quote(&edge_label(e, ascii))
        )
        .unwrap();
    }
    if opts.show_ks {
        for k in &g.ks {
            match k.kind {
                // Self-pairs stay in the data but are not drawn.
                KsKind::IntegralOperator if k.from == k.to => {}
                KsKind::IntegralOperator => {
                    writeln!(
                        out,
                        "  {} -> {} [style=dashed, dir=none, constraint=false, label=\"KS\"];",
                        ids[k.from], ids[k.to]
                    )
                    .unwrap();
                }
                KsKind::DegenerateDifferential(deg) => {
                    let drawn = g
                        .edges
                        .iter()
                        .any(|e| e.source == k.from && e.target == k.to);
                    if !drawn {
                        let label = format!("KS {} {}", deg.render(ascii), Root::A13.render(ascii));
                        writeln!(
                            out,
                            "  {} -> {} [label={}];",
                            ids[k.from],
                            ids[k.to],
                            quote(&label)
                        )
                        .unwrap();
                    }
                }
            }
        }
    }
    // One rank per longest-path level; KS partners land on mirrored levels
    // either side of the dashed pairings.
    let levels = longest_path_levels(g.nodes.len(), &g.edges);
    let depth = levels.iter().copied().max().unwrap_or(0);
    for level in 0..=depth {
        let same: Vec<&str> = (0..g.nodes.len())
            .filter(|&i| levels[i] == level)
            .map(|i| ids[i].as_str())
            .collect();
        if same.len() > 1 {
            writeln!(out, "  {{ rank=same; {}; }}", same.join("; ")).unwrap();
        }
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonP1 {
    pub n_prime: LinExpr,
    pub k: LinExpr,
    pub nu_prime: LinExpr,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonTags {
    pub discrete_series: DiscreteSeries,
    pub p2_label: Option<String>,
    pub p2_aliases: Vec<String>,
    pub physics: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonNode {
    pub word: WeylWord,
    pub label: Option<String>,
    pub hc: [LinExpr; 3],
    pub sextuple: [LinExpr; 6],
    pub p1: JsonP1,
    pub tags: JsonTags,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonEdge {
    pub source_word: WeylWord,
    pub target_word: WeylWord,
    pub root: Root,
    pub degree: LinExpr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JsonKsKind {
    IntegralOperator,
    DegenerateDifferential,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonKs {
    pub from_word: WeylWord,
    pub to_word: WeylWord,
    pub kind: JsonKsKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<LinExpr>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonDoc {
    pub spec: MultipletSpec,
    pub nodes: Vec<JsonNode>,
    pub edges: Vec<JsonEdge>,
    pub ks: Vec<JsonKs>,
}

fn tags_for(n: &WeightNode, spec: &MultipletSpec, opts: &RenderOptions) -> NodeTags {
    let mut tags = classify(n, spec, opts.epsilon);
    if opts.ascii {
        tags.p2_label = tags.p2_label.map(|l| asciify(&l));
        tags.physics = tags.physics.iter().map(|s| asciify(s)).collect();
    }
    tags
}

pub fn to_json_doc(g: &MultipletGraph, opts: &RenderOptions) -> Result<JsonDoc, Error> {
    let g = effective(g, opts)?;
    let nodes = g
        .nodes
        .iter()
        .map(|n| {
            let sig = to_p1_signature(&n.hc);
            let tags = tags_for(n, &g.spec, opts);
            JsonNode {
                word: n.word.clone(),
                label: n.label.as_deref().map(|l| text(l, opts.ascii)),
                hc: n.hc.0,
                sextuple: hc_sextuple(&n.hc),
                p1: JsonP1 {
                    n_prime: sig.n_prime,
                    k: sig.k,
                    nu_prime: sig.nu_prime,
                },
                tags: JsonTags {
                    discrete_series: tags.discrete_series,
                    p2_label: tags.p2_label,
                    p2_aliases: p2_aliases(n, &g.spec)
                        .iter()
                        .map(|a| text(a, opts.ascii))
                        .collect(),
                    physics: tags.physics,
                },
            }
        })
        .collect();
    let edges = g
        .edges
        .iter()
        .map(|e| JsonEdge {
            source_word: g.nodes[e.source].word.clone(),
            target_word: g.nodes[e.target].word.clone(),
            root: e.root,
            degree: e.degree,
        })
        .collect();
    let ks = if opts.show_ks {
        g.ks.iter()
            .map(|k| {
                let (kind, degree) = match k.kind {
                    KsKind::IntegralOperator => (JsonKsKind::IntegralOperator, None),
                    KsKind::DegenerateDifferential(d) => {
                        (JsonKsKind::DegenerateDifferential, Some(d))
                    }
                };
                JsonKs {
                    from_word: g.nodes[k.from].word.clone(),
                    to_word: g.nodes[k.to].word.clone(),
                    kind,
                    degree,
                }
            })
            .collect()
    } else {
        Vec::new()
    };
    Ok(JsonDoc {
        spec: g.spec.clone(),
        nodes,
        edges,
        ks,
    })
}

pub fn to_json(g: &MultipletGraph, opts: &RenderOptions) -> Result<String, Error> {
    let doc = to_json_doc(g, opts)?;
    let mut s = serde_json::to_string_pretty(&doc).map_err(|e| Error::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Rebuilds a graph from [`to_json`] output. Tags are not read back; they
/// are recomputed from the nodes.
pub fn from_json(text: &str) -> Result<MultipletGraph, Error> {
    let doc: JsonDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let nodes: Vec<WeightNode> = doc
        .nodes
        .iter()
        .map(|n| WeightNode {
            hc: HcTriple(n.hc),
            word: n.word.clone(),
            label: n.label.clone(),
        })
        .collect();
    let index: HashMap<&WeylWord, usize> = nodes
        .iter()
        .enumerate()
        .map(|(i, n)| (&n.word, i))
        .collect();
    let at = |w: &WeylWord| {
        index
            .get(w)
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown node word `{w}`")))
    };
    let edges = doc
        .edges
        .iter()
        .map(|e| {
            Ok(DiffOpEdge {
                source: at(&e.source_word)?,
                target: at(&e.target_word)?,
                root: e.root,
                degree: e.degree,
            })
        })
        .collect::<Result<_, Error>>()?;
    let ks = doc
        .ks
        .iter()
        .map(|k| {
            let kind = match (k.kind, k.degree) {
                (JsonKsKind::IntegralOperator, _) => KsKind::IntegralOperator,
                (JsonKsKind::DegenerateDifferential, Some(d)) => KsKind::DegenerateDifferential(d),
                (JsonKsKind::DegenerateDifferential, None) => {
                    return Err(Error::Parse("degenerate KS pair without degree".into()));
                }
            };
            Ok(KsPair {
                from: at(&k.from_word)?,
                to: at(&k.to_word)?,
                kind,
            })
        })
        .collect::<Result<_, Error>>()?;
    Ok(MultipletGraph {
        spec: doc.spec,
        nodes,
        edges,
        ks,
    })
}

pub const CSV_HEADER: [&str; 13] = [
    "kind",
    "source",
    "target",
    "root",
    "degree",
    "ks_kind",
    "label",
    "hc",
    "sextuple",
    "p1",
    "p2_label",
    "discrete_series",
    "physics",
];

pub fn to_csv(g: &MultipletGraph, opts: &RenderOptions) -> Result<String, Error> {
    let g = effective(g, opts)?;
    let ascii = opts.ascii;
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let io = |e: csv::Error| Error::Internal(e.to_string());
    w.write_record(CSV_HEADER).map_err(io)?;
    for n in &g.nodes {
        let tags = tags_for(n, &g.spec, opts);
        w.write_record([
            "node".to_string(),
            word_key(&n.word),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            n.label
                .as_deref()
                .map(|l| text(l, ascii))
                .unwrap_or_default(),
            n.hc.render(ascii),
            render_sextuple(&hc_sextuple(&n.hc), ascii),
            to_p1_signature(&n.hc).render(ascii),
            tags.p2_label.unwrap_or_default(),
            format!("{:?}", tags.discrete_series),
            tags.physics.join("; "),
        ])
        .map_err(io)?;
    }
    for e in &g.edges {
        let mut rec = vec![
            "edge".to_string(),
            word_key(&g.nodes[e.source].word),
            word_key(&g.nodes[e.target].word),
            e.root.render(ascii),
            e.degree.render(ascii),
        ];
        rec.resize(CSV_HEADER.len(), String::new());
        w.write_record(&rec).map_err(io)?;
    }
    if opts.show_ks {
        for k in &g.ks {
            let (kind, degree) = match k.kind {
                KsKind::IntegralOperator => ("integral", String::new()),
                KsKind::DegenerateDifferential(d) => ("degenerate_differential", d.render(ascii)),
            };
            let mut rec = vec![
                "ks".to_string(),
                word_key(&g.nodes[k.from].word),
                word_key(&g.nodes[k.to].word),
                Root::A13.render(ascii),
                degree,
                kind.to_string(),
            ];
            rec.resize(CSV_HEADER.len(), String::new());
            w.write_record(&rec).map_err(io)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

fn width(s: &str) -> usize {
    s.chars().count()
}

fn write_table(out: &mut String, rows: &[Vec<String>]) {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| width(s))
                .max()
                .unwrap_or(0)
        })
        .collect();
    for r in rows {
        let mut line = String::new();
        for (c, cell) in r.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if c + 1 < r.len() {
                line.extend(std::iter::repeat_n(' ', widths[c] - width(cell)));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
}

fn ds_text(d: DiscreteSeries) -> &'static str {
    match d {
        DiscreteSeries::Holomorphic => "holo",
        DiscreteSeries::Antiholomorphic => "antiholo",
        DiscreteSeries::LimitHolo => "limit-holo",
        DiscreteSeries::LimitAntiholo => "limit-antiholo",
        DiscreteSeries::None => "-",
    }
}

pub fn to_text(g: &MultipletGraph, opts: &RenderOptions) -> Result<String, Error> {
    let g = effective(g, opts)?;
    let ascii = opts.ascii;
    let mut out = String::new();
    writeln!(
        out,
        "{} — {} members",
        describe_spec(&g.spec, ascii),
        g.nodes.len()
    )
    .unwrap();
    if ascii {
        out = asciify(&out).replace('—', "-");
    }
    let mut rows = vec![[
        "label",
        "word",
        "(m1, m2, m3; m12, m23, m13)",
        "{n′, k, ν′}",
        "P2",
        "series",
        "remarks",
    ]
    .iter()
    .map(|s| text(s, ascii))
    .collect::<Vec<_>>()];
    for n in &g.nodes {
        let tags = tags_for(n, &g.spec, opts);
        rows.push(vec![
            node_label(n, opts.label_style, ascii),
            word_key(&n.word),
            render_sextuple(&hc_sextuple(&n.hc), ascii),
            to_p1_signature(&n.hc).render(ascii),
            tags.p2_label.unwrap_or_else(|| "-".into()),
            ds_text(tags.discrete_series).to_string(),
            tags.physics.join("; "),
        ]);
    }
    write_table(&mut out, &rows);

    let name = |i: usize| node_label(&g.nodes[i], opts.label_style, ascii);
    let arrow = if ascii { "->" } else { "→" };
    if !g.edges.is_empty() {
        out.push_str(if opts.reduced_edges {
            "\narrows (reduced):\n"
        } else {
            "\narrows:\n"
        });
        let rows: Vec<Vec<String>> = g
            .edges
            .iter()
            .map(|e| {
                vec![
                    format!("  {}", name(e.source)),
                    arrow.to_string(),
                    name(e.target),
                    edge_label(e, ascii),
                ]
            })
            .collect();
        write_table(&mut out, &rows);
    }
    if opts.show_ks && !g.ks.is_empty() {
        out.push_str("\nKnapp-Stein:\n");
        let rows: Vec<Vec<String>> =
            g.ks.iter()
                .map(|k| {
                    let kind = match k.kind {
                        KsKind::IntegralOperator => "integral".to_string(),
                        KsKind::DegenerateDifferential(d) => {
                            format!("differential, degree {}", d.render(ascii))
                        }
                    };
                    vec![
                        format!("  {}", name(k.from)),
                        arrow.to_string(),
                        name(k.to),
                        kind,
                    ]
                })
                .collect();
        write_table(&mut out, &rows);
    }
    Ok(out)
}

pub fn render(g: &MultipletGraph, opts: &RenderOptions) -> Result<String, Error> {
    match opts.format {
        Format::Dot => to_dot(g, opts),
        Format::Json => to_json(g, opts),
        Format::Csv => to_csv(g, opts),
        Format::Text => to_text(g, opts),
    }
}
