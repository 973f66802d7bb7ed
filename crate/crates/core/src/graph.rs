//! Multiplet diagrams: invariant differential operators between members and
//! Knapp–Stein pairings.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::multiplet::{members, MultipletSpec};
use crate::roots::{hc_parameter, reflect_root, HcTriple, Root};
use crate::symexpr::{LinExpr, SignClass};
use crate::weights::WeightNode;
use crate::Error;

/// Arrow `source → target` realizing an embedding `V^Λ ← V^{Λ−mβ}`; it points
/// to the submodule.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiffOpEdge {
    pub source: usize,
    pub target: usize,
    pub root: Root,
    pub degree: LinExpr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KsKind {
    IntegralOperator,
    DegenerateDifferential(LinExpr),
}

/// Knapp–Stein intertwiner `from → s_{α13}·from`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KsPair {
    pub from: usize,
    pub to: usize,
    pub kind: KsKind,
}

/// Edges and pairs refer to members by their index in `nodes`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipletGraph {
    pub spec: MultipletSpec,
    pub nodes: Vec<WeightNode>,
    pub edges: Vec<DiffOpEdge>,
    pub ks: Vec<KsPair>,
}

impl MultipletGraph {
    pub fn build(spec: &MultipletSpec) -> Result<Self, Error> {
        let nodes = members(spec)?;
        let edges = build_edges(&nodes);
        let ks = build_ks(&nodes)?;
        Ok(MultipletGraph {
            spec: spec.clone(),
            nodes,
            edges,
            ks,
        })
    }

    pub fn node(&self, i: usize) -> &WeightNode {
        &self.nodes[i]
    }

    pub fn index_of(&self, hc: &HcTriple) -> Option<usize> {
        self.nodes.iter().position(|n| &n.hc == hc)
    }

    pub fn index_by_label(&self, label: &str) -> Option<usize> {
        self.nodes
            .iter()
            .position(|n| n.label.as_deref() == Some(label))
    }

    pub fn transitive_reduction(&self) -> Result<MultipletGraph, Error> {
        let kept = transitive_reduction(self.nodes.len(), &self.edges)?;
        Ok(MultipletGraph {
            edges: kept,
            ..self.clone()
        })
    }
}

fn index_map(nodes: &[WeightNode]) -> HashMap<HcTriple, usize> {
    nodes.iter().enumerate().map(|(i, n)| (n.hc, i)).collect()
}

/// One edge per member `A` and M-noncompact root `β` with positive
/// `(A+ρ, β∨)` whose reflection `s_β A` is again a member.
pub fn build_edges(nodes: &[WeightNode]) -> Vec<DiffOpEdge> {
    let index = index_map(nodes);
    let mut edges = Vec::new();
    for (i, node) in nodes.iter().enumerate() {
        for beta in Root::M_NONCOMPACT {
            let degree = hc_parameter(&node.hc, beta);
            if degree.sign_class() != SignClass::Positive {
                continue;
            }
            if let Some(&j) = index.get(&reflect_root(&node.hc, beta)) {
                edges.push(DiffOpEdge {
                    source: i,
                    target: j,
                    root: beta,
                    degree,
                });
            }
        }
    }
    edges
}

/// One pair per member. A pair degenerates to a differential operator of
/// degree `m13` exactly when `m13` is positive. A member fixed by `s_{α13}`
/// yields a single integral self-pair.
pub fn build_ks(nodes: &[WeightNode]) -> Result<Vec<KsPair>, Error> {
    let index = index_map(nodes);
    nodes
        .iter()
        .enumerate()
        .map(|(i, node)| {
            let image = reflect_root(&node.hc, Root::A13);
            let &j = index.get(&image).ok_or(Error::KsClosure(node.hc))?;
            let m13 = hc_parameter(&node.hc, Root::A13);
            let kind = if i != j && m13.sign_class() == SignClass::Positive {
                KsKind::DegenerateDifferential(m13)
            } else {
                KsKind::IntegralOperator
            };
            Ok(KsPair {
                from: i,
                to: j,
                kind,
            })
        })
        .collect()
}

/// Minimal edge subset with the same reachability. Edges keep their input
/// order. Fails on a cycle.
pub fn transitive_reduction(n: usize, edges: &[DiffOpEdge]) -> Result<Vec<DiffOpEdge>, Error> {
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut indegree = vec![0usize; n];
    let mut simple: HashSet<(usize, usize)> = HashSet::new();
    for e in edges {
        if simple.insert((e.source, e.target)) {
            succ[e.source].push(e.target);
            indegree[e.target] += 1;
        }
    }

    // Kahn's algorithm; leftover nodes mean a cycle.
    let mut order = Vec::with_capacity(n);
    let mut ready: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    while let Some(v) = ready.pop() {
        order.push(v);
        for &w in &succ[v] {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                ready.push(w);
            }
        }
    }
    if order.len() != n {
        return Err(Error::Cycle);
    }

    // reach[v]: nodes reachable from v by a path of length >= 1.
    let mut reach: Vec<HashSet<usize>> = vec![HashSet::new(); n];
    for &v in order.iter().rev() {
        let mut r = HashSet::new();
        for &w in &succ[v] {
            r.insert(w);
            r.extend(reach[w].iter().copied());
        }
        reach[v] = r;
    }

    // (u, v) is redundant iff v is reachable from another direct successor of u.
    let redundant = |u: usize, v: usize| succ[u].iter().any(|&w| w != v && reach[w].contains(&v));
    Ok(edges
        .iter()
        .filter(|e| !redundant(e.source, e.target))
        .cloned()
        .collect())
}
