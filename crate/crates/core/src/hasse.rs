//! DOT and JSON serializations of interval Hasse diagrams.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::interval::WeakInterval;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Weak,
    Strong,
}

impl FromStr for Order {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "weak" => Ok(Order::Weak),
            "strong" => Ok(Order::Strong),
            other => Err(format!("unknown order `{other}` (expected weak or strong)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum EdgeLabel {
    Weak { i: usize },
    Strong { i: usize, j: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub label: EdgeLabel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HasseGraph {
    pub pi: String,
    pub n: usize,
    pub elements: Vec<String>,
    pub rank_sizes: Vec<usize>,
    pub edges: Vec<Edge>,
}

/// Cover edges of the chosen order, sorted by `(src, dst)`.
pub fn hasse_graph(interval: &WeakInterval, order: Order) -> HasseGraph {
    let mut edges = Vec::new();
    for src in 0..interval.len() {
        match order {
            Order::Weak => edges.extend(interval.weak_up_covers(src).iter().map(|c| Edge {
                src,
                dst: c.target,
                label: EdgeLabel::Weak { i: c.i },
            })),
            Order::Strong => edges.extend(interval.strong_up_covers(src).iter().map(|c| Edge {
                src,
                dst: c.target,
                label: EdgeLabel::Strong { i: c.i, j: c.j },
            })),
        }
    }
    edges.sort_by_key(|e| (e.src, e.dst));
    HasseGraph {
        pi: interval.pi().to_string(),
        n: interval.n(),
        elements: interval.elements().iter().map(ToString::to_string).collect(),
        rank_sizes: interval.rank_sizes(),
        edges,
    }
}

pub fn hasse_export(interval: &WeakInterval, order: Order, format: GraphFormat) -> String {
    let graph = hasse_graph(interval, order);
    match format {
        GraphFormat::Json => serde_json::to_string(&graph).expect("plain data serializes"),
        GraphFormat::Dot => to_dot(&graph, order),
    }
}

fn to_dot(graph: &HasseGraph, order: Order) -> String {
    let name = match order {
        Order::Weak => "weak",
        Order::Strong => "strong",
    };
    let mut out = String::new();
    let _ = writeln!(out, "digraph {name} {{");
    let _ = writeln!(out, "  rankdir=BT;");
    for (idx, label) in graph.elements.iter().enumerate() {
        let _ = writeln!(out, "  n{idx} [label=\"{label}\"];");
    }
    for e in &graph.edges {
        let label = match e.label {
            EdgeLabel::Weak { i } => format!("{i}"),
            EdgeLabel::Strong { i, j } => format!("({i},{j})"),
        };
        let _ = writeln!(out, "  n{} -> n{} [label=\"{label}\"];", e.src, e.dst);
    }
    out.push_str("}\n");
    out
}
