//! File formats for graphs and distributions.

use serde::Serialize;

use crate::graph::{E0Graph, ValencyDistribution};
use crate::infinite::BallGraph;
use crate::word::Word;

#[derive(Debug, Serialize)]
struct Vertex<'a> {
    id: usize,
    word: &'a Word,
    length: usize,
}

#[derive(Debug, Serialize)]
struct GraphFile<'a> {
    group: String,
    vertices: Vec<Vertex<'a>>,
    edges: Vec<[usize; 2]>,
}

fn to_json(file: &GraphFile<'_>) -> String {
    serde_json::to_string_pretty(file).expect("graph serializes")
}

/// `{"group", "vertices": [{"id","word","length"}], "edges": [[i,j]]}` with `i < j`.
pub fn graph_json(graph: &E0Graph) -> String {
    let inv = graph.vertices();
    to_json(&GraphFile {
        group: graph.spec().to_string(),
        vertices: (0..inv.len()).map(|id| Vertex { id, word: inv.word(id), length: inv.length(id) }).collect(),
        edges: graph.edges().into_iter().map(|(i, j)| [i, j]).collect(),
    })
}

/// The same layout for the graph of a ball.
pub fn ball_graph_json(graph: &BallGraph) -> String {
    to_json(&GraphFile {
        group: graph.ball().group().spec().to_string(),
        vertices: (0..graph.vertex_count())
            .map(|id| Vertex { id, word: graph.word(id), length: graph.word(id).len() })
            .collect(),
        edges: graph.edges().into_iter().map(|(i, j)| [i, j]).collect(),
    })
}

fn dot(name: &str, labels: impl Iterator<Item = String>, edges: &[(usize, usize)]) -> String {
    let mut out = format!("graph \"{name}\" {{\n");
    for (i, label) in labels.enumerate() {
        out.push_str(&format!("  {i} [label=\"{label}\"];\n"));
    }
    for (i, j) in edges {
        out.push_str(&format!("  {i} -- {j};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn graph_dot(graph: &E0Graph) -> String {
    let inv = graph.vertices();
    dot(&graph.spec().to_string(), (0..inv.len()).map(|i| inv.word(i).to_string()), &graph.edges())
}

pub fn ball_graph_dot(graph: &BallGraph) -> String {
    dot(
        &graph.ball().group().spec().to_string(),
        (0..graph.vertex_count()).map(|i| graph.word(i).to_string()),
        &graph.edges(),
    )
}

pub fn distribution_csv(dist: &ValencyDistribution) -> String {
    dist.to_csv()
}
