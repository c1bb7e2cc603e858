//! File formats: the JSON graph schema and the JSON payloads the
//! subcommands print. Rationals travel as strings, `"p/q"` in lowest terms
//! on the way out, `"p/q"`, integer, or finite decimal on the way in.

use crate::CliError;
use serde::{Deserialize, Serialize};
use stableball::rational::{format_rational, parse_rational, Rational};
use stableball::{Chain, CircuitSet, Edge, StableBall, WeightedMultigraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertex_count: usize,
    pub edges: Vec<EdgeFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeFile {
    pub tail: usize,
    pub head: usize,
    pub weight: String,
}

impl GraphFile {
    pub fn from_graph(g: &WeightedMultigraph) -> GraphFile {
        GraphFile {
            vertex_count: g.vertex_count(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeFile {
                    tail: e.tail,
                    head: e.head,
                    weight: format_rational(&e.weight),
                })
                .collect(),
        }
    }

    pub fn to_graph(&self) -> Result<WeightedMultigraph, CliError> {
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            edges.push(Edge::new(e.tail, e.head, parse_rational(&e.weight)?));
        }
        Ok(WeightedMultigraph::new(self.vertex_count, edges)?)
    }
}

pub fn parse_graph_json(text: &str) -> Result<WeightedMultigraph, CliError> {
    let file: GraphFile = serde_json::from_str(text)?;
    file.to_graph()
}

pub fn graph_json(g: &WeightedMultigraph) -> String {
    serde_json::to_string_pretty(&GraphFile::from_graph(g)).expect("graph serializes")
}

pub fn rationals_to_strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

fn chain_to_strings(chain: &Chain) -> Vec<String> {
    rationals_to_strings(chain.coeffs())
}

/// Parses comma-separated class coordinates; empty entries are dropped so
/// that `--class ""` denotes the empty class of a tree.
pub fn parse_class(values: &[String]) -> Result<Vec<Rational>, CliError> {
    values
        .iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| Ok(parse_rational(s)?))
        .collect()
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BallFile {
    pub betti: usize,
    pub vertex_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_bound: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub attains_bound: Option<bool>,
    pub vertices: Vec<BallVertexFile>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BallVertexFile {
    /// Index into the circuit listing of the circuit this vertex normalizes.
    pub circuit: usize,
    /// Stable norm of that circuit.
    pub length: String,
    /// Vertex in homology-basis coordinates.
    pub basis: Vec<String>,
    /// Vertex as a cycle, one coefficient per edge.
    pub chain: Vec<String>,
}

impl BallFile {
    pub fn new(ball: &StableBall, circuits: &CircuitSet, with_bound: bool) -> BallFile {
        let vertices = ball
            .source_circuits()
            .iter()
            .enumerate()
            .map(|(i, &src)| BallVertexFile {
                circuit: src,
                length: format_rational(circuits.get(src).length()),
                basis: rationals_to_strings(&ball.vertices_basis()[i]),
                chain: chain_to_strings(&ball.vertices_chain()[i]),
            })
            .collect();
        BallFile {
            betti: ball.betti(),
            vertex_count: ball.vertex_count(),
            vertex_bound: with_bound.then(|| stableball::norm::vertex_bound(ball.betti()).to_string()),
            attains_bound: with_bound.then(|| ball.attains_bound()),
            vertices,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct NormFile {
    pub betti: usize,
    pub class: Vec<String>,
    pub norm: String,
    /// The unique cycle representative whose weighted l1 norm this is.
    pub chain: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DecompositionFile {
    pub class: Vec<String>,
    pub total_length: String,
    pub circuit_count: usize,
    pub circuits: Vec<DecompositionEntryFile>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DecompositionEntryFile {
    /// Signed edge ids in walk order, e.g. `+0 -2 +1`.
    pub steps: String,
    pub length: String,
    pub multiplicity: usize,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VerifyFile {
    pub betti: usize,
    pub vertex_count: usize,
    pub all_vertices_extreme: bool,
    pub oracle_agrees: bool,
    pub infimum_agrees: bool,
    pub pass: bool,
}
