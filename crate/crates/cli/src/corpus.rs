//! Built-in example graphs and seeded random multigraphs for `gen`.
//!
//! Recognized names:
//!
//! * `theta` — two vertices joined by three parallel unit edges;
//! * `K4`, `K33` — complete graph on 4 vertices, complete bipartite 3+3,
//!   unit weights, edges in lexicographic endpoint order;
//! * `bouquet-K` — one vertex with `K` unit loops (`K >= 1`);
//! * `random(S,V,E)` — connected random multigraph with `V` vertices and
//!   `E` edges (loops and parallels allowed), weights rational in `(0, 5]`,
//!   drawn from a ChaCha8 stream seeded with `S`. A `--seed` flag overrides
//!   `S`.

use crate::CliError;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stableball::rational::ratio;
use stableball::WeightedMultigraph;

pub fn corpus_graph(name: &str, seed: Option<u64>) -> Result<WeightedMultigraph, CliError> {
    let trimmed = name.trim();
    if trimmed.eq_ignore_ascii_case("theta") {
        return Ok(theta());
    }
    if trimmed.eq_ignore_ascii_case("k4") {
        return Ok(k4());
    }
    if trimmed.eq_ignore_ascii_case("k33") {
        return Ok(k33());
    }
    if let Some(rest) = trimmed.strip_prefix("bouquet-") {
        let loops: usize = rest
            .parse()
            .map_err(|_| CliError::UnknownCorpusName(name.to_string()))?;
        if loops == 0 {
            return Err(CliError::BadInput("a bouquet needs at least one loop".into()));
        }
        return Ok(bouquet(loops));
    }
    if let Some(args) = trimmed
        .strip_prefix("random(")
        .and_then(|r| r.strip_suffix(')'))
    {
        let parts: Vec<&str> = args.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(CliError::UnknownCorpusName(name.to_string()));
        }
        let parse = |s: &str| -> Result<u64, CliError> {
            s.parse()
                .map_err(|_| CliError::UnknownCorpusName(name.to_string()))
        };
        let default_seed = parse(parts[0])?;
        let vertices = parse(parts[1])? as usize;
        let edges = parse(parts[2])? as usize;
        return random_graph(seed.unwrap_or(default_seed), vertices, edges);
    }
    Err(CliError::UnknownCorpusName(name.to_string()))
}

pub fn theta() -> WeightedMultigraph {
    let unit = ratio(1, 1);
    WeightedMultigraph::from_triples(
        2,
        [(0, 1, unit.clone()), (0, 1, unit.clone()), (0, 1, unit)],
    )
    .expect("theta graph is valid")
}

pub fn bouquet(loops: usize) -> WeightedMultigraph {
    WeightedMultigraph::from_triples(1, (0..loops).map(|_| (0, 0, ratio(1, 1))))
        .expect("bouquet is valid")
}

pub fn k4() -> WeightedMultigraph {
    let mut triples = Vec::new();
    for tail in 0..4 {
        for head in (tail + 1)..4 {
            triples.push((tail, head, ratio(1, 1)));
        }
    }
    WeightedMultigraph::from_triples(4, triples).expect("K4 is valid")
}

pub fn k33() -> WeightedMultigraph {
    let mut triples = Vec::new();
    for tail in 0..3 {
        for head in 3..6 {
            triples.push((tail, head, ratio(1, 1)));
        }
    }
    WeightedMultigraph::from_triples(6, triples).expect("K33 is valid")
}

/// Connected random multigraph: a random spanning tree on `vertices`
/// vertices plus `edges - vertices + 1` uniform extra edges, each weight a
/// rational in `(0, 5]` with denominator at most 4. The same seed always
/// yields the same graph.
pub fn random_graph(
    seed: u64,
    vertices: usize,
    edges: usize,
) -> Result<WeightedMultigraph, CliError> {
    if vertices == 0 {
        return Err(CliError::BadInput("a random graph needs at least one vertex".into()));
    }
    if edges + 1 < vertices {
        return Err(CliError::BadInput(format!(
            "{edges} edges cannot connect {vertices} vertices"
        )));
    }
    fn weight(rng: &mut ChaCha8Rng) -> stableball::Rational {
        let denom = rng.gen_range(1..=4);
        ratio(rng.gen_range(1..=5 * denom), denom)
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut triples = Vec::with_capacity(edges);
    for child in 1..vertices {
        let parent = rng.gen_range(0..child);
        let w = weight(&mut rng);
        triples.push((parent, child, w));
    }
    while triples.len() < edges {
        let tail = rng.gen_range(0..vertices);
        let head = rng.gen_range(0..vertices);
        let w = weight(&mut rng);
        triples.push((tail, head, w));
    }
    Ok(WeightedMultigraph::from_triples(vertices, triples).expect("construction is connected"))
}
