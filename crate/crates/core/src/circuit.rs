//! Enumeration of simple oriented circuits.
//!
//! A simple circuit is a closed walk that repeats no vertex and no edge; its
//! two traversal directions count as distinct oriented circuits. The
//! enumerator is Johnson's algorithm adapted to undirected multigraphs:
//! walks are sequences of darts (an edge id plus a direction), each circuit
//! is discovered exactly once from its smallest vertex, and the only extra
//! rule undirectedness needs is that a walk may never immediately re-cross
//! the edge it just used (that walk backtracks, it is not a circuit, and in
//! a multigraph the same two vertices may still be joined by other edges).

use crate::graph::{Chain, WeightedMultigraph};
use crate::rational::Rational;
use crate::Error;
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_traits::{One, Zero};

/// Direction of travel along an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn unit(self) -> Rational {
        match self {
            Sign::Plus => Rational::one(),
            Sign::Minus => -Rational::one(),
        }
    }
}

/// One step of a walk: an edge traversed with (`Plus`) or against (`Minus`)
/// its orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Step {
    pub edge: usize,
    pub sign: Sign,
}

impl Step {
    pub fn new(edge: usize, sign: Sign) -> Self {
        Step { edge, sign }
    }

    /// Vertex the step leaves from.
    pub fn source(&self, g: &WeightedMultigraph) -> usize {
        match self.sign {
            Sign::Plus => g.edge(self.edge).tail,
            Sign::Minus => g.edge(self.edge).head,
        }
    }

    /// Vertex the step arrives at.
    pub fn target(&self, g: &WeightedMultigraph) -> usize {
        match self.sign {
            Sign::Plus => g.edge(self.edge).head,
            Sign::Minus => g.edge(self.edge).tail,
        }
    }

    pub fn reversed(self) -> Step {
        Step::new(self.edge, self.sign.flipped())
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.sign {
            Sign::Plus => '+',
            Sign::Minus => '-',
        };
        write!(f, "{sign}{}", self.edge)
    }
}

/// A simple oriented circuit in canonical form: the step sequence is rotated
/// so that the smallest edge id comes first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SimpleCircuit {
    steps: Vec<Step>,
    chain: Chain,
    length: Rational,
}

impl SimpleCircuit {
    /// Validates a closed walk and brings it to canonical form.
    ///
    /// Fails with [`Error::NotClosed`] if the walk is empty or consecutive
    /// steps (cyclically) do not chain up, and with [`Error::NotSimple`] if
    /// an edge or a vertex is visited twice.
    pub fn from_walk(g: &WeightedMultigraph, steps: Vec<Step>) -> Result<Self, Error> {
        if steps.is_empty() {
            return Err(Error::NotClosed);
        }
        for (i, s) in steps.iter().enumerate() {
            let next = &steps[(i + 1) % steps.len()];
            if s.target(g) != next.source(g) {
                return Err(Error::NotClosed);
            }
        }
        let mut edges = BTreeSet::new();
        let mut vertices = BTreeSet::new();
        for s in &steps {
            if !edges.insert(s.edge) || !vertices.insert(s.source(g)) {
                return Err(Error::NotSimple);
            }
        }

        let steps = canonical_rotation(steps);
        let mut coeffs = vec![Rational::zero(); g.edge_count()];
        let mut length = Rational::zero();
        for s in &steps {
            coeffs[s.edge] = s.sign.unit();
            length += g.weight(s.edge);
        }
        Ok(SimpleCircuit {
            steps,
            chain: Chain::new(coeffs),
            length,
        })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of edges in the circuit.
    pub fn step_count(&self) -> usize {
        self.steps.len()
    }

    /// Total weight of the circuit's edges.
    pub fn length(&self) -> &Rational {
        &self.length
    }

    /// The circuit as a one-chain with coefficients in `{-1, 0, +1}`.
    pub fn chain(&self) -> &Chain {
        &self.chain
    }

    /// Vertices visited, in walk order starting from the canonical step.
    pub fn vertices(&self, g: &WeightedMultigraph) -> Vec<usize> {
        self.steps.iter().map(|s| s.source(g)).collect()
    }

    /// The same circuit traversed backwards.
    pub fn reversed(&self) -> SimpleCircuit {
        let steps: Vec<Step> = self.steps.iter().rev().map(|s| s.reversed()).collect();
        SimpleCircuit {
            steps: canonical_rotation(steps),
            chain: -&self.chain,
            length: self.length.clone(),
        }
    }
}

impl fmt::Display for SimpleCircuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

fn canonical_rotation(steps: Vec<Step>) -> Vec<Step> {
    let first = steps
        .iter()
        .enumerate()
        .min_by_key(|(_, s)| s.edge)
        .map(|(i, _)| i)
        .unwrap_or(0);
    let mut steps = steps;
    steps.rotate_left(first);
    steps
}

/// All simple oriented circuits of a graph, sorted by step sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitSet {
    oriented: Vec<SimpleCircuit>,
}

impl CircuitSet {
    pub fn oriented(&self) -> &[SimpleCircuit] {
        &self.oriented
    }

    pub fn len(&self) -> usize {
        self.oriented.len()
    }

    pub fn is_empty(&self) -> bool {
        self.oriented.is_empty()
    }

    /// Number of circuits up to orientation reversal.
    pub fn geometric_count(&self) -> usize {
        self.oriented.len() / 2
    }

    pub fn get(&self, id: usize) -> &SimpleCircuit {
        &self.oriented[id]
    }

    pub fn iter(&self) -> core::slice::Iter<'_, SimpleCircuit> {
        self.oriented.iter()
    }
}

impl<'a> IntoIterator for &'a CircuitSet {
    type Item = &'a SimpleCircuit;
    type IntoIter = core::slice::Iter<'a, SimpleCircuit>;
    fn into_iter(self) -> Self::IntoIter {
        self.oriented.iter()
    }
}

/// Default bound on the number of oriented circuits the enumerator will
/// produce before giving up.
pub const DEFAULT_CIRCUIT_CAP: usize = 1_000_000;

/// Enumerates every simple oriented circuit with the default cap.
pub fn enumerate_circuits(g: &WeightedMultigraph) -> Result<CircuitSet, Error> {
    enumerate_circuits_capped(g, DEFAULT_CIRCUIT_CAP)
}

/// Enumerates every simple oriented circuit, failing with
/// [`Error::CircuitCapExceeded`] once more than `cap` have been found.
pub fn enumerate_circuits_capped(
    g: &WeightedMultigraph,
    cap: usize,
) -> Result<CircuitSet, Error> {
    let mut walks: Vec<Vec<Step>> = Vec::new();
    for root in 0..g.vertex_count() {
        let mut search = Search {
            g,
            root,
            darts: darts_at_least(g, root),
            blocked: vec![false; g.vertex_count()],
            unblock_on: vec![BTreeSet::new(); g.vertex_count()],
            path: Vec::new(),
            walks: &mut walks,
            cap,
        };
        search.explore(root)?;
    }

    let mut oriented: Vec<SimpleCircuit> = walks
        .into_iter()
        .map(|w| {
            SimpleCircuit::from_walk(g, w).expect("enumerated walks are simple circuits")
        })
        .collect();
    oriented.sort();
    Ok(CircuitSet { oriented })
}

/// Outgoing darts per vertex, restricted to endpoints `>= root`, in (edge,
/// sign) order. A loop at `v` yields both of its darts.
fn darts_at_least(g: &WeightedMultigraph, root: usize) -> Vec<Vec<Step>> {
    let mut darts: Vec<Vec<Step>> = vec![Vec::new(); g.vertex_count()];
    for (id, e) in g.edges().iter().enumerate() {
        if e.tail < root || e.head < root {
            continue;
        }
        darts[e.tail].push(Step::new(id, Sign::Plus));
        darts[e.head].push(Step::new(id, Sign::Minus));
    }
    darts
}

struct Search<'a> {
    g: &'a WeightedMultigraph,
    root: usize,
    darts: Vec<Vec<Step>>,
    blocked: Vec<bool>,
    /// Vertices to unblock when the key vertex unblocks (Johnson's B-lists).
    unblock_on: Vec<BTreeSet<usize>>,
    path: Vec<Step>,
    walks: &'a mut Vec<Vec<Step>>,
    cap: usize,
}

impl Search<'_> {
    /// Extends the current path from `v`, reporting whether any circuit was
    /// completed below this point.
    fn explore(&mut self, v: usize) -> Result<bool, Error> {
        let mut found = false;
        self.blocked[v] = true;
        for i in 0..self.darts[v].len() {
            let dart = self.darts[v][i];
            if let Some(last) = self.path.last() {
                if last.edge == dart.edge {
                    continue;
                }
            }
            let target = dart.target(self.g);
            if target == self.root {
                let mut walk = self.path.clone();
                walk.push(dart);
                self.walks.push(walk);
                if self.walks.len() > self.cap {
                    return Err(Error::CircuitCapExceeded { cap: self.cap });
                }
                found = true;
            } else if !self.blocked[target] {
                self.path.push(dart);
                let below = self.explore(target)?;
                self.path.pop();
                found |= below;
            }
        }
        if found {
            self.unblock(v);
        } else {
            for i in 0..self.darts[v].len() {
                let w = self.darts[v][i].target(self.g);
                if w != v {
                    self.unblock_on[w].insert(v);
                }
            }
        }
        Ok(found)
    }

    fn unblock(&mut self, v: usize) {
        self.blocked[v] = false;
        let waiting = core::mem::take(&mut self.unblock_on[v]);
        for u in waiting {
            if self.blocked[u] {
                self.unblock(u);
            }
        }
    }
}
