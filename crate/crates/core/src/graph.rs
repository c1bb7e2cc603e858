//! Weighted multigraphs, chains, the boundary operator, and the
//! fundamental-cycle basis of the cycle space.

use crate::rational::Rational;
use crate::Error;
use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};
use num_traits::{One, Signed, Zero};

/// An oriented edge with a positive weight. Loops (`tail == head`) and
/// parallel edges are allowed; the orientation is bookkeeping only and does
/// not affect any norm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    pub weight: Rational,
}

impl Edge {
    pub fn new(tail: usize, head: usize, weight: Rational) -> Self {
        Edge { tail, head, weight }
    }
}

/// A finite connected weighted multigraph. Vertices are `0..vertex_count`,
/// edges are indexed in insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedMultigraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl WeightedMultigraph {
    /// Validates and builds a graph: endpoints in range, weights strictly
    /// positive, and the graph connected (every vertex reachable from vertex
    /// 0 ignoring orientation). A graph with no vertices is rejected as
    /// disconnected.
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Self, Error> {
        for (id, e) in edges.iter().enumerate() {
            for v in [e.tail, e.head] {
                if v >= vertex_count {
                    return Err(Error::DanglingEndpoint { edge: id, vertex: v });
                }
            }
            if !e.weight.is_positive() {
                return Err(Error::NonPositiveWeight { edge: id });
            }
        }
        let g = WeightedMultigraph {
            vertex_count,
            edges,
        };
        if vertex_count == 0 || !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    /// Convenience constructor from `(tail, head, weight)` triples.
    pub fn from_triples(
        vertex_count: usize,
        triples: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Result<Self, Error> {
        Self::new(
            vertex_count,
            triples
                .into_iter()
                .map(|(t, h, w)| Edge::new(t, h, w))
                .collect(),
        )
    }

    fn is_connected(&self) -> bool {
        let mut adjacent: Vec<Vec<usize>> = vec![Vec::new(); self.vertex_count];
        for e in &self.edges {
            adjacent[e.tail].push(e.head);
            adjacent[e.head].push(e.tail);
        }
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &u in &adjacent[v] {
                if !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    queue.push_back(u);
                }
            }
        }
        reached == self.vertex_count
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &Edge {
        &self.edges[id]
    }

    pub fn weight(&self, id: usize) -> &Rational {
        &self.edges[id].weight
    }

    pub fn is_loop(&self, id: usize) -> bool {
        self.edges[id].tail == self.edges[id].head
    }

    /// First Betti number `edge_count - vertex_count + 1`.
    pub fn betti(&self) -> usize {
        self.edges.len() + 1 - self.vertex_count
    }

    /// Boundary of a one-chain: the vector over vertices sending each edge
    /// to head minus tail. Loops contribute nothing.
    pub fn boundary(&self, u: &Chain) -> Result<Vec<Rational>, Error> {
        if u.len() != self.edges.len() {
            return Err(Error::DimensionMismatch {
                expected: self.edges.len(),
                got: u.len(),
            });
        }
        let mut out = vec![Rational::zero(); self.vertex_count];
        for (e, coeff) in self.edges.iter().zip(u.coeffs()) {
            if coeff.is_zero() || e.tail == e.head {
                continue;
            }
            out[e.head] += coeff;
            out[e.tail] -= coeff;
        }
        Ok(out)
    }

    /// Whether the chain lies in the cycle space.
    pub fn is_cycle(&self, u: &Chain) -> Result<bool, Error> {
        Ok(self.boundary(u)?.iter().all(Zero::is_zero))
    }
}

/// A one-chain: one rational coefficient per edge, in edge-id order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Chain {
    coeffs: Vec<Rational>,
}

impl Chain {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Chain { coeffs }
    }

    pub fn zero(len: usize) -> Self {
        Chain {
            coeffs: vec![Rational::zero(); len],
        }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, edge: usize) -> &Rational {
        &self.coeffs[edge]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Edge ids carrying a nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}

impl Add for &Chain {
    type Output = Chain;
    fn add(self, rhs: &Chain) -> Chain {
        assert_eq!(self.len(), rhs.len());
        Chain::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &Chain {
    type Output = Chain;
    fn sub(self, rhs: &Chain) -> Chain {
        assert_eq!(self.len(), rhs.len());
        Chain::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &Chain {
    type Output = Chain;
    fn neg(self) -> Chain {
        Chain::new(self.coeffs.iter().map(|a| -a).collect())
    }
}

impl Mul<&Rational> for &Chain {
    type Output = Chain;
    fn mul(self, rhs: &Rational) -> Chain {
        Chain::new(self.coeffs.iter().map(|a| a * rhs).collect())
    }
}

/// Homology basis from a breadth-first spanning tree rooted at vertex 0
/// (edges scanned in id order). Each edge outside the tree determines one
/// fundamental cycle: that edge with coefficient `+1`, closed up through the
/// tree. Cycle-space coordinates in this basis are read off directly from
/// the coefficients on the non-tree edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyBasis {
    forest_edges: BTreeSet<usize>,
    cotree_edges: Vec<usize>,
    fundamental_cycles: Vec<Chain>,
    edge_count: usize,
}

impl HomologyBasis {
    pub fn new(g: &WeightedMultigraph) -> Self {
        let n = g.vertex_count();
        let k = g.edge_count();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (id, e) in g.edges().iter().enumerate() {
            incident[e.tail].push(id);
            if e.head != e.tail {
                incident[e.head].push(id);
            }
        }

        // parent[v] = (parent vertex, tree edge id) for v != 0
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut forest_edges = BTreeSet::new();
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &id in &incident[v] {
                let e = g.edge(id);
                let u = if e.tail == v { e.head } else { e.tail };
                if !seen[u] {
                    seen[u] = true;
                    parent[u] = Some((v, id));
                    forest_edges.insert(id);
                    queue.push_back(u);
                }
            }
        }

        let cotree_edges: Vec<usize> = (0..k).filter(|id| !forest_edges.contains(id)).collect();

        // Signed indicator of the tree path from v up to the root.
        let path_to_root = |mut v: usize| -> Vec<Rational> {
            let mut path = vec![Rational::zero(); k];
            while let Some((p, id)) = parent[v] {
                let e = g.edge(id);
                // Walking v -> p along the edge: with the orientation if the
                // edge points out of v.
                if e.tail == v && e.head == p {
                    path[id] += Rational::one();
                } else {
                    path[id] -= Rational::one();
                }
                v = p;
            }
            path
        };

        let fundamental_cycles = cotree_edges
            .iter()
            .map(|&id| {
                let e = g.edge(id);
                let mut cycle = path_to_root(e.head);
                for (c, t) in cycle.iter_mut().zip(path_to_root(e.tail)) {
                    *c -= t;
                }
                cycle[id] = Rational::one();
                Chain::new(cycle)
            })
            .collect();

        HomologyBasis {
            forest_edges,
            cotree_edges,
            fundamental_cycles,
            edge_count: k,
        }
    }

    pub fn betti(&self) -> usize {
        self.cotree_edges.len()
    }

    pub fn forest_edges(&self) -> &BTreeSet<usize> {
        &self.forest_edges
    }

    pub fn cotree_edges(&self) -> &[usize] {
        &self.cotree_edges
    }

    pub fn fundamental_cycles(&self) -> &[Chain] {
        &self.fundamental_cycles
    }

    /// Coordinates of a cycle in this basis: the coefficients it carries on
    /// the non-tree edges. Fails with [`Error::NotACycle`] if the chain has
    /// nonzero boundary.
    pub fn basis_coords(
        &self,
        g: &WeightedMultigraph,
        u: &Chain,
    ) -> Result<Vec<Rational>, Error> {
        if !g.is_cycle(u)? {
            return Err(Error::NotACycle);
        }
        Ok(self
            .cotree_edges
            .iter()
            .map(|&id| u.coeff(id).clone())
            .collect())
    }

    /// The unique cycle with the given basis coordinates.
    pub fn chain_from_coords(&self, coords: &[Rational]) -> Result<Chain, Error> {
        if coords.len() != self.betti() {
            return Err(Error::DimensionMismatch {
                expected: self.betti(),
                got: coords.len(),
            });
        }
        let mut out = Chain::zero(self.edge_count);
        for (cycle, y) in self.fundamental_cycles.iter().zip(coords) {
            if !y.is_zero() {
                out = &out + &(cycle * y);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn one() -> Rational {
        Rational::one()
    }

    /// Two vertices joined by three parallel edges.
    pub(crate) fn theta() -> WeightedMultigraph {
        WeightedMultigraph::from_triples(2, [(0, 1, one()), (0, 1, one()), (0, 1, one())])
            .unwrap()
    }

    #[test]
    fn rejects_invalid_graphs() {
        assert_eq!(
            WeightedMultigraph::from_triples(2, [(0, 2, one())]),
            Err(Error::DanglingEndpoint { edge: 0, vertex: 2 })
        );
        assert_eq!(
            WeightedMultigraph::from_triples(2, [(0, 1, ratio(0, 1))]),
            Err(Error::NonPositiveWeight { edge: 0 })
        );
        assert_eq!(
            WeightedMultigraph::from_triples(2, [(0, 1, one()), (0, 1, -one())]),
            Err(Error::NonPositiveWeight { edge: 1 })
        );
        assert_eq!(
            WeightedMultigraph::from_triples(3, [(0, 1, one())]),
            Err(Error::Disconnected)
        );
        assert_eq!(
            WeightedMultigraph::from_triples(4, [(0, 1, one()), (2, 3, one())]),
            Err(Error::Disconnected)
        );
        assert_eq!(WeightedMultigraph::new(0, Vec::new()), Err(Error::Disconnected));
    }

    #[test]
    fn accepts_loops_and_parallels() {
        let g = WeightedMultigraph::from_triples(1, [(0, 0, one()), (0, 0, ratio(1, 2))]).unwrap();
        assert_eq!(g.betti(), 2);
        assert!(g.is_loop(0));
        let g = theta();
        assert_eq!(g.betti(), 2);
        assert!(!g.is_loop(0));
    }

    #[test]
    fn boundary_of_loop_vanishes() {
        let g = WeightedMultigraph::from_triples(1, [(0, 0, one())]).unwrap();
        let u = Chain::new(vec![ratio(7, 3)]);
        assert_eq!(g.boundary(&u).unwrap(), vec![Rational::zero()]);
        assert!(g.is_cycle(&u).unwrap());
    }

    #[test]
    fn boundary_is_head_minus_tail() {
        let g = theta();
        let u = Chain::new(vec![ratio(2, 1), ratio(0, 1), ratio(0, 1)]);
        assert_eq!(g.boundary(&u).unwrap(), vec![ratio(-2, 1), ratio(2, 1)]);
        assert!(!g.is_cycle(&u).unwrap());
        let diff = Chain::new(vec![one(), -one(), Rational::zero()]);
        assert!(g.is_cycle(&diff).unwrap());
    }

    #[test]
    fn boundary_checks_dimension() {
        let g = theta();
        assert_eq!(
            g.boundary(&Chain::zero(2)),
            Err(Error::DimensionMismatch { expected: 3, got: 2 })
        );
    }

    #[test]
    fn theta_basis_is_the_expected_one() {
        let g = theta();
        let h = HomologyBasis::new(&g);
        assert_eq!(h.betti(), 2);
        assert_eq!(h.forest_edges().iter().copied().collect::<Vec<_>>(), [0]);
        assert_eq!(h.cotree_edges(), [1, 2]);
        assert_eq!(
            h.fundamental_cycles()[0],
            Chain::new(vec![-one(), one(), Rational::zero()])
        );
        assert_eq!(
            h.fundamental_cycles()[1],
            Chain::new(vec![-one(), Rational::zero(), one()])
        );
    }

    #[test]
    fn fundamental_cycles_are_cycles_with_unit_cotree_coefficient() {
        let g = WeightedMultigraph::from_triples(
            4,
            [
                (0, 1, one()),
                (0, 2, one()),
                (0, 3, one()),
                (1, 2, one()),
                (1, 3, one()),
                (2, 3, one()),
            ],
        )
        .unwrap();
        let h = HomologyBasis::new(&g);
        assert_eq!(h.betti(), 3);
        for (j, cycle) in h.fundamental_cycles().iter().enumerate() {
            assert!(g.is_cycle(cycle).unwrap());
            for (i, &c) in h.cotree_edges().iter().enumerate() {
                let expect = if i == j { one() } else { Rational::zero() };
                assert_eq!(*cycle.coeff(c), expect);
            }
            for coeff in cycle.coeffs() {
                assert!(coeff.is_zero() || coeff.abs().is_one());
            }
        }
    }

    #[test]
    fn coords_roundtrip() {
        let g = theta();
        let h = HomologyBasis::new(&g);
        let y = vec![ratio(3, 2), ratio(-1, 3)];
        let u = h.chain_from_coords(&y).unwrap();
        assert!(g.is_cycle(&u).unwrap());
        assert_eq!(h.basis_coords(&g, &u).unwrap(), y);

        let not_cycle = Chain::new(vec![one(), Rational::zero(), Rational::zero()]);
        assert_eq!(h.basis_coords(&g, &not_cycle), Err(Error::NotACycle));
        assert_eq!(
            h.chain_from_coords(&[one()]),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn loop_edges_are_always_cotree() {
        let g = WeightedMultigraph::from_triples(2, [(0, 1, one()), (1, 1, one())]).unwrap();
        let h = HomologyBasis::new(&g);
        assert_eq!(h.cotree_edges(), [1]);
        assert_eq!(
            h.fundamental_cycles()[0],
            Chain::new(vec![Rational::zero(), one()])
        );
    }
}
