//! The stable norm, its unit ball, and circuit decompositions.
//!
//! On a graph every real homology class in degree one has a unique cycle
//! representative, so the stable norm is the weighted l1 norm of that cycle.
//! Its unit ball is the convex hull of the normalized simple oriented
//! circuits, and in fact every normalized circuit is a vertex: a circuit
//! visits each of its vertices once, so no strict sub-walk of it closes up,
//! and the l1 equality case forces any norm-preserving convex combination to
//! reuse the circuit itself.

use crate::circuit::{CircuitSet, Sign, SimpleCircuit, Step};
use crate::graph::{Chain, HomologyBasis, WeightedMultigraph};
use crate::polytope::{self, Extremity, PointSet};
use crate::rational::Rational;
use crate::Error;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Weighted l1 norm of a one-chain.
pub fn chain_norm(g: &WeightedMultigraph, u: &Chain) -> Result<Rational, Error> {
    if u.len() != g.edge_count() {
        return Err(Error::DimensionMismatch {
            expected: g.edge_count(),
            got: u.len(),
        });
    }
    Ok(u.coeffs()
        .iter()
        .zip(g.edges())
        .map(|(c, e)| c.abs() * &e.weight)
        .sum())
}

/// Stable norm of the homology class with the given basis coordinates: the
/// weighted l1 norm of its unique cycle representative.
pub fn stable_norm(
    g: &WeightedMultigraph,
    basis: &HomologyBasis,
    coords: &[Rational],
) -> Result<Rational, Error> {
    chain_norm(g, &basis.chain_from_coords(coords)?)
}

/// The unit ball of the stable norm, as a vertex list.
///
/// Vertices are kept in circuit order; `source_circuits[i]` is the index in
/// `circuits` of the circuit whose normalization is vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableBall {
    betti: usize,
    vertices_chain: Vec<Chain>,
    vertices_basis: Vec<Vec<Rational>>,
    source_circuits: Vec<usize>,
}

impl StableBall {
    pub fn betti(&self) -> usize {
        self.betti
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices_basis.len()
    }

    /// Vertices as cycles, one rational coefficient per edge.
    pub fn vertices_chain(&self) -> &[Chain] {
        &self.vertices_chain
    }

    /// Vertices in homology-basis coordinates.
    pub fn vertices_basis(&self) -> &[Vec<Rational>] {
        &self.vertices_basis
    }

    pub fn source_circuits(&self) -> &[usize] {
        &self.source_circuits
    }

    /// The vertices as a point set in basis coordinates.
    pub fn vertex_set(&self) -> PointSet {
        PointSet::new(self.betti, self.vertices_basis.clone())
            .expect("ball vertices share the basis dimension")
    }

    /// Whether the vertex count attains [`vertex_bound`].
    pub fn attains_bound(&self) -> bool {
        BigInt::from(self.vertex_count()) == vertex_bound(self.betti)
    }
}

/// Upper bound `2 (2^betti - 1)` on the number of ball vertices: oriented
/// circuits are injectively determined by their edge support, a nonzero
/// vector over GF(2) in the cycle space, modulo orientation reversal.
pub fn vertex_bound(betti: usize) -> BigInt {
    ((BigInt::one() << betti) - BigInt::one()) * BigInt::from(2)
}

/// Builds the unit ball of the stable norm from the circuit list: each
/// oriented circuit, divided by its norm, is one vertex.
pub fn stable_ball(
    g: &WeightedMultigraph,
    basis: &HomologyBasis,
    circuits: &CircuitSet,
) -> StableBall {
    let mut vertices_chain = Vec::with_capacity(circuits.len());
    let mut vertices_basis = Vec::with_capacity(circuits.len());
    let mut source_circuits = Vec::with_capacity(circuits.len());
    for (i, c) in circuits.iter().enumerate() {
        let norm = chain_norm(g, c.chain()).expect("circuit chain matches its graph");
        let inv = norm.recip();
        let vertex = c.chain() * &inv;
        vertices_basis.push(
            basis
                .basis_coords(g, &vertex)
                .expect("circuit chains are cycles"),
        );
        vertices_chain.push(vertex);
        source_circuits.push(i);
    }
    StableBall {
        betti: basis.betti(),
        vertices_chain,
        vertices_basis,
        source_circuits,
    }
}

/// Dual norm of a linear functional on homology: the maximum of the
/// functional over the unit ball, attained at a vertex.
pub fn dual_norm(ball: &StableBall, xi: &[Rational]) -> Result<Rational, Error> {
    if ball.betti() == 0 {
        return Err(Error::DegenerateBall);
    }
    if xi.len() != ball.betti() {
        return Err(Error::DimensionMismatch {
            expected: ball.betti(),
            got: xi.len(),
        });
    }
    polytope::support_value(xi, &ball.vertex_set())
}

/// Merges two simple circuits: darts traversing an edge in opposite
/// directions cancel, and what remains splits into simple circuits. The
/// output chains sum exactly to `c1 + c2`, and the output never traverses
/// any edge in both directions.
pub fn merge_circuits(
    g: &WeightedMultigraph,
    c1: &SimpleCircuit,
    c2: &SimpleCircuit,
) -> Vec<SimpleCircuit> {
    let sum = c1.chain() + c2.chain();
    let mut out = Vec::new();
    for (circuit, multiplicity) in extract_circuits(g, &sum) {
        for _ in 0..multiplicity {
            out.push(circuit.clone());
        }
    }
    out
}

/// A finite multiset of simple circuits with multiplicities, representing
/// an integral homology class as a sum of circuits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    entries: Vec<(SimpleCircuit, usize)>,
    class_chain: Chain,
}

impl Decomposition {
    /// Circuits with their multiplicities, in canonical circuit order.
    pub fn entries(&self) -> &[(SimpleCircuit, usize)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total number of circuits, counted with multiplicity.
    pub fn circuit_count(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    /// Cycle representative of the decomposed class.
    pub fn class_chain(&self) -> &Chain {
        &self.class_chain
    }

    /// Sum of the circuit chains, with multiplicity.
    pub fn chain_sum(&self) -> Chain {
        let mut sum = Chain::zero(self.class_chain.len());
        for (c, m) in &self.entries {
            sum = &sum + &(c.chain() * &Rational::from(BigInt::from(*m)));
        }
        sum
    }

    /// Sum of the circuit lengths, with multiplicity.
    pub fn total_length(&self) -> Rational {
        self.entries
            .iter()
            .map(|(c, m)| c.length() * &Rational::from(BigInt::from(*m)))
            .sum()
    }
}

/// Writes an integral homology class as a sum of simple circuits whose
/// lengths add up to the stable norm of the class and which never traverse
/// an edge in opposite directions.
///
/// Coordinates must be integers; otherwise [`Error::NonIntegralClass`]
/// reports the first offending position.
pub fn decompose_class(
    g: &WeightedMultigraph,
    basis: &HomologyBasis,
    coords: &[Rational],
) -> Result<Decomposition, Error> {
    for (index, c) in coords.iter().enumerate() {
        if !c.is_integer() {
            return Err(Error::NonIntegralClass { index });
        }
    }
    let class_chain = basis.chain_from_coords(coords)?;
    debug_assert!(class_chain.coeffs().iter().all(|c| c.is_integer()));
    let entries = extract_circuits(g, &class_chain);
    Ok(Decomposition {
        entries,
        class_chain,
    })
}

/// Splits an integral cycle into simple circuits that respect its signs:
/// every extracted dart traverses its edge in the direction the cycle does,
/// so the lengths add up to the weighted l1 norm of the cycle.
///
/// Repeatedly walks from the lowest available vertex, always leaving along
/// the lowest-numbered usable edge, and closes a circuit at the first
/// repeated vertex; the circuit is subtracted as often as the remaining
/// coefficients allow. The cycle condition keeps the walk from getting
/// stuck, and each extraction strictly shrinks the remaining coefficients.
fn extract_circuits(g: &WeightedMultigraph, cycle: &Chain) -> Vec<(SimpleCircuit, usize)> {
    let mut residual: Vec<Rational> = cycle.coeffs().to_vec();
    let mut found: Vec<(SimpleCircuit, usize)> = Vec::new();

    // Outgoing dart at `v` respecting the residual sign, smallest edge first.
    let leave = |residual: &[Rational], v: usize| -> Option<Step> {
        for (id, e) in g.edges().iter().enumerate() {
            if residual[id].is_positive() && e.tail == v {
                return Some(Step::new(id, Sign::Plus));
            }
            if residual[id].is_negative() && e.head == v {
                return Some(Step::new(id, Sign::Minus));
            }
        }
        None
    };

    loop {
        let Some(start_edge) = residual.iter().position(|c| !c.is_zero()) else {
            break;
        };
        let e = g.edge(start_edge);
        let mut at = if residual[start_edge].is_positive() {
            e.tail
        } else {
            e.head
        };

        let mut steps: Vec<Step> = Vec::new();
        let mut seen_at: Vec<Option<usize>> = alloc::vec![None; g.vertex_count()];
        let circuit_steps = loop {
            if let Some(first) = seen_at[at] {
                break steps.split_off(first);
            }
            seen_at[at] = Some(steps.len());
            let step = leave(&residual, at).expect("nonzero cycles always have a way out");
            at = step.target(g);
            steps.push(step);
        };

        let circuit =
            SimpleCircuit::from_walk(g, circuit_steps).expect("first-repeat cut is simple");
        let times = circuit
            .steps()
            .iter()
            .map(|s| residual[s.edge].abs())
            .min()
            .expect("circuits are nonempty")
            .to_integer();
        debug_assert!(times >= BigInt::one());
        let scale = Rational::from(times.clone());
        for s in circuit.steps() {
            let delta = &s.sign.unit() * &scale;
            residual[s.edge] -= delta;
        }
        let times = usize::try_from(&times).expect("multiplicities fit in usize");
        found.push((circuit, times));
    }

    found.sort_by(|a, b| a.0.cmp(&b.0));
    // The same circuit can be extracted more than once; fold duplicates.
    let mut merged: Vec<(SimpleCircuit, usize)> = Vec::new();
    for (c, m) in found {
        match merged.last_mut() {
            Some((prev, pm)) if *prev == c => *pm += m,
            _ => merged.push((c, m)),
        }
    }
    merged
}

/// Per-vertex result of [`verify_vertices`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCheck {
    /// Index of the vertex in the ball.
    pub vertex: usize,
    /// Whether the vertex is extreme among all ball vertices, together with
    /// the certificate.
    pub verdict: Extremity,
}

/// Outcome of checking every claimed ball vertex for extremity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<VertexCheck>,
    pub pass: bool,
}

/// Certifies that each ball vertex is extreme among the full vertex list,
/// via independent linear programs with checkable certificates.
pub fn verify_vertices(ball: &StableBall) -> VerificationReport {
    let mut checks = Vec::with_capacity(ball.vertex_count());
    let mut pass = true;
    for i in 0..ball.vertex_count() {
        let others: Vec<Vec<Rational>> = ball
            .vertices_basis()
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| v.clone())
            .collect();
        let others = PointSet::new(ball.betti(), others).expect("vertices share a dimension");
        let verdict = polytope::is_extreme(&ball.vertices_basis()[i], &others)
            .expect("dimensions match by construction");
        pass &= verdict.is_extreme();
        checks.push(VertexCheck { vertex: i, verdict });
    }
    VerificationReport { checks, pass }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::enumerate_circuits;
    use crate::rational::ratio;
    use alloc::vec;

    fn one() -> Rational {
        Rational::one()
    }

    fn theta() -> WeightedMultigraph {
        WeightedMultigraph::from_triples(2, [(0, 1, one()), (0, 1, one()), (0, 1, one())])
            .unwrap()
    }

    fn ball_of(g: &WeightedMultigraph) -> (HomologyBasis, StableBall) {
        let basis = HomologyBasis::new(g);
        let circuits = enumerate_circuits(g).unwrap();
        let ball = stable_ball(g, &basis, &circuits);
        (basis, ball)
    }

    #[test]
    fn chain_norm_is_the_weighted_l1_norm() {
        let g = WeightedMultigraph::from_triples(2, [(0, 1, ratio(1, 2)), (0, 1, ratio(3, 1))])
            .unwrap();
        let u = Chain::new(vec![ratio(-4, 1), ratio(2, 3)]);
        assert_eq!(chain_norm(&g, &u).unwrap(), ratio(4, 1));
        assert_eq!(
            chain_norm(&g, &Chain::zero(1)),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn stable_norm_on_theta() {
        let g = theta();
        let basis = HomologyBasis::new(&g);
        // Class (1, 0): cycle -e0 + e1, two unit edges.
        assert_eq!(stable_norm(&g, &basis, &[one(), Rational::zero()]).unwrap(), ratio(2, 1));
        // Class (1, 1): cycle -2 e0 + e1 + e2.
        assert_eq!(stable_norm(&g, &basis, &[one(), one()]).unwrap(), ratio(4, 1));
        // Class (1, -1): cycle e1 - e2.
        assert_eq!(stable_norm(&g, &basis, &[one(), -one()]).unwrap(), ratio(2, 1));
        assert!(stable_norm(&g, &basis, &[]).is_err());
    }

    #[test]
    fn stable_norm_axioms_spot_checked() {
        let g = theta();
        let basis = HomologyBasis::new(&g);
        let y = [ratio(2, 3), ratio(-1, 2)];
        let ny: Vec<Rational> = y.iter().map(|c| -c).collect();
        let n = stable_norm(&g, &basis, &y).unwrap();
        assert!(n.is_positive());
        assert_eq!(stable_norm(&g, &basis, &ny).unwrap(), n);
        let double: Vec<Rational> = y.iter().map(|c| c * &ratio(2, 1)).collect();
        assert_eq!(stable_norm(&g, &basis, &double).unwrap(), &n * &ratio(2, 1));
    }

    #[test]
    fn theta_ball_has_six_vertices() {
        let g = theta();
        let (_, ball) = ball_of(&g);
        assert_eq!(ball.betti(), 2);
        assert_eq!(ball.vertex_count(), 6);
        assert!(ball.attains_bound());
        let h = ratio(1, 2);
        let mut expected = vec![
            vec![-h.clone(), Rational::zero()],
            vec![h.clone(), Rational::zero()],
            vec![Rational::zero(), -h.clone()],
            vec![Rational::zero(), h.clone()],
            vec![h.clone(), -h.clone()],
            vec![-h.clone(), h.clone()],
        ];
        expected.sort();
        let mut got = ball.vertices_basis().to_vec();
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn ball_vertices_have_unit_norm() {
        let g = theta();
        let (basis, ball) = ball_of(&g);
        for (v, y) in ball.vertices_chain().iter().zip(ball.vertices_basis()) {
            assert_eq!(chain_norm(&g, v).unwrap(), one());
            assert_eq!(stable_norm(&g, &basis, y).unwrap(), one());
        }
    }

    #[test]
    fn bound_formula() {
        assert_eq!(vertex_bound(0), BigInt::from(0));
        assert_eq!(vertex_bound(1), BigInt::from(2));
        assert_eq!(vertex_bound(2), BigInt::from(6));
        assert_eq!(vertex_bound(3), BigInt::from(14));
        assert_eq!(vertex_bound(4), BigInt::from(30));
        assert_eq!(vertex_bound(70), BigInt::from(2u8) * ((BigInt::one() << 70) - 1));
    }

    #[test]
    fn dual_norm_on_theta() {
        let g = theta();
        let (_, ball) = ball_of(&g);
        // Support of the hexagon in direction (1, 0) is 1/2.
        assert_eq!(dual_norm(&ball, &[one(), Rational::zero()]).unwrap(), ratio(1, 2));
        assert_eq!(dual_norm(&ball, &[one(), -one()]).unwrap(), one());
        assert_eq!(dual_norm(&ball, &[Rational::zero(), Rational::zero()]).unwrap(), ratio(0, 1));
        assert_eq!(
            dual_norm(&ball, &[one()]),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn dual_norm_needs_positive_betti() {
        let g = WeightedMultigraph::from_triples(2, [(0, 1, one())]).unwrap();
        let (_, ball) = ball_of(&g);
        assert_eq!(ball.betti(), 0);
        assert_eq!(ball.vertex_count(), 0);
        assert_eq!(dual_norm(&ball, &[]), Err(Error::DegenerateBall));
    }

    #[test]
    fn merging_opposite_circuits_cancels_everything() {
        let g = theta();
        let circuits = enumerate_circuits(&g).unwrap();
        let c = circuits.get(0);
        assert!(merge_circuits(&g, c, &c.reversed()).is_empty());
    }

    #[test]
    fn merge_splits_into_simple_circuits_summing_exactly() {
        let g = theta();
        let circuits = enumerate_circuits(&g).unwrap();
        for c1 in &circuits {
            for c2 in &circuits {
                let parts = merge_circuits(&g, c1, c2);
                let mut sum = Chain::zero(g.edge_count());
                for p in &parts {
                    sum = &sum + p.chain();
                }
                assert_eq!(sum, c1.chain() + c2.chain());
                let total: Rational = parts.iter().map(|p| p.length().clone()).sum();
                assert!(total <= c1.length() + c2.length());
            }
        }
    }

    #[test]
    fn decompose_rejects_fractions() {
        let g = theta();
        let basis = HomologyBasis::new(&g);
        assert_eq!(
            decompose_class(&g, &basis, &[one(), ratio(1, 2)]),
            Err(Error::NonIntegralClass { index: 1 })
        );
    }

    #[test]
    fn decomposition_realizes_the_norm() {
        let g = theta();
        let basis = HomologyBasis::new(&g);
        for coords in [
            vec![ratio(3, 1), ratio(2, 1)],
            vec![ratio(-1, 1), ratio(4, 1)],
            vec![ratio(5, 1), ratio(-5, 1)],
            vec![Rational::zero(), Rational::zero()],
        ] {
            let d = decompose_class(&g, &basis, &coords).unwrap();
            assert_eq!(d.chain_sum(), *d.class_chain());
            assert_eq!(d.total_length(), stable_norm(&g, &basis, &coords).unwrap());
        }
        let empty = decompose_class(&g, &basis, &[Rational::zero(), Rational::zero()]).unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.circuit_count(), 0);
    }

    #[test]
    fn decomposition_multiplicities_fold() {
        let g = WeightedMultigraph::from_triples(1, [(0, 0, one())]).unwrap();
        let basis = HomologyBasis::new(&g);
        let d = decompose_class(&g, &basis, &[ratio(7, 1)]).unwrap();
        assert_eq!(d.entries().len(), 1);
        assert_eq!(d.circuit_count(), 7);
        assert_eq!(d.total_length(), ratio(7, 1));
    }

    #[test]
    fn decomposition_never_opposes_itself_on_an_edge() {
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
        let basis = HomologyBasis::new(&g);
        let d = decompose_class(&g, &basis, &[ratio(2, 1), ratio(-3, 1), one()]).unwrap();
        for e in 0..g.edge_count() {
            let mut pos = false;
            let mut neg = false;
            for (c, _) in d.entries() {
                pos |= c.chain().coeff(e).is_positive();
                neg |= c.chain().coeff(e).is_negative();
            }
            assert!(!(pos && neg), "edge {e} traversed both ways");
        }
        assert_eq!(d.chain_sum(), *d.class_chain());
    }

    #[test]
    fn all_theta_vertices_verify() {
        let g = theta();
        let (_, ball) = ball_of(&g);
        let report = verify_vertices(&ball);
        assert!(report.pass);
        assert_eq!(report.checks.len(), 6);
        assert!(report.checks.iter().all(|c| c.verdict.is_extreme()));
    }
}
