//! Independent brute-force cross-checks.
//!
//! Nothing here looks at circuits. The ball is recovered as the intersection
//! of the weighted l1 unit ball of chain space with the cycle subspace, by
//! enumerating candidate supports of the intersection's vertices; the norm
//! is recovered as a linear program over chain splittings. Agreement with
//! the circuit-based construction is therefore meaningful evidence.

use crate::graph::{Chain, HomologyBasis, WeightedMultigraph};
use crate::polytope::PointSet;
use crate::rational::Rational;
use crate::simplex::{self, LpOutcome};
use crate::Error;
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};

/// Edge-count cap for the exhaustive intersection search, which visits
/// every subset of the edge set.
pub const DEFAULT_ORACLE_EDGE_CAP: usize = 12;

/// Computes the stable ball's vertices directly as the vertex set of
/// `{ y : sum_e w_e |(By)_e| <= 1 }`, where `B` maps basis coordinates to
/// the cycle representative, using the default edge cap.
pub fn ball_by_intersection(
    g: &WeightedMultigraph,
    basis: &HomologyBasis,
) -> Result<PointSet, Error> {
    ball_by_intersection_capped(g, basis, DEFAULT_ORACLE_EDGE_CAP)
}

/// Like [`ball_by_intersection`] with an explicit edge cap.
///
/// A point `y` is a vertex of the intersection exactly when the constraints
/// active at it have full rank: writing `I` for the support of `By`, the
/// cycles vanishing outside `I` must form a line, and the normalization to
/// unit norm then pins `y` down on that line. So each support with a
/// one-dimensional vanishing space contributes one antipodal vertex pair,
/// and supports whose line has a zero coordinate inside `I` contribute
/// nothing (their vertices belong to a smaller support).
pub fn ball_by_intersection_capped(
    g: &WeightedMultigraph,
    basis: &HomologyBasis,
    cap: usize,
) -> Result<PointSet, Error> {
    let k = g.edge_count();
    let b = basis.betti();
    if b == 0 {
        return Err(Error::DegenerateBall);
    }
    // The subset walk below indexes a u64, so the cap can never be raised
    // past what that holds; in practice 2^k iterations stop far earlier.
    let cap = cap.min(62);
    if k > cap {
        return Err(Error::CapExceeded { edges: k, cap });
    }

    // Row e of B holds the coefficients of edge e across the basis cycles.
    let rows: Vec<Vec<Rational>> = (0..k)
        .map(|e| {
            basis
                .fundamental_cycles()
                .iter()
                .map(|c| c.coeff(e).clone())
                .collect()
        })
        .collect();

    let mut vertices: BTreeSet<Vec<Rational>> = BTreeSet::new();
    for mask in 1u64..(1u64 << k) {
        let support: Vec<usize> = (0..k).filter(|e| mask >> e & 1 == 1).collect();
        // Fewer than b - 1 vanishing rows can never cut the space to a line.
        if support.len() > k - b + 1 {
            continue;
        }
        let vanishing: Vec<Vec<Rational>> = (0..k)
            .filter(|e| mask >> e & 1 == 0)
            .map(|e| rows[e].clone())
            .collect();
        let Some(line) = null_space_line(&vanishing, b) else {
            continue;
        };
        // The line's image must be nonzero on the whole support, or the
        // candidate really lives on a smaller support.
        let image: Vec<Rational> = support
            .iter()
            .map(|&e| rows[e].iter().zip(&line).map(|(a, y)| a * y).sum())
            .collect();
        if image.iter().any(Zero::is_zero) {
            continue;
        }
        // Scale so the weighted l1 norm of the image is exactly one.
        let norm: Rational = support
            .iter()
            .zip(&image)
            .map(|(&e, x)| x.abs() * g.weight(e))
            .sum();
        let vertex: Vec<Rational> = line.iter().map(|y| y / &norm).collect();
        let negated: Vec<Rational> = vertex.iter().map(|y| -y).collect();
        vertices.insert(vertex);
        vertices.insert(negated);
    }

    PointSet::new(b, vertices.into_iter().collect())
}

/// Solution space of `rows . y = 0` when it is one-dimensional: a generator
/// of the line, `None` if the space has any other dimension.
fn null_space_line(rows: &[Vec<Rational>], dim: usize) -> Option<Vec<Rational>> {
    let mut reduced: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..dim {
        let Some(p) = (r..reduced.len()).find(|&i| !reduced[i][col].is_zero()) else {
            continue;
        };
        reduced.swap(r, p);
        let head = reduced[r][col].clone();
        for x in reduced[r].iter_mut() {
            *x /= &head;
        }
        let pivot_row = reduced[r].clone();
        for (i, row) in reduced.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, pr) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * pr;
            }
        }
        pivot_cols.push(col);
        r += 1;
        if r == reduced.len() {
            break;
        }
    }
    if pivot_cols.len() + 1 != dim {
        return None;
    }
    let free = (0..dim).find(|c| !pivot_cols.contains(c))?;
    let mut y = vec![Rational::zero(); dim];
    y[free] = Rational::one();
    for (i, &pc) in pivot_cols.iter().enumerate() {
        y[pc] = -reduced[i][free].clone();
    }
    Some(y)
}

/// Minimizer found by [`norm_by_infimum`]: the cheapest chain in the class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfimumSolution {
    pub value: Rational,
    pub minimizer: Chain,
}

/// Computes the stable norm as the linear program
/// `min sum_e w_e (p_e + n_e)` over splittings `u = p - n`, `p, n >= 0`,
/// subject to `u` being a cycle with the prescribed basis coordinates.
/// Never touches circuit enumeration or the ball construction.
pub fn norm_by_infimum(
    g: &WeightedMultigraph,
    basis: &HomologyBasis,
    coords: &[Rational],
) -> Result<InfimumSolution, Error> {
    norm_by_infimum_capped(g, basis, coords, DEFAULT_ORACLE_EDGE_CAP)
}

/// Like [`norm_by_infimum`] with an explicit edge cap.
pub fn norm_by_infimum_capped(
    g: &WeightedMultigraph,
    basis: &HomologyBasis,
    coords: &[Rational],
    cap: usize,
) -> Result<InfimumSolution, Error> {
    let k = g.edge_count();
    if k > cap {
        return Err(Error::CapExceeded { edges: k, cap });
    }
    if coords.len() != basis.betti() {
        return Err(Error::DimensionMismatch {
            expected: basis.betti(),
            got: coords.len(),
        });
    }

    // Variables: p_0..p_{k-1}, n_0..n_{k-1}.
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    // Boundary rows: u = p - n must be a cycle.
    for v in 0..g.vertex_count() {
        let mut row = vec![Rational::zero(); 2 * k];
        for (e, edge) in g.edges().iter().enumerate() {
            if edge.head == edge.tail {
                continue;
            }
            if edge.head == v {
                row[e] += Rational::one();
                row[k + e] -= Rational::one();
            }
            if edge.tail == v {
                row[e] -= Rational::one();
                row[k + e] += Rational::one();
            }
        }
        rows.push(row);
        rhs.push(Rational::zero());
    }
    // Coordinate rows: u on the non-tree edges matches the class.
    for (&c, y) in basis.cotree_edges().iter().zip(coords) {
        let mut row = vec![Rational::zero(); 2 * k];
        row[c] = Rational::one();
        row[k + c] = -Rational::one();
        rows.push(row);
        rhs.push(y.clone());
    }

    let mut objective: Vec<Rational> = g.edges().iter().map(|e| e.weight.clone()).collect();
    objective.extend(g.edges().iter().map(|e| e.weight.clone()));

    match simplex::solve(&rows, &rhs, &objective) {
        LpOutcome::Optimal { x, value } => {
            let minimizer = Chain::new(
                (0..k).map(|e| &x[e] - &x[k + e]).collect(),
            );
            Ok(InfimumSolution { value, minimizer })
        }
        LpOutcome::Infeasible { .. } => {
            unreachable!("every coordinate vector has a cycle representative")
        }
        LpOutcome::Unbounded => unreachable!("the objective is nonnegative"),
    }
}
