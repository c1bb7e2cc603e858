//! Exact convex geometry over finite point sets.
//!
//! Membership and extremity questions are answered with certificates: a
//! point inside a hull comes with convex-combination weights, a point
//! outside comes with a strictly separating linear functional. Both reduce
//! to small exact linear programs, so every answer is checkable after the
//! fact.

use crate::rational::Rational;
use crate::simplex::{self, LpOutcome};
use crate::Error;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

/// A finite list of points in a common dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: Vec<Vec<Rational>>,
}

impl PointSet {
    pub fn new(dim: usize, points: Vec<Vec<Rational>>) -> Result<Self, Error> {
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
        }
        Ok(PointSet { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[Rational] {
        &self.points[i]
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Vec<Rational>> {
        self.points.iter()
    }
}

/// Verdict of a hull-membership query, with a certificate either way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HullMembership {
    /// Convex-combination weights over the set, in point order: they are
    /// nonnegative, sum to one, and combine to the queried point.
    Inside { weights: Vec<Rational> },
    /// A functional strictly larger at the queried point than at any point
    /// of the set.
    Outside { separator: Vec<Rational> },
}

impl HullMembership {
    pub fn is_inside(&self) -> bool {
        matches!(self, HullMembership::Inside { .. })
    }
}

/// Verdict of an extremity query, with a certificate either way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extremity {
    /// A functional strictly larger at the point than at the others.
    Extreme { separator: Vec<Rational> },
    /// The point is a convex combination of the others, with these weights.
    NotExtreme { weights: Vec<Rational> },
}

impl Extremity {
    pub fn is_extreme(&self) -> bool {
        matches!(self, Extremity::Extreme { .. })
    }
}

/// Whether `point` lies in the convex hull of `set`. The hull of an empty
/// set is empty.
pub fn hull_contains(point: &[Rational], set: &PointSet) -> Result<HullMembership, Error> {
    if point.len() != set.dim() {
        return Err(Error::DimensionMismatch {
            expected: set.dim(),
            got: point.len(),
        });
    }
    // Feasibility of: sum l_i v_i = point, sum l_i = 1, l >= 0.
    let dim = set.dim();
    let n = set.len();
    let mut rows = vec![vec![Rational::zero(); n]; dim + 1];
    let mut rhs = Vec::with_capacity(dim + 1);
    for d in 0..dim {
        for (i, v) in set.iter().enumerate() {
            rows[d][i] = v[d].clone();
        }
        rhs.push(point[d].clone());
    }
    rows[dim] = vec![Rational::one(); n];
    rhs.push(Rational::one());

    match simplex::solve(&rows, &rhs, &vec![Rational::zero(); n]) {
        LpOutcome::Optimal { x, .. } => Ok(HullMembership::Inside { weights: x }),
        LpOutcome::Infeasible { mut farkas } => {
            // Farkas: <y, (v_i, 1)> <= 0 for all i while <y, (point, 1)> > 0,
            // so the first `dim` components separate strictly.
            farkas.truncate(dim);
            Ok(HullMembership::Outside { separator: farkas })
        }
        LpOutcome::Unbounded => unreachable!("feasibility program has zero objective"),
    }
}

/// Whether `point` is a vertex of the hull of itself and `others`, that is,
/// not a convex combination of `others`.
pub fn is_extreme(point: &[Rational], others: &PointSet) -> Result<Extremity, Error> {
    Ok(match hull_contains(point, others)? {
        HullMembership::Inside { weights } => Extremity::NotExtreme { weights },
        HullMembership::Outside { separator } => Extremity::Extreme { separator },
    })
}

/// Maximum of the linear functional `xi` over the set.
pub fn support_value(xi: &[Rational], set: &PointSet) -> Result<Rational, Error> {
    if xi.len() != set.dim() {
        return Err(Error::DimensionMismatch {
            expected: set.dim(),
            got: xi.len(),
        });
    }
    set.iter()
        .map(|v| xi.iter().zip(v).map(|(a, b)| a * b).sum())
        .max()
        .ok_or(Error::EmptySet)
}
