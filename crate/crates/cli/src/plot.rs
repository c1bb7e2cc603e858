//! CSV export of a ball for plotting, dimensions 1 to 3.
//!
//! The file has vertex rows `vertex,<index>,<coords...>` followed by edge
//! rows `edge,<i>,<j>`. A pair of vertices gets an edge row exactly when the
//! midpoint of the segment between them still has stable norm 1; by
//! convexity the whole segment then lies on the boundary sphere. That test
//! runs in exact arithmetic; only the printed coordinates are rounded to
//! floating point.

use crate::CliError;
use num_traits::ToPrimitive;
use stableball::norm::stable_norm;
use stableball::rational::Rational;
use stableball::{HomologyBasis, StableBall, WeightedMultigraph};

pub const PLOT_DIMENSION_LIMIT: usize = 3;

pub fn export_plot(
    g: &WeightedMultigraph,
    basis: &HomologyBasis,
    ball: &StableBall,
) -> Result<String, CliError> {
    let b = ball.betti();
    if b > PLOT_DIMENSION_LIMIT {
        return Err(CliError::DimensionTooHigh { betti: b });
    }
    let vertices = ball.vertices_basis();
    let mut out = String::new();
    out.push_str(&format!(
        "# stable ball in dimension {b}: vertex rows, then boundary-segment edge rows\n"
    ));
    for (i, v) in vertices.iter().enumerate() {
        out.push_str(&format!("vertex,{i}"));
        for c in v {
            let approx = c.to_f64().expect("ball coordinates fit in f64");
            out.push_str(&format!(",{approx}"));
        }
        out.push('\n');
    }
    let one = Rational::from_integer(1.into());
    let two = Rational::from_integer(2.into());
    for i in 0..vertices.len() {
        for j in (i + 1)..vertices.len() {
            let midpoint: Vec<Rational> = vertices[i]
                .iter()
                .zip(&vertices[j])
                .map(|(a, b)| (a + b) / &two)
                .collect();
            let norm = stable_norm(g, basis, &midpoint).expect("vertex coordinates match");
            if norm == one {
                out.push_str(&format!("edge,{i},{j}\n"));
            }
        }
    }
    Ok(out)
}
