//! Complement-component labeling by vertex dominance: outside the amoeba,
//! the Ronkin function agrees with `max_v (log|c_v| + <v, x>)` over the
//! vertex monomials of the discriminant's Newton polytope, and the maximizing
//! vertex names the component through its subdivision.

use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use super::LogPoint;
use crate::archgeo::Subdivision;
use crate::discriminant::vertex_monomials;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComponentLabel {
    pub subdivision: Subdivision,
    /// Gap between the winning vertex score and the runner-up; a zero margin
    /// means the point sits on a dominance wall and the label is uncertain.
    pub margin: f64,
}

/// Labels the complement component of `x` by the dominant vertex monomial.
/// The two homogeneities shift all scores equally, so the argmax does not
/// depend on whether `x` is slice-projected. Meaningful only for points
/// outside the amoeba; elsewhere it reports the dominance cell alone.
pub fn component_label(k: usize, x: &LogPoint) -> Result<ComponentLabel> {
    let vms = vertex_monomials(k)?;
    if x.coords.len() != k + 1 {
        return Err(Error::LengthMismatch { expected: k + 1, got: x.coords.len() });
    }
    let scores: Vec<f64> = vms
        .iter()
        .map(|vm| {
            let dot: f64 =
                vm.exponents.iter().zip(&x.coords).map(|(&e, c)| e as f64 * c).sum();
            let magnitude = vm
                .coefficient
                .abs()
                .to_f64()
                .expect("vertex coefficients fit in f64");
            magnitude.ln() + dot
        })
        .collect();
    let mut best = 0usize;
    for (i, s) in scores.iter().enumerate() {
        if *s > scores[best] {
            best = i;
        }
    }
    let runner_up = scores
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != best)
        .map(|(_, s)| *s)
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(ComponentLabel {
        subdivision: vms[best].subdivision.clone(),
        margin: scores[best] - runner_up,
    })
}
