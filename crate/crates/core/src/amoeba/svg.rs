//! Diagnostic SVG rendering of the degree-3 slice: a sampled point cloud,
//! the zero contours of the discriminant under every essential sign flip
//! (marching squares on a rectangular grid), and the boundaries of the two
//! coefficient cones. Output is deterministic byte for byte so renders can
//! be diffed across runs.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::discriminant::symbolic_discriminant_cached;
use crate::error::{Error, Result};
use crate::realroots::essential_sign_patterns;

use super::LogPoint;

/// Stroke colors for the four essential flip patterns, in mask order.
const CURVE_COLORS: [&str; 4] = ["#2166ac", "#b2182b", "#1b7837", "#762a83"];

/// Marching-squares segments per corner-sign case. Corner bit i is set when
/// corner i is positive (0 bottom-left, 1 bottom-right, 2 top-right, 3
/// top-left); edges are 0 bottom, 1 right, 2 top, 3 left. The two ambiguous
/// diagonal cases isolate the positive corners.
const SEGMENTS: [&[(u8, u8)]; 16] = [
    &[],
    &[(3, 0)],
    &[(0, 1)],
    &[(3, 1)],
    &[(1, 2)],
    &[(3, 0), (1, 2)],
    &[(0, 2)],
    &[(3, 2)],
    &[(2, 3)],
    &[(0, 2)],
    &[(0, 1), (2, 3)],
    &[(1, 2)],
    &[(3, 1)],
    &[(0, 1)],
    &[(3, 0)],
    &[],
];

/// Corner index pairs of each edge, matching the table above.
const EDGE_CORNERS: [(usize, usize); 4] = [(0, 1), (1, 2), (3, 2), (0, 3)];

/// Renders the slice square `domain x domain` of the degree-3 log space:
/// white background, cone boundaries, one discriminant contour per essential
/// sign pattern, and a translucent circle per sample.
pub fn render_cubic_slice(
    samples: &[LogPoint],
    domain: (f64, f64),
    curve_grid: usize,
    size: u32,
) -> Result<String> {
    if !(domain.0.is_finite() && domain.1.is_finite() && domain.0 < domain.1) {
        return Err(Error::BadParameter("domain must be a finite nonempty interval"));
    }
    if curve_grid < 2 {
        return Err(Error::BadParameter("contour grid needs at least 2 cells per axis"));
    }
    if size < 16 {
        return Err(Error::BadParameter("image size below 16 pixels"));
    }
    for s in samples {
        if s.coords.len() != 4 {
            return Err(Error::LengthMismatch { expected: 4, got: s.coords.len() });
        }
    }

    let sym = symbolic_discriminant_cached(3)?;
    let terms: Vec<(f64, Vec<u32>)> = sym
        .terms()
        .map(|(e, c)| (c.to_f64().expect("expansion coefficients fit in f64"), e.clone()))
        .collect();

    let scale = size as f64 / (domain.1 - domain.0);
    let px = |x: f64| (x - domain.0) * scale;
    let py = |y: f64| size as f64 - (y - domain.0) * scale;

    let mut svg = String::new();
    let _ = write!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" \
         viewBox=\"0 0 {size} {size}\">\n"
    );
    let _ = write!(svg, "<rect width=\"{size}\" height=\"{size}\" fill=\"#ffffff\"/>\n");

    // Log-concavity cone boundary: the nonpositive quadrant, cornered at the
    // origin.
    let _ = write!(
        svg,
        "<polyline points=\"{:.2},{:.2} {:.2},{:.2} {:.2},{:.2}\" fill=\"none\" \
         stroke=\"#888888\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n",
        px(domain.0),
        py(0.0),
        px(0.0),
        py(0.0),
        px(0.0),
        py(domain.0),
    );
    // Strengthened cone boundary: two rays from (log 4, log 4) along
    // 2 x_1 = x_2 + log 4 and its mirror.
    let c = 4.0f64.ln();
    let far = (domain.1 + c) / 2.0;
    let _ = write!(
        svg,
        "<polyline points=\"{:.2},{:.2} {:.2},{:.2} {:.2},{:.2}\" fill=\"none\" \
         stroke=\"#444444\" stroke-width=\"1.5\"/>\n",
        px(far),
        py(domain.1),
        px(c),
        py(c),
        px(domain.1),
        py(far),
    );

    for (pattern, color) in essential_sign_patterns(3).iter().zip(CURVE_COLORS) {
        let signs: Vec<f64> = pattern.signs().iter().map(|&s| s as f64).collect();
        let nodes = curve_grid + 1;
        let h = (domain.1 - domain.0) / curve_grid as f64;
        let mut values = vec![0.0f64; nodes * nodes];
        for j in 0..nodes {
            let x2 = domain.0 + j as f64 * h;
            for i in 0..nodes {
                let x1 = domain.0 + i as f64 * h;
                let a = [signs[0], signs[1] * x1.exp(), signs[2] * x2.exp(), signs[3]];
                values[j * nodes + i] = terms
                    .iter()
                    .map(|(coef, e)| {
                        coef
                            * e.iter()
                                .enumerate()
                                .map(|(v, &exp)| a[v].powi(exp as i32))
                                .product::<f64>()
                    })
                    .sum();
            }
        }
        let mut path = String::new();
        for j in 0..curve_grid {
            for i in 0..curve_grid {
                let corner_xy = |c: usize| -> (f64, f64, f64) {
                    let (di, dj) = [(0, 0), (1, 0), (1, 1), (0, 1)][c];
                    (
                        domain.0 + (i + di) as f64 * h,
                        domain.0 + (j + dj) as f64 * h,
                        values[(j + dj) * nodes + (i + di)],
                    )
                };
                let case = (0..4)
                    .filter(|&c| corner_xy(c).2 > 0.0)
                    .fold(0usize, |m, c| m | 1 << c);
                for &(ea, eb) in SEGMENTS[case] {
                    let interp = |edge: u8| -> (f64, f64) {
                        let (ca, cb) = EDGE_CORNERS[edge as usize];
                        let (xa, ya, va) = corner_xy(ca);
                        let (xb, yb, vb) = corner_xy(cb);
                        let t = va / (va - vb);
                        (xa + t * (xb - xa), ya + t * (yb - ya))
                    };
                    let (x0, y0) = interp(ea);
                    let (x1, y1) = interp(eb);
                    let _ = write!(
                        path,
                        "M{:.2} {:.2} L{:.2} {:.2} ",
                        px(x0),
                        py(y0),
                        px(x1),
                        py(y1)
                    );
                }
            }
        }
        let _ = write!(
            svg,
            "<path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.2\" \
             data-signs=\"{}\"/>\n",
            path.trim_end(),
            color,
            pattern
        );
    }

    for s in samples {
        let slice = s.slice();
        let _ = write!(
            svg,
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"1.5\" fill=\"#e6550d\" \
             fill-opacity=\"0.35\"/>\n",
            px(slice[1]),
            py(slice[2]),
        );
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amoeba::sample_amoeba;

    #[test]
    fn render_produces_wellformed_svg() {
        let samples = sample_amoeba(3, 40, 7).unwrap();
        let svg = render_cubic_slice(&samples, (-4.0, 4.0), 80, 480).unwrap();
        assert!(svg.starts_with("<svg "));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<circle").count(), 40);
        assert_eq!(svg.matches("data-signs").count(), 4);
        // The unflipped discriminant changes sign inside the window, so its
        // contour is nonempty.
        assert!(svg.contains("data-signs=\"++++\""));
        let main = svg.split("data-signs=\"++++\"").next().unwrap();
        assert!(main.rsplit("<path d=\"").next().unwrap().contains('L'));
    }

    #[test]
    fn render_is_deterministic() {
        let samples = sample_amoeba(3, 25, 99).unwrap();
        let a = render_cubic_slice(&samples, (-4.0, 4.0), 64, 400).unwrap();
        let b = render_cubic_slice(&samples, (-4.0, 4.0), 64, 400).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn render_validates_inputs() {
        assert!(matches!(
            render_cubic_slice(&[], (2.0, -2.0), 64, 400),
            Err(Error::BadParameter(_))
        ));
        assert!(matches!(
            render_cubic_slice(&[], (-2.0, 2.0), 1, 400),
            Err(Error::BadParameter(_))
        ));
        let quartic = LogPoint::from_slice_interior(&[0.0, 0.0, 0.0]);
        assert!(matches!(
            render_cubic_slice(&[quartic], (-2.0, 2.0), 64, 400),
            Err(Error::LengthMismatch { expected: 4, got: 5 })
        ));
    }
}
