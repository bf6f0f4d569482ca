//! Counting connected components of the reflected discriminant complement in
//! the log slice: grid the slice box, keep cells where every essential sign
//! flip of the coefficient vector stays away from the discriminant zero set,
//! and merge adjacent cells with union-find.
//!
//! A cell is kept only when a Lipschitz margin certifies that each flipped
//! discriminant keeps its sign on the whole closed cell, not merely at the
//! center. Certified neighbors therefore never straddle a wall, the
//! sign-aware and purely spatial merges agree, and the reported count grows
//! monotonically toward the true chamber count as the grid refines instead
//! of shattering along diagonal walls.

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::discriminant::symbolic_discriminant_cached;
use crate::error::{Error, Result};
use crate::realroots::essential_sign_patterns;

/// Extent of the slice box along every axis, in log coordinates.
const DOMAIN: (f64, f64) = (-4.0, 4.0);

/// One connected component of the marked cells.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComponentRep {
    /// Cell-center slice coordinates of the first cell found.
    pub point: Vec<f64>,
    /// Sign of the discriminant under each essential flip pattern.
    pub signs: Vec<i8>,
    /// Number of cells in the component.
    pub cells: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentReport {
    pub k: usize,
    pub resolution: usize,
    pub domain: (f64, f64),
    pub tol: f64,
    /// Cells whose every reflected discriminant value clears both the
    /// tolerance and the sign-constancy margin.
    pub marked_cells: usize,
    /// Components of marked cells, merged only under equal sign vectors.
    pub components: usize,
    /// Components under purely spatial adjacency, ignoring sign vectors.
    /// Equal to `components` whenever the margin certificates hold; a
    /// difference signals merging artifacts at too coarse a resolution.
    pub spatial_components: usize,
    /// The conjectured count 2^k, reported for comparison, never asserted.
    pub conjecture: u64,
    pub representatives: Vec<ComponentRep>,
    #[serde(skip)]
    cell_component: Vec<usize>,
}

impl ComponentReport {
    fn dims(&self) -> usize {
        self.k - 1
    }

    /// Component ordinal of the cell containing the slice point, if that
    /// cell is marked.
    pub fn component_of(&self, interior: &[f64]) -> Option<usize> {
        if interior.len() != self.dims() {
            return None;
        }
        let res = self.resolution;
        let width = (self.domain.1 - self.domain.0) / res as f64;
        let mut flat = 0usize;
        for &v in interior {
            let idx = ((v - self.domain.0) / width).floor();
            if idx < 0.0 || idx >= res as f64 {
                return None;
            }
            flat = flat * res + idx as usize;
        }
        let c = self.cell_component[flat];
        (c != usize::MAX).then_some(c)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges toward the smaller root, so every representative is the first
    /// cell of its component in scan order.
    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Signs of the reflected discriminant values at one cell center, or `None`
/// when some reflection comes too close to zero for the tolerance.
type CellClass = Option<u8>;

/// Grids the slice box and counts complement components of the union of all
/// essential sign reflections of the discriminant. Exploratory: the report
/// carries the conjectured count but never asserts it.
pub fn count_reflected_components(
    k: usize,
    resolution: usize,
    tol: f64,
) -> Result<ComponentReport> {
    if !(2..=4).contains(&k) {
        return Err(Error::Unsupported { what: "component counting is limited to 2 <= k <= 4" });
    }
    if resolution < 2 {
        return Err(Error::BadParameter("resolution must be at least 2"));
    }
    if !(tol > 0.0) {
        return Err(Error::BadParameter("tolerance must be positive"));
    }
    let sym = symbolic_discriminant_cached(k)?;
    let terms: Vec<(f64, Vec<u32>)> = sym
        .terms()
        .map(|(e, c)| (c.to_f64().expect("expansion coefficients fit in f64"), e.clone()))
        .collect();
    let patterns = essential_sign_patterns(k);
    // Per pattern, per term: parity of the flipped exponents.
    let flip_signs: Vec<Vec<f64>> = patterns
        .iter()
        .map(|p| {
            terms
                .iter()
                .map(|(_, e)| {
                    let flipped: u32 = e
                        .iter()
                        .zip(p.signs())
                        .filter(|&(_, &s)| s < 0)
                        .map(|(&exp, _)| exp)
                        .sum();
                    if flipped % 2 == 1 {
                        -1.0
                    } else {
                        1.0
                    }
                })
                .collect()
        })
        .collect();

    let dims = k - 1;
    let res = resolution;
    let width = (DOMAIN.1 - DOMAIN.0) / res as f64;
    // Per term, exp(d h/2) - 1 where d is the degree in the varying moduli:
    // on a cell of half-width h/2 the term moves by at most this fraction of
    // itself, so clearing the summed margins certifies a constant sign.
    let margin_factors: Vec<f64> = terms
        .iter()
        .map(|(_, e)| {
            let d: u32 = e[1..k].iter().sum();
            (d as f64 * width / 2.0).exp_m1()
        })
        .collect();
    let inner: usize = res.pow((dims - 1) as u32);
    let classes: Vec<CellClass> = (0..res)
        .into_par_iter()
        .flat_map_iter(|i0| {
            let terms = &terms;
            let flip_signs = &flip_signs;
            let margin_factors = &margin_factors;
            (0..inner).map(move |flat| {
                let mut idx = vec![0usize; dims];
                idx[0] = i0;
                let mut rem = flat;
                for a in (1..dims).rev() {
                    idx[a] = rem % res;
                    rem /= res;
                }
                let mut moduli = vec![1.0f64; k + 1];
                for a in 0..dims {
                    let x = DOMAIN.0 + (idx[a] as f64 + 0.5) * width;
                    moduli[a + 1] = x.exp();
                }
                classify_cell(terms, flip_signs, margin_factors, &moduli, tol)
            })
        })
        .collect();

    let ncells = classes.len();
    let strides: Vec<usize> = (0..dims).map(|a| res.pow((dims - 1 - a) as u32)).collect();
    let mut signed = UnionFind::new(ncells);
    let mut spatial = UnionFind::new(ncells);
    for flat in 0..ncells {
        let Some(sig) = classes[flat] else { continue };
        for a in 0..dims {
            let coord = flat / strides[a] % res;
            if coord + 1 >= res {
                continue;
            }
            let next = flat + strides[a];
            let Some(nsig) = classes[next] else { continue };
            spatial.union(flat, next);
            if sig == nsig {
                signed.union(flat, next);
            }
        }
    }

    let mut cell_component = vec![usize::MAX; ncells];
    let mut representatives = Vec::new();
    let mut spatial_roots = Vec::new();
    let mut marked_cells = 0usize;
    for flat in 0..ncells {
        let Some(sig) = classes[flat] else { continue };
        marked_cells += 1;
        let root = signed.find(flat);
        let ordinal = if root == flat {
            let point = (0..dims)
                .map(|a| {
                    let idx = flat / strides[a] % res;
                    DOMAIN.0 + (idx as f64 + 0.5) * width
                })
                .collect();
            let signs = (0..patterns.len())
                .map(|p| if sig & (1 << p) != 0 { 1i8 } else { -1 })
                .collect();
            representatives.push(ComponentRep { point, signs, cells: 0 });
            representatives.len() - 1
        } else {
            cell_component[root]
        };
        cell_component[flat] = ordinal;
        representatives[ordinal].cells += 1;
        let sroot = spatial.find(flat);
        if sroot == flat {
            spatial_roots.push(sroot);
        }
    }

    Ok(ComponentReport {
        k,
        resolution,
        domain: DOMAIN,
        tol,
        marked_cells,
        components: representatives.len(),
        spatial_components: spatial_roots.len(),
        conjecture: 1u64 << k,
        representatives,
        cell_component,
    })
}

fn classify_cell(
    terms: &[(f64, Vec<u32>)],
    flip_signs: &[Vec<f64>],
    margin_factors: &[f64],
    moduli: &[f64],
    tol: f64,
) -> CellClass {
    let mut weights = Vec::with_capacity(terms.len());
    let mut norm = 0.0f64;
    let mut margin = 0.0f64;
    for ((coef, exps), factor) in terms.iter().zip(margin_factors) {
        let mut w = *coef;
        for (j, &e) in exps.iter().enumerate() {
            if e != 0 {
                w *= moduli[j].powi(e as i32);
            }
        }
        norm += w.abs();
        margin += w.abs() * factor;
        weights.push(w);
    }
    let thresh = margin.max(tol * norm);
    let mut sig = 0u8;
    for (p, signs) in flip_signs.iter().enumerate() {
        let value: f64 = signs.iter().zip(&weights).map(|(s, w)| s * w).sum();
        if value.abs() <= thresh {
            return None;
        }
        if value > 0.0 {
            sig |= 1 << p;
        }
    }
    Some(sig)
}
