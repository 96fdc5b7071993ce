//! Ball measurements (thickness and coverage) and threshold filtering.
//!
//! Every ball of a reconstructing set gets two numbers: `rho`, the Euclidean
//! radius `sqrt(r)`, and `kappa`, how many covered cells the ball owns in the
//! power labeling. Both are normalized — `rho_norm` is the ball diameter over
//! the shape diameter, `kappa_norm` the owned fraction of the foreground — so
//! thresholds carry across scales. Filtering keeps balls passing both
//! thresholds; dropping a ball can lose at most the cells it owned.

use rayon::prelude::*;

use crate::error::{contract, domain, Result};
use crate::grid::{BinaryGrid, Extents, NO_SITE};
use crate::redt::{power_labeling, reconstruct, BallSet};

/// One measured ball. `kappa` counts covered cells (`value > 0`) owned by the
/// ball, so kappas sum to the foreground size. `rho_norm` is
/// `2 * rho / shape_diameter` (infinite for single-cell shapes, whose
/// diameter is zero; it can slightly exceed 1 for shapes a cell or two thick,
/// where the inscribed ball's reach rounds past the lattice diameter).
#[derive(Debug, Clone, PartialEq)]
pub struct MeasuredBall {
    pub center: Vec<u32>,
    pub r: i64,
    pub rho: f64,
    pub kappa: u64,
    pub rho_norm: f64,
    pub kappa_norm: f64,
}

/// Normalized keep-thresholds; a ball must reach both.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilterParams {
    pub rho0: f64,
    pub kappa0: f64,
}

impl FilterParams {
    fn validate(&self) -> Result<()> {
        for (name, v) in [("rho0", self.rho0), ("kappa0", self.kappa0)] {
            if !v.is_finite() || v < 0.0 {
                return Err(domain(format!("{name} must be finite and non-negative, got {v}")));
            }
        }
        Ok(())
    }
}

/// Which shape diameter normalizes `rho`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Diameter {
    /// Diagonal of the foreground bounding box (cheap, default).
    #[default]
    Bbox,
    /// Exact farthest foreground pair. The farthest pair always ends on
    /// boundary cells, so only those are compared.
    Exact,
}

fn boundary_cells(image: &BinaryGrid) -> Vec<Vec<i64>> {
    let e = image.extents();
    let d = e.dim();
    let mut out = Vec::new();
    let mut coords = vec![0usize; d];
    for idx in 0..e.cells() {
        if !image.get(idx) {
            continue;
        }
        e.coords_of(idx, &mut coords);
        let mut exposed = false;
        'axes: for (k, &c) in coords.iter().enumerate() {
            let stride = e.stride(k);
            if c == 0
                || c + 1 == e.size(k)
                || !image.get(idx - stride)
                || !image.get(idx + stride)
            {
                exposed = true;
                break 'axes;
            }
        }
        if exposed {
            out.push(coords.iter().map(|&c| c as i64).collect());
        }
    }
    out
}

/// Euclidean diameter of the foreground (0.0 when it has under two cells).
pub fn shape_diameter(image: &BinaryGrid, mode: Diameter) -> f64 {
    match mode {
        Diameter::Bbox => {
            let e = image.extents();
            let d = e.dim();
            let mut lo = vec![usize::MAX; d];
            let mut hi = vec![0usize; d];
            let mut coords = vec![0usize; d];
            let mut any = false;
            for idx in 0..e.cells() {
                if !image.get(idx) {
                    continue;
                }
                any = true;
                e.coords_of(idx, &mut coords);
                for k in 0..d {
                    lo[k] = lo[k].min(coords[k]);
                    hi[k] = hi[k].max(coords[k]);
                }
            }
            if !any {
                return 0.0;
            }
            let sq: i64 = (0..d).map(|k| ((hi[k] - lo[k]) as i64).pow(2)).sum();
            (sq as f64).sqrt()
        }
        Diameter::Exact => {
            let pts = boundary_cells(image);
            let best: i64 = (0..pts.len())
                .into_par_iter()
                .map(|i| {
                    let a = &pts[i];
                    let mut m = 0i64;
                    for b in &pts[i + 1..] {
                        let sq: i64 = a.iter().zip(b).map(|(&x, &y)| (x - y) * (x - y)).sum();
                        m = m.max(sq);
                    }
                    m
                })
                .max()
                .unwrap_or(0);
            (best as f64).sqrt()
        }
    }
}

/// Measure every ball of a set that reconstructs `image` exactly.
/// Errors: empty foreground (domain); empty ball set, or a set whose covered
/// cells differ from the foreground (broken caller contract).
pub fn measure_with(
    balls: &BallSet,
    image: &BinaryGrid,
    mode: Diameter,
) -> Result<Vec<MeasuredBall>> {
    let e = image.extents();
    let fg = image.count_foreground();
    if fg == 0 {
        return Err(domain("measurement needs a nonempty foreground"));
    }
    if balls.is_empty() {
        return Err(contract("measurement of an empty ball set against a nonempty foreground"));
    }
    let field = power_labeling(balls, e)?;
    let mut kappa = vec![0u64; balls.len()];
    for idx in 0..e.cells() {
        let covered = field.value.get(idx) > 0;
        if covered != image.get(idx) {
            return Err(contract("ball set does not reconstruct the measured image"));
        }
        if covered {
            let o = field.owner.get(idx);
            debug_assert_ne!(o, NO_SITE);
            kappa[o as usize] += 1;
        }
    }
    let diam = shape_diameter(image, mode);
    Ok((0..balls.len())
        .map(|i| {
            let r = balls.r(i);
            let rho = (r as f64).sqrt();
            let rho_norm = if diam > 0.0 { 2.0 * rho / diam } else { f64::INFINITY };
            MeasuredBall {
                center: balls.center(i).to_vec(),
                r,
                rho,
                kappa: kappa[i],
                rho_norm,
                kappa_norm: kappa[i] as f64 / fg as f64,
            }
        })
        .collect())
}

/// [`measure_with`] under the default bounding-box diameter.
pub fn measure(balls: &BallSet, image: &BinaryGrid) -> Result<Vec<MeasuredBall>> {
    measure_with(balls, image, Diameter::default())
}

/// Keep the balls with `rho_norm >= rho0` and `kappa_norm >= kappa0`, order
/// preserved. An empty input yields an empty (1-dimensional) set.
pub fn filter(measured: &[MeasuredBall], params: &FilterParams) -> Result<BallSet> {
    params.validate()?;
    let d = measured.first().map_or(1, |m| m.center.len());
    let mut out = BallSet::new(d)?;
    for m in measured {
        if m.rho_norm >= params.rho0 && m.kappa_norm >= params.kappa0 {
            out.push(&m.center, m.r);
        }
    }
    Ok(out)
}

/// Filter, reconstruct what survives, and report how many foreground cells
/// were lost. The loss never exceeds the summed `kappa` of the removed balls.
pub fn filtered_reconstruct(
    measured: &[MeasuredBall],
    params: &FilterParams,
    extents: &Extents,
) -> Result<(BinaryGrid, i64)> {
    let kept = filter(measured, params)?;
    let image = reconstruct(&kept, extents)?;
    let total: i64 = measured.iter().map(|m| m.kappa as i64).sum();
    let lost = total - image.count_foreground() as i64;
    Ok((image, lost))
}
