//! Dense d-dimensional array storage with row addressing along any axis.
//!
//! Cells are stored row-major with axis 0 varying fastest, so the linear
//! index of `(c_0, .., c_{d-1})` is `c_0 + n_0*(c_1 + n_1*(c_2 + ...))`.
//! Every separable pass in this crate walks the grid through [`Extents::rows`],
//! which hands out disjoint strided views of one axis at a time.

use crate::error::{domain, Result};

/// Hard dimension cap; keeps all squared-distance arithmetic inside `i64`.
pub const MAX_DIM: usize = 8;
/// Per-axis size cap (see [`MAX_DIM`]).
pub const MAX_AXIS_LEN: usize = 1 << 20;
/// Sentinel site index meaning "no site".
pub const NO_SITE: u64 = u64::MAX;

/// Validated grid shape: `1 <= d <= 8`, every axis in `1..=2^20`, total cell
/// count fitting `u64`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extents {
    sizes: Vec<usize>,
}

/// One grid row along some axis: cells `base + k*stride` for `k in 0..len`.
#[derive(Debug, Clone, Copy)]
pub struct Row {
    pub base: usize,
    pub stride: usize,
    pub len: usize,
}

impl Extents {
    pub fn new(sizes: &[usize]) -> Result<Self> {
        if sizes.is_empty() || sizes.len() > MAX_DIM {
            return Err(domain(format!(
                "dimension must be 1..={MAX_DIM}, got {}",
                sizes.len()
            )));
        }
        let mut total: u64 = 1;
        for (k, &n) in sizes.iter().enumerate() {
            if n == 0 {
                return Err(domain(format!("axis {k} has zero length")));
            }
            if n > MAX_AXIS_LEN {
                return Err(domain(format!(
                    "axis {k} length {n} exceeds {MAX_AXIS_LEN}"
                )));
            }
            total = total
                .checked_mul(n as u64)
                .ok_or_else(|| domain("cell count overflows u64"))?;
        }
        Ok(Extents { sizes: sizes.to_vec() })
    }

    pub fn dim(&self) -> usize {
        self.sizes.len()
    }

    pub fn size(&self, axis: usize) -> usize {
        self.sizes[axis]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn cells(&self) -> usize {
        self.sizes.iter().product()
    }

    /// Largest possible squared distance between two cells.
    pub fn max_sqdist(&self) -> i64 {
        self.sizes.iter().map(|&n| ((n - 1) as i64).pow(2)).sum()
    }

    /// Sentinel strictly above every attainable squared distance.
    pub fn inf(&self) -> i64 {
        self.max_sqdist() + 1
    }

    /// Row-major linear index, axis 0 fastest. Coordinates must be in range.
    pub fn linear_index(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.dim());
        let mut idx = 0usize;
        for k in (0..self.dim()).rev() {
            debug_assert!(coords[k] < self.sizes[k], "coordinate out of range");
            idx = idx * self.sizes[k] + coords[k];
        }
        idx
    }

    /// Inverse of [`Extents::linear_index`]; writes into `out`.
    pub fn coords_of(&self, mut idx: usize, out: &mut [usize]) {
        debug_assert_eq!(out.len(), self.dim());
        for (o, &size) in out.iter_mut().zip(&self.sizes) {
            *o = idx % size;
            idx /= size;
        }
        debug_assert_eq!(idx, 0);
    }

    /// Stride between consecutive cells along `axis`.
    pub fn stride(&self, axis: usize) -> usize {
        self.sizes[..axis].iter().product()
    }

    /// All rows of the grid along `axis`; every cell lies in exactly one.
    pub fn rows(&self, axis: usize) -> Vec<Row> {
        assert!(axis < self.dim(), "axis out of range");
        let stride = self.stride(axis);
        let len = self.sizes[axis];
        let mut rows = Vec::with_capacity(self.cells() / len);
        // Enumerate base cells (coordinate `axis` = 0) by odometer over the
        // remaining axes.
        let mut coords = vec![0usize; self.dim()];
        loop {
            rows.push(Row { base: self.linear_index(&coords), stride, len });
            let mut k = 0;
            loop {
                if k == axis {
                    k += 1;
                    if k == self.dim() {
                        return rows;
                    }
                }
                coords[k] += 1;
                if coords[k] < self.sizes[k] {
                    break;
                }
                coords[k] = 0;
                k += 1;
                if k == self.dim() {
                    return rows;
                }
            }
        }
    }
}

/// Binary image: `true` = foreground, `false` = background.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryGrid {
    extents: Extents,
    cells: Vec<bool>,
}

impl BinaryGrid {
    pub fn new(extents: Extents) -> Self {
        let n = extents.cells();
        BinaryGrid { extents, cells: vec![false; n] }
    }

    pub fn from_cells(extents: Extents, cells: Vec<bool>) -> Result<Self> {
        if cells.len() != extents.cells() {
            return Err(domain("cell count does not match extents"));
        }
        Ok(BinaryGrid { extents, cells })
    }

    pub fn extents(&self) -> &Extents {
        &self.extents
    }

    pub fn get(&self, idx: usize) -> bool {
        self.cells[idx]
    }

    pub fn set(&mut self, idx: usize, v: bool) {
        self.cells[idx] = v;
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.cells
    }

    pub fn as_mut_slice(&mut self) -> &mut [bool] {
        &mut self.cells
    }

    pub fn count_foreground(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }
}

/// Signed 64-bit scalar field over a grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarGrid {
    extents: Extents,
    cells: Vec<i64>,
}

impl ScalarGrid {
    pub fn new(extents: Extents) -> Self {
        let n = extents.cells();
        ScalarGrid { extents, cells: vec![0; n] }
    }

    pub fn filled(extents: Extents, v: i64) -> Self {
        let n = extents.cells();
        ScalarGrid { extents, cells: vec![v; n] }
    }

    pub fn from_cells(extents: Extents, cells: Vec<i64>) -> Result<Self> {
        if cells.len() != extents.cells() {
            return Err(domain("cell count does not match extents"));
        }
        Ok(ScalarGrid { extents, cells })
    }

    pub fn extents(&self) -> &Extents {
        &self.extents
    }

    pub fn get(&self, idx: usize) -> i64 {
        self.cells[idx]
    }

    pub fn set(&mut self, idx: usize, v: i64) {
        self.cells[idx] = v;
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.cells
    }

    pub fn as_mut_slice(&mut self) -> &mut [i64] {
        &mut self.cells
    }
}

/// Per-cell site index ([`NO_SITE`] when unassigned).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SiteGrid {
    extents: Extents,
    cells: Vec<u64>,
}

impl SiteGrid {
    pub fn new(extents: Extents) -> Self {
        let n = extents.cells();
        SiteGrid { extents, cells: vec![NO_SITE; n] }
    }

    pub fn from_cells(extents: Extents, cells: Vec<u64>) -> Result<Self> {
        if cells.len() != extents.cells() {
            return Err(domain("cell count does not match extents"));
        }
        Ok(SiteGrid { extents, cells })
    }

    pub fn extents(&self) -> &Extents {
        &self.extents
    }

    pub fn get(&self, idx: usize) -> u64 {
        self.cells[idx]
    }

    pub fn set(&mut self, idx: usize, v: u64) {
        self.cells[idx] = v;
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.cells
    }

    pub fn as_mut_slice(&mut self) -> &mut [u64] {
        &mut self.cells
    }
}
