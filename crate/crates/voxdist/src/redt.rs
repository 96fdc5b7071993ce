//! Reverse transform: rebuilding shapes from balls, with ownership.
//!
//! A ball is a center plus a *squared* radius `r >= 1`; its cells are
//! `{ p : |p - c|^2 < r }` (strict). Seeding a field with `r` at each center
//! and taking the upper parabola envelope along every axis yields
//! `value(p) = max_i (r_i - |p - c_i|^2)`, so `value > 0` marks exactly the
//! union of the balls. The same scan drags seed provenance along, which gives
//! each cell the ball that attains its value — the grid power labeling.

use std::collections::HashMap;

use crate::error::{domain, Result};
use crate::grid::{BinaryGrid, Extents, ScalarGrid, SiteGrid, NO_SITE};
use crate::passes::envelope_pass;

/// A set of balls of one dimension, stored structure-of-arrays.
/// Centers are grid coordinates; radii are squared and at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallSet {
    d: usize,
    centers: Vec<u32>,
    rs: Vec<i64>,
}

/// Squared radii above this would be pointless on any legal grid and could
/// overflow envelope arithmetic; rejected at validation.
pub const MAX_RADIUS: i64 = 1 << 48;

impl BallSet {
    pub fn new(d: usize) -> Result<Self> {
        if d == 0 || d > crate::grid::MAX_DIM {
            return Err(domain(format!(
                "ball dimension must be 1..={}, got {d}",
                crate::grid::MAX_DIM
            )));
        }
        Ok(BallSet { d, centers: Vec::new(), rs: Vec::new() })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.rs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rs.is_empty()
    }

    pub fn push(&mut self, center: &[u32], r: i64) {
        assert_eq!(center.len(), self.d, "center arity mismatch");
        self.centers.extend_from_slice(center);
        self.rs.push(r);
    }

    pub fn center(&self, i: usize) -> &[u32] {
        &self.centers[i * self.d..(i + 1) * self.d]
    }

    pub fn r(&self, i: usize) -> i64 {
        self.rs[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[u32], i64)> + '_ {
        self.centers.chunks_exact(self.d).zip(self.rs.iter().copied())
    }

    /// Balls whose `keep` flag is set, in original order.
    pub fn subset(&self, keep: &[bool]) -> BallSet {
        assert_eq!(keep.len(), self.len());
        let mut out = BallSet { d: self.d, centers: Vec::new(), rs: Vec::new() };
        for (i, &k) in keep.iter().enumerate() {
            if k {
                out.push(self.center(i), self.r(i));
            }
        }
        out
    }

    /// Validate against a grid and index centers by linear cell:
    /// dimensions match, every center in-extent, every `r` in `1..=MAX_RADIUS`,
    /// no duplicate centers.
    pub(crate) fn index_centers(&self, extents: &Extents) -> Result<HashMap<u64, u64>> {
        if self.d != extents.dim() {
            return Err(domain(format!(
                "ball dimension {} does not match grid dimension {}",
                self.d,
                extents.dim()
            )));
        }
        let mut map = HashMap::with_capacity(self.len());
        let mut coords = vec![0usize; self.d];
        for i in 0..self.len() {
            let r = self.r(i);
            if !(1..=MAX_RADIUS).contains(&r) {
                return Err(domain(format!("ball {i} has squared radius {r} outside 1..={MAX_RADIUS}")));
            }
            for (k, (&c, x)) in self.center(i).iter().zip(coords.iter_mut()).enumerate() {
                if c as usize >= extents.size(k) {
                    return Err(domain(format!(
                        "ball {i} center coordinate {k} = {c} is outside extent {}",
                        extents.size(k)
                    )));
                }
                *x = c as usize;
            }
            let lin = extents.linear_index(&coords) as u64;
            if map.insert(lin, i as u64).is_some() {
                return Err(domain(format!("ball {i} duplicates another ball's center")));
            }
        }
        Ok(map)
    }
}

/// The reverse-transform field: per-cell best value and the ball attaining it.
#[derive(Debug, Clone)]
pub struct PowerField {
    /// `max_i (r_i - |p - c_i|^2)` wherever that is positive, else 0: the
    /// non-center cells are seeded with zero-height parabolas, which floor
    /// the field. `> 0` exactly on the union of the balls.
    pub value: ScalarGrid,
    /// Index of the ball attaining `value`, or [`NO_SITE`] where a
    /// zero-height seed won instead (only possible at cells with `value`
    /// 0, i.e. uncovered cells).
    pub owner: SiteGrid,
}

fn seeded_values(balls: &BallSet, extents: &Extents, map: &HashMap<u64, u64>) -> Vec<i64> {
    let mut vals = vec![0i64; extents.cells()];
    for (&lin, &i) in map {
        vals[lin as usize] = balls.r(i as usize);
    }
    vals
}

/// Value field only (no ownership); same contract as [`redt_map`].
pub fn redt_values(balls: &BallSet, extents: &Extents) -> Result<ScalarGrid> {
    let map = balls.index_centers(extents)?;
    let mut vals = seeded_values(balls, extents, &map);
    for axis in 0..extents.dim() {
        envelope_pass(extents, axis, true, &mut vals, None);
    }
    Ok(ScalarGrid::from_cells(extents.clone(), vals).unwrap())
}

/// Full reverse transform with ownership.
///
/// Uncovered cells end at value 0 (their own zero-height seed always
/// competes) and their owner resolves to [`NO_SITE`]; covered cells
/// (`value > 0`) always resolve to a real ball.
pub fn redt_map(balls: &BallSet, extents: &Extents) -> Result<PowerField> {
    let map = balls.index_centers(extents)?;
    let mut vals = seeded_values(balls, extents, &map);
    let mut seeds: Vec<u64> = (0..extents.cells() as u64).collect();
    for axis in 0..extents.dim() {
        envelope_pass(extents, axis, true, &mut vals, Some(&mut seeds));
    }
    for s in seeds.iter_mut() {
        *s = map.get(s).copied().unwrap_or(NO_SITE);
    }
    Ok(PowerField {
        value: ScalarGrid::from_cells(extents.clone(), vals).unwrap(),
        owner: SiteGrid::from_cells(extents.clone(), seeds).unwrap(),
    })
}

/// Grid power labeling. The minimal-power ball at `p` is the one maximizing
/// `r - |p - c|^2`, which is exactly [`redt_map`]'s owner; exposed under the
/// labeling name for call sites that read it that way.
pub fn power_labeling(balls: &BallSet, extents: &Extents) -> Result<PowerField> {
    redt_map(balls, extents)
}

/// Union of the open balls as a binary image.
pub fn reconstruct(balls: &BallSet, extents: &Extents) -> Result<BinaryGrid> {
    let vals = redt_values(balls, extents)?;
    let cells = vals.as_slice().iter().map(|&v| v > 0).collect();
    Ok(BinaryGrid::from_cells(extents.clone(), cells).unwrap())
}
