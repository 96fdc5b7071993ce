//! Skeleton extraction and the row-segment ball reduction.
//!
//! `sk_extract` keeps the balls that own at least one covered cell of the
//! reverse transform — already a reversible subset of the full ball set.
//! `rdma_reduce` then walks every grid row and drops balls whose row segments
//! are nested inside another ball's, keeping reconstruction intact while
//! removing most non-maximal balls.

use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

use crate::error::Result;
use crate::grid::{BinaryGrid, Extents, NO_SITE};
use crate::redt::{redt_map, redt_values, BallSet};
use crate::sdt::{balls_of, sdt};

/// How balls are assigned to rows during reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Reduction {
    /// A ball participates in every row its open ball meets (default).
    #[default]
    Intersect,
    /// A ball participates only in the d rows through its own center.
    Centers,
}

/// Balls owning at least one covered cell of the reverse transform of the
/// full ball set. Keeps each ball's squared distance value as its radius;
/// reconstructs the image exactly.
pub fn sk_extract(image: &BinaryGrid) -> Result<BallSet> {
    let e = image.extents();
    if image.count_foreground() == 0 {
        return BallSet::new(e.dim());
    }
    let field = sdt(image);
    let balls = balls_of(image, &field)?;
    let map = redt_map(&balls, e)?;
    let mut keep = vec![false; balls.len()];
    for idx in 0..e.cells() {
        if map.value.get(idx) > 0 {
            let o = map.owner.get(idx);
            if o != NO_SITE {
                keep[o as usize] = true;
            }
        }
    }
    Ok(balls.subset(&keep))
}

/// One ball's footprint on one row: inclusive endpoints of the open ball's
/// slice (endpoints may stick out of the grid; they are compared, not read).
#[derive(Debug, Clone, Copy)]
struct Seg {
    l: i64,
    r: i64,
    ball: u32,
}

/// Sorted-row sweep: collapse exact-duplicate segments (the survivor stays in
/// the stack but qualifies nobody), then discard any segment nested in the
/// last kept one; a ball qualifies if a non-duplicate segment of its survives.
/// Returns (segments seen, stack pushes).
fn reduce_row(segs: &mut [Seg], qualified: &[AtomicBool]) -> (usize, usize) {
    segs.sort_unstable_by(|a, b| {
        a.l.cmp(&b.l).then(b.r.cmp(&a.r)).then(a.ball.cmp(&b.ball))
    });
    let mut pushes = 0usize;
    let mut top: Option<(i64, i64)> = None;
    let mut i = 0;
    while i < segs.len() {
        let s = segs[i];
        let mut j = i + 1;
        while j < segs.len() && segs[j].l == s.l && segs[j].r == s.r {
            j += 1;
        }
        let double = j - i > 1;
        let nested = match top {
            Some((tl, tr)) => tl <= s.l && s.r <= tr,
            None => false,
        };
        if !nested {
            top = Some((s.l, s.r));
            pushes += 1;
            if !double {
                qualified[s.ball as usize].store(true, Ordering::Relaxed);
            }
        }
        i = j;
    }
    (segs.len(), pushes)
}

/// Per-axis description of how row bases map to bucket slots.
struct BaseAxis {
    stride: usize,
    size: i64,
    center: i64,
}

/// Visit every row base the ball meets: bases with Σ offset² ≤ budget,
/// calling `f(bucket slot, spent squared budget)`.
fn for_each_base(axes: &[BaseAxis], budget: i64, slot: usize, spent: i64, f: &mut impl FnMut(usize, i64)) {
    match axes.split_first() {
        None => f(slot, spent),
        Some((a, rest)) => {
            let rad = (budget - spent).isqrt();
            let lo = (a.center - rad).max(0);
            let hi = (a.center + rad).min(a.size - 1);
            for b in lo..=hi {
                let o = b - a.center;
                for_each_base(rest, budget, slot + b as usize * a.stride, spent + o * o, f);
            }
        }
    }
}

fn reduce(sk: &BallSet, extents: &Extents, mode: Reduction) -> Result<Vec<bool>> {
    sk.index_centers(extents)?;
    let d = extents.dim();
    let qualified: Vec<AtomicBool> = (0..sk.len()).map(|_| AtomicBool::new(false)).collect();

    for axis in 0..d {
        // Bucket slot = mixed-radix number over the other axes.
        let mut strides = vec![0usize; d];
        let mut acc = 1usize;
        for (m, stride) in strides.iter_mut().enumerate() {
            if m == axis {
                continue;
            }
            *stride = acc;
            acc *= extents.size(m);
        }
        let mut buckets: Vec<Vec<Seg>> = vec![Vec::new(); acc];

        for i in 0..sk.len() {
            let c = sk.center(i);
            let r = sk.r(i);
            let apex = c[axis] as i64;
            let mut emit = |slot: usize, spent: i64| {
                let reach = (r - 1 - spent).isqrt();
                buckets[slot].push(Seg { l: apex - reach, r: apex + reach, ball: i as u32 });
            };
            match mode {
                Reduction::Intersect => {
                    let axes: Vec<BaseAxis> = (0..d)
                        .filter(|&m| m != axis)
                        .map(|m| BaseAxis {
                            stride: strides[m],
                            size: extents.size(m) as i64,
                            center: c[m] as i64,
                        })
                        .collect();
                    for_each_base(&axes, r - 1, 0, 0, &mut emit);
                }
                Reduction::Centers => {
                    let slot: usize = (0..d)
                        .filter(|&m| m != axis)
                        .map(|m| c[m] as usize * strides[m])
                        .sum();
                    emit(slot, 0);
                }
            }
        }

        buckets.par_iter_mut().for_each(|row| {
            reduce_row(row, &qualified);
        });
    }

    Ok(qualified.into_iter().map(|q| q.into_inner()).collect())
}

/// Distinct balls can share every row segment (the grid border truncates
/// them to the same point set), in which case the sweep qualifies none of
/// them and their cells lose every covering ball. Re-qualify the owner of
/// each such cell: owners always cover the cells they own, so one pass
/// restores the rebuild guarantee. A no-op whenever the sweep already
/// covers everything.
fn complete_cover(sk: &BallSet, extents: &Extents, keep: &mut [bool]) -> Result<()> {
    let full = redt_map(sk, extents)?;
    let kept = redt_values(&sk.subset(keep), extents)?;
    for idx in 0..extents.cells() {
        if full.value.get(idx) > 0 && kept.get(idx) == 0 {
            let o = full.owner.get(idx);
            if o != NO_SITE {
                keep[o as usize] = true;
            }
        }
    }
    Ok(())
}

/// Drop balls whose every row segment is nested in (or duplicates) another
/// ball's. The result reconstructs exactly the same image as the input set.
pub fn rdma_reduce(sk: &BallSet, extents: &Extents) -> Result<BallSet> {
    rdma_reduce_with(sk, extents, Reduction::default())
}

/// Like [`rdma_reduce`] with an explicit row-assignment mode. Only
/// [`Reduction::Intersect`] guarantees the result rebuilds the input's
/// cover; [`Reduction::Centers`] trades that for speed.
pub fn rdma_reduce_with(sk: &BallSet, extents: &Extents, mode: Reduction) -> Result<BallSet> {
    let mut keep = reduce(sk, extents, mode)?;
    if mode == Reduction::Intersect {
        complete_cover(sk, extents, &mut keep)?;
    }
    Ok(sk.subset(&keep))
}

/// One-call pipeline: [`sk_extract`] then [`rdma_reduce`].
pub fn rdma(image: &BinaryGrid) -> Result<BallSet> {
    rdma_with(image, Reduction::default())
}

pub fn rdma_with(image: &BinaryGrid, mode: Reduction) -> Result<BallSet> {
    let sk = sk_extract(image)?;
    rdma_reduce_with(&sk, image.extents(), mode)
}
