//! Row-parallel driver for separable envelope passes.
//!
//! One pass rewrites every row of one axis in place, optionally dragging a
//! per-cell provenance payload (the linear index of the seed cell whose
//! parabola currently wins there). Rows are disjoint, so they are processed
//! in parallel through raw pointers; output is identical for any worker
//! count because each row's result depends only on its own input.

use rayon::prelude::*;

use crate::envelope::{lower_envelope_into, upper_envelope_into, Scratch};
use crate::grid::Extents;

#[derive(Clone, Copy)]
struct SendPtr<T>(*mut T);
unsafe impl<T> Send for SendPtr<T> {}
unsafe impl<T> Sync for SendPtr<T> {}

struct RowScratch {
    vals: Vec<i64>,
    out: Vec<i64>,
    win: Vec<usize>,
    seeds: Vec<u64>,
    env: Scratch,
}

impl RowScratch {
    fn new(len: usize) -> Self {
        RowScratch {
            vals: vec![0; len],
            out: vec![0; len],
            win: vec![0; len],
            seeds: vec![0; len],
            env: Scratch::with_capacity(len),
        }
    }
}

/// Replace `values` along every row of `axis` by the envelope of its
/// parabolas (lower when `upper` is false). When `seeds` is given, each cell
/// additionally receives the seed payload of the row position that won it.
pub(crate) fn envelope_pass(
    extents: &Extents,
    axis: usize,
    upper: bool,
    values: &mut [i64],
    seeds: Option<&mut [u64]>,
) {
    debug_assert_eq!(values.len(), extents.cells());
    let n = extents.size(axis);
    let vptr = SendPtr(values.as_mut_ptr());
    let sptr = seeds.map(|s| {
        debug_assert_eq!(s.len(), extents.cells());
        SendPtr(s.as_mut_ptr())
    });

    extents.rows(axis).par_iter().for_each_init(
        || RowScratch::new(n),
        #[allow(clippy::redundant_locals)]
        |sc, row| unsafe {
            // Copy the wrappers whole so the closure captures them (and not
            // their raw-pointer fields, which are not Sync).
            let vptr = vptr;
            let sptr = sptr;
            for k in 0..row.len {
                sc.vals[k] = *vptr.0.add(row.base + k * row.stride);
            }
            let win = sptr.is_some().then_some(&mut sc.win[..row.len]);
            if upper {
                upper_envelope_into(&sc.vals[..row.len], &mut sc.out[..row.len], win, &mut sc.env);
            } else {
                lower_envelope_into(&sc.vals[..row.len], &mut sc.out[..row.len], win, &mut sc.env);
            }
            for k in 0..row.len {
                *vptr.0.add(row.base + k * row.stride) = sc.out[k];
            }
            if let Some(sp) = sptr {
                for k in 0..row.len {
                    sc.seeds[k] = *sp.0.add(row.base + k * row.stride);
                }
                for k in 0..row.len {
                    *sp.0.add(row.base + k * row.stride) = sc.seeds[sc.win[k]];
                }
            }
        },
    );
}
