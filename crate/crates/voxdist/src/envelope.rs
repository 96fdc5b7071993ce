//! 1D parabola envelope kernels.
//!
//! Both transforms scan the input once left to right, maintaining a stack of
//! sites whose parabolas appear on the envelope, then fill the output right to
//! left. A site placed earlier keeps every position it ties on; a later site
//! only takes positions where it is strictly better. Region boundaries are
//! computed with integer division (`div_euclid`), so everything stays exact
//! in `i64`.
//!
//! * [`lower_envelope`]: `out[x] = min_i (x-i)^2 + h[i]` (distance-transform
//!   step).
//! * [`upper_envelope`]: `out[x] = max_i f[i] - (x-i)^2` (reverse-transform
//!   step); outputs may be negative.

/// Reusable stack storage for envelope scans.
#[derive(Debug, Default)]
pub struct Scratch {
    sites: Vec<usize>,
    starts: Vec<usize>,
}

impl Scratch {
    pub fn new() -> Self {
        Scratch::default()
    }

    pub fn with_capacity(n: usize) -> Self {
        Scratch { sites: Vec::with_capacity(n), starts: Vec::with_capacity(n) }
    }
}

/// Stack traffic of one scan; both counters are `O(n)`.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct EnvelopeOps {
    pub pushes: usize,
    pub pops: usize,
}

#[inline]
fn eval<const UPPER: bool>(vals: &[i64], x: usize, i: usize) -> i64 {
    let dx = x as i64 - i as i64;
    if UPPER {
        vals[i] - dx * dx
    } else {
        vals[i] + dx * dx
    }
}

/// Largest position where site `u` still wins or ties against the later site
/// `v` (`u < v`). Positions past it belong to `v`.
#[inline]
fn sep<const UPPER: bool>(vals: &[i64], u: usize, v: usize) -> i64 {
    let (ui, vi) = (u as i64, v as i64);
    let num = if UPPER {
        vals[u] - vals[v] + vi * vi - ui * ui
    } else {
        vals[v] - vals[u] + vi * vi - ui * ui
    };
    num.div_euclid(2 * (vi - ui))
}

fn envelope_into<const UPPER: bool>(
    vals: &[i64],
    out: &mut [i64],
    mut win: Option<&mut [usize]>,
    scratch: &mut Scratch,
) -> EnvelopeOps {
    let n = vals.len();
    assert_eq!(out.len(), n);
    if let Some(w) = win.as_deref() {
        assert_eq!(w.len(), n);
    }
    let mut ops = EnvelopeOps::default();
    if n == 0 {
        return ops;
    }

    let sites = &mut scratch.sites;
    let starts = &mut scratch.starts;
    sites.clear();
    starts.clear();
    sites.push(0);
    starts.push(0);
    ops.pushes += 1;

    for u in 1..n {
        while let Some(&s) = sites.last() {
            let t = *starts.last().unwrap();
            let old = eval::<UPPER>(vals, t, s);
            let new = eval::<UPPER>(vals, t, u);
            let strictly_better = if UPPER { new > old } else { new < old };
            if !strictly_better {
                break;
            }
            sites.pop();
            starts.pop();
            ops.pops += 1;
        }
        if sites.is_empty() {
            sites.push(u);
            starts.push(0);
            ops.pushes += 1;
        } else {
            let s = *sites.last().unwrap();
            // First position owned by u; always > the incumbent's start.
            let w = 1 + sep::<UPPER>(vals, s, u);
            if w < n as i64 {
                sites.push(u);
                starts.push(w as usize);
                ops.pushes += 1;
            }
        }
    }

    let mut q = sites.len() - 1;
    for x in (0..n).rev() {
        let s = sites[q];
        out[x] = eval::<UPPER>(vals, x, s);
        if let Some(w) = win.as_deref_mut() {
            w[x] = s;
        }
        if x == starts[q] && q > 0 {
            q -= 1;
        }
    }
    ops
}

/// Pointwise minimum of the parabolas `(x-i)^2 + h[i]`, written into `out`.
/// `win` (if given) receives the index of the site realizing each minimum.
pub fn lower_envelope_into(
    h: &[i64],
    out: &mut [i64],
    win: Option<&mut [usize]>,
    scratch: &mut Scratch,
) -> EnvelopeOps {
    envelope_into::<false>(h, out, win, scratch)
}

/// Pointwise maximum of the parabolas `f[i] - (x-i)^2`, written into `out`.
pub fn upper_envelope_into(
    f: &[i64],
    out: &mut [i64],
    win: Option<&mut [usize]>,
    scratch: &mut Scratch,
) -> EnvelopeOps {
    envelope_into::<true>(f, out, win, scratch)
}

pub fn lower_envelope(h: &[i64]) -> Vec<i64> {
    let mut out = vec![0; h.len()];
    lower_envelope_into(h, &mut out, None, &mut Scratch::new());
    out
}

pub fn lower_envelope_win(h: &[i64]) -> (Vec<i64>, Vec<usize>) {
    let mut out = vec![0; h.len()];
    let mut win = vec![0; h.len()];
    lower_envelope_into(h, &mut out, Some(&mut win), &mut Scratch::new());
    (out, win)
}

pub fn upper_envelope(f: &[i64]) -> Vec<i64> {
    let mut out = vec![0; f.len()];
    upper_envelope_into(f, &mut out, None, &mut Scratch::new());
    out
}

pub fn upper_envelope_win(f: &[i64]) -> (Vec<i64>, Vec<usize>) {
    let mut out = vec![0; f.len()];
    let mut win = vec![0; f.len()];
    upper_envelope_into(f, &mut out, Some(&mut win), &mut Scratch::new());
    (out, win)
}
