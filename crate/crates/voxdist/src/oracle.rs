//! Brute-force reference implementations.
//!
//! Everything here evaluates definitions directly — per-cell minima and
//! maxima over exhaustive candidate sets, pointwise set inclusion — with no
//! envelope scans and no shared arithmetic with the fast modules (only grid
//! plumbing and ball-set validation are reused). Input sizes are guarded:
//! these are correctness instruments, deliberately quadratic.

use crate::error::{domain, Result};
use crate::grid::{BinaryGrid, Extents, ScalarGrid, SiteGrid, NO_SITE};
use crate::redt::BallSet;

const FIELD_GUARD: usize = 1_000_000;
const DMA_GUARD: usize = 100_000;

fn guard(cells: usize, limit: usize, what: &str) -> Result<()> {
    if cells > limit {
        return Err(domain(format!(
            "{what} oracle is limited to {limit} cells, got {cells}"
        )));
    }
    Ok(())
}

/// All cell coordinates, flattened d-per-cell, in linear order.
fn cell_coords(e: &Extents) -> Vec<i64> {
    let d = e.dim();
    let mut out = vec![0i64; e.cells() * d];
    let mut coords = vec![0usize; d];
    for idx in 0..e.cells() {
        e.coords_of(idx, &mut coords);
        for k in 0..d {
            out[idx * d + k] = coords[k] as i64;
        }
    }
    out
}

fn sq_dist(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(&x, &y)| (x - y) * (x - y)).sum()
}

/// Per-cell minimum squared distance to any background cell; the INF
/// sentinel everywhere when there is none.
pub fn brute_sdt(image: &BinaryGrid) -> Result<ScalarGrid> {
    let e = image.extents();
    guard(e.cells(), FIELD_GUARD, "distance")?;
    let d = e.dim();
    let coords = cell_coords(e);
    let bg: Vec<usize> = (0..e.cells()).filter(|&i| !image.get(i)).collect();
    let mut out = ScalarGrid::filled(e.clone(), e.inf());
    if bg.is_empty() {
        return Ok(out);
    }
    for idx in 0..e.cells() {
        let p = &coords[idx * d..(idx + 1) * d];
        let mut best = i64::MAX;
        for &b in &bg {
            best = best.min(sq_dist(p, &coords[b * d..(b + 1) * d]));
        }
        out.set(idx, best);
    }
    Ok(out)
}

/// Per-cell maximum of every seeded parabola: `r` at ball centers, 0 at all
/// other cells (so uncovered cells end at values `<= 0`, exactly like the
/// fast transform).
pub fn brute_redt(balls: &BallSet, extents: &Extents) -> Result<ScalarGrid> {
    guard(extents.cells(), FIELD_GUARD, "reverse")?;
    let map = balls.index_centers(extents)?;
    let d = extents.dim();
    let coords = cell_coords(extents);
    let mut seeds = vec![0i64; extents.cells()];
    for (&lin, &i) in &map {
        seeds[lin as usize] = balls.r(i as usize);
    }
    let mut out = ScalarGrid::new(extents.clone());
    for idx in 0..extents.cells() {
        let p = &coords[idx * d..(idx + 1) * d];
        let mut best = i64::MIN;
        for q in 0..extents.cells() {
            best = best.max(seeds[q] - sq_dist(p, &coords[q * d..(q + 1) * d]));
        }
        out.set(idx, best);
    }
    Ok(out)
}

/// In-extent point set of an open ball, as sorted linear indices.
fn ball_points(e: &Extents, coords: &[i64], center: &[u32], r: i64) -> Vec<u32> {
    let d = e.dim();
    let c: Vec<i64> = center.iter().map(|&x| x as i64).collect();
    let mut pts: Vec<u32> = (0..e.cells())
        .filter(|&idx| sq_dist(&coords[idx * d..(idx + 1) * d], &c) < r)
        .map(|idx| idx as u32)
        .collect();
    pts.sort_unstable();
    pts
}

fn is_subset(a: &[u32], b: &[u32]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// Discrete medial axis by definition: every foreground cell's ball, minus
/// those whose point set is properly contained in a single other ball's
/// point set. (Two distinct balls can trace the same in-extent point set;
/// proper containment keeps both rather than deleting each for the other.)
pub fn brute_dma(image: &BinaryGrid) -> Result<BallSet> {
    let e = image.extents();
    guard(e.cells(), DMA_GUARD, "medial-axis")?;
    let dist = brute_sdt(image)?;
    let d = e.dim();
    let coords = cell_coords(e);

    let mut balls = BallSet::new(d)?;
    let mut center = vec![0u32; d];
    for idx in 0..e.cells() {
        if image.get(idx) {
            if dist.get(idx) > e.max_sqdist() {
                return Err(domain("medial-axis oracle needs a background cell"));
            }
            for k in 0..d {
                center[k] = coords[idx * d + k] as u32;
            }
            balls.push(&center, dist.get(idx));
        }
    }

    let sets: Vec<Vec<u32>> =
        (0..balls.len()).map(|i| ball_points(e, &coords, balls.center(i), balls.r(i))).collect();
    let mut keep = vec![true; balls.len()];
    for i in 0..balls.len() {
        for j in 0..balls.len() {
            if sets[i].len() < sets[j].len() && is_subset(&sets[i], &sets[j]) {
                keep[i] = false;
                break;
            }
        }
    }
    Ok(balls.subset(&keep))
}

/// Power labeling by definition: per cell, the ball minimizing
/// `|p - c|^2 - r`, smallest index on ties; [`NO_SITE`] with no balls.
pub fn brute_power_label(balls: &BallSet, extents: &Extents) -> Result<SiteGrid> {
    Ok(brute_power_label_with_ties(balls, extents)?.0)
}

/// As [`brute_power_label`], also flagging the cells where two or more balls
/// tie for minimal power (their label choice is convention, not geometry).
pub fn brute_power_label_with_ties(
    balls: &BallSet,
    extents: &Extents,
) -> Result<(SiteGrid, Vec<bool>)> {
    guard(extents.cells(), FIELD_GUARD, "power-label")?;
    balls.index_centers(extents)?;
    let d = extents.dim();
    let coords = cell_coords(extents);
    let centers: Vec<i64> = (0..balls.len())
        .flat_map(|i| balls.center(i).iter().map(|&c| c as i64).collect::<Vec<_>>())
        .collect();
    let mut out = SiteGrid::new(extents.clone());
    let mut ties = vec![false; extents.cells()];
    for idx in 0..extents.cells() {
        let p = &coords[idx * d..(idx + 1) * d];
        let mut best = i64::MAX;
        let mut who = NO_SITE;
        let mut tied = false;
        for i in 0..balls.len() {
            let power = sq_dist(p, &centers[i * d..(i + 1) * d]) - balls.r(i);
            if power < best {
                best = power;
                who = i as u64;
                tied = false;
            } else if power == best {
                tied = true;
            }
        }
        out.set(idx, who);
        ties[idx] = tied;
    }
    Ok((out, ties))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line_image(cells: &[bool]) -> BinaryGrid {
        let e = Extents::new(&[cells.len()]).unwrap();
        BinaryGrid::from_cells(e, cells.to_vec()).unwrap()
    }

    fn ball_set(d: usize, balls: &[(&[u32], i64)]) -> BallSet {
        let mut set = BallSet::new(d).unwrap();
        for &(c, r) in balls {
            set.push(c, r);
        }
        set
    }

    #[test]
    fn sdt_line() {
        let img = line_image(&[false, true, true, true, false]);
        assert_eq!(brute_sdt(&img).unwrap().as_slice(), &[0, 1, 4, 1, 0]);
    }

    #[test]
    fn sdt_degenerate_images() {
        let e = Extents::new(&[2, 2]).unwrap();
        let all_bg = brute_sdt(&BinaryGrid::new(e.clone())).unwrap();
        assert!(all_bg.as_slice().iter().all(|&v| v == 0));
        let img = BinaryGrid::from_cells(e.clone(), vec![true; 4]).unwrap();
        let all_fg = brute_sdt(&img).unwrap();
        assert!(all_fg.as_slice().iter().all(|&v| v == e.inf()));
    }

    #[test]
    fn redt_single_and_max_of_two() {
        let e = Extents::new(&[5]).unwrap();
        let one = brute_redt(&ball_set(1, &[(&[2], 5)]), &e).unwrap();
        assert_eq!(one.as_slice(), &[1, 4, 5, 4, 1]);

        let empty = brute_redt(&ball_set(1, &[]), &e).unwrap();
        assert!(empty.as_slice().iter().all(|&v| v <= 0));

        let a = brute_redt(&ball_set(1, &[(&[1], 4)]), &e).unwrap();
        let b = brute_redt(&ball_set(1, &[(&[3], 3)]), &e).unwrap();
        let both = brute_redt(&ball_set(1, &[(&[1], 4), (&[3], 3)]), &e).unwrap();
        for i in 0..5 {
            assert_eq!(both.get(i), a.get(i).max(b.get(i)));
        }
    }

    #[test]
    fn dma_of_a_line_is_the_center_ball() {
        let img = line_image(&[false, true, true, true, true, true, false]);
        let dma = brute_dma(&img).unwrap();
        assert_eq!(dma.len(), 1);
        assert_eq!((dma.center(0)[0], dma.r(0)), (3, 9));
    }

    #[test]
    fn dma_of_a_block_keeps_all_units() {
        let e = Extents::new(&[4, 4]).unwrap();
        let mut img = BinaryGrid::new(e.clone());
        for (x, y) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            img.set(e.linear_index(&[x, y]), true);
        }
        assert_eq!(brute_dma(&img).unwrap().len(), 4);
    }

    #[test]
    fn power_labels_and_ties() {
        let e = Extents::new(&[9]).unwrap();
        let (labels, ties) =
            brute_power_label_with_ties(&ball_set(1, &[(&[2], 9), (&[6], 4)]), &e).unwrap();
        assert_eq!(labels.as_slice(), &[0, 0, 0, 0, 0, 1, 1, 1, 1]);
        assert!(ties.iter().all(|&t| !t));

        let e3 = Extents::new(&[3]).unwrap();
        let (labels, ties) =
            brute_power_label_with_ties(&ball_set(1, &[(&[0], 1), (&[2], 1)]), &e3).unwrap();
        assert_eq!(labels.as_slice(), &[0, 0, 1]);
        assert_eq!(ties, vec![false, true, false]);
    }

    #[test]
    fn guards_fire() {
        let e = Extents::new(&[1024, 1024]).unwrap();
        assert!(brute_sdt(&BinaryGrid::new(e)).is_err());
        let e2 = Extents::new(&[400, 400]).unwrap();
        assert!(brute_dma(&BinaryGrid::new(e2)).is_err());
    }
}
