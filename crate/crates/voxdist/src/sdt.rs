//! Exact squared Euclidean distance transform and Voronoi labeling.
//!
//! Pass 1 runs the classic two-scan 1D distance along axis 0 (saturating at
//! the sum of all extents, a value no in-grid distance can reach) and squares
//! the result. Each later pass takes the lower parabola envelope along the
//! next axis. After the last pass every cell holds the exact squared distance
//! to its nearest background cell — O(N) total.

use rayon::prelude::*;

use crate::error::{domain, Result};
use crate::grid::{BinaryGrid, ScalarGrid, SiteGrid, NO_SITE};
use crate::passes::envelope_pass;
use crate::redt::BallSet;

/// Squared distance field of an image.
#[derive(Debug, Clone)]
pub struct SdtResult {
    /// Squared distance to the nearest background cell.
    pub dist: ScalarGrid,
    /// Set when the image has no background at all; `dist` is then the
    /// all-INF sentinel field.
    pub infinite: bool,
}

/// Two-scan 1D distance along axis 0, squared in place.
///
/// `track_sites` additionally records, per cell, the linear index of the
/// nearest background cell seen in its row ([`NO_SITE`] when the row has
/// none). Ties keep the site to the left.
fn axis0_pass(image: &BinaryGrid, vals: &mut [i64], sites: Option<&mut [u64]>) {
    let e = image.extents();
    let n0 = e.size(0);
    let sat: i64 = e.sizes().iter().map(|&n| n as i64).sum();

    let scan = |row: usize, v: &mut [i64], img: &[bool], s: Option<&mut [u64]>| {
        let base = (row * n0) as u64;
        let mut carry = sat;
        let mut src = NO_SITE;
        if let Some(s) = s {
            for k in 0..n0 {
                if !img[k] {
                    carry = 0;
                    src = base + k as u64;
                } else if carry < sat {
                    carry += 1;
                }
                v[k] = carry;
                s[k] = src;
            }
            carry = sat;
            src = NO_SITE;
            for k in (0..n0).rev() {
                if !img[k] {
                    carry = 0;
                    src = base + k as u64;
                } else if carry < sat {
                    carry += 1;
                }
                if carry < v[k] {
                    v[k] = carry;
                    s[k] = src;
                }
            }
        } else {
            for k in 0..n0 {
                carry = if !img[k] { 0 } else { (carry + 1).min(sat) };
                v[k] = carry;
            }
            carry = sat;
            for k in (0..n0).rev() {
                carry = if !img[k] { 0 } else { (carry + 1).min(sat) };
                v[k] = v[k].min(carry);
            }
        }
        for x in v.iter_mut() {
            *x *= *x;
        }
    };

    match sites {
        Some(sites) => {
            vals.par_chunks_mut(n0)
                .zip(sites.par_chunks_mut(n0))
                .zip(image.as_slice().par_chunks(n0))
                .enumerate()
                .for_each(|(row, ((v, s), img))| scan(row, v, img, Some(s)));
        }
        None => {
            vals.par_chunks_mut(n0)
                .zip(image.as_slice().par_chunks(n0))
                .enumerate()
                .for_each(|(row, (v, img))| scan(row, v, img, None));
        }
    }
}

fn transform(image: &BinaryGrid, want_sites: bool) -> (Vec<i64>, Option<Vec<u64>>) {
    let e = image.extents();
    let mut vals = vec![0i64; e.cells()];
    let mut sites = want_sites.then(|| vec![NO_SITE; e.cells()]);
    axis0_pass(image, &mut vals, sites.as_deref_mut());
    for axis in 1..e.dim() {
        envelope_pass(e, axis, false, &mut vals, sites.as_deref_mut());
    }
    (vals, sites)
}

/// Squared Euclidean distance transform: `dist(p) = min_b |p - b|^2` over
/// background cells `b`. An image with no background yields the all-INF
/// field with `infinite` set.
pub fn sdt(image: &BinaryGrid) -> SdtResult {
    let e = image.extents().clone();
    if image.count_foreground() == e.cells() {
        let inf = e.inf();
        return SdtResult { dist: ScalarGrid::filled(e, inf), infinite: true };
    }
    let (vals, _) = transform(image, false);
    let dist = ScalarGrid::from_cells(e, vals).unwrap();
    SdtResult { dist, infinite: false }
}

/// Label every cell with the linear index of a nearest background cell.
/// The labeled site always realizes `sdt(image).dist`; which nearest site is
/// chosen on ties is fixed by the envelope scan order, so output is
/// deterministic.
pub fn voronoi_labeling(image: &BinaryGrid) -> Result<SiteGrid> {
    let e = image.extents().clone();
    if image.count_foreground() == e.cells() {
        return Err(domain("voronoi labeling needs at least one background cell"));
    }
    let (_, sites) = transform(image, true);
    Ok(SiteGrid::from_cells(e, sites.unwrap()).unwrap())
}

/// One ball per foreground cell: center `p`, squared radius `dist(p)`.
pub fn balls_of(image: &BinaryGrid, sdtres: &SdtResult) -> Result<BallSet> {
    if sdtres.infinite {
        return Err(domain("ball extraction needs a finite distance field"));
    }
    let e = image.extents();
    let mut balls = BallSet::new(e.dim())?;
    let mut coords = vec![0usize; e.dim()];
    let mut center = vec![0u32; e.dim()];
    for idx in 0..e.cells() {
        if image.get(idx) {
            e.coords_of(idx, &mut coords);
            for (c, &x) in center.iter_mut().zip(&coords) {
                *c = x as u32;
            }
            balls.push(&center, sdtres.dist.get(idx));
        }
    }
    Ok(balls)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Extents;

    fn image_1d(cells: &[bool]) -> BinaryGrid {
        let e = Extents::new(&[cells.len()]).unwrap();
        BinaryGrid::from_cells(e, cells.to_vec()).unwrap()
    }

    #[test]
    fn line_distances() {
        let img = image_1d(&[false, true, true, true, false]);
        let res = sdt(&img);
        assert!(!res.infinite);
        assert_eq!(res.dist.as_slice(), &[0, 1, 4, 1, 0]);
    }

    #[test]
    fn all_background_is_zero() {
        let e = Extents::new(&[3, 3]).unwrap();
        let res = sdt(&BinaryGrid::new(e));
        assert!(!res.infinite);
        assert!(res.dist.as_slice().iter().all(|&v| v == 0));
    }

    #[test]
    fn all_foreground_is_infinite() {
        let e = Extents::new(&[4, 2]).unwrap();
        let img = BinaryGrid::from_cells(e.clone(), vec![true; 8]).unwrap();
        let res = sdt(&img);
        assert!(res.infinite);
        assert!(res.dist.as_slice().iter().all(|&v| v == e.inf()));
    }

    #[test]
    fn lone_center_cell() {
        let e = Extents::new(&[3, 3]).unwrap();
        let mut img = BinaryGrid::new(e.clone());
        img.set(e.linear_index(&[1, 1]), true);
        let res = sdt(&img);
        assert_eq!(res.dist.get(e.linear_index(&[1, 1])), 1);
        assert_eq!(res.dist.as_slice().iter().sum::<i64>(), 1);
    }

    #[test]
    fn labels_point_at_nearest_background() {
        let img = image_1d(&[false, true, true, false]);
        let sites = voronoi_labeling(&img).unwrap();
        assert_eq!(sites.as_slice(), &[0, 0, 3, 3]);
    }

    #[test]
    fn all_background_labels_self() {
        let e = Extents::new(&[2, 2]).unwrap();
        let sites = voronoi_labeling(&BinaryGrid::new(e)).unwrap();
        assert_eq!(sites.as_slice(), &[0, 1, 2, 3]);
    }

    #[test]
    fn tied_label_still_at_right_distance() {
        let img = image_1d(&[false, true, false]);
        let sites = voronoi_labeling(&img).unwrap();
        let s = sites.get(1);
        assert!(s == 0 || s == 2);
        let res = sdt(&img);
        assert_eq!(res.dist.get(1), 1);
    }

    #[test]
    fn labeling_all_foreground_is_an_error() {
        let e = Extents::new(&[2]).unwrap();
        let img = BinaryGrid::from_cells(e, vec![true, true]).unwrap();
        assert!(voronoi_labeling(&img).is_err());
    }

    #[test]
    fn balls_from_line() {
        let img = image_1d(&[false, true, true, true, false]);
        let res = sdt(&img);
        let balls = balls_of(&img, &res).unwrap();
        assert_eq!(balls.len(), 3);
        let got: Vec<(u32, i64)> = (0..balls.len()).map(|i| (balls.center(i)[0], balls.r(i))).collect();
        assert_eq!(got, vec![(1, 1), (2, 4), (3, 1)]);
    }

    #[test]
    fn no_foreground_no_balls() {
        let img = image_1d(&[false, false]);
        let res = sdt(&img);
        assert_eq!(balls_of(&img, &res).unwrap().len(), 0);
    }

    #[test]
    fn balls_of_infinite_field_is_an_error() {
        let img = image_1d(&[true, true]);
        let res = sdt(&img);
        assert!(balls_of(&img, &res).is_err());
    }
}
