//! Shapes and ball sets are two views of the same thing.
//!
//! `balls_of` turns a binary image into one maximal ball per foreground cell
//! (center = the cell, squared radius = its distance value); the reverse
//! transform rebuilds the image from any ball set. The round trip is exact
//! for every image, which is what makes ball-set reductions safe to use as a
//! compressed representation.

use voxdist::grid::{BinaryGrid, Extents};
use voxdist::redt::reconstruct;
use voxdist::sdt::{balls_of, sdt};

fn main() {
    // An L-shaped 3-d solid.
    let e = Extents::new(&[12, 8, 6]).unwrap();
    let mut img = BinaryGrid::new(e.clone());
    for z in 1..5 {
        for y in 1..7 {
            for x in 1..11 {
                if x < 6 || y < 4 {
                    img.set(e.linear_index(&[x, y, z]), true);
                }
            }
        }
    }
    let fg = img.count_foreground();

    let res = sdt(&img);
    let balls = balls_of(&img, &res).unwrap();
    println!("foreground cells: {fg}");
    println!("maximal balls:    {} (one per cell)", balls.len());

    let back = reconstruct(&balls, &e).unwrap();
    assert_eq!(back.as_slice(), img.as_slice());
    println!("reconstruct(balls_of(img)) == img: ok");

    // The radii are the distance values, so the largest ball sits at the
    // innermost cell.
    let (center, r) = balls.iter().max_by_key(|&(_, r)| r).unwrap();
    println!("deepest cell: {center:?}, squared radius {r}");
}
