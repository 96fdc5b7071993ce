//! Squared Euclidean distance transform of a small 2-d image.
//!
//! Prints the input mask and the exact squared distance of every cell to its
//! nearest background cell. Distances are squared integers, so no rounding
//! ever happens; take a square root only when you need geometric length.

use voxdist::grid::{BinaryGrid, Extents};
use voxdist::sdt::sdt;

fn main() {
    let e = Extents::new(&[9, 5]).unwrap();
    let mut img = BinaryGrid::new(e.clone());
    // A 7x3 slab with one interior hole.
    for y in 1..4 {
        for x in 1..8 {
            img.set(e.linear_index(&[x, y]), true);
        }
    }
    img.set(e.linear_index(&[6, 2]), false);

    println!("input (# = foreground):");
    for y in 0..5 {
        let row: String =
            (0..9).map(|x| if img.get(e.linear_index(&[x, y])) { '#' } else { '.' }).collect();
        println!("  {row}");
    }

    let res = sdt(&img);
    assert!(!res.infinite);
    println!("\nsquared distances to background:");
    for y in 0..5 {
        let row: Vec<String> =
            (0..9).map(|x| format!("{:2}", res.dist.get(e.linear_index(&[x, y])))).collect();
        println!("  {}", row.join(" "));
    }

    // A mask with no background at all has no finite distances; the result
    // says so instead of inventing values.
    let all = BinaryGrid::from_cells(e.clone(), vec![true; e.cells()]).unwrap();
    let res = sdt(&all);
    println!("\nall-foreground image: infinite = {}", res.infinite);
}
