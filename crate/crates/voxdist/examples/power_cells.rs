//! The reverse transform's ownership field is a discrete power diagram.
//!
//! Where two balls overlap, the cell goes to the one with the larger
//! `r - |p - c|^2` — the power of the point — not simply the nearer center.
//! A big ball can therefore own cells that are closer to a small ball's
//! center. Cells outside every ball carry no owner.

use voxdist::grid::{Extents, NO_SITE};
use voxdist::redt::{redt_map, BallSet};

fn main() {
    let e = Extents::new(&[15, 7]).unwrap();
    let mut balls = BallSet::new(2).unwrap();
    balls.push(&[4, 3], 13); // big
    balls.push(&[9, 3], 3); // small, overlapping the big one's reach

    let field = redt_map(&balls, &e).unwrap();

    println!("ownership (0/1 = ball index, . = unowned):");
    for y in 0..7 {
        let row: String = (0..15)
            .map(|x| match field.owner.get(e.linear_index(&[x, y])) {
                NO_SITE => '.',
                o => (b'0' + o as u8) as char,
            })
            .collect();
        println!("  {row}");
    }

    println!("\npower values along the center row:");
    let row: Vec<String> =
        (0..15).map(|x| format!("{:3}", field.value.get(e.linear_index(&[x, 3])))).collect();
    println!("  {}", row.join(" "));

    // Cell (7,3) is nearer to ball 1's center (distance^2 4 vs 9) but ball 0
    // still wins it on power: 13 - 9 = 4 > 3 - 4 = -1.
    let idx = e.linear_index(&[7, 3]);
    assert_eq!(field.owner.get(idx), 0);
    println!("\ncell (7,3): nearer to ball 1, owned by ball 0 on power: ok");
}
