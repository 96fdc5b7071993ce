//! Cross-checking the fast transforms against brute force.
//!
//! The `oracle` module evaluates the same definitions directly — per-cell
//! minima and maxima over exhaustive candidate sets — sharing no arithmetic
//! with the envelope scans. Agreement on a batch of random images is the
//! cheapest strong evidence that the fast paths are exact.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use voxdist::grid::{BinaryGrid, Extents};
use voxdist::oracle::{brute_redt, brute_sdt};
use voxdist::redt::redt_values;
use voxdist::sdt::{balls_of, sdt};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0usize;

    for round in 0..60 {
        let d = 1 + round % 3;
        let sizes: Vec<usize> = (0..d).map(|_| rng.random_range(1..=9)).collect();
        let e = Extents::new(&sizes).unwrap();
        let density = [0.0, 0.3, 0.7, 1.0][round % 4];
        let cells: Vec<bool> = (0..e.cells()).map(|_| rng.random_bool(density)).collect();
        let img = BinaryGrid::from_cells(e.clone(), cells).unwrap();

        // Distance transform against the exhaustive minimum.
        let fast = sdt(&img);
        let slow = brute_sdt(&img).unwrap();
        assert_eq!(fast.dist.as_slice(), slow.as_slice(), "sdt mismatch on {sizes:?}");

        // Reverse transform of the maximal-ball set against the exhaustive
        // maximum (skipped when the image has no background: no balls then).
        if !fast.infinite {
            let balls = balls_of(&img, &fast).unwrap();
            if !balls.is_empty() {
                let fast_v = redt_values(&balls, &e).unwrap();
                let slow_v = brute_redt(&balls, &e).unwrap();
                assert_eq!(fast_v.as_slice(), slow_v.as_slice(), "redt mismatch on {sizes:?}");
            }
        }
        checked += 1;
    }

    println!("{checked} random images: fast and brute-force fields agree exactly");
    println!("(the CLI exposes the same checks behind --oracle)");
}
