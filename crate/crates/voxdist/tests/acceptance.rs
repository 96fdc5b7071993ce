//! Acceptance suite: one test per release criterion.
//!
//! Each `criterion_*` test asserts one externally stated requirement at its
//! stated tolerance, so the pass/fail line of this suite is the release
//! checklist. Reference values are frozen; computed values that miss them
//! fail loudly with both numbers in the message.

use std::collections::HashSet;
use std::process::Command;
use std::sync::Mutex;
use std::time::Instant;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use voxdist::filter::{filtered_reconstruct, measure, FilterParams};
use voxdist::grid::{BinaryGrid, Extents};
use voxdist::medial::{rdma, rdma_reduce, sk_extract};
use voxdist::oracle::{brute_dma, brute_redt, brute_sdt};
use voxdist::redt::{reconstruct, redt_map, BallSet};
use voxdist::sdt::{balls_of, sdt};

/// Serializes the expensive tests so wall-clock measurements don't fight
/// each other for cores. Recover from poisoning: an expected failure in one
/// heavy test must not take the others down with it.
static HEAVY: Mutex<()> = Mutex::new(());

fn heavy() -> std::sync::MutexGuard<'static, ()> {
    HEAVY.lock().unwrap_or_else(|e| e.into_inner())
}

fn random_image(rng: &mut ChaCha8Rng, d: usize, max_axis: usize, density: f64) -> BinaryGrid {
    let sizes: Vec<usize> = (0..d).map(|_| rng.random_range(1..=max_axis)).collect();
    let e = Extents::new(&sizes).unwrap();
    let cells = (0..e.cells()).map(|_| rng.random_bool(density)).collect();
    BinaryGrid::from_cells(e, cells).unwrap()
}

fn ball_pairs(set: &BallSet) -> HashSet<(Vec<u32>, i64)> {
    set.iter().map(|(c, r)| (c.to_vec(), r)).collect()
}

/// 20^3 solid foreground centered in a 22^3 grid.
fn cube() -> BinaryGrid {
    let e = Extents::new(&[22, 22, 22]).unwrap();
    let mut img = BinaryGrid::new(e.clone());
    for z in 1..21 {
        for y in 1..21 {
            for x in 1..21 {
                img.set(e.linear_index(&[x, y, z]), true);
            }
        }
    }
    img
}

#[test]
fn criterion_1_distance_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for round in 0..200 {
        let d = 1 + round % 3;
        let density = [0.0, 0.2, 0.5, 0.8, 1.0][round % 5];
        let img = random_image(&mut rng, d, 12, density);
        let fast = sdt(&img);
        let slow = brute_sdt(&img).unwrap();
        assert_eq!(
            fast.dist.as_slice(),
            slow.as_slice(),
            "distance mismatch on {:?} at density {density} (round {round})",
            img.extents().sizes()
        );
    }
}

#[test]
fn criterion_2_reverse_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    for round in 0..200 {
        let d = 1 + round % 3;
        let sizes: Vec<usize> = (0..d).map(|_| rng.random_range(1..=12)).collect();
        let e = Extents::new(&sizes).unwrap();
        let count = rng.random_range(1..=8usize);
        let mut centers = HashSet::new();
        let mut balls = BallSet::new(d).unwrap();
        for _ in 0..count {
            let c: Vec<u32> =
                sizes.iter().map(|&n| rng.random_range(0..n) as u32).collect();
            if centers.insert(c.clone()) {
                balls.push(&c, rng.random_range(1..=2 * e.max_sqdist().max(1)));
            }
        }
        let field = redt_map(&balls, &e).unwrap();
        let slow = brute_redt(&balls, &e).unwrap();
        assert_eq!(
            field.value.as_slice(),
            slow.as_slice(),
            "reverse-transform mismatch on {sizes:?} (round {round})"
        );
        let union = reconstruct(&balls, &e).unwrap();
        for idx in 0..e.cells() {
            assert_eq!(union.get(idx), slow.get(idx) > 0, "union mismatch at cell {idx}");
        }
    }
}

#[test]
fn criterion_3_reductions_rebuild_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    for round in 0..200 {
        let d = 1 + round % 3;
        let density = [0.3, 0.6, 0.9][round % 3];
        let mut img = random_image(&mut rng, d, 10, density);
        if img.count_foreground() == img.extents().cells() {
            img.set(0, false); // keep the distance field finite
        }
        let e = img.extents().clone();
        let res = sdt(&img);
        let all = balls_of(&img, &res).unwrap();
        let sk = sk_extract(&img).unwrap();
        let axis = rdma(&img).unwrap();
        for (name, set) in [("maximal balls", &all), ("owner set", &sk), ("axis", &axis)] {
            let back = reconstruct(set, &e).unwrap();
            assert_eq!(
                back.as_slice(),
                img.as_slice(),
                "{name} failed to rebuild {:?} (round {round})",
                e.sizes()
            );
        }
        assert!(axis.len() <= sk.len() && sk.len() <= all.len());
    }
}

#[test]
fn criterion_4_axis_within_brute_force_dma() {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    let mut tested = 0;
    while tested < 100 {
        let d = 2 + tested % 2;
        let density = [0.55, 0.75, 0.9][tested % 3];
        let img = random_image(&mut rng, d, 10, density);
        if img.count_foreground() == 0 || img.count_foreground() == img.extents().cells() {
            continue;
        }
        tested += 1;
        let axis = ball_pairs(&rdma(&img).unwrap());
        let dma = ball_pairs(&brute_dma(&img).unwrap());
        for (c, r) in &axis {
            assert!(
                dma.contains(&(c.clone(), *r)),
                "axis ball ({c:?}, {r}) is not in the brute-force medial axis of a {:?} \
                 image at density {density} (case {tested})",
                img.extents().sizes()
            );
        }
    }
}

#[test]
fn criterion_5_cube_owner_count() {
    let _guard = heavy();
    let img = cube();
    let sk = sk_extract(&img).unwrap();
    assert_eq!(sk.len(), 940, "owner-set size {} differs from the reference 940", sk.len());
}

#[test]
fn criterion_5_cube_axis_count() {
    let _guard = heavy();
    let img = cube();
    let axis = rdma(&img).unwrap();
    // Reference count 624 with a 2% tolerance window.
    assert!(
        (612..=636).contains(&axis.len()),
        "axis ball count {} outside the reference window 612..=636",
        axis.len()
    );
}

#[test]
fn criterion_5_cube_axis_runtime() {
    let _guard = heavy();
    let img = cube();
    let sk = sk_extract(&img).unwrap();
    let start = Instant::now();
    let axis = rdma_reduce(&sk, img.extents()).unwrap();
    let elapsed = start.elapsed();
    assert!(!axis.is_empty());
    assert!(elapsed.as_secs_f64() < 1.0, "axis reduction took {elapsed:?}, budget 1s");
}

#[test]
fn criterion_6_sphere_axis_single_ball() {
    let _guard = heavy();
    // Ball of squared radius 2500 centered in a 110^3 grid.
    let e = Extents::new(&[110, 110, 110]).unwrap();
    let c = [55i64, 55, 55];
    let mut cells = vec![false; e.cells()];
    let mut coords = vec![0usize; 3];
    for (idx, cell) in cells.iter_mut().enumerate() {
        e.coords_of(idx, &mut coords);
        let sq: i64 = coords.iter().zip(&c).map(|(&p, &q)| (p as i64 - q) * (p as i64 - q)).sum();
        *cell = sq < 2500;
    }
    let img = BinaryGrid::from_cells(e.clone(), cells).unwrap();
    assert_eq!(img.count_foreground(), 523155, "foreground of the digital ball");

    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let start = Instant::now();
    let axis = pool.install(|| rdma(&img).unwrap());
    let elapsed = start.elapsed();

    assert_eq!(axis.len(), 1, "the ball's axis must collapse to its center ball");
    assert_eq!((axis.center(0), axis.r(0)), (&[55u32, 55, 55][..], 2500));
    assert!(elapsed.as_secs_f64() < 30.0, "single-threaded axis took {elapsed:?}, budget 30s");
}

fn filter_row(rho0: f64, kappa0: f64, balls_window: (usize, usize), cells_window: (usize, usize)) {
    let img = cube();
    let axis = rdma(&img).unwrap();
    let measured = measure(&axis, &img).unwrap();
    let params = FilterParams { rho0, kappa0 };
    let kept = measured
        .iter()
        .filter(|m| m.rho_norm >= rho0 && m.kappa_norm >= kappa0)
        .count();
    let (back, _) = filtered_reconstruct(&measured, &params, img.extents()).unwrap();
    let rebuilt = back.count_foreground();
    assert!(
        (balls_window.0..=balls_window.1).contains(&kept),
        "filter ({rho0}, {kappa0}) kept {kept} balls, reference window {balls_window:?}"
    );
    assert!(
        (cells_window.0..=cells_window.1).contains(&rebuilt),
        "filter ({rho0}, {kappa0}) rebuilt {rebuilt} cells, reference window {cells_window:?}"
    );
}

#[test]
fn criterion_7_filter_large_balls_row() {
    let _guard = heavy();
    // Reference row: (0.5, 0.025) -> 8 balls, 5112 cells; 20% tolerance.
    filter_row(0.5, 0.025, (7, 9), (4090, 6134));
}

#[test]
fn criterion_7_filter_low_coverage_row() {
    let _guard = heavy();
    // Reference row: (0.5, 0.0005) -> 24 balls, 6200 cells; 20% tolerance.
    filter_row(0.5, 0.0005, (20, 28), (4960, 7440));
}

#[test]
fn criterion_8_scaling_is_linear_in_cells() {
    let _guard = heavy();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let mut medians = Vec::new();
    for n in [64usize, 128, 256] {
        let e = Extents::new(&[n, n, n]).unwrap();
        let c = (n / 2) as i64;
        let r = (c - 2) * (c - 2);
        let mut cells = vec![false; e.cells()];
        let mut coords = vec![0usize; 3];
        for (idx, cell) in cells.iter_mut().enumerate() {
            e.coords_of(idx, &mut coords);
            let sq: i64 = coords.iter().map(|&p| (p as i64 - c) * (p as i64 - c)).sum();
            *cell = sq < r;
        }
        let img = BinaryGrid::from_cells(e, cells).unwrap();
        let mut times: Vec<f64> = (0..3)
            .map(|_| {
                let start = Instant::now();
                let res = pool.install(|| sdt(&img));
                assert!(!res.infinite);
                start.elapsed().as_secs_f64()
            })
            .collect();
        times.sort_by(f64::total_cmp);
        medians.push(times[1]);
    }
    // Cell count grows 8x per doubling; allow 8x +- 30% per step.
    for (i, pair) in medians.windows(2).enumerate() {
        let ratio = pair[1] / pair[0];
        assert!(
            (5.6..=10.4).contains(&ratio),
            "time ratio {ratio:.2} at doubling {i} outside [5.6, 10.4] (medians {medians:?})"
        );
    }
}

#[test]
fn criterion_9_cli_deterministic_across_threads() {
    let _guard = heavy();
    let dir = tempfile::tempdir().unwrap();
    let at = |name: &str| dir.path().join(name);

    // A blob with an off-center hole, 3-d GDF; plus its 2-d slice as PGM.
    let e = Extents::new(&[9, 8, 7]).unwrap();
    let mut img = BinaryGrid::new(e.clone());
    for z in 1..6 {
        for y in 1..7 {
            for x in 1..8 {
                let sq = (x as i64 - 4) * (x as i64 - 4)
                    + (y as i64 - 4) * (y as i64 - 4)
                    + (z as i64 - 3) * (z as i64 - 3);
                img.set(e.linear_index(&[x, y, z]), sq < 12 && sq != 2);
            }
        }
    }
    voxdist::io::write_image(&at("img3.gdf"), &img).unwrap();

    let e2 = Extents::new(&[9, 8]).unwrap();
    let mut img2 = BinaryGrid::new(e2.clone());
    for y in 1..7 {
        for x in 1..8 {
            img2.set(e2.linear_index(&[x, y]), (x as i64 - 4).abs() + (y as i64 - 4).abs() < 4);
        }
    }
    voxdist::io::write_image(&at("img2.pgm"), &img2).unwrap();

    let runs: &[&[&str]] = &[
        &["sdt", "img3.gdf", "-o", "dist3.gdf"],
        &["sdt", "img2.pgm", "-o", "dist2.pgm"],
        &["voronoi", "img2.pgm", "-o", "sites.gdf"],
        &["sk", "img3.gdf", "-o", "sk.balls"],
        &["rdma", "img3.gdf", "-o", "axis.balls"],
        &["rdma", "img3.gdf", "-o", "centers.balls", "--reduction", "centers"],
        &["redt", "axis.balls", "--extents", "9,8,7", "-o", "power.gdf"],
        &["reconstruct", "axis.balls", "--extents", "9,8,7", "-o", "back.gdf"],
        &["measure", "axis.balls", "img3.gdf", "-o", "axis.csv"],
        &["filter", "axis.csv", "--rho0", "0.1", "--kappa0", "0.0", "-o", "kept.balls"],
        &["stats", "img3.gdf"],
        &["stats", "axis.balls"],
    ];

    for args in runs {
        let mut outputs = Vec::new();
        for threads in ["1", "8"] {
            let out = Command::new(env!("CARGO_BIN_EXE_voxdist"))
                .current_dir(dir.path())
                .args(*args)
                .args(["--threads", threads])
                .output()
                .unwrap();
            assert!(
                out.status.success(),
                "{args:?} --threads {threads} failed: {}",
                String::from_utf8_lossy(&out.stderr)
            );
            let file = args
                .iter()
                .position(|&a| a == "-o")
                .map(|i| std::fs::read(at(args[i + 1])).unwrap());
            outputs.push((out.stdout, file));
        }
        assert_eq!(outputs[0], outputs[1], "{args:?} output differs across thread counts");
    }
}
