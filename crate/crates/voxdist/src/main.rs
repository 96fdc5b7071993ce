//! Command-line front end: one subcommand per pipeline stage.
//!
//! Formats are chosen by path extension when writing (`.pgm` means PGM,
//! anything else GDF) and by magic bytes when reading. Exit codes: 0 on
//! success, 1 for domain/contract errors, 2 for i/o, parse, and usage
//! errors. `--oracle` cross-checks results against the brute-force
//! references where one exists (small inputs only; the references are
//! deliberately quadratic and refuse large grids).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use voxdist::filter::{self, Diameter, FilterParams};
use voxdist::grid::Extents;
use voxdist::io::{self, csv, gdf};
use voxdist::medial::{self, Reduction};
use voxdist::{oracle, redt, sdt, BallSet, BinaryGrid, Error, Result, ScalarGrid};

#[derive(Parser)]
#[command(name = "voxdist", version, about = "Exact distance transforms and medial axes on binary images")]
struct Cli {
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Cross-check results against the brute-force references (small inputs).
    #[arg(long, global = true)]
    oracle: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Squared Euclidean distance transform of a binary image.
    Sdt {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Label every cell with the linear index of a nearest background cell.
    Voronoi {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Reverse transform of a ball set: the per-cell best-value field.
    Redt {
        balls: PathBuf,
        /// Grid sizes, e.g. 22,22,22.
        #[arg(long, value_delimiter = ',', required = true)]
        extents: Vec<usize>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Union of a ball set as a binary image.
    Reconstruct {
        balls: PathBuf,
        /// Grid sizes, e.g. 22,22,22.
        #[arg(long, value_delimiter = ',', required = true)]
        extents: Vec<usize>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Maximal balls that own at least one cell of the reverse transform.
    Sk {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Reduced discrete medial axis of a binary image.
    Rdma {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t = ReductionArg::Intersect)]
        reduction: ReductionArg,
    },
    /// Measure each ball of a set that reconstructs the image; write a table.
    Measure {
        balls: PathBuf,
        image: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Threshold a measurement table; write the surviving balls.
    Filter {
        csv: PathBuf,
        /// Keep balls with normalized radius >= this.
        #[arg(long)]
        rho0: f64,
        /// Keep balls with normalized coverage >= this.
        #[arg(long)]
        kappa0: f64,
        #[arg(short, long)]
        output: PathBuf,
        /// Which stored shape diameter normalizes the radii.
        #[arg(long, value_enum, default_value_t = DiameterArg::Bbox)]
        diameter: DiameterArg,
    },
    /// Print summary statistics of an image, field, or ball file.
    Stats { input: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReductionArg {
    Intersect,
    Centers,
}

impl From<ReductionArg> for Reduction {
    fn from(a: ReductionArg) -> Reduction {
        match a {
            ReductionArg::Intersect => Reduction::Intersect,
            ReductionArg::Centers => Reduction::Centers,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DiameterArg {
    Bbox,
    Exact,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("voxdist: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn mismatch(what: &str) -> Error {
    Error::Contract(format!("{what} disagrees with the brute-force reference"))
}

/// Check that a binary image is exactly the positive part of the brute-force
/// reverse transform of `set`.
fn check_rebuilds(set: &BallSet, image: &BinaryGrid, what: &str) -> Result<()> {
    let brute = oracle::brute_redt(set, image.extents())?;
    for idx in 0..image.extents().cells() {
        if (brute.get(idx) > 0) != image.get(idx) {
            return Err(mismatch(what));
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .map_err(|e| Error::Domain(format!("thread pool: {e}")))?;
    }

    match cli.cmd {
        Cmd::Sdt { input, output } => {
            let img = io::read_image(&input)?;
            let res = sdt::sdt(&img);
            if cli.oracle && res.dist.as_slice() != oracle::brute_sdt(&img)?.as_slice() {
                return Err(mismatch("distance field"));
            }
            io::write_scalar(&output, &res.dist)
        }
        Cmd::Voronoi { input, output } => {
            let img = io::read_image(&input)?;
            let sites = sdt::voronoi_labeling(&img)?;
            if cli.oracle {
                let brute = oracle::brute_sdt(&img)?;
                let e = img.extents();
                let mut p = vec![0usize; e.dim()];
                let mut s = vec![0usize; e.dim()];
                for idx in 0..e.cells() {
                    let site = sites.get(idx) as usize;
                    e.coords_of(idx, &mut p);
                    e.coords_of(site, &mut s);
                    let sq: i64 = p
                        .iter()
                        .zip(&s)
                        .map(|(&a, &b)| (a as i64 - b as i64) * (a as i64 - b as i64))
                        .sum();
                    if img.get(site) || sq != brute.get(idx) {
                        return Err(mismatch("site labeling"));
                    }
                }
            }
            io::write_sites(&output, &sites)
        }
        Cmd::Redt { balls, extents, output } => {
            let set = io::read_balls(&balls)?;
            let e = Extents::new(&extents)?;
            let field = redt::redt_map(&set, &e)?;
            if cli.oracle && field.value.as_slice() != oracle::brute_redt(&set, &e)?.as_slice() {
                return Err(mismatch("reverse transform"));
            }
            io::write_scalar(&output, &field.value)
        }
        Cmd::Reconstruct { balls, extents, output } => {
            let set = io::read_balls(&balls)?;
            let e = Extents::new(&extents)?;
            let img = redt::reconstruct(&set, &e)?;
            if cli.oracle {
                check_rebuilds(&set, &img, "reconstruction")?;
            }
            io::write_image(&output, &img)
        }
        Cmd::Sk { input, output } => {
            let img = io::read_image(&input)?;
            let set = medial::sk_extract(&img)?;
            if cli.oracle {
                check_rebuilds(&set, &img, "owner reduction")?;
            }
            io::write_balls(&output, &set)
        }
        Cmd::Rdma { input, output, reduction } => {
            let img = io::read_image(&input)?;
            let set = medial::rdma_with(&img, reduction.into())?;
            match reduction {
                // The intersect reduction keeps the union of balls intact;
                // the centers reduction does not promise that, so there is
                // nothing to check it against.
                ReductionArg::Intersect if cli.oracle => {
                    check_rebuilds(&set, &img, "medial axis")?;
                }
                ReductionArg::Centers if cli.oracle => {
                    eprintln!("voxdist: no oracle check for the centers reduction");
                }
                _ => {}
            }
            io::write_balls(&output, &set)
        }
        Cmd::Measure { balls, image, output } => {
            let set = io::read_balls(&balls)?;
            let img = io::read_image(&image)?;
            let measured = filter::measure(&set, &img)?;
            let table = csv::MeasureFile {
                d: img.extents().dim(),
                foreground: img.count_foreground() as u64,
                diameter_bbox: filter::shape_diameter(&img, Diameter::Bbox),
                diameter_exact: filter::shape_diameter(&img, Diameter::Exact),
                balls: measured,
            };
            std::fs::write(&output, csv::write(&table))?;
            Ok(())
        }
        Cmd::Filter { csv: table_path, rho0, kappa0, output, diameter } => {
            let table = csv::read(&std::fs::read(&table_path)?)?;
            let diam = match diameter {
                DiameterArg::Bbox => table.diameter_bbox,
                DiameterArg::Exact => table.diameter_exact,
            };
            let mut measured = table.balls;
            for m in &mut measured {
                m.rho_norm = if diam > 0.0 { 2.0 * m.rho / diam } else { f64::INFINITY };
            }
            let kept = filter::filter(&measured, &FilterParams { rho0, kappa0 })?;
            // An empty survivor set carries no dimension of its own; keep the
            // table's so the output file stays consistent with its source.
            let kept = if kept.is_empty() { BallSet::new(table.d)? } else { kept };
            io::write_balls(&output, &kept)
        }
        Cmd::Stats { input } => {
            print!("{}", stats_text(&input)?);
            Ok(())
        }
    }
}

fn extents_line(e: &Extents) -> String {
    let sizes: Vec<String> = e.sizes().iter().map(|n| n.to_string()).collect();
    format!("extents: {}\ncells: {}\n", sizes.join("x"), e.cells())
}

fn scalar_stats(g: &ScalarGrid) -> String {
    let min = g.as_slice().iter().min().unwrap();
    let max = g.as_slice().iter().max().unwrap();
    format!("kind: scalar field\n{}min: {min}\nmax: {max}\n", extents_line(g.extents()))
}

fn stats_text(input: &PathBuf) -> Result<String> {
    let bytes = std::fs::read(input)?;
    Ok(match io::sniff(&bytes)? {
        io::Sniff::Balls => {
            let set = io::balls::read(&bytes)?;
            let mut text = format!("kind: ball set\nd: {}\nballs: {}\n", set.dim(), set.len());
            if let Some(rmax) = set.iter().map(|(_, r)| r).max() {
                let rmin = set.iter().map(|(_, r)| r).min().unwrap();
                text.push_str(&format!("r-min: {rmin}\nr-max: {rmax}\n"));
            }
            text
        }
        io::Sniff::Pgm => {
            let img = io::pgm::read_image(&bytes)?;
            format!(
                "kind: binary image\n{}foreground: {}\n",
                extents_line(img.extents()),
                img.count_foreground()
            )
        }
        io::Sniff::Grid => match gdf::read(&bytes)? {
            gdf::GridData::Binary(img) => format!(
                "kind: binary image\n{}foreground: {}\n",
                extents_line(img.extents()),
                img.count_foreground()
            ),
            gdf::GridData::Scalar(g) => scalar_stats(&g),
            gdf::GridData::Sites(g) => {
                let labeled =
                    g.as_slice().iter().filter(|&&s| s != voxdist::NO_SITE).count();
                format!("kind: site labels\n{}labeled: {labeled}\n", extents_line(g.extents()))
            }
        },
    })
}
