//! File formats and path-level helpers.
//!
//! Three formats cover everything the toolkit exchanges:
//!
//! * [`gdf`] — a tiny self-describing container for d-dimensional grids
//!   (binary masks, signed scalar fields, site-label fields).
//! * [`pgm`] — plain and raw PGM for 2-d interchange with image tools.
//! * [`balls`] — a line-oriented text format for ball sets.
//! * [`csv`] — measurement tables produced by `measure`.
//!
//! The helpers here pick a format from the path extension when writing
//! (`.pgm` means PGM, anything else means GDF) and from the leading magic
//! bytes when reading, so callers never sniff formats themselves.

pub mod balls;
pub mod csv;
pub mod gdf;
pub mod pgm;

use std::fs;
use std::path::Path;

use crate::error::{domain, parse, Result};
use crate::grid::{BinaryGrid, ScalarGrid, SiteGrid};
use crate::redt::BallSet;

fn wants_pgm(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("pgm"))
}

/// What a file's leading bytes say it holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sniff {
    Grid,
    Pgm,
    Balls,
}

/// Classify a file by magic bytes without parsing it.
pub fn sniff(bytes: &[u8]) -> Result<Sniff> {
    if bytes.starts_with(b"GDF1 ") {
        Ok(Sniff::Grid)
    } else if bytes.starts_with(b"P2") || bytes.starts_with(b"P5") {
        Ok(Sniff::Pgm)
    } else if bytes.starts_with(b"BALLS ") {
        Ok(Sniff::Balls)
    } else {
        Err(parse(0, "unrecognized file: expected GDF1, PGM, or BALLS data"))
    }
}

/// Read a binary image, accepting GDF binary grids and PGM (nonzero = foreground).
pub fn read_image(path: &Path) -> Result<BinaryGrid> {
    let bytes = fs::read(path)?;
    match sniff(&bytes)? {
        Sniff::Grid => match gdf::read(&bytes)? {
            gdf::GridData::Binary(g) => Ok(g),
            other => Err(domain(format!(
                "{} holds a {} grid, not a binary image",
                path.display(),
                other.kind_name()
            ))),
        },
        Sniff::Pgm => pgm::read_image(&bytes),
        Sniff::Balls => Err(domain(format!("{} is a ball file, not an image", path.display()))),
    }
}

/// Write a binary image; `.pgm` paths get PGM (2-d only), others GDF.
pub fn write_image(path: &Path, image: &BinaryGrid) -> Result<()> {
    let bytes =
        if wants_pgm(path) { pgm::write_binary(image)? } else { gdf::write_binary(image) };
    fs::write(path, bytes)?;
    Ok(())
}

/// Read a signed scalar field (GDF S64, or PGM where samples are values).
pub fn read_scalar(path: &Path) -> Result<ScalarGrid> {
    let bytes = fs::read(path)?;
    match sniff(&bytes)? {
        Sniff::Grid => match gdf::read(&bytes)? {
            gdf::GridData::Scalar(g) => Ok(g),
            other => Err(domain(format!(
                "{} holds a {} grid, not a scalar field",
                path.display(),
                other.kind_name()
            ))),
        },
        Sniff::Pgm => pgm::read_scalar(&bytes),
        Sniff::Balls => Err(domain(format!("{} is a ball file, not a scalar field", path.display()))),
    }
}

/// Write a scalar field; `.pgm` paths require 2-d and values in 0..=65535.
pub fn write_scalar(path: &Path, field: &ScalarGrid) -> Result<()> {
    let bytes = if wants_pgm(path) { pgm::write_scalar(field)? } else { gdf::write_scalar(field) };
    fs::write(path, bytes)?;
    Ok(())
}

/// Write a site-label field. Only GDF can hold 64-bit labels.
pub fn write_sites(path: &Path, sites: &SiteGrid) -> Result<()> {
    if wants_pgm(path) {
        return Err(domain("site labels cannot be stored as PGM; use a GDF path"));
    }
    fs::write(path, gdf::write_sites(sites))?;
    Ok(())
}

/// Read a site-label field from GDF.
pub fn read_sites(path: &Path) -> Result<SiteGrid> {
    let bytes = fs::read(path)?;
    match gdf::read(&bytes)? {
        gdf::GridData::Sites(g) => Ok(g),
        other => Err(domain(format!(
            "{} holds a {} grid, not site labels",
            path.display(),
            other.kind_name()
        ))),
    }
}

pub fn read_balls(path: &Path) -> Result<BallSet> {
    let bytes = fs::read(path)?;
    balls::read(&bytes)
}

pub fn write_balls(path: &Path, set: &BallSet) -> Result<()> {
    fs::write(path, balls::write(set))?;
    Ok(())
}
