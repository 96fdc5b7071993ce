//! 2D PGM interchange (P2 ASCII and P5 binary, maxval up to 65535).
//!
//! Reads accept comments and arbitrary header whitespace; `#` comments are
//! also allowed between P2 samples. Writes always emit P5 — 0/255 for binary
//! grids, and for scalar grids one byte per sample under maxval 255 or
//! big-endian sample pairs under maxval 65535 (values must fit; anything
//! signed or wider belongs in GDF1). Grid axis 0 is the PGM column axis.

use crate::error::{domain, parse, Result};
use crate::grid::{BinaryGrid, Extents, ScalarGrid};

struct Cur<'a> {
    b: &'a [u8],
    pos: usize,
}

impl<'a> Cur<'a> {
    fn skip_separators(&mut self) {
        while self.pos < self.b.len() {
            match self.b[self.pos] {
                b' ' | b'\t' | b'\r' | b'\n' => self.pos += 1,
                b'#' => {
                    while self.pos < self.b.len() && self.b[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                _ => return,
            }
        }
    }

    /// Next decimal token and the offset where it starts.
    fn number(&mut self, what: &str) -> Result<(usize, u64)> {
        self.skip_separators();
        let start = self.pos;
        while self.pos < self.b.len() && self.b[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(parse(start, format!("expected {what}")));
        }
        let v = std::str::from_utf8(&self.b[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| parse(start, format!("{what} out of range")))?;
        Ok((start, v))
    }
}

/// Raw samples plus extents `[width, height]`.
pub fn read(bytes: &[u8]) -> Result<(Extents, Vec<u16>)> {
    if bytes.len() < 2 || bytes[0] != b'P' || !(bytes[1] == b'2' || bytes[1] == b'5') {
        return Err(parse(0, "not a P2/P5 PGM file"));
    }
    let ascii = bytes[1] == b'2';
    let mut cur = Cur { b: bytes, pos: 2 };
    let (w_off, w) = cur.number("width")?;
    let (_, h) = cur.number("height")?;
    let (maxval_off, maxval) = cur.number("maxval")?;
    if maxval == 0 || maxval > 65535 {
        return Err(parse(maxval_off, format!("maxval {maxval} not in 1..=65535")));
    }
    let extents = Extents::new(&[w as usize, h as usize]).map_err(|e| parse(w_off, e.to_string()))?;
    let cells = extents.cells();

    let mut samples = Vec::with_capacity(cells);
    if ascii {
        for _ in 0..cells {
            let (off, v) = cur.number("sample")?;
            if v > maxval {
                return Err(parse(off, format!("sample {v} exceeds maxval {maxval}")));
            }
            samples.push(v as u16);
        }
        cur.skip_separators();
        if cur.pos != bytes.len() {
            return Err(parse(cur.pos, "trailing bytes after the raster"));
        }
    } else {
        // Exactly one separator byte between maxval and the raster.
        if cur.pos >= bytes.len() || !bytes[cur.pos].is_ascii_whitespace() {
            return Err(parse(cur.pos, "expected one whitespace byte before the raster"));
        }
        cur.pos += 1;
        let width = if maxval > 255 { 2 } else { 1 };
        let need = cells * width;
        let raster = &bytes[cur.pos..];
        if raster.len() != need {
            return Err(parse(
                cur.pos + raster.len().min(need),
                format!("raster must be {need} bytes, found {}", raster.len()),
            ));
        }
        for i in 0..cells {
            let v = if width == 2 {
                u16::from_be_bytes([raster[2 * i], raster[2 * i + 1]])
            } else {
                raster[i] as u16
            };
            if v as u64 > maxval {
                return Err(parse(
                    cur.pos + i * width,
                    format!("sample {v} exceeds maxval {maxval}"),
                ));
            }
            samples.push(v);
        }
    }
    Ok((extents, samples))
}

/// Nonzero samples become foreground.
pub fn read_image(bytes: &[u8]) -> Result<BinaryGrid> {
    let (e, samples) = read(bytes)?;
    Ok(BinaryGrid::from_cells(e, samples.into_iter().map(|v| v != 0).collect()).unwrap())
}

pub fn read_scalar(bytes: &[u8]) -> Result<ScalarGrid> {
    let (e, samples) = read(bytes)?;
    Ok(ScalarGrid::from_cells(e, samples.into_iter().map(i64::from).collect()).unwrap())
}

fn require_2d(e: &Extents) -> Result<(usize, usize)> {
    if e.dim() != 2 {
        return Err(domain(format!("PGM holds 2D grids only, this one is {}D", e.dim())));
    }
    Ok((e.size(0), e.size(1)))
}

pub fn write_binary(g: &BinaryGrid) -> Result<Vec<u8>> {
    let (w, h) = require_2d(g.extents())?;
    let mut out = format!("P5\n{w} {h}\n255\n").into_bytes();
    out.extend(g.as_slice().iter().map(|&b| if b { 255u8 } else { 0 }));
    Ok(out)
}

pub fn write_scalar(g: &ScalarGrid) -> Result<Vec<u8>> {
    let (w, h) = require_2d(g.extents())?;
    let max = g.as_slice().iter().copied().max().unwrap_or(0);
    let min = g.as_slice().iter().copied().min().unwrap_or(0);
    if min < 0 || max > 65535 {
        return Err(domain(format!(
            "scalar range {min}..={max} does not fit a 16-bit PGM; use GDF1"
        )));
    }
    let maxval: i64 = if max <= 255 { 255 } else { 65535 };
    let mut out = format!("P5\n{w} {h}\n{maxval}\n").into_bytes();
    if maxval == 255 {
        out.extend(g.as_slice().iter().map(|&v| v as u8));
    } else {
        for &v in g.as_slice() {
            out.extend_from_slice(&(v as u16).to_be_bytes());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn offset_of(err: Error) -> usize {
        match err {
            Error::Parse { offset, .. } => offset,
            other => panic!("expected parse error, got {other}"),
        }
    }

    #[test]
    fn binary_round_trip() {
        let e = Extents::new(&[3, 2]).unwrap();
        let g = BinaryGrid::from_cells(e, vec![true, false, true, false, true, false]).unwrap();
        let bytes = write_binary(&g).unwrap();
        assert!(bytes.starts_with(b"P5\n3 2\n255\n"));
        assert_eq!(read_image(&bytes).unwrap(), g);
    }

    #[test]
    fn scalar_round_trips_both_widths() {
        let e = Extents::new(&[2, 2]).unwrap();
        let narrow = ScalarGrid::from_cells(e.clone(), vec![0, 17, 255, 3]).unwrap();
        assert_eq!(read_scalar(&write_scalar(&narrow).unwrap()).unwrap(), narrow);
        let wide = ScalarGrid::from_cells(e, vec![0, 256, 65535, 3]).unwrap();
        let bytes = write_scalar(&wide).unwrap();
        assert!(bytes.starts_with(b"P5\n2 2\n65535\n"));
        assert_eq!(read_scalar(&bytes).unwrap(), wide);
    }

    #[test]
    fn ascii_with_comments() {
        let g = read_image(b"P2 # format\n# a comment line\n3 1 255\n0 7 0\n").unwrap();
        assert_eq!(g.as_slice(), &[false, true, false]);
    }

    #[test]
    fn rejects_malformed_files() {
        assert_eq!(offset_of(read(b"P6\n1 1\n255\nx").unwrap_err()), 0);
        assert_eq!(offset_of(read(b"P2\n1 1\n0\n0").unwrap_err()), 7);
        assert_eq!(offset_of(read(b"P2\n2 1\n255\n1 999\n").unwrap_err()), 13);
        // P5 raster short by one byte.
        assert_eq!(offset_of(read(b"P5\n2 1\n255\nA").unwrap_err()), 12);
        // Trailing junk after an ASCII raster.
        assert_eq!(offset_of(read(b"P2\n1 1\n255\n4 junk").unwrap_err()), 13);
    }

    #[test]
    fn non_2d_grids_are_refused() {
        let e = Extents::new(&[2, 2, 2]).unwrap();
        assert!(write_binary(&BinaryGrid::new(e)).is_err());
    }

    #[test]
    fn signed_scalars_are_refused() {
        let e = Extents::new(&[2, 1]).unwrap();
        let g = ScalarGrid::from_cells(e, vec![-1, 0]).unwrap();
        assert!(write_scalar(&g).is_err());
    }
}
