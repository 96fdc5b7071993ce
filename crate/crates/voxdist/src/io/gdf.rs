//! GDF1: the crate's portable grid container.
//!
//! Layout: one ASCII header line `GDF1 <BIN|S64|SITE> <d> <n0> <n1> ...\n`
//! followed by the raw payload, row-major with axis 0 fastest. BIN stores one
//! byte per cell (0 or 1), S64 an 8-byte little-endian signed value, SITE an
//! 8-byte little-endian site index (`u64::MAX` = unassigned). Parsers are
//! strict: any malformed byte is reported with its offset.

use crate::error::{parse, Result};
use crate::grid::{BinaryGrid, Extents, ScalarGrid, SiteGrid, NO_SITE};

/// Any grid the container can hold.
#[derive(Debug, Clone)]
pub enum GridData {
    Binary(BinaryGrid),
    Scalar(ScalarGrid),
    Sites(SiteGrid),
}

impl GridData {
    pub fn extents(&self) -> &Extents {
        match self {
            GridData::Binary(g) => g.extents(),
            GridData::Scalar(g) => g.extents(),
            GridData::Sites(g) => g.extents(),
        }
    }

    /// Human-readable kind, for error messages.
    pub fn kind_name(&self) -> &'static str {
        match self {
            GridData::Binary(_) => "binary",
            GridData::Scalar(_) => "scalar",
            GridData::Sites(_) => "site-label",
        }
    }
}

fn header(kind: &str, e: &Extents) -> String {
    let mut h = format!("GDF1 {kind} {}", e.dim());
    for &n in e.sizes() {
        h.push_str(&format!(" {n}"));
    }
    h.push('\n');
    h
}

pub fn write_binary(g: &BinaryGrid) -> Vec<u8> {
    let mut out = header("BIN", g.extents()).into_bytes();
    out.extend(g.as_slice().iter().map(|&b| b as u8));
    out
}

pub fn write_scalar(g: &ScalarGrid) -> Vec<u8> {
    let mut out = header("S64", g.extents()).into_bytes();
    for &v in g.as_slice() {
        out.extend_from_slice(&v.to_le_bytes());
    }
    out
}

pub fn write_sites(g: &SiteGrid) -> Vec<u8> {
    let mut out = header("SITE", g.extents()).into_bytes();
    for &v in g.as_slice() {
        out.extend_from_slice(&v.to_le_bytes());
    }
    out
}

pub fn write(g: &GridData) -> Vec<u8> {
    match g {
        GridData::Binary(g) => write_binary(g),
        GridData::Scalar(g) => write_scalar(g),
        GridData::Sites(g) => write_sites(g),
    }
}

/// (offset, token) pairs of one header line.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut rest = line;
    let mut off = 0;
    loop {
        let trimmed = rest.trim_start_matches(' ');
        off += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return out;
        }
        let end = trimmed.find(' ').unwrap_or(trimmed.len());
        out.push((off, &trimmed[..end]));
        off += end;
        rest = &trimmed[end..];
    }
}

pub fn read(bytes: &[u8]) -> Result<GridData> {
    let nl = bytes
        .iter()
        .position(|&b| b == b'\n')
        .ok_or_else(|| parse(bytes.len(), "missing header line terminator"))?;
    let line = std::str::from_utf8(&bytes[..nl])
        .map_err(|e| parse(e.valid_up_to(), "header is not ASCII"))?;
    let toks = tokens(line);
    if toks.is_empty() || toks[0].1 != "GDF1" {
        return Err(parse(0, "not a GDF1 file"));
    }
    let &(kind_off, kind) = toks
        .get(1)
        .ok_or_else(|| parse(nl, "missing grid kind"))?;
    if !matches!(kind, "BIN" | "S64" | "SITE") {
        return Err(parse(kind_off, format!("unknown grid kind {kind:?}")));
    }
    let &(d_off, d_tok) = toks.get(2).ok_or_else(|| parse(nl, "missing dimension"))?;
    let d: usize = d_tok
        .parse()
        .map_err(|_| parse(d_off, format!("bad dimension {d_tok:?}")))?;
    if toks.len() != 3 + d {
        let off = toks.get(3 + d).map_or(nl, |t| t.0);
        return Err(parse(off, format!("expected {d} extents after the dimension")));
    }
    let mut sizes = Vec::with_capacity(d);
    for &(off, t) in &toks[3..] {
        let n: usize = t.parse().map_err(|_| parse(off, format!("bad extent {t:?}")))?;
        sizes.push(n);
    }
    let extents = Extents::new(&sizes).map_err(|e| parse(toks[2].0, e.to_string()))?;

    let payload = &bytes[nl + 1..];
    let cells = extents.cells();
    let width = if kind == "BIN" { 1 } else { 8 };
    if payload.len() != cells * width {
        return Err(parse(
            nl + 1 + payload.len().min(cells * width),
            format!("payload must be {} bytes, found {}", cells * width, payload.len()),
        ));
    }
    match kind {
        "BIN" => {
            let mut cells_out = Vec::with_capacity(cells);
            for (i, &b) in payload.iter().enumerate() {
                match b {
                    0 => cells_out.push(false),
                    1 => cells_out.push(true),
                    _ => return Err(parse(nl + 1 + i, format!("binary cell byte {b} is not 0 or 1"))),
                }
            }
            Ok(GridData::Binary(BinaryGrid::from_cells(extents, cells_out).unwrap()))
        }
        "S64" => {
            let vals: Vec<i64> =
                payload.chunks_exact(8).map(|c| i64::from_le_bytes(c.try_into().unwrap())).collect();
            Ok(GridData::Scalar(ScalarGrid::from_cells(extents, vals).unwrap()))
        }
        _ => {
            let mut vals = Vec::with_capacity(cells);
            for (i, c) in payload.chunks_exact(8).enumerate() {
                let v = u64::from_le_bytes(c.try_into().unwrap());
                if v != NO_SITE && v >= cells as u64 {
                    return Err(parse(
                        nl + 1 + i * 8,
                        format!("site index {v} is outside the {cells}-cell grid"),
                    ));
                }
                vals.push(v);
            }
            Ok(GridData::Sites(SiteGrid::from_cells(extents, vals).unwrap()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn header_shape() {
        let e = Extents::new(&[3, 2]).unwrap();
        let bytes = write_binary(&BinaryGrid::new(e));
        assert!(bytes.starts_with(b"GDF1 BIN 2 3 2\n"));
        assert_eq!(bytes.len(), "GDF1 BIN 2 3 2\n".len() + 6);
    }

    #[test]
    fn round_trips() {
        let e = Extents::new(&[3, 2, 2]).unwrap();
        let mut b = BinaryGrid::new(e.clone());
        b.set(5, true);
        b.set(0, true);
        match read(&write_binary(&b)).unwrap() {
            GridData::Binary(g) => assert_eq!(g, b),
            _ => panic!("kind changed"),
        }

        let mut s = ScalarGrid::new(e.clone());
        s.set(3, -77);
        s.set(11, i64::MAX);
        match read(&write_scalar(&s)).unwrap() {
            GridData::Scalar(g) => assert_eq!(g, s),
            _ => panic!("kind changed"),
        }

        let mut t = SiteGrid::new(e.clone());
        t.set(2, 11);
        match read(&write_sites(&t)).unwrap() {
            GridData::Sites(g) => assert_eq!(g, t),
            _ => panic!("kind changed"),
        }
    }

    fn offset_of(err: Error) -> usize {
        match err {
            Error::Parse { offset, .. } => offset,
            other => panic!("expected parse error, got {other}"),
        }
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert_eq!(offset_of(read(b"GDF1 BIN 2 3 2").unwrap_err()), 14);
        assert_eq!(offset_of(read(b"PGM5 BIN 2 3 2\n").unwrap_err()), 0);
        assert_eq!(offset_of(read(b"GDF1 XYZ 2 3 2\n").unwrap_err()), 5);
        assert_eq!(offset_of(read(b"GDF1 BIN x 3 2\n").unwrap_err()), 9);
        assert_eq!(offset_of(read(b"GDF1 BIN 2 3\n").unwrap_err()), 12);
        // Payload one byte short: error points at its end.
        assert_eq!(offset_of(read(b"GDF1 BIN 2 3 2\n\x00\x00\x00\x00\x00").unwrap_err()), 20);
        // Cell value out of range.
        assert_eq!(offset_of(read(b"GDF1 BIN 2 3 2\n\x00\x00\x02\x00\x00\x00").unwrap_err()), 17);
        // Site index beyond the grid.
        let mut bad = b"GDF1 SITE 1 2\n".to_vec();
        bad.extend_from_slice(&2u64.to_le_bytes());
        bad.extend_from_slice(&0u64.to_le_bytes());
        assert_eq!(offset_of(read(&bad).unwrap_err()), 14);
    }
}
