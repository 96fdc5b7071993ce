//! Ball lists as plain text: `BALLS <d>` then one `c0 .. c{d-1} r` line per
//! ball. `#` starts a comment, blank lines are skipped, tokens are
//! whitespace-separated. Radii are squared and must be at least 1; center
//! coordinates must fit a legal grid axis.

use crate::error::{parse, Result};
use crate::grid::{MAX_AXIS_LEN, MAX_DIM};
use crate::redt::{BallSet, MAX_RADIUS};

pub fn write(set: &BallSet) -> Vec<u8> {
    let mut out = format!("BALLS {}\n", set.dim());
    for (center, r) in set.iter() {
        for c in center {
            out.push_str(&format!("{c} "));
        }
        out.push_str(&format!("{r}\n"));
    }
    out.into_bytes()
}

/// Significant lines with their byte offsets: comments and blanks removed.
fn lines(bytes: &[u8]) -> Result<Vec<(usize, &str)>> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| parse(e.valid_up_to(), "ball file is not ASCII text"))?;
    let mut out = Vec::new();
    let mut off = 0;
    for line in text.split_inclusive('\n') {
        let body = line.trim_end_matches(['\n', '\r']);
        let significant = body.split('#').next().unwrap_or("").trim();
        if !significant.is_empty() {
            out.push((off, body));
        }
        off += line.len();
    }
    Ok(out)
}

/// Tokens of one line with absolute byte offsets.
fn tokens(off: usize, line: &str) -> Vec<(usize, &str)> {
    let body = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut pos = 0;
    for piece in body.split_whitespace() {
        let found = body[pos..].find(piece).unwrap() + pos;
        out.push((off + found, piece));
        pos = found + piece.len();
    }
    out
}

pub fn read(bytes: &[u8]) -> Result<BallSet> {
    let lines = lines(bytes)?;
    let Some(&(head_off, head)) = lines.first() else {
        return Err(parse(bytes.len(), "missing BALLS header"));
    };
    let toks = tokens(head_off, head);
    if toks.len() != 2 || toks[0].1 != "BALLS" {
        return Err(parse(head_off, "header must be `BALLS <d>`"));
    }
    let d: usize = toks[1]
        .1
        .parse()
        .ok()
        .filter(|&d| (1..=MAX_DIM).contains(&d))
        .ok_or_else(|| parse(toks[1].0, format!("dimension must be 1..={MAX_DIM}")))?;

    let mut set = BallSet::new(d)?;
    let mut center = vec![0u32; d];
    for &(off, line) in &lines[1..] {
        let toks = tokens(off, line);
        if toks.len() != d + 1 {
            return Err(parse(off, format!("expected {d} coordinates and a radius")));
        }
        for (k, &(t_off, t)) in toks[..d].iter().enumerate() {
            let c: u64 = t
                .parse()
                .map_err(|_| parse(t_off, format!("bad coordinate {t:?}")))?;
            if c >= MAX_AXIS_LEN as u64 {
                return Err(parse(t_off, format!("coordinate {c} exceeds the axis cap")));
            }
            center[k] = c as u32;
        }
        let (r_off, r_tok) = toks[d];
        let r: i64 = r_tok
            .parse()
            .map_err(|_| parse(r_off, format!("bad radius {r_tok:?}")))?;
        if !(1..=MAX_RADIUS).contains(&r) {
            return Err(parse(r_off, format!("squared radius {r} not in 1..={MAX_RADIUS}")));
        }
        set.push(&center, r);
    }
    Ok(set)
}
