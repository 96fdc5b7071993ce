//! Measurement tables as CSV.
//!
//! One comment line carries the measurement context (dimension, foreground
//! size, both shape diameters) so thresholds can be re-normalized later
//! without the original image; then a header row and one numeric row per
//! ball. All values are plain numbers — floats in shortest round-trip form —
//! so no quoting is ever needed.

use crate::error::{parse, Result};
use crate::filter::MeasuredBall;
use crate::grid::MAX_DIM;

/// A measurement table plus the context it was taken in.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureFile {
    pub d: usize,
    pub foreground: u64,
    pub diameter_bbox: f64,
    pub diameter_exact: f64,
    pub balls: Vec<MeasuredBall>,
}

pub fn write(f: &MeasureFile) -> Vec<u8> {
    let mut out = format!(
        "# measure d={} foreground={} diameter_bbox={} diameter_exact={}\n",
        f.d, f.foreground, f.diameter_bbox, f.diameter_exact
    );
    out.push_str("index");
    for k in 0..f.d {
        out.push_str(&format!(",c{k}"));
    }
    out.push_str(",r,rho,kappa,rho_norm,kappa_norm\n");
    for (i, b) in f.balls.iter().enumerate() {
        out.push_str(&format!("{i}"));
        for &c in &b.center {
            out.push_str(&format!(",{c}"));
        }
        out.push_str(&format!(",{},{},{},{},{}\n", b.r, b.rho, b.kappa, b.rho_norm, b.kappa_norm));
    }
    out.into_bytes()
}

fn field<'a>(fields: &[(usize, &'a str)], i: usize, what: &str) -> Result<(usize, &'a str)> {
    fields
        .get(i)
        .copied()
        .ok_or_else(|| parse(fields.last().map_or(0, |f| f.0 + f.1.len()), format!("missing {what}")))
}

fn num<T: std::str::FromStr>(off: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse().map_err(|_| parse(off, format!("bad {what} {tok:?}")))
}

pub fn read(bytes: &[u8]) -> Result<MeasureFile> {
    let text =
        std::str::from_utf8(bytes).map_err(|e| parse(e.valid_up_to(), "table is not ASCII text"))?;
    let mut lines = Vec::new();
    let mut off = 0;
    for line in text.split_inclusive('\n') {
        lines.push((off, line.trim_end_matches(['\n', '\r'])));
        off += line.len();
    }
    lines.retain(|(_, l)| !l.is_empty());
    if lines.len() < 2 {
        return Err(parse(bytes.len(), "expected a context line and a header row"));
    }

    // Context line: `# measure k=v ...`.
    let (ctx_off, ctx) = lines[0];
    let mut d = None;
    let mut foreground = None;
    let mut diameter_bbox = None;
    let mut diameter_exact = None;
    let rest = ctx
        .strip_prefix("# measure")
        .ok_or_else(|| parse(ctx_off, "first line must be `# measure ...`"))?;
    for pair in rest.split_whitespace() {
        let pair_off = ctx_off + ctx.rfind(pair).unwrap();
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| parse(pair_off, format!("bad context entry {pair:?}")))?;
        match k {
            "d" => d = Some(num::<usize>(pair_off, v, "dimension")?),
            "foreground" => foreground = Some(num::<u64>(pair_off, v, "foreground")?),
            "diameter_bbox" => diameter_bbox = Some(num::<f64>(pair_off, v, "diameter")?),
            "diameter_exact" => diameter_exact = Some(num::<f64>(pair_off, v, "diameter")?),
            _ => return Err(parse(pair_off, format!("unknown context key {k:?}"))),
        }
    }
    let d = d.ok_or_else(|| parse(ctx_off, "context is missing d"))?;
    if !(1..=MAX_DIM).contains(&d) {
        return Err(parse(ctx_off, format!("dimension must be 1..={MAX_DIM}")));
    }
    let foreground = foreground.ok_or_else(|| parse(ctx_off, "context is missing foreground"))?;
    let diameter_bbox =
        diameter_bbox.ok_or_else(|| parse(ctx_off, "context is missing diameter_bbox"))?;
    let diameter_exact =
        diameter_exact.ok_or_else(|| parse(ctx_off, "context is missing diameter_exact"))?;

    // Header row must match the dimension exactly.
    let (head_off, head) = lines[1];
    let mut expected = String::from("index");
    for k in 0..d {
        expected.push_str(&format!(",c{k}"));
    }
    expected.push_str(",r,rho,kappa,rho_norm,kappa_norm");
    if head != expected {
        return Err(parse(head_off, format!("header row must be {expected:?}")));
    }

    let mut balls = Vec::new();
    for (row, &(off, line)) in lines[2..].iter().enumerate() {
        let mut fields = Vec::new();
        let mut pos = 0;
        for piece in line.split(',') {
            fields.push((off + pos, piece));
            pos += piece.len() + 1;
        }
        if fields.len() != d + 6 {
            return Err(parse(off, format!("expected {} fields", d + 6)));
        }
        let (i_off, i_tok) = field(&fields, 0, "index")?;
        let index: usize = num(i_off, i_tok, "index")?;
        if index != row {
            return Err(parse(i_off, format!("row index {index} out of order (expected {row})")));
        }
        let mut center = Vec::with_capacity(d);
        for k in 0..d {
            let (c_off, c_tok) = field(&fields, 1 + k, "coordinate")?;
            center.push(num::<u32>(c_off, c_tok, "coordinate")?);
        }
        let get = |i: usize, what: &str| field(&fields, i, what);
        let (r_off, r_tok) = get(d + 1, "radius")?;
        let (rho_off, rho_tok) = get(d + 2, "rho")?;
        let (k_off, k_tok) = get(d + 3, "kappa")?;
        let (rn_off, rn_tok) = get(d + 4, "rho_norm")?;
        let (kn_off, kn_tok) = get(d + 5, "kappa_norm")?;
        balls.push(MeasuredBall {
            center,
            r: num(r_off, r_tok, "radius")?,
            rho: num(rho_off, rho_tok, "rho")?,
            kappa: num(k_off, k_tok, "kappa")?,
            rho_norm: num(rn_off, rn_tok, "rho_norm")?,
            kappa_norm: num(kn_off, kn_tok, "kappa_norm")?,
        });
    }
    Ok(MeasureFile { d, foreground, diameter_bbox, diameter_exact, balls })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn sample() -> MeasureFile {
        MeasureFile {
            d: 2,
            foreground: 13,
            diameter_bbox: 8f64.sqrt(),
            diameter_exact: 2.0,
            balls: vec![
                MeasuredBall {
                    center: vec![2, 2],
                    r: 5,
                    rho: 5f64.sqrt(),
                    kappa: 13,
                    rho_norm: 2.0 * 5f64.sqrt() / 8f64.sqrt(),
                    kappa_norm: 1.0,
                },
                MeasuredBall {
                    center: vec![0, 1],
                    r: 1,
                    rho: 1.0,
                    kappa: 0,
                    rho_norm: f64::INFINITY,
                    kappa_norm: 0.0,
                },
            ],
        }
    }

    #[test]
    fn round_trip_is_exact() {
        let f = sample();
        let bytes = write(&f);
        assert_eq!(read(&bytes).unwrap(), f);
    }

    #[test]
    fn header_matches_dimension() {
        let text = write(&sample());
        let s = String::from_utf8(text).unwrap();
        assert!(s.lines().nth(1).unwrap() == "index,c0,c1,r,rho,kappa,rho_norm,kappa_norm");
    }

    fn offset_of(err: Error) -> usize {
        match err {
            Error::Parse { offset, .. } => offset,
            other => panic!("expected parse error, got {other}"),
        }
    }

    #[test]
    fn rejects_malformed_tables() {
        assert!(read(b"").is_err());
        assert!(read(b"# measure d=2\nindex\n").is_err());
        let good = String::from_utf8(write(&sample())).unwrap();
        let reordered = good.replace("\n0,2,2", "\n1,2,2").replacen("\n1,0,1", "\n0,0,1", 1);
        assert!(read(reordered.as_bytes()).is_err());
        let broken = good.replace(",13,", ",a13,");
        let off = offset_of(read(broken.as_bytes()).unwrap_err());
        assert!(off > 0 && off < broken.len());
    }
}
