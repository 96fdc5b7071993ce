//! Round trips through every on-disk format.
//!
//! Grids travel as GDF (a one-line header plus little-endian payload) or,
//! for 2-d interchange with image tools, as PGM; ball sets as plain text;
//! measurements as CSV with a context line. The path-level helpers pick the
//! format from the extension when writing and from magic bytes when reading.

use voxdist::filter::{measure, shape_diameter, Diameter};
use voxdist::grid::{BinaryGrid, Extents};
use voxdist::io::{self, csv};
use voxdist::medial::rdma;
use voxdist::sdt::{sdt, voronoi_labeling};

fn main() {
    let dir = tempfile::tempdir().unwrap();
    let at = |name: &str| dir.path().join(name);

    let e = Extents::new(&[9, 7]).unwrap();
    let mut img = BinaryGrid::new(e.clone());
    for y in 1..6 {
        for x in 1..8 {
            img.set(e.linear_index(&[x, y]), true);
        }
    }

    // Binary image: GDF and PGM hold the same mask.
    io::write_image(&at("mask.gdf"), &img).unwrap();
    io::write_image(&at("mask.pgm"), &img).unwrap();
    for name in ["mask.gdf", "mask.pgm"] {
        let back = io::read_image(&at(name)).unwrap();
        assert_eq!(back.as_slice(), img.as_slice());
        println!("{name:10} -> {} bytes, round trip ok", std::fs::read(at(name)).unwrap().len());
    }

    // Scalar field (squared distances) and site labels.
    let res = sdt(&img);
    io::write_scalar(&at("dist.gdf"), &res.dist).unwrap();
    io::write_scalar(&at("dist.pgm"), &res.dist).unwrap(); // values fit 16 bits
    assert_eq!(io::read_scalar(&at("dist.pgm")).unwrap().as_slice(), res.dist.as_slice());
    println!("dist.pgm   -> scalar round trip ok");

    let sites = voronoi_labeling(&img).unwrap();
    io::write_sites(&at("sites.gdf"), &sites).unwrap();
    assert_eq!(io::read_sites(&at("sites.gdf")).unwrap().as_slice(), sites.as_slice());
    println!("sites.gdf  -> site labels round trip ok");

    // Ball sets and measurement tables.
    let axis = rdma(&img).unwrap();
    io::write_balls(&at("axis.balls"), &axis).unwrap();
    let back = io::read_balls(&at("axis.balls")).unwrap();
    assert_eq!(back.len(), axis.len());
    println!("axis.balls -> {} balls round trip ok", back.len());

    let table = csv::MeasureFile {
        d: 2,
        foreground: img.count_foreground() as u64,
        diameter_bbox: shape_diameter(&img, Diameter::Bbox),
        diameter_exact: shape_diameter(&img, Diameter::Exact),
        balls: measure(&axis, &img).unwrap(),
    };
    std::fs::write(at("axis.csv"), csv::write(&table)).unwrap();
    let back = csv::read(&std::fs::read(at("axis.csv")).unwrap()).unwrap();
    assert_eq!(back, table);
    println!("axis.csv   -> measurement table round trip ok");

    // Reading picks the format from content, not from the name.
    let sniffed = io::sniff(&std::fs::read(at("mask.pgm")).unwrap()).unwrap();
    println!("sniff(mask.pgm) = {sniffed:?}");
}
