//! Exact Euclidean geometry on d-dimensional binary images.
//!
//! Everything works on squared integer distances, so every result is exact —
//! no floating point enters until the optional normalized measurements in
//! [`filter`]. The pieces compose in one direction:
//!
//! 1. [`sdt`] — squared Euclidean distance transform of a binary image,
//!    plus nearest-site labeling and the maximal-ball view of the shape.
//! 2. [`redt`] — the reverse transform: given balls, rebuild the shape,
//!    with per-cell ownership (a power diagram restricted to the grid).
//! 3. [`medial`] — reduce the maximal-ball set to the distinct owners that
//!    actually shape the reconstruction, then to a discrete medial axis.
//! 4. [`filter`] — measure each ball's size and coverage, threshold on the
//!    normalized measures, and reconstruct from the survivors.
//!
//! Each transform runs one independent envelope pass per axis ([`envelope`]
//! has the 1-d kernels), so the whole pipeline is `O(cells · d)` and rows
//! parallelize freely. [`oracle`] holds small brute-force reference
//! implementations used by the test suite; they are exported so downstream
//! code can cross-check on small inputs too.
//!
//! ```
//! use voxdist::grid::{BinaryGrid, Extents};
//!
//! let e = Extents::new(&[5]).unwrap();
//! let img = BinaryGrid::from_cells(e, vec![false, true, true, true, false]).unwrap();
//! let sdt = voxdist::sdt::sdt(&img);
//! assert_eq!(sdt.dist.as_slice(), &[0, 1, 4, 1, 0]);
//!
//! let balls = voxdist::sdt::balls_of(&img, &sdt).unwrap();
//! let rebuilt = voxdist::redt::reconstruct(&balls, img.extents()).unwrap();
//! assert_eq!(rebuilt.as_slice(), img.as_slice());
//! ```

pub mod envelope;
pub mod error;
pub mod filter;
pub mod grid;
pub mod io;
pub mod medial;
pub mod oracle;
mod passes;
pub mod redt;
pub mod sdt;

pub use error::{Error, Result};
pub use grid::{BinaryGrid, Extents, ScalarGrid, SiteGrid, NO_SITE};
pub use redt::BallSet;
