//! Cover-free families, key-pool coverings of graphs, and biclique covers.
//!
//! A `(r,w;d)`-cover-free family is a collection of `t` blocks over a ground
//! set of `n` points such that for every disjoint pair of index sets `L`
//! (`|L| = r`) and `M` (`|M| = w`), at least `d` points lie in every block of
//! `L` and in no block of `M`. Relaxing the requirement from all `r`-subsets
//! to the edges of a scheme graph gives a `(w,d)`-covering of that graph: a
//! family of vertex subsets (key pools) such that every edge and every
//! excluded coalition of `w` other vertices leaves at least `d` pools holding
//! both endpoints and no coalition member. These objects are equivalent, via
//! explicit conversions, to multicovers of certain host graphs by complete
//! bipartite subgraphs.
//!
//! The crate provides:
//!
//! - [`model`]: the data types and their JSON / text serializations;
//! - [`combin`]: binomial coefficients and canonical subset encodings;
//! - [`verify`]: exhaustive verifiers that certify or refute any family,
//!   covering, or biclique cover, with deterministic witnesses;
//! - [`construct`]: closed-form families (Sperner antichains, the exact
//!   optimal `(k,k;d)` family, block-count doubling, bit-split composition);
//! - [`covering`]: coverings of stars, complete bipartite graphs, paths,
//!   cycles, trees, Cartesian products, grids, and a randomized construction
//!   driven by a local-lemma row-count bound;
//! - [`dual`]: conversions between families, coverings, and biclique covers;
//! - [`bounds`]: closed-form lower/upper bounds and exact sizes;
//! - [`keyring`]: key-ring derivation and Monte Carlo resilience estimates.
//!
//! Everything a construction emits can be re-checked from first principles:
//!
//! ```
//! use coverfree::{construct, verify, model::CffParams};
//!
//! let s = construct::optimal_kk(2, 1, true).unwrap();
//! let report = verify::verify_cff(&s, &CffParams { r: 1, w: 1, d: 2 }, false).unwrap();
//! assert!(report.ok);
//! ```
//!
//! Verification partitions its index scans into fixed-size chunks and folds
//! the partial results in chunk order, so reports (including witnesses) are
//! identical regardless of how many worker threads run the scan.

pub mod bounds;
pub mod combin;
pub mod construct;
pub mod covering;
pub mod dual;
pub mod formats;
pub mod keyring;
pub mod model;
pub mod verify;

pub use model::{Error, Result};
