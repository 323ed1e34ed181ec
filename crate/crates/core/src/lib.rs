//! Snakes of type `B_n`, labeled ballot paths, and the Springer numbers.
//!
//! The crate provides, in exact arithmetic:
//!
//! - [`snake`]: signed permutations, snakes, inversion codes, the `alpha`
//!   statistic, standardization, and a lexicographic enumerator.
//! - [`path`]: ballot and Dyck paths, labelings, alternate level codes of
//!   ballots, and weighted paths.
//! - [`bijection`]: the maps [`phi`] and [`psi`] between snakes of type
//!   `B_n` and labeled ballot paths of length `n`, with stage traces.
//! - [`triangle`]: the tables `B(n,k)`, `E(n,k)`, `T(n,k)` and the row
//!   polynomials `G_n(y)`.
//! - [`series`]: truncated power series with rational (or rational
//!   polynomial) coefficients and the generating functions tied to the
//!   tables above.
//!
//! ```
//! use ballot_snakes::{phi, psi, Snake};
//!
//! let snake: Snake = "2,-1,5,4,7,-6,-3".parse().unwrap();
//! let image = phi(&snake);
//! assert_eq!(image.to_string(), "uuudduu 0,1,1,0,1,1,2");
//! assert_eq!(psi(&image).unwrap(), snake);
//! ```

pub mod bijection;
pub mod error;
pub mod path;
pub mod series;
pub mod snake;
pub mod triangle;

pub use bijection::{phi, phi_on_alternating, psi, psi_trace, PsiStage, PsiTrace};
pub use error::{Error, Result};
pub use path::{
    enumerate_ballot_paths, enumerate_dyck_paths, enumerate_labeled_paths, enumerate_level_codes,
    path_weight, BallotPath, LabeledBallotPath, LevelCode, Step,
};
pub use series::{BivariateSeries, EgfSeries, TrigName};
pub use snake::{
    enumerate_snakes, enumerate_snakes_capped, is_snake, standardize, InversionCode,
    SignedPermutation, Snake, Snakes,
};
pub use triangle::{springer, triangle, Triangle, TriangleKind};
