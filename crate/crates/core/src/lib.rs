//! Toggle dynamics on order ideals of three lattice families, winching actions
//! on integer sequences, and the machinery connecting them.
//!
//! The library has four layers:
//!
//! * [`poset`] — the lattices `Q_{a,b}` (product of two chains), `U_a` (upper
//!   triangle) and `L_a` (left triangle), their order ideals in column-profile
//!   form, element toggles, toggle passes over ranks/files/columns, rowmotion,
//!   promotion, and comotion.
//! * [`seq`] — the sequence spaces `S_{k,m}` (strictly increasing tuples),
//!   `S'_{k,m}` (with lower bounds) and `S_n` (zero-prefix tuples), the three
//!   winching actions on them, and the column-profile bijections that
//!   intertwine winching with comotion.
//! * [`snake`] — tuple boards (orbit-trace cylinders), their snake
//!   decompositions, the crawl action on snake maps, complementary binary
//!   words with block rotation, and the necklace correspondence.
//! * [`dynamics`] — state-space enumeration, orbit partitioning, the
//!   statistic catalog, and exact-rational homomesy verdicts, plus JSON/CSV
//!   report rendering in [`report`].
//!
//! Every operation is a pure transformation of immutable values; all
//! statistics are exact rationals ([`Rat`]), never floats.
//!
//! Composition conventions used throughout: a toggle pass applies its axis
//! sets in the order `nu(1), nu(2), ...`; within a column the top (largest)
//! element toggles first; within a rank or file the member order is
//! irrelevant (the toggles commute). Under these conventions, toggling
//! columns right-to-left (`nu = (a, ..., 1)`) is rowmotion and left-to-right
//! (`nu = (1, ..., a)`) is promotion.

pub mod dynamics;
mod error;
pub mod perm;
pub mod poset;
pub mod report;
pub mod seq;
pub mod snake;
pub mod stats;

pub use dynamics::{
    burnside_orbit_count, check_homomesy, necklace_orbit_structure, orbit_partition,
    orbit_structure_equal, rat_from_str, rat_to_string, Action, HomomesyCheck, HomomesyVerdict,
    OrbitReport, Rat, State, StateSpace,
};
pub use error::{Error, Result};
pub use perm::Perm;
pub use poset::{all_ideals, Axis, Element, Ideal, Shape};
pub use report::{ReportDoc, StatDoc, WitnessDoc};
pub use seq::{BoundedSeq, IncreasingSeq, ZeroPrefixSeq};
pub use snake::{
    column_symmetry_census, left_shift, necklace_of, word_of, BoardAction, Cell, CrawlState,
    Necklace, NecklaceWord, Snake, TupleBoard,
};
pub use stats::Statistic;
