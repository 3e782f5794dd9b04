//! Gauss diagrams of virtual knots and Reidemeister moves on them.
//!
//! The crate is organised bottom up:
//!
//! * [`diagram`]: the validated diagram value, adjacency, chord crossings,
//!   writhe, rotation and canonical forms;
//! * [`codec`]: Gauss codes such as `O1-O2-U1-U2-` and a JSON form;
//! * [`moves`]: detection and application of R1, R2 and R3;
//! * [`simplify`]: greedy and best-first reduction with replayable traces;
//! * [`census`], [`enumerate`], [`random`], [`render`]: tooling around the
//!   above.

pub mod census;
pub mod codec;
pub mod diagram;
pub mod enumerate;
pub mod moves;
pub mod random;
pub mod render;
pub mod simplify;

pub use codec::{parse_gauss_code, serialize_gauss_code};
pub use diagram::{ChordLabel, DiagramError, Endpoint, GaussDiagram, Role, Sign};
pub use moves::{apply_move, enumerate_moves, Move, MoveError};
pub use simplify::{simplify, reduce_greedy, verify_trace, SearchLimits, SimplifyResult};
