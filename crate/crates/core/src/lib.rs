//! Finite presentation of the Kauffman bracket skein algebra of a punctured disk.
//!
//! * [`qring`]: exact coefficients in `Z[q^{±1/2}, β]`.
//! * [`algebra`]: generators `t_i`, `s_ij`, `s_ijk`, words and elements.
//! * [`parse`]: text syntax for elements.
//! * [`relcat`]: the relation catalog and its instantiation.
//! * [`rewrite`]: oriented rules, normal forms, spanning and confluence checks.
//! * [`oracle`]: evaluation at `q = 1` as traces of random `SL(2, Q)` matrices.
//! * [`cli`]: the command surface used by the `skein` binary.

pub mod algebra;
pub mod cli;
pub mod parse;
pub mod oracle;
pub mod qring;
pub mod relcat;
pub mod rewrite;

pub use algebra::{Element, Gen, Label, Word};
pub use parse::{parse, ParseError};
pub use qring::RingElem;
