//! Singular braid groups on few strands: words, the permutation projection,
//! Reidemeister-Schreier rewriting into the pure subgroup, the six-letter
//! presentation of the 3-strand singular pure braid group, and a decision
//! procedure for its word problem.
//!
//! ```
//! use singbraid::{is_trivial_sg3, parse_sp_word, equal_sp3, BraidWord};
//!
//! let w = BraidWord::parse("s1 t1 s1^-1 t1^-1", 3)?;
//! assert!(is_trivial_sg3(&w)?);
//!
//! let lhs = parse_sp_word("a12 b13 a12^-1")?;
//! let rhs = parse_sp_word("a23^-1 b13 a23")?;
//! assert!(equal_sp3(&lhs, &rhs));
//! # Ok::<(), singbraid::Error>(())
//! ```

pub mod cli;
mod error;
pub mod free;
pub mod normal_form;
pub mod oracle;
pub mod perm;
pub mod schreier;
pub mod sp3;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use free::FreeWord;
pub use normal_form::{
    center_generator, center_split, eliminate_a12, equal_sg3, equal_sp3, is_trivial_sg3,
    is_trivial_sp3, CenterSplitForm,
};
pub use perm::{pi, schreier_transversal, Permutation, Transversal};
pub use schreier::{enumerate_generators, rewrite_tau, SchreierGenerator, SchreierWord};
pub use sp3::{parse_sp_word, rewrite_to_sp3, sp3_to_sg3, SpGen, SpWord};
pub use word::{BraidWord, Generator, GeneratorLetter, Kind};
