//! Word problem for the 3-strand singular pure braid group and, through the
//! permutation projection, for the 3-strand singular braid group.
//!
//! Pipeline: substitute `a12 = δ a23^-1 a13^-1` and collect the central
//! `δ`-exponent, then Britton-reduce the rest in the HNN extension over
//! `Z^2 * Z^2`. An element is trivial iff the `δ`-exponent is zero and the
//! reduced form is empty.

mod free_product;
mod hnn;

use std::fmt;

pub use free_product::{cyclic_power_of_c, free_product_nf, Factor, FreeProductWord, Syllable};
pub use hnn::{britton_reduce, HnnForm};

use crate::perm::pi;
use crate::sp3::{rewrite_to_sp3, sp, SpGen, SpWord};
use crate::word::BraidWord;
use crate::{Error, Result};

/// `δ^delta_exp` times an element of the `a12`-free factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CenterSplitForm {
    pub delta_exp: i64,
    pub v: HnnForm,
}

impl CenterSplitForm {
    pub fn is_identity(&self) -> bool {
        self.delta_exp == 0 && self.v.is_identity()
    }

    pub fn canonical(&self) -> CenterSplitForm {
        CenterSplitForm {
            delta_exp: self.delta_exp,
            v: self.v.canonical(),
        }
    }
}

/// `d^<k> | <base_0> [b12^<e_1> <base_1> ...]`, or `1` for the identity.
impl fmt::Display for CenterSplitForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        write!(f, "d^{} | {}", self.delta_exp, self.v)
    }
}

/// Replaces every `a12^e` by `(δ a23^-1 a13^-1)^e` and pulls the central `δ`
/// out to the front.
pub fn eliminate_a12(w: &SpWord) -> (i64, SpWord) {
    let mut delta = 0i64;
    let mut rest = SpWord::new();
    for &(g, e) in w.runs() {
        if g == SpGen::A12 {
            delta += e;
            let unit = if e > 0 {
                [(SpGen::A23, -1), (SpGen::A13, -1)]
            } else {
                [(SpGen::A13, 1), (SpGen::A23, 1)]
            };
            for _ in 0..e.unsigned_abs() {
                for (h, f) in unit {
                    rest.push(h, f);
                }
            }
        } else {
            rest.push(g, e);
        }
    }
    (delta, rest)
}

pub fn center_split(w: &SpWord) -> CenterSplitForm {
    let (delta_exp, rest) = eliminate_a12(w);
    let v = britton_reduce(&rest).expect("a12 was eliminated");
    CenterSplitForm { delta_exp, v }
}

pub fn is_trivial_sp3(w: &SpWord) -> bool {
    center_split(w).is_identity()
}

pub fn equal_sp3(w1: &SpWord, w2: &SpWord) -> bool {
    is_trivial_sp3(&w1.concat(&w2.inverse()))
}

/// Decides triviality of a 3-strand singular braid word.
pub fn is_trivial_sg3(w: &BraidWord) -> Result<bool> {
    if w.strands() != 3 {
        return Err(Error::UnsupportedStrands {
            strands: w.strands(),
            min: 3,
            max: 3,
        });
    }
    if !pi(w).is_identity() {
        return Ok(false);
    }
    Ok(is_trivial_sp3(&rewrite_to_sp3(w)?))
}

pub fn equal_sg3(w1: &BraidWord, w2: &BraidWord) -> Result<bool> {
    is_trivial_sg3(&w1.concat(&w2.invert())?)
}

/// `δ = a12 a13 a23`, the full twist `(s1 s2)^3`.
pub fn center_generator() -> SpWord {
    sp("a12 a13 a23")
}
