//! Normal forms in the free product of the two rank-2 free abelian groups
//! `<a13, b13>` and `<a23, b23>`.

use std::fmt;

use crate::sp3::{SpGen, SpWord};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    F13,
    F23,
}

/// `a^a_exp b^b_exp` inside one abelian factor; never the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub factor: Factor,
    pub a_exp: i64,
    pub b_exp: i64,
}

impl Syllable {
    pub fn new(factor: Factor, a_exp: i64, b_exp: i64) -> Self {
        Syllable {
            factor,
            a_exp,
            b_exp,
        }
    }

    fn inverse(self) -> Self {
        Syllable::new(self.factor, -self.a_exp, -self.b_exp)
    }

    fn letters(self) -> (SpGen, SpGen) {
        match self.factor {
            Factor::F13 => (SpGen::A13, SpGen::B13),
            Factor::F23 => (SpGen::A23, SpGen::B23),
        }
    }
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.letters();
        let w = SpWord::from_runs([(a, self.a_exp), (b, self.b_exp)]);
        w.fmt(f)
    }
}

/// Alternating sequence of nontrivial syllables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeProductWord {
    syllables: Vec<Syllable>,
}

impl FreeProductWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn syllable_count(&self) -> usize {
        self.syllables.len()
    }

    /// Right-multiplies by one factor element, merging with the last syllable.
    /// A merge to the identity exposes the previous syllable, which then sits
    /// next to whatever is pushed after it.
    pub fn push(&mut self, s: Syllable) {
        if s.a_exp == 0 && s.b_exp == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some(last) if last.factor == s.factor => {
                last.a_exp += s.a_exp;
                last.b_exp += s.b_exp;
                if last.a_exp == 0 && last.b_exp == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push(s),
        }
    }

    pub fn push_letter(&mut self, g: SpGen, e: i64) -> Result<()> {
        let s = match g {
            SpGen::A13 => Syllable::new(Factor::F13, e, 0),
            SpGen::B13 => Syllable::new(Factor::F13, 0, e),
            SpGen::A23 => Syllable::new(Factor::F23, e, 0),
            SpGen::B23 => Syllable::new(Factor::F23, 0, e),
            other => {
                return Err(Error::ForeignLetter {
                    letter: other.to_string(),
                    context: "the free-product base group",
                })
            }
        };
        self.push(s);
        Ok(())
    }

    pub fn mul(&self, other: &FreeProductWord) -> FreeProductWord {
        let mut out = self.clone();
        out.mul_assign(other);
        out
    }

    pub fn mul_assign(&mut self, other: &FreeProductWord) {
        for &s in &other.syllables {
            self.push(s);
        }
    }

    pub fn inverse(&self) -> FreeProductWord {
        FreeProductWord {
            syllables: self.syllables.iter().rev().map(|s| s.inverse()).collect(),
        }
    }

    /// `(a13 a23)^k`.
    pub fn c_power(k: i64) -> FreeProductWord {
        let mut out = FreeProductWord::identity();
        let (first, second) = if k >= 0 {
            (
                Syllable::new(Factor::F13, 1, 0),
                Syllable::new(Factor::F23, 1, 0),
            )
        } else {
            (
                Syllable::new(Factor::F23, -1, 0),
                Syllable::new(Factor::F13, -1, 0),
            )
        };
        for _ in 0..k.unsigned_abs() {
            out.syllables.push(first);
            out.syllables.push(second);
        }
        out
    }

    pub fn to_sp_word(&self) -> SpWord {
        let mut w = SpWord::new();
        for s in &self.syllables {
            let (a, b) = s.letters();
            w.push(a, s.a_exp);
            w.push(b, s.b_exp);
        }
        w
    }
}

impl fmt::Display for FreeProductWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_sp_word().fmt(f)
    }
}

/// Normal form of a word over `a13 b13 a23 b23`.
pub fn free_product_nf(w: &SpWord) -> Result<FreeProductWord> {
    let mut out = FreeProductWord::identity();
    for &(g, e) in w.runs() {
        out.push_letter(g, e)?;
    }
    Ok(out)
}

/// `Some(k)` iff `w = (a13 a23)^k`.
pub fn cyclic_power_of_c(w: &FreeProductWord) -> Option<i64> {
    let s = w.syllables();
    if !s.len().is_multiple_of(2) {
        return None;
    }
    let k = (s.len() / 2) as i64;
    let k = match s.first() {
        None => return Some(0),
        Some(first) if first.factor == Factor::F13 => k,
        Some(_) => -k,
    };
    (*w == FreeProductWord::c_power(k)).then_some(k)
}
