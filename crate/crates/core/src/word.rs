//! Words in the singular braid group on `n` strands.

use std::fmt;

use crate::free::{tokenize, FreeWord};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    /// Ordinary crossing `s<i>`.
    Sigma,
    /// Singular crossing `t<i>`.
    Tau,
}

/// An ambient generator `s<i>` or `t<i>` (1-based strand position).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub kind: Kind,
    pub index: usize,
}

impl Generator {
    pub const fn sigma(index: usize) -> Self {
        Generator {
            kind: Kind::Sigma,
            index,
        }
    }

    pub const fn tau(index: usize) -> Self {
        Generator {
            kind: Kind::Tau,
            index,
        }
    }

    /// All `2(n-1)` generators, sigmas first.
    pub fn all(strands: usize) -> Vec<Generator> {
        let sigmas = (1..strands).map(Generator::sigma);
        let taus = (1..strands).map(Generator::tau);
        sigmas.chain(taus).collect()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Sigma => write!(f, "s{}", self.index),
            Kind::Tau => write!(f, "t{}", self.index),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorLetter {
    pub generator: Generator,
    pub exponent: i64,
}

impl GeneratorLetter {
    pub fn new(generator: Generator, exponent: i64) -> Self {
        debug_assert!(exponent != 0);
        GeneratorLetter {
            generator,
            exponent,
        }
    }

    /// Parses a single token such as `s1`, `t2^-1`.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let w = BraidWord::parse(text, strands)?;
        match w.runs() {
            [(g, e)] => Ok(GeneratorLetter::new(*g, *e)),
            _ => Err(Error::Syntax {
                token: text.to_string(),
                reason: "expected a single generator letter",
            }),
        }
    }
}

impl fmt::Display for GeneratorLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 1 {
            write!(f, "{}", self.generator)
        } else {
            write!(f, "{}^{}", self.generator, self.exponent)
        }
    }
}

/// A freely reduced word over `s1..s(n-1), t1..t(n-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    word: FreeWord<Generator>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Result<Self> {
        if strands < 2 {
            return Err(Error::UnsupportedStrands {
                strands,
                min: 2,
                max: usize::MAX,
            });
        }
        Ok(BraidWord {
            strands,
            word: FreeWord::new(),
        })
    }

    pub fn from_runs<I>(strands: usize, runs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Generator, i64)>,
    {
        let mut w = Self::identity(strands)?;
        for (g, e) in runs {
            w.push(g, e)?;
        }
        Ok(w)
    }

    /// Parses whitespace-separated tokens `s<i>`, `t<i>` with optional `^<k>`.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let mut w = Self::identity(strands)?;
        for (token, name, exponent) in tokenize(text)? {
            let kind = match name.as_bytes()[0] {
                b's' => Kind::Sigma,
                b't' => Kind::Tau,
                _ => {
                    return Err(Error::Syntax {
                        token: token.to_string(),
                        reason: "expected s<i> or t<i>",
                    })
                }
            };
            let digits = &name[1..];
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Syntax {
                    token: token.to_string(),
                    reason: "expected a strand index",
                });
            }
            let index: usize = digits.parse().map_err(|_| Error::Syntax {
                token: token.to_string(),
                reason: "strand index too large",
            })?;
            w.push(Generator { kind, index }, exponent)?;
        }
        Ok(w)
    }

    pub fn push(&mut self, g: Generator, exponent: i64) -> Result<()> {
        if g.index == 0 || g.index >= self.strands {
            return Err(Error::IndexOutOfRange {
                index: g.index,
                strands: self.strands,
            });
        }
        self.word.push(g, exponent);
        Ok(())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn runs(&self) -> &[(Generator, i64)] {
        self.word.runs()
    }

    pub fn letters(&self) -> impl Iterator<Item = GeneratorLetter> + '_ {
        self.runs().iter().map(|&(g, e)| GeneratorLetter::new(g, e))
    }

    pub fn unit_letters(&self) -> impl Iterator<Item = (Generator, i64)> + '_ {
        self.word.unit_letters()
    }

    pub fn free_word(&self) -> &FreeWord<Generator> {
        &self.word
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn letter_count(&self) -> u64 {
        self.word.letter_count()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_strands(other)?;
        Ok(BraidWord {
            strands: self.strands,
            word: self.word.concat(&other.word),
        })
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            word: self.word.inverse(),
        }
    }

    pub fn pow(&self, k: i64) -> BraidWord {
        BraidWord {
            strands: self.strands,
            word: self.word.pow(k),
        }
    }

    /// `self * other * self^-1`
    pub fn conjugate_by(&self, conjugator: &BraidWord) -> Result<BraidWord> {
        conjugator.concat(self)?.concat(&conjugator.invert())
    }

    /// `(sigma_sum, tau_sum)`; each is invariant under the defining relations.
    pub fn exponent_sums(&self) -> (i64, i64) {
        (
            self.word.exponent_sum_by(|g| g.kind == Kind::Sigma),
            self.word.exponent_sum_by(|g| g.kind == Kind::Tau),
        )
    }

    pub fn has_tau(&self) -> bool {
        self.runs().iter().any(|(g, _)| g.kind == Kind::Tau)
    }

    pub(crate) fn check_strands(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    pub(crate) fn from_free(strands: usize, word: FreeWord<Generator>) -> BraidWord {
        BraidWord { strands, word }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

const SG3_RELATORS: [&str; 5] = [
    "s1 t1 s1^-1 t1^-1",
    "s1 s2 s1 s2^-1 s1^-1 s2^-1",
    "s2 t2 s2^-1 t2^-1",
    "s1 s2 t1 s2^-1 s1^-1 t2^-1",
    "s2 s1 t2 s1^-1 s2^-1 t1^-1",
];

/// The five defining relators of the 3-strand singular braid group, in order
/// `[s1,t1]`, braid relation, `[s2,t2]`, and the two mixed relations.
pub fn sg3_relators() -> Vec<BraidWord> {
    SG3_RELATORS
        .iter()
        .map(|r| BraidWord::parse(r, 3).expect("relator table parses"))
        .collect()
}
