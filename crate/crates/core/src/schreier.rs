//! Reidemeister–Schreier machinery for the pure subgroup.
//!
//! A Schreier generator `S[λ,a] = λ a (λa)‾⁻¹` pairs a transversal element `λ`
//! with an ambient generator `a`. Kernel words are rewritten into these
//! generators by the process `τ`, which tracks the coset of every prefix.

use std::cmp::Ordering;
use std::fmt;

use crate::perm::{coset_rep, pi, pi_generator, schreier_transversal, shortlex, Transversal};
use crate::word::{sg3_relators, BraidWord, Generator};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchreierGenerator {
    pub rep: BraidWord,
    pub generator: Generator,
}

impl SchreierGenerator {
    pub fn new(rep: BraidWord, generator: Generator) -> Self {
        SchreierGenerator { rep, generator }
    }

    /// Parses `rep` and `generator` in the braid-word grammar.
    pub fn parse(rep: &str, generator: &str, strands: usize) -> Result<Self> {
        let rep = BraidWord::parse(rep, strands)?;
        let letter = crate::word::GeneratorLetter::parse(generator, strands)?;
        if letter.exponent != 1 {
            return Err(Error::Syntax {
                token: generator.to_string(),
                reason: "Schreier generator letter must have exponent 1",
            });
        }
        Ok(SchreierGenerator::new(rep, letter.generator))
    }
}

impl Ord for SchreierGenerator {
    fn cmp(&self, other: &Self) -> Ordering {
        shortlex(&self.rep, &other.rep).then_with(|| self.generator.cmp(&other.generator))
    }
}

impl PartialOrd for SchreierGenerator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SchreierGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S[{},{}]", self.rep, self.generator)
    }
}

/// The ambient word `λ a (λa)‾⁻¹`, freely reduced.
pub fn s_generator_word(g: &SchreierGenerator, t: &Transversal) -> Result<BraidWord> {
    let mut la = g.rep.clone();
    la.push(g.generator, 1)?;
    let bar = coset_rep(&la, t)?;
    la.concat(&bar.invert())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorEntry {
    pub generator: SchreierGenerator,
    pub ambient: BraidWord,
    /// The ambient word is freely trivial.
    pub trivial: bool,
}

/// All `n! * 2(n-1)` Schreier generators, ordered by representative then letter.
pub fn enumerate_generators(n: usize) -> Result<Vec<GeneratorEntry>> {
    let t = schreier_transversal(n)?;
    generator_table(&t)
}

pub fn generator_table(t: &Transversal) -> Result<Vec<GeneratorEntry>> {
    let gens = Generator::all(t.strands());
    let mut out = Vec::with_capacity(t.len() * gens.len());
    for rep in t.reps() {
        for &a in &gens {
            let generator = SchreierGenerator::new(rep.clone(), a);
            let ambient = s_generator_word(&generator, t)?;
            out.push(GeneratorEntry {
                trivial: ambient.is_empty(),
                generator,
                ambient,
            });
        }
    }
    Ok(out)
}

/// A freely reduced word over Schreier generators with unit exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchreierWord {
    factors: Vec<(SchreierGenerator, i8)>,
}

impl SchreierWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, g: SchreierGenerator, sign: i8) {
        debug_assert!(sign == 1 || sign == -1);
        if let Some((last, s)) = self.factors.last() {
            if *last == g && *s == -sign {
                self.factors.pop();
                return;
            }
        }
        self.factors.push((g, sign));
    }

    pub fn factors(&self) -> &[(SchreierGenerator, i8)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    /// Replaces each factor by its ambient word.
    pub fn substitute(&self, t: &Transversal) -> Result<BraidWord> {
        let mut out = BraidWord::identity(t.strands())?;
        for (g, sign) in &self.factors {
            let word = s_generator_word(g, t)?;
            out = out.concat(&word.pow(i64::from(*sign)))?;
        }
        Ok(out)
    }
}

impl fmt::Display for SchreierWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (g, s)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *s == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^-1")?;
            }
        }
        Ok(())
    }
}

/// Rewrites a kernel word with the process `τ`.
///
/// A positive letter uses the representative of the prefix before it; an
/// inverse letter uses the representative of the prefix ending with it.
/// Freely trivial generators are dropped.
pub fn rewrite_tau(u: &BraidWord, t: &Transversal) -> Result<SchreierWord> {
    if u.strands() != t.strands() {
        return Err(Error::StrandMismatch {
            left: u.strands(),
            right: t.strands(),
        });
    }
    let image = pi(u);
    if !image.is_identity() {
        return Err(Error::NotPure {
            permutation: image.to_string(),
        });
    }
    let n = t.strands();
    let mut prefix = crate::perm::Permutation::identity(n);
    let mut out = SchreierWord::new();
    for (a, sign) in u.unit_letters() {
        let next = prefix.then(&pi_generator(a, n));
        let coset = if sign > 0 { &prefix } else { &next };
        let g = SchreierGenerator::new(t.rep_of(coset).clone(), a);
        if !s_generator_word(&g, t)?.is_empty() {
            out.push(g, sign as i8);
        }
        prefix = next;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelatorRewrite {
    /// 1-based index into [`sg3_relators`].
    pub relator: usize,
    pub conjugator: BraidWord,
    pub word: SchreierWord,
}

impl RelatorRewrite {
    pub fn label(&self) -> String {
        format!("r{},{}", self.relator, self.conjugator)
    }
}

/// `τ(λ r λ⁻¹)` for each of the five relators and six representatives.
pub fn relator_rewrites() -> Result<Vec<RelatorRewrite>> {
    let t = schreier_transversal(3)?;
    let mut out = Vec::with_capacity(30);
    for (mu, r) in sg3_relators().iter().enumerate() {
        for lambda in t.reps() {
            let conj = r.conjugate_by(lambda)?;
            out.push(RelatorRewrite {
                relator: mu + 1,
                conjugator: lambda.clone(),
                word: rewrite_tau(&conj, &t)?,
            });
        }
    }
    Ok(out)
}
