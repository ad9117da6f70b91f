//! Necessary conditions for triviality in the 3-strand singular braid group.
//!
//! Sending every `t_i` to `s_i` or to `s_i^-1` defines two homomorphisms onto
//! the ordinary braid group `B3`, where triviality is decided exactly by an
//! integer matrix image plus the exponent sum.

use std::fmt;

use crate::perm::pi;
use crate::word::{sg3_relators, BraidWord, Generator, Kind};
use crate::{Error, Result};

/// Row-major `[[a, b], [c, d]]` with overflow-checked products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix2 {
    pub entries: [i64; 4],
}

impl IntMatrix2 {
    pub const IDENTITY: IntMatrix2 = IntMatrix2 {
        entries: [1, 0, 0, 1],
    };

    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        IntMatrix2 {
            entries: [a, b, c, d],
        }
    }

    pub fn mul(&self, other: &IntMatrix2) -> Result<IntMatrix2> {
        let [a, b, c, d] = self.entries;
        let [e, f, g, h] = other.entries;
        let dot = |x: i64, y: i64, z: i64, w: i64| {
            x.checked_mul(y)
                .zip(z.checked_mul(w))
                .and_then(|(p, q)| p.checked_add(q))
                .ok_or(Error::Overflow("B3 matrix product"))
        };
        Ok(IntMatrix2::new(
            dot(a, e, b, g)?,
            dot(a, f, b, h)?,
            dot(c, e, d, g)?,
            dot(c, f, d, h)?,
        ))
    }

    pub fn determinant(&self) -> Option<i64> {
        let [a, b, c, d] = self.entries;
        a.checked_mul(d)?.checked_sub(b.checked_mul(c)?)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }
}

impl fmt::Display for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.entries;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TauRule {
    TauToSigma,
    TauToSigmaInverse,
}

impl TauRule {
    pub const ALL: [TauRule; 2] = [TauRule::TauToSigma, TauRule::TauToSigmaInverse];
}

impl fmt::Display for TauRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TauRule::TauToSigma => "t->s",
            TauRule::TauToSigmaInverse => "t->s^-1",
        })
    }
}

fn require_three(w: &BraidWord) -> Result<()> {
    if w.strands() != 3 {
        return Err(Error::UnsupportedStrands {
            strands: w.strands(),
            min: 3,
            max: 3,
        });
    }
    Ok(())
}

/// Image in `B3` under the chosen substitution for `t1`, `t2`.
pub fn quotient_to_b3(w: &BraidWord, rule: TauRule) -> Result<BraidWord> {
    require_three(w)?;
    let runs = w.runs().iter().map(|&(g, e)| match (g.kind, rule) {
        (Kind::Sigma, _) => (g, e),
        (Kind::Tau, TauRule::TauToSigma) => (Generator::sigma(g.index), e),
        (Kind::Tau, TauRule::TauToSigmaInverse) => (Generator::sigma(g.index), -e),
    });
    BraidWord::from_runs(3, runs)
}

fn sigma_power(index: usize, e: i64) -> IntMatrix2 {
    if index == 1 {
        IntMatrix2::new(1, e, 0, 1)
    } else {
        IntMatrix2::new(1, 0, -e, 1)
    }
}

/// `s1 -> [[1,1],[0,1]]`, `s2 -> [[1,0],[-1,1]]`.
pub fn b3_matrix(w: &BraidWord) -> Result<IntMatrix2> {
    require_three(w)?;
    let mut m = IntMatrix2::IDENTITY;
    for &(g, e) in w.runs() {
        if g.kind == Kind::Tau {
            return Err(Error::ForeignLetter {
                letter: g.to_string(),
                context: "a B3 word",
            });
        }
        m = m.mul(&sigma_power(g.index, e))?;
    }
    Ok(m)
}

/// Exact triviality test on `B3`: identity matrix and zero exponent sum.
pub fn b3_is_trivial(w: &BraidWord) -> Result<bool> {
    let m = b3_matrix(w)?;
    Ok(m.is_identity() && w.exponent_sums().0 == 0)
}

/// Every invariant computed by [`sg3_necessary_trivial`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub permutation_trivial: bool,
    pub sigma_sum: i64,
    pub tau_sum: i64,
    pub quotients: Vec<(TauRule, IntMatrix2, i64)>,
}

impl OracleReport {
    pub fn quotient_trivial(&self, rule: TauRule) -> bool {
        self.quotients
            .iter()
            .any(|(r, m, sum)| *r == rule && m.is_identity() && *sum == 0)
    }

    pub fn all_trivial(&self) -> bool {
        self.permutation_trivial
            && self.sigma_sum == 0
            && self.tau_sum == 0
            && TauRule::ALL.iter().all(|&r| self.quotient_trivial(r))
    }
}

pub fn oracle_report(w: &BraidWord) -> Result<OracleReport> {
    require_three(w)?;
    let (sigma_sum, tau_sum) = w.exponent_sums();
    let mut quotients = Vec::with_capacity(2);
    for rule in TauRule::ALL {
        let q = quotient_to_b3(w, rule)?;
        quotients.push((rule, b3_matrix(&q)?, q.exponent_sums().0));
    }
    Ok(OracleReport {
        permutation_trivial: pi(w).is_identity(),
        sigma_sum,
        tau_sum,
        quotients,
    })
}

/// Conjunction of all invariants; `false` proves nontriviality.
pub fn sg3_necessary_trivial(w: &BraidWord) -> Result<bool> {
    Ok(oracle_report(w)?.all_trivial())
}

/// Checks that both substitutions kill every defining relator.
pub fn audit_quotients() -> Result<bool> {
    for r in sg3_relators() {
        for rule in TauRule::ALL {
            if !b3_is_trivial(&quotient_to_b3(&r, rule)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> BraidWord {
        BraidWord::parse(text, 3).unwrap()
    }

    #[test]
    fn quotient_examples() {
        assert!(quotient_to_b3(&w("s1 t1 s1^-1 t1^-1"), TauRule::TauToSigma)
            .unwrap()
            .is_empty());
        assert_eq!(
            quotient_to_b3(&w("s1 s2 t1 s2^-1 s1^-1 t2^-1"), TauRule::TauToSigmaInverse).unwrap(),
            w("s1 s2 s1^-1 s2^-1 s1^-1 s2")
        );
        assert_eq!(
            quotient_to_b3(&w("t2^3"), TauRule::TauToSigma).unwrap(),
            w("s2^3")
        );
    }

    #[test]
    fn b3_examples() {
        assert!(b3_is_trivial(&w("s1 s2 s1 s2^-1 s1^-1 s2^-1")).unwrap());
        assert!(!b3_is_trivial(&w("s1 s2 s1 s1 s2 s1")).unwrap());
        assert_eq!(
            b3_matrix(&w("s1 s2 s1 s1 s2 s1")).unwrap(),
            IntMatrix2::new(-1, 0, 0, -1)
        );
        assert!(b3_is_trivial(&w("s1 s2 s1 s2^-1 s1^-1 s2^-1")).unwrap());
        // full twist squared is central and nontrivial but has identity matrix
        let twist4 = w("s1 s2 s1").pow(4);
        assert!(b3_matrix(&twist4).unwrap().is_identity());
        assert!(!b3_is_trivial(&twist4).unwrap());
        assert!(b3_is_trivial(&w("t1")).is_err());
    }

    #[test]
    fn determinant_is_one() {
        let m = b3_matrix(&w("s1^3 s2^-2 s1 s2^5")).unwrap();
        assert_eq!(m.determinant(), Some(1));
    }

    #[test]
    fn overflow_is_reported() {
        let big = w("s1^1000000000 s2^1000000000").pow(8);
        assert_eq!(b3_matrix(&big), Err(Error::Overflow("B3 matrix product")));
    }

    #[test]
    fn necessary_examples() {
        for r in sg3_relators() {
            assert!(sg3_necessary_trivial(&r).unwrap());
        }
        assert!(!sg3_necessary_trivial(&w("t1 s1^-1")).unwrap());
        assert!(sg3_necessary_trivial(&w("t1 t2 t1 t2^-1 t1^-1 t2^-1")).unwrap());
    }

    #[test]
    fn audit_passes() {
        assert!(audit_quotients().unwrap());
    }
}
