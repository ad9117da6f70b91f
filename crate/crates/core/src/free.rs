//! Freely reduced words stored as runs of `(generator, exponent)`.
//!
//! Both ambient braid words and words over the six pure generators are built
//! on [`FreeWord`]. Adjacent runs always carry distinct generators and no run
//! has exponent zero, so two `FreeWord`s are equal as values exactly when they
//! are equal in the free group.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord<G> {
    runs: Vec<(G, i64)>,
}

impl<G> Default for FreeWord<G> {
    fn default() -> Self {
        FreeWord { runs: Vec::new() }
    }
}

impl<G: Copy + Eq> FreeWord<G> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn generator(g: G, exponent: i64) -> Self {
        let mut w = Self::new();
        w.push(g, exponent);
        w
    }

    pub fn from_runs<I: IntoIterator<Item = (G, i64)>>(runs: I) -> Self {
        let mut w = Self::new();
        for (g, e) in runs {
            w.push(g, e);
        }
        w
    }

    /// Right-multiplies by `g^exponent`, cancelling against the last run.
    pub fn push(&mut self, g: G, exponent: i64) {
        if exponent == 0 {
            return;
        }
        match self.runs.last_mut() {
            Some(last) if last.0 == g => {
                last.1 += exponent;
                if last.1 == 0 {
                    self.runs.pop();
                }
            }
            _ => self.runs.push((g, exponent)),
        }
    }

    pub fn extend(&mut self, other: &FreeWord<G>) {
        for &(g, e) in &other.runs {
            self.push(g, e);
        }
    }

    pub fn concat(&self, other: &FreeWord<G>) -> Self {
        let mut w = self.clone();
        w.extend(other);
        w
    }

    pub fn inverse(&self) -> Self {
        FreeWord {
            runs: self.runs.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = Self::new();
        for _ in 0..k.unsigned_abs() {
            w.extend(&base);
        }
        w
    }

    pub fn runs(&self) -> &[(G, i64)] {
        &self.runs
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Length as a word in unit letters.
    pub fn letter_count(&self) -> u64 {
        self.runs.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    /// Expands the runs into unit letters `(g, ±1)`.
    pub fn unit_letters(&self) -> impl Iterator<Item = (G, i64)> + '_ {
        self.runs
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
    }

    /// Applies the homomorphism defined on generators by `image`.
    pub fn substitute<H, F>(&self, mut image: F) -> FreeWord<H>
    where
        H: Copy + Eq,
        F: FnMut(G) -> FreeWord<H>,
    {
        let mut out = FreeWord::new();
        for &(g, e) in &self.runs {
            let img = image(g);
            out.extend(&img.pow(e));
        }
        out
    }

    pub fn exponent_sum_by<F: Fn(G) -> bool>(&self, select: F) -> i64 {
        self.runs
            .iter()
            .filter(|(g, _)| select(*g))
            .map(|&(_, e)| e)
            .sum()
    }
}

impl<G: Copy + Eq> FromIterator<(G, i64)> for FreeWord<G> {
    fn from_iter<I: IntoIterator<Item = (G, i64)>>(iter: I) -> Self {
        Self::from_runs(iter)
    }
}

/// Renders `g`, `g^k`; the empty word renders as `1`.
impl<G: fmt::Display> fmt::Display for FreeWord<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.runs.is_empty() {
            return f.write_str("1");
        }
        for (i, (g, e)) in self.runs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Splits `text` into `(name, exponent)` tokens of the form `name` or
/// `name^k`. A lone `1` token denotes the identity and is skipped.
pub(crate) fn tokenize(text: &str) -> crate::Result<Vec<(&str, &str, i64)>> {
    use crate::Error;
    let mut out = Vec::new();
    for token in text.split_whitespace() {
        if token == "1" {
            continue;
        }
        let (name, exponent) = match token.split_once('^') {
            Some((name, exp)) => {
                let k: i64 = exp.parse().map_err(|_| Error::Syntax {
                    token: token.to_string(),
                    reason: "exponent is not an integer",
                })?;
                if k == 0 {
                    return Err(Error::Syntax {
                        token: token.to_string(),
                        reason: "exponent must be nonzero",
                    });
                }
                if k.unsigned_abs() > i32::MAX as u64 {
                    return Err(Error::Syntax {
                        token: token.to_string(),
                        reason: "exponent too large",
                    });
                }
                (name, k)
            }
            None => (token, 1),
        };
        if name.is_empty() {
            return Err(Error::Syntax {
                token: token.to_string(),
                reason: "missing generator name",
            });
        }
        out.push((token, name, exponent));
    }
    Ok(out)
}
