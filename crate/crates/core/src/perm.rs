//! Projection onto the symmetric group and the Schreier transversal.
//!
//! Words act on strand positions left to right: the image of `uv` applies the
//! permutation of `u` first, then that of `v`.

use std::collections::HashMap;
use std::fmt;

use crate::word::{BraidWord, Generator};
use crate::{Error, Result};

/// A permutation of `1..=n` in one-line form (stored 0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// Builds from 1-based one-line images, checking bijectivity.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in images {
            if i == 0 || i > n || seen[i - 1] {
                return None;
            }
            seen[i - 1] = true;
        }
        Some(Permutation {
            images: images.iter().map(|&i| (i - 1) as u8).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based image of the 1-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &p)| i == p as usize)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&p| other.images[p as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p as usize] = i as u8;
        }
        Permutation { images }
    }

    /// Post-composes with the transposition `(i, i+1)` (1-based `i`).
    fn apply_adjacent(&mut self, i: usize) {
        let (a, b) = ((i - 1) as u8, i as u8);
        for p in &mut self.images {
            if *p == a {
                *p = b;
            } else if *p == b {
                *p = a;
            }
        }
    }

    /// One-line form, e.g. `[2,1,3]`.
    pub fn one_line(&self) -> String {
        let parts: Vec<String> = self.images().iter().map(|i| i.to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    /// Cycle form including fixed points, e.g. `(1 2)(3)`.
    pub fn cycles(&self) -> String {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push((x + 1).to_string());
                x = self.images[x] as usize;
            }
            out.push('(');
            out.push_str(&cycle.join(" "));
            out.push(')');
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycles())
    }
}

/// Image of `w` in `S_n`; `s<i>` and `t<i>` both map to `(i, i+1)`.
pub fn pi(w: &BraidWord) -> Permutation {
    let mut p = Permutation::identity(w.strands());
    for &(g, e) in w.runs() {
        if e % 2 != 0 {
            p.apply_adjacent(g.index);
        }
    }
    p
}

/// Image of one ambient generator (to the power one).
pub fn pi_generator(g: Generator, strands: usize) -> Permutation {
    let mut p = Permutation::identity(strands);
    p.apply_adjacent(g.index);
    p
}

pub const MAX_TRANSVERSAL_STRANDS: usize = 6;

/// A prefix-closed set of coset representatives, one per element of `S_n`,
/// each a positive word in the sigmas.
#[derive(Clone, Debug)]
pub struct Transversal {
    strands: usize,
    reps: Vec<BraidWord>,
    images: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl Transversal {
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Representatives in shortlex order.
    pub fn reps(&self) -> &[BraidWord] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn image(&self, idx: usize) -> &Permutation {
        &self.images[idx]
    }

    pub fn index_of(&self, p: &Permutation) -> usize {
        self.index[p]
    }

    pub fn rep_of(&self, p: &Permutation) -> &BraidWord {
        &self.reps[self.index[p]]
    }

    /// Position of `rep` in enumeration order, if it is a representative.
    pub fn position(&self, rep: &BraidWord) -> Option<usize> {
        if rep.strands() != self.strands {
            return None;
        }
        let idx = self.index[&pi(rep)];
        (self.reps[idx] == *rep).then_some(idx)
    }
}

/// `m_{k,l} = s_{k-1} s_{k-2} ... s_l` for `l < k`, empty for `l = k`.
fn descending_run(k: usize, l: usize) -> Vec<(Generator, i64)> {
    (l..k).rev().map(|i| (Generator::sigma(i), 1)).collect()
}

/// All products `m_{2,j_2} m_{3,j_3} ... m_{n,j_n}` with `1 <= j_k <= k`.
pub fn schreier_transversal(n: usize) -> Result<Transversal> {
    if !(2..=MAX_TRANSVERSAL_STRANDS).contains(&n) {
        return Err(Error::UnsupportedStrands {
            strands: n,
            min: 2,
            max: MAX_TRANSVERSAL_STRANDS,
        });
    }
    let mut products: Vec<Vec<(Generator, i64)>> = vec![Vec::new()];
    for k in 2..=n {
        let mut next = Vec::with_capacity(products.len() * k);
        for prefix in &products {
            for j in 1..=k {
                let mut word = prefix.clone();
                word.extend(descending_run(k, j));
                next.push(word);
            }
        }
        products = next;
    }
    let mut reps: Vec<BraidWord> = products
        .into_iter()
        .map(|runs| BraidWord::from_runs(n, runs))
        .collect::<Result<_>>()?;
    reps.sort_by(shortlex);

    let images: Vec<Permutation> = reps.iter().map(pi).collect();
    let mut index = HashMap::with_capacity(reps.len());
    for (i, p) in images.iter().enumerate() {
        let prev = index.insert(p.clone(), i);
        assert!(prev.is_none(), "transversal images must be distinct");
    }
    Ok(Transversal {
        strands: n,
        reps,
        images,
        index,
    })
}

/// Shortlex on unit letters; all representatives are positive sigma words.
pub(crate) fn shortlex(a: &BraidWord, b: &BraidWord) -> std::cmp::Ordering {
    a.letter_count()
        .cmp(&b.letter_count())
        .then_with(|| a.unit_letters().cmp(b.unit_letters()))
}

/// The representative `w̄` of the coset containing `w`.
pub fn coset_rep<'t>(w: &BraidWord, t: &'t Transversal) -> Result<&'t BraidWord> {
    if w.strands() != t.strands {
        return Err(Error::StrandMismatch {
            left: w.strands(),
            right: t.strands,
        });
    }
    Ok(t.rep_of(&pi(w)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn pi_examples() {
        assert!(pi(&w("", 3)).is_identity());
        assert_eq!(pi(&w("s1", 3)).one_line(), "[2,1,3]");
        assert_eq!(pi(&w("s1", 3)).cycles(), "(1 2)(3)");
        // (12) then (23): 1->3, 2->1, 3->2
        let p = pi(&w("s1 t2", 3));
        assert_eq!((p.image(1), p.image(2), p.image(3)), (3, 1, 2));
        assert_eq!(pi(&w("t1", 3)), pi(&w("s1^-1", 3)));
        assert!(pi(&w("s1^2 t2^-2", 3)).is_identity());
    }

    #[test]
    fn pi_is_homomorphic() {
        let u = w("s1 t2 s3^3", 4);
        let v = w("t3 s2^-1", 4);
        assert_eq!(pi(&u.concat(&v).unwrap()), pi(&u).then(&pi(&v)));
    }

    #[test]
    fn permutation_helpers() {
        let p = Permutation::from_images(&[3, 1, 2]).unwrap();
        assert!(p.then(&p.inverse()).is_identity());
        assert_eq!(p.cycles(), "(1 3 2)");
        assert!(Permutation::from_images(&[1, 1, 2]).is_none());
        assert!(Permutation::from_images(&[0, 1]).is_none());
    }

    #[test]
    fn small_transversals() {
        let t2 = schreier_transversal(2).unwrap();
        let reps: Vec<String> = t2.reps().iter().map(|r| r.to_string()).collect();
        assert_eq!(reps, ["1", "s1"]);
        let t3 = schreier_transversal(3).unwrap();
        let reps: Vec<String> = t3.reps().iter().map(|r| r.to_string()).collect();
        assert_eq!(reps, ["1", "s1", "s2", "s1 s2", "s2 s1", "s1 s2 s1"]);
        assert_eq!(schreier_transversal(4).unwrap().len(), 24);
        assert!(schreier_transversal(1).is_err());
        assert!(schreier_transversal(7).is_err());
    }

    #[test]
    fn coset_rep_examples() {
        let t = schreier_transversal(3).unwrap();
        assert!(coset_rep(&w("s1^2", 3), &t).unwrap().is_empty());
        assert_eq!(coset_rep(&w("t1", 3), &t).unwrap(), &w("s1", 3));
        assert_eq!(coset_rep(&w("s1 t2", 3), &t).unwrap(), &w("s1 s2", 3));
        assert!(coset_rep(&w("s1", 4), &t).is_err());
    }

    #[test]
    fn position_lookup() {
        let t = schreier_transversal(3).unwrap();
        assert_eq!(t.position(&w("s2 s1", 3)), Some(4));
        assert_eq!(t.position(&w("s2 s1 s2", 3)), None);
    }
}
