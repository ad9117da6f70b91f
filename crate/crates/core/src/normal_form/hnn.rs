//! Britton reduction in the HNN extension of `Z^2 * Z^2` with stable letter
//! `b12` centralizing `c = a13 a23`.

use std::fmt;

use super::free_product::{cyclic_power_of_c, FreeProductWord};
use crate::sp3::{SpGen, SpWord};
use crate::{Error, Result};

/// `base_0 b12^e_1 base_1 ... b12^e_m base_m`.
///
/// Reduced: no interior base (one with stable letters on both sides) is a
/// power of `c`, so no pinch `b12^-e g b12^e` with `g` in `<c>` remains.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HnnForm {
    bases: Vec<FreeProductWord>,
    stables: Vec<i64>,
}

impl Default for HnnForm {
    fn default() -> Self {
        HnnForm {
            bases: vec![FreeProductWord::identity()],
            stables: Vec::new(),
        }
    }
}

impl HnnForm {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn bases(&self) -> &[FreeProductWord] {
        &self.bases
    }

    pub fn stables(&self) -> &[i64] {
        &self.stables
    }

    pub fn stable_segments(&self) -> usize {
        self.stables.len()
    }

    /// Total number of unit stable letters.
    pub fn stable_letters(&self) -> u64 {
        self.stables.iter().map(|e| e.unsigned_abs()).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.stables.is_empty() && self.bases[0].is_identity()
    }

    /// Every interior base lies outside `<c>`.
    pub fn is_reduced(&self) -> bool {
        let interior = self.bases.len().saturating_sub(1).max(1);
        self.stables.iter().all(|&e| e != 0)
            && self.bases[1..interior]
                .iter()
                .all(|b| cyclic_power_of_c(b).is_none())
    }

    fn top(&mut self) -> &mut FreeProductWord {
        self.bases.last_mut().expect("at least one base")
    }

    fn push_base_letter(&mut self, g: SpGen, e: i64) -> Result<()> {
        self.top().push_letter(g, e)
    }

    /// Appends `b12^e`, absorbing `b12^f c^k b12^e = c^k b12^(f+e)`.
    fn push_stable(&mut self, mut e: i64) {
        loop {
            if e == 0 {
                return;
            }
            let k = match (self.stables.last(), self.bases.last()) {
                (Some(_), Some(top)) => cyclic_power_of_c(top),
                _ => None,
            };
            match k {
                Some(k) => {
                    self.bases.pop();
                    let f = self.stables.pop().expect("checked above");
                    self.top().mul_assign(&FreeProductWord::c_power(k));
                    e += f;
                }
                None => {
                    self.stables.push(e);
                    self.bases.push(FreeProductWord::identity());
                    return;
                }
            }
        }
    }

    pub fn to_sp_word(&self) -> SpWord {
        let mut w = self.bases[0].to_sp_word();
        for (e, base) in self.stables.iter().zip(&self.bases[1..]) {
            w.push(SpGen::B12, *e);
            w.extend(&base.to_sp_word());
        }
        w
    }

    /// Display-only canonicalization: shifts powers of `c` leftward across
    /// stable letters so each interior or final base has the fewest syllables
    /// among `c^-k base` for `|k| <= syllables/2 + 1`.
    pub fn canonical(&self) -> HnnForm {
        let mut out = self.clone();
        for i in (1..out.bases.len()).rev() {
            let base = &out.bases[i];
            let window = (base.syllable_count() / 2 + 1) as i64;
            let mut best = (base.syllable_count(), 0i64);
            for k in (1..=window).flat_map(|k| [k, -k]) {
                let cand = FreeProductWord::c_power(-k).mul(base);
                if cand.syllable_count() < best.0 {
                    best = (cand.syllable_count(), k);
                }
            }
            let k = best.1;
            if k != 0 {
                let shifted = FreeProductWord::c_power(-k).mul(&out.bases[i]);
                out.bases[i] = shifted;
                out.bases[i - 1].mul_assign(&FreeProductWord::c_power(k));
            }
        }
        out
    }
}

impl fmt::Display for HnnForm {
    /// `base_0 b12^e_1 base_1 ...`, with empty bases rendered as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bases[0])?;
        for (e, base) in self.stables.iter().zip(&self.bases[1..]) {
            write!(f, " b12^{e} {base}")?;
        }
        Ok(())
    }
}

/// Britton-reduces a word over `a13 a23 b12 b13 b23`.
///
/// Scans left to right keeping a reduced prefix; each incoming stable letter
/// checks whether the open base is a power of `c` and, if so, slides it past
/// and merges with the previous stable letter.
pub fn britton_reduce(w: &SpWord) -> Result<HnnForm> {
    let mut form = HnnForm::identity();
    for &(g, e) in w.runs() {
        match g {
            SpGen::B12 => form.push_stable(e),
            SpGen::A12 => {
                return Err(Error::ForeignLetter {
                    letter: g.to_string(),
                    context: "the HNN extension (eliminate a12 first)",
                })
            }
            _ => form.push_base_letter(g, e)?,
        }
    }
    Ok(form)
}
