//! The six-letter presentation of the 3-strand singular pure braid group.
//!
//! Generators: `a12 = s1^2`, `a13 = s2 s1^2 s2^-1`, `a23 = s2^2`,
//! `b12 = s1 t1`, `b13 = s2 s1 t1 s2^-1`, `b23 = s2 t2`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::free::{tokenize, FreeWord};
use crate::perm::{schreier_transversal, Transversal};
use crate::schreier::{rewrite_tau, s_generator_word, SchreierGenerator, SchreierWord};
use crate::word::{BraidWord, Generator, GeneratorLetter, Kind};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpGen {
    A12,
    A13,
    A23,
    B12,
    B13,
    B23,
}

impl SpGen {
    pub const ALL: [SpGen; 6] = [
        SpGen::A12,
        SpGen::A13,
        SpGen::A23,
        SpGen::B12,
        SpGen::B13,
        SpGen::B23,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpGen::A12 => "a12",
            SpGen::A13 => "a13",
            SpGen::A23 => "a23",
            SpGen::B12 => "b12",
            SpGen::B13 => "b13",
            SpGen::B23 => "b23",
        }
    }

    fn from_name(name: &str) -> Option<SpGen> {
        SpGen::ALL.into_iter().find(|g| g.name() == name)
    }

    fn position(self) -> usize {
        self as usize
    }

    /// Defining word in the ambient group.
    pub fn ambient(self) -> &'static BraidWord {
        static WORDS: OnceLock<Vec<BraidWord>> = OnceLock::new();
        let words = WORDS.get_or_init(|| {
            [
                "s1^2",
                "s2 s1^2 s2^-1",
                "s2^2",
                "s1 t1",
                "s2 s1 t1 s2^-1",
                "s2 t2",
            ]
            .iter()
            .map(|s| BraidWord::parse(s, 3).expect("defining words parse"))
            .collect()
        });
        &words[self.position()]
    }
}

impl fmt::Display for SpGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub type SpWord = FreeWord<SpGen>;

/// Parses tokens `a12 a13 a23 b12 b13 b23` with optional `^<k>`.
pub fn parse_sp_word(text: &str) -> Result<SpWord> {
    let mut w = SpWord::new();
    for (token, name, exponent) in tokenize(text)? {
        let g = SpGen::from_name(name).ok_or_else(|| Error::Syntax {
            token: token.to_string(),
            reason: "expected one of a12 a13 a23 b12 b13 b23",
        })?;
        w.push(g, exponent);
    }
    Ok(w)
}

pub(crate) fn sp(text: &str) -> SpWord {
    parse_sp_word(text).expect("built-in word parses")
}

/// The transversal for three strands, built once.
pub fn sg3_transversal() -> &'static Transversal {
    static T: OnceLock<Transversal> = OnceLock::new();
    T.get_or_init(|| schreier_transversal(3).expect("n = 3 is supported"))
}

/// `(representative, letter, expression)` for all 24 Schreier generators.
const EXPRESSION_ROWS: [(&str, &str, &str); 24] = [
    ("1", "s1", "1"),
    ("1", "s2", "1"),
    ("1", "t1", "b12 a12^-1"),
    ("1", "t2", "b23 a23^-1"),
    ("s1", "s1", "a12"),
    ("s1", "s2", "1"),
    ("s1", "t1", "b12"),
    ("s1", "t2", "a23^-1 b13 a13^-1 a23"),
    ("s2", "s1", "1"),
    ("s2", "s2", "a23"),
    ("s2", "t1", "b13 a13^-1"),
    ("s2", "t2", "b23"),
    ("s1 s2", "s1", "1"),
    ("s1 s2", "s2", "a23^-1 a13 a23"),
    ("s1 s2", "t1", "b23 a23^-1"),
    ("s1 s2", "t2", "a23^-1 b13 a23"),
    ("s2 s1", "s1", "a13"),
    // freely nontrivial, but equal to the braid relator
    ("s2 s1", "s2", "1"),
    ("s2 s1", "t1", "b13"),
    ("s2 s1", "t2", "b12 a12^-1"),
    ("s1 s2 s1", "s1", "a23"),
    ("s1 s2 s1", "s2", "a12"),
    ("s1 s2 s1", "t1", "b23"),
    ("s1 s2 s1", "t2", "b12"),
];

/// Expressions of the 24 Schreier generators in the six-letter alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpressionTable {
    rows: BTreeMap<SchreierGenerator, SpWord>,
}

impl ExpressionTable {
    pub fn standard() -> &'static ExpressionTable {
        static TABLE: OnceLock<ExpressionTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            let rows = EXPRESSION_ROWS
                .iter()
                .map(|(rep, a, expr)| {
                    let g = SchreierGenerator::parse(rep, a, 3).expect("table key parses");
                    (g, sp(expr))
                })
                .collect();
            ExpressionTable { rows }
        })
    }

    /// A copy with one row replaced; used for fault injection.
    pub fn with_row(&self, g: SchreierGenerator, expression: SpWord) -> ExpressionTable {
        let mut rows = self.rows.clone();
        rows.insert(g, expression);
        ExpressionTable { rows }
    }

    pub fn rows(&self) -> impl Iterator<Item = (&SchreierGenerator, &SpWord)> {
        self.rows.iter()
    }

    pub fn express(&self, g: &SchreierGenerator) -> Result<&SpWord> {
        self.rows
            .get(g)
            .ok_or_else(|| Error::UnknownGenerator(g.to_string()))
    }

    pub fn substitute(&self, w: &SchreierWord) -> Result<SpWord> {
        let mut out = SpWord::new();
        for (g, sign) in w.factors() {
            out.extend(&self.express(g)?.pow(i64::from(*sign)));
        }
        Ok(out)
    }

    /// `τ` followed by table substitution.
    pub fn rewrite(&self, w: &BraidWord) -> Result<SpWord> {
        if w.strands() != 3 {
            return Err(Error::StrandMismatch {
                left: w.strands(),
                right: 3,
            });
        }
        let tau = rewrite_tau(w, sg3_transversal())?;
        self.substitute(&tau)
    }

    /// Rows whose ambient word is not freely trivial.
    pub fn nontrivial_rows(&self) -> Vec<(&SchreierGenerator, &SpWord)> {
        let t = sg3_transversal();
        self.rows()
            .filter(|(g, _)| {
                !s_generator_word(g, t)
                    .expect("table keys are valid")
                    .is_empty()
            })
            .collect()
    }
}

pub fn express_schreier_gen(g: &SchreierGenerator) -> Result<SpWord> {
    ExpressionTable::standard().express(g).cloned()
}

/// Rewrites a pure 3-strand word into the six-letter alphabet.
pub fn rewrite_to_sp3(w: &BraidWord) -> Result<SpWord> {
    ExpressionTable::standard().rewrite(w)
}

pub fn sp3_to_sg3(w: &SpWord) -> BraidWord {
    BraidWord::from_free(3, w.substitute(|g| g.ambient().free_word().clone()))
}

/// `(lhs, rhs)` pairs of the eight defining relations.
pub const THEOREM1_RELATIONS: [(&str, &str); 8] = [
    ("a12 a13 a12^-1", "a23^-1 a13 a23"),
    ("a12 a23 a12^-1", "a23^-1 a13^-1 a23 a13 a23"),
    ("a12 b12", "b12 a12"),
    ("a13 b13", "b13 a13"),
    ("a23 b23", "b23 a23"),
    ("b12 a13 a23 b12^-1", "a13 a23"),
    ("a12 b13 a12^-1", "a23^-1 b13 a23"),
    ("a12 b23 a12^-1", "a23^-1 a13^-1 b23 a13 a23"),
];

/// The eight defining relators `lhs * rhs^-1`.
pub fn theorem1_relators() -> Vec<SpWord> {
    THEOREM1_RELATIONS
        .iter()
        .map(|(l, r)| sp(l).concat(&sp(r).inverse()))
        .collect()
}

/// `x^g = g^-1 x g` for `g` in `s1, s2, t1, t2`, rows in [`SpGen::ALL`] order.
const CONJUGATION_RULES: [(&str, [&str; 6]); 4] = [
    (
        "s1",
        [
            "a12",
            "a13 a23 a13^-1",
            "a13",
            "b12",
            "a13 b23 a13^-1",
            "b13",
        ],
    ),
    (
        "s2",
        [
            "a23^-1 a13 a23",
            "a12",
            "a23",
            "a23^-1 b13 a23",
            "b12",
            "b23",
        ],
    ),
    (
        "t1",
        [
            "a12",
            "b12^-1 a23 b12",
            "b12^-1 a23^-1 a13 a23 b12",
            "b12",
            "b12^-1 b23 b12",
            "b12^-1 a12 b13 a12^-1 b12",
        ],
    ),
    (
        "t2",
        [
            "b23^-1 a13 b23",
            "b23^-1 a23 a12 a23^-1 b23",
            "a23",
            "b23^-1 b13 b23",
            "b23^-1 a23 b12 a23^-1 b23",
            "b23",
        ],
    ),
];

/// `x^(g^-1) = g x g^-1`, the inverse automorphisms of [`CONJUGATION_RULES`].
const INVERSE_CONJUGATION_RULES: [(&str, [&str; 6]); 4] = [
    (
        "s1",
        [
            "a12",
            "a23",
            "a23^-1 a13 a23",
            "b12",
            "b23",
            "a23^-1 b13 a23",
        ],
    ),
    (
        "s2",
        [
            "a13",
            "a23 a12 a23^-1",
            "a23",
            "b13",
            "a23 b12 a23^-1",
            "b23",
        ],
    ),
    (
        "t1",
        [
            "a12",
            "b12 a13 a23 a13^-1 b12^-1",
            "b12 a13 b12^-1",
            "b12",
            "a12^-1 b12 b23 b12^-1 a12",
            "b12 b13 b12^-1",
        ],
    ),
    (
        "t2",
        [
            "a23^-1 b23 a13 b23^-1 a23",
            "b23 a12 b23^-1",
            "a23",
            "a23^-1 b23 b13 b23^-1 a23",
            "b23 b12 b23^-1",
            "b23",
        ],
    ),
];

/// The action of the ambient generators on the six letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugationTable {
    positive: [[SpWord; 6]; 4],
    negative: [[SpWord; 6]; 4],
}

fn generator_slot(g: Generator) -> Option<usize> {
    match (g.kind, g.index) {
        (Kind::Sigma, 1) => Some(0),
        (Kind::Sigma, 2) => Some(1),
        (Kind::Tau, 1) => Some(2),
        (Kind::Tau, 2) => Some(3),
        _ => None,
    }
}

fn load_rules(rules: &[(&str, [&str; 6]); 4]) -> [[SpWord; 6]; 4] {
    std::array::from_fn(|i| {
        let (name, images) = &rules[i];
        let g = GeneratorLetter::parse(name, 3).expect("rule key parses");
        debug_assert_eq!(generator_slot(g.generator), Some(i));
        std::array::from_fn(|j| sp(images[j]))
    })
}

impl ConjugationTable {
    pub fn standard() -> &'static ConjugationTable {
        static TABLE: OnceLock<ConjugationTable> = OnceLock::new();
        TABLE.get_or_init(|| ConjugationTable {
            positive: load_rules(&CONJUGATION_RULES),
            negative: load_rules(&INVERSE_CONJUGATION_RULES),
        })
    }

    /// The claimed image `x^g` for a generator `g` to the power `sign`.
    pub fn image(&self, x: SpGen, g: Generator, sign: i64) -> Result<&SpWord> {
        let slot = generator_slot(g).ok_or(Error::IndexOutOfRange {
            index: g.index,
            strands: 3,
        })?;
        let table = if sign > 0 {
            &self.positive
        } else {
            &self.negative
        };
        Ok(&table[slot][x.position()])
    }

    pub fn conjugate(&self, x: &SpWord, g: GeneratorLetter) -> Result<SpWord> {
        let sign = g.exponent.signum();
        let mut current = x.clone();
        for _ in 0..g.exponent.unsigned_abs() {
            let mut next = SpWord::new();
            for &(letter, e) in current.runs() {
                next.extend(&self.image(letter, g.generator, sign)?.pow(e));
            }
            current = next;
        }
        Ok(current)
    }
}

/// `x^g = g^-1 x g`, applied letterwise.
pub fn conjugate_by_sg3_generator(x: &SpWord, g: GeneratorLetter) -> Result<SpWord> {
    ConjugationTable::standard().conjugate(x, g)
}

/// Exponents of `a12` and `b12` in the abelian two-strand group.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Sp2Form {
    pub a_exp: i64,
    pub b_exp: i64,
}

impl Sp2Form {
    pub fn is_trivial(&self) -> bool {
        self.a_exp == 0 && self.b_exp == 0
    }
}

pub fn sp2_normal_form(w: &SpWord) -> Result<Sp2Form> {
    let mut form = Sp2Form::default();
    for &(g, e) in w.runs() {
        match g {
            SpGen::A12 => form.a_exp += e,
            SpGen::B12 => form.b_exp += e,
            other => {
                return Err(Error::ForeignLetter {
                    letter: other.to_string(),
                    context: "a two-strand word",
                })
            }
        }
    }
    Ok(form)
}
