//! Machine-checked consistency of the six-letter presentation.
//!
//! Four groups of checks, all decided by the normal form rather than by
//! comparing strings:
//!
//! * `rs-relators`: the 30 rewritten relators become trivial after table
//!   substitution;
//! * `presentation`: the 8 defining relators are trivial;
//! * `conjugation`: the 24 stated images `x^g` agree with rewriting
//!   `g^-1 x g`;
//! * `table`: each of the 19 nontrivial table rows agrees with its ambient
//!   word, both through the rewriting pipeline and under the `B3` oracles.

use std::fmt;

use crate::normal_form::{center_split, equal_sp3};
use crate::oracle::sg3_necessary_trivial;
use crate::schreier::{relator_rewrites, s_generator_word};
use crate::sp3::{
    sg3_transversal, sp3_to_sg3, theorem1_relators, ConjugationTable, ExpressionTable, SpGen,
    SpWord, THEOREM1_RELATIONS,
};
use crate::word::{BraidWord, Generator};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckGroup {
    Relators,
    Presentation,
    Conjugation,
    Table,
}

impl CheckGroup {
    pub const ALL: [CheckGroup; 4] = [
        CheckGroup::Relators,
        CheckGroup::Presentation,
        CheckGroup::Conjugation,
        CheckGroup::Table,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckGroup::Relators => "rs-relators",
            CheckGroup::Presentation => "presentation",
            CheckGroup::Conjugation => "conjugation",
            CheckGroup::Table => "table",
        }
    }

    pub fn expected_count(self) -> usize {
        match self {
            CheckGroup::Relators => 30,
            CheckGroup::Presentation => 8,
            CheckGroup::Conjugation => 24,
            CheckGroup::Table => 19,
        }
    }
}

impl fmt::Display for CheckGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub group: CheckGroup,
    pub label: String,
    pub passed: bool,
    /// Normal form or invariant that refutes the claim.
    pub witness: Option<String>,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} {}", self.group, self.label)?;
        if let Some(w) = &self.witness {
            write!(f, " [witness: {w}]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn total(&self) -> usize {
        self.checks.len()
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// `(passed, total)` for one group.
    pub fn group_counts(&self, group: CheckGroup) -> (usize, usize) {
        let in_group = self.checks.iter().filter(|c| c.group == group);
        let total = in_group.clone().count();
        (in_group.filter(|c| c.passed).count(), total)
    }
}

pub fn verify_presentation() -> Result<Report> {
    verify_with(ExpressionTable::standard(), &CheckGroup::ALL)
}

/// Runs the selected groups against a candidate expression table.
pub fn verify_with(table: &ExpressionTable, groups: &[CheckGroup]) -> Result<Report> {
    let mut report = Report::default();
    for &group in &CheckGroup::ALL {
        if !groups.contains(&group) {
            continue;
        }
        match group {
            CheckGroup::Relators => check_relators(table, &mut report)?,
            CheckGroup::Presentation => check_presentation(&mut report),
            CheckGroup::Conjugation => check_conjugation(table, &mut report)?,
            CheckGroup::Table => check_table(table, &mut report)?,
        }
    }
    Ok(report)
}

fn trivial_check(group: CheckGroup, label: String, w: &SpWord) -> Check {
    let form = center_split(w);
    let passed = form.is_identity();
    Check {
        group,
        label,
        passed,
        witness: (!passed).then(|| form.to_string()),
    }
}

fn check_relators(table: &ExpressionTable, report: &mut Report) -> Result<()> {
    for rr in relator_rewrites()? {
        let w = table.substitute(&rr.word)?;
        let label = format!("{} = {}", rr.label(), rr.word);
        report
            .checks
            .push(trivial_check(CheckGroup::Relators, label, &w));
    }
    Ok(())
}

fn check_presentation(report: &mut Report) {
    for ((lhs, rhs), r) in THEOREM1_RELATIONS.iter().zip(theorem1_relators()) {
        let label = format!("{lhs} = {rhs}");
        report
            .checks
            .push(trivial_check(CheckGroup::Presentation, label, &r));
    }
}

fn check_conjugation(table: &ExpressionTable, report: &mut Report) -> Result<()> {
    let rules = ConjugationTable::standard();
    let gens = [
        Generator::sigma(1),
        Generator::sigma(2),
        Generator::tau(1),
        Generator::tau(2),
    ];
    for g in gens {
        let gw = BraidWord::from_runs(3, [(g, 1)])?;
        for x in SpGen::ALL {
            let claimed = rules.image(x, g, 1)?;
            let conj = gw
                .invert()
                .concat(&sp3_to_sg3(&SpWord::generator(x, 1)))?
                .concat(&gw)?;
            let actual = table.rewrite(&conj)?;
            let diff = actual.concat(&claimed.inverse());
            let label = format!("{x}^{g} = {claimed}");
            report
                .checks
                .push(trivial_check(CheckGroup::Conjugation, label, &diff));
        }
    }
    Ok(())
}

fn check_table(table: &ExpressionTable, report: &mut Report) -> Result<()> {
    let t = sg3_transversal();
    for (g, row) in table.nontrivial_rows() {
        let ambient = s_generator_word(g, t)?;
        let embedded = sp3_to_sg3(row);
        // Agreement inside the rewriting pipeline.
        let through_pipeline = equal_sp3(&table.rewrite(&embedded)?, &table.rewrite(&ambient)?);
        // Agreement under the B3 quotients, which never consult the table.
        let quotient_ok = sg3_necessary_trivial(&embedded.concat(&ambient.invert())?)?;
        let witness = match (through_pipeline, quotient_ok) {
            (true, true) => None,
            (false, _) => Some(format!(
                "pipeline: {}",
                center_split(&table.rewrite(&embedded)?.concat(&row.inverse()))
            )),
            (true, false) => Some("B3 quotient image differs".to_string()),
        };
        report.checks.push(Check {
            group: CheckGroup::Table,
            label: format!("{g} = {row}"),
            passed: witness.is_none(),
            witness,
        });
    }
    Ok(())
}
