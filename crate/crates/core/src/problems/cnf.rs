use alloc::vec::Vec;
use core::fmt;

use super::ProblemError;
use crate::CapExceeded;

/// A literal over variable `var` (1-based), possibly negated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    var: usize,
    negated: bool,
}

impl Literal {
    pub const fn new(var: usize, negated: bool) -> Self {
        Literal { var, negated }
    }

    pub const fn pos(var: usize) -> Self {
        Literal::new(var, false)
    }

    pub const fn neg(var: usize) -> Self {
        Literal::new(var, true)
    }

    pub fn var(self) -> usize {
        self.var
    }

    pub fn is_negated(self) -> bool {
        self.negated
    }

    /// Signed DIMACS encoding (`-3` for ¬x3).
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64;
        if self.negated {
            -v
        } else {
            v
        }
    }

    /// `assignment[i]` is the value of variable `i + 1`.
    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var - 1] != self.negated
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "¬x{}", self.var)
        } else {
            write!(f, "x{}", self.var)
        }
    }
}

/// Conjunction of clauses over variables `1..=num_vars`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<Literal>>) -> Result<Self, ProblemError> {
        if num_vars == 0 {
            return Err(ProblemError::NoVariables);
        }
        for (ci, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(ProblemError::EmptyClause { clause: ci });
            }
            if let Some(lit) = clause.iter().find(|l| l.var == 0 || l.var > num_vars) {
                return Err(ProblemError::LiteralOutOfRange {
                    clause: ci,
                    var: lit.var,
                    num_vars,
                });
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    pub fn num_literals(&self) -> usize {
        self.clauses.iter().map(Vec::len).sum()
    }

    /// True iff every clause has exactly three literals (vacuously true
    /// for the empty conjunction).
    pub fn is_three_cnf(&self) -> bool {
        self.clauses.iter().all(|c| c.len() == 3)
    }

    /// Evaluates the formula under `assignment` (length `num_vars`).
    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| l.eval(assignment)))
    }
}

/// Exhaustive 2^n satisfiability check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SatOracle {
    pub max_vars: usize,
}

impl Default for SatOracle {
    fn default() -> Self {
        SatOracle { max_vars: 20 }
    }
}

impl SatOracle {
    /// Returns a satisfying assignment if one exists, trying assignments in
    /// increasing binary order (bit `i` is variable `i + 1`).
    pub fn find_assignment(&self, f: &CnfFormula) -> Result<Option<Vec<bool>>, CapExceeded> {
        let n = f.num_vars();
        if n > self.max_vars {
            return Err(CapExceeded {
                what: "sat oracle variables",
                needed: n as u128,
                cap: self.max_vars as u128,
            });
        }
        let mut assignment = alloc::vec![false; n];
        for mask in 0u64..(1u64 << n) {
            for (i, slot) in assignment.iter_mut().enumerate() {
                *slot = mask >> i & 1 == 1;
            }
            if f.evaluate(&assignment) {
                return Ok(Some(assignment));
            }
        }
        Ok(None)
    }

    pub fn decide(&self, f: &CnfFormula) -> Result<bool, CapExceeded> {
        let witness = self.find_assignment(f)?;
        if let Some(w) = &witness {
            debug_assert!(f.clauses().iter().all(|c| c.iter().any(|l| l.eval(w))));
        }
        Ok(witness.is_some())
    }
}

/// [`SatOracle::decide`] with the default variable cap.
pub fn sat_oracle(f: &CnfFormula) -> Result<bool, CapExceeded> {
    SatOracle::default().decide(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn contradiction_is_unsat() {
        let f = CnfFormula::new(1, vec![vec![Literal::pos(1)], vec![Literal::neg(1)]]).unwrap();
        assert_eq!(sat_oracle(&f), Ok(false));
    }

    #[test]
    fn single_positive_clause_is_sat() {
        let f = CnfFormula::new(
            3,
            vec![vec![Literal::pos(1), Literal::pos(2), Literal::pos(3)]],
        )
        .unwrap();
        assert_eq!(sat_oracle(&f), Ok(true));
        assert!(f.is_three_cnf());
    }

    #[test]
    fn empty_conjunction() {
        let f = CnfFormula::new(2, vec![]).unwrap();
        assert_eq!(sat_oracle(&f), Ok(true));
        assert!(f.is_three_cnf());
    }

    #[test]
    fn two_literal_clause_is_not_three_cnf() {
        let f = CnfFormula::new(2, vec![vec![Literal::pos(1), Literal::pos(2)]]).unwrap();
        assert!(!f.is_three_cnf());
    }

    #[test]
    fn rejects_bad_literals_and_empty_clauses() {
        assert_eq!(
            CnfFormula::new(2, vec![vec![Literal::pos(3)]]),
            Err(ProblemError::LiteralOutOfRange {
                clause: 0,
                var: 3,
                num_vars: 2
            })
        );
        assert_eq!(
            CnfFormula::new(2, vec![vec![]]),
            Err(ProblemError::EmptyClause { clause: 0 })
        );
        assert_eq!(CnfFormula::new(0, vec![]), Err(ProblemError::NoVariables));
    }

    #[test]
    fn refuses_above_cap() {
        let f = CnfFormula::new(5, vec![]).unwrap();
        let oracle = SatOracle { max_vars: 4 };
        assert!(oracle.decide(&f).is_err());
    }

    #[test]
    fn witness_satisfies_formula() {
        // (x1 ∨ x2) ∧ (¬x1) ∧ (¬x2 ∨ x3)
        let f = CnfFormula::new(
            3,
            vec![
                vec![Literal::pos(1), Literal::pos(2)],
                vec![Literal::neg(1)],
                vec![Literal::neg(2), Literal::pos(3)],
            ],
        )
        .unwrap();
        let w = SatOracle::default().find_assignment(&f).unwrap().unwrap();
        assert_eq!(w, vec![false, true, true]);
        assert!(f.evaluate(&w));
    }
}
