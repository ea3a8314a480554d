//! A small exact feasibility checker for linear constraint systems over 0/1 variables.

use std::fmt;

use crate::error::{CrgError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Comparator {
    Le,
    Ge,
    Eq,
}

impl Comparator {
    fn holds(self, lhs: i128, rhs: i128) -> bool {
        match self {
            Comparator::Le => lhs <= rhs,
            Comparator::Ge => lhs >= rhs,
            Comparator::Eq => lhs == rhs,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Comparator::Le => "<=",
            Comparator::Ge => ">=",
            Comparator::Eq => "=",
        }
    }
}

/// `Σ coefficient·var  (<= | >= | =)  rhs`. Strict comparisons are written as
/// `<= rhs - 1` / `>= rhs + 1` by the caller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub terms: Vec<(usize, i64)>,
    pub comparator: Comparator,
    pub rhs: i64,
}

impl LinearConstraint {
    pub fn new(terms: Vec<(usize, i64)>, comparator: Comparator, rhs: i64) -> Self {
        LinearConstraint { terms, comparator, rhs }
    }

    pub fn le(terms: Vec<(usize, i64)>, rhs: i64) -> Self {
        Self::new(terms, Comparator::Le, rhs)
    }

    pub fn ge(terms: Vec<(usize, i64)>, rhs: i64) -> Self {
        Self::new(terms, Comparator::Ge, rhs)
    }

    pub fn eq(terms: Vec<(usize, i64)>, rhs: i64) -> Self {
        Self::new(terms, Comparator::Eq, rhs)
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        let lhs: i128 = self
            .terms
            .iter()
            .filter(|(v, _)| assignment[*v])
            .map(|&(_, a)| a as i128)
            .sum();
        self.comparator.holds(lhs, self.rhs as i128)
    }
}

/// What a variable stands for in a compiled coalition game program.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarKind {
    /// `x_g`: goal `g` is achieved (first coalition).
    Goal,
    /// `y_i`: agent `i` participates (first coalition).
    Agent,
    /// `X_g`: goal achieved by the second coalition of a pair.
    SecondGoal,
    /// `Y_i`: agent participates in the second coalition of a pair.
    SecondAgent,
    /// `z_g = x_g ∨ X_g`.
    UnionGoal,
    /// A variable with no game meaning.
    Free,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VarLabel {
    pub kind: VarKind,
    pub index: usize,
}

/// A set of 0/1 variables, a partial fixing, and linear constraints over them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntegerProgram {
    pub labels: Vec<VarLabel>,
    pub fixed: Vec<Option<bool>>,
    pub constraints: Vec<LinearConstraint>,
}

impl IntegerProgram {
    pub fn new() -> Self {
        Self::default()
    }

    /// `n` unlabeled, unfixed variables.
    pub fn with_free_vars(n: usize) -> Self {
        IntegerProgram {
            labels: (0..n).map(|index| VarLabel { kind: VarKind::Free, index }).collect(),
            fixed: vec![None; n],
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.labels.len()
    }

    pub fn add_var(&mut self, kind: VarKind, index: usize) -> usize {
        self.labels.push(VarLabel { kind, index });
        self.fixed.push(None);
        self.labels.len() - 1
    }

    /// Pins a variable. Re-fixing to the same value is a no-op; a conflicting value is an error.
    pub fn fix(&mut self, var: usize, value: bool) -> Result<()> {
        match self.fixed.get(var) {
            None => Err(CrgError::input(format!("cannot fix undeclared variable {var}"))),
            Some(Some(v)) if *v != value => Err(CrgError::input(format!(
                "variable {var} is already fixed to {}",
                *v as u8
            ))),
            Some(_) => {
                self.fixed[var] = Some(value);
                Ok(())
            }
        }
    }

    pub fn add_constraint(&mut self, constraint: LinearConstraint) -> Result<()> {
        if let Some(&(v, _)) = constraint.terms.iter().find(|(v, _)| *v >= self.num_vars()) {
            return Err(CrgError::input(format!("constraint references undeclared variable {v}")));
        }
        self.constraints.push(constraint);
        Ok(())
    }

    pub fn num_unfixed(&self) -> usize {
        self.fixed.iter().filter(|f| f.is_none()).count()
    }

    pub fn validate(&self) -> Result<()> {
        if self.fixed.len() != self.labels.len() {
            return Err(CrgError::input(format!(
                "program declares {} labels but {} fixing slots",
                self.labels.len(),
                self.fixed.len()
            )));
        }
        for (i, c) in self.constraints.iter().enumerate() {
            if let Some(&(v, _)) = c.terms.iter().find(|(v, _)| *v >= self.num_vars()) {
                return Err(CrgError::input(format!(
                    "constraint {i} references undeclared variable {v}"
                )));
            }
        }
        Ok(())
    }

    /// Whether a complete assignment honors the fixing and every constraint.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars()
            && self
                .fixed
                .iter()
                .zip(assignment)
                .all(|(f, a)| f.is_none_or(|v| v == *a))
            && self.constraints.iter().all(|c| c.is_satisfied_by(assignment))
    }

    /// A satisfying assignment, or `None` when the program is infeasible.
    ///
    /// Depth-first search over the unfixed variables in declaration order,
    /// trying 1 before 0. After every assignment each touched constraint is
    /// checked against the range its unassigned terms can still reach, and
    /// the branch is cut as soon as some constraint is out of reach.
    pub fn feasible(&self) -> Result<Option<Vec<bool>>> {
        self.validate()?;
        let mut search = Search::new(self);
        if !search.all_viable() {
            return Ok(None);
        }
        let order: Vec<usize> = (0..self.num_vars()).filter(|&v| self.fixed[v].is_none()).collect();
        if search.descend(&order) {
            let assignment: Vec<bool> = search.value.iter().map(|v| v.unwrap_or(false)).collect();
            debug_assert!(self.is_satisfied_by(&assignment));
            Ok(Some(assignment))
        } else {
            Ok(None)
        }
    }
}

struct Row {
    comparator: Comparator,
    rhs: i128,
    /// Sum over assigned variables set to 1.
    assigned: i128,
    /// Sum of negative coefficients over unassigned variables.
    low: i128,
    /// Sum of positive coefficients over unassigned variables.
    high: i128,
}

impl Row {
    fn viable(&self) -> bool {
        let (lo, hi) = (self.assigned + self.low, self.assigned + self.high);
        match self.comparator {
            Comparator::Le => lo <= self.rhs,
            Comparator::Ge => hi >= self.rhs,
            Comparator::Eq => lo <= self.rhs && self.rhs <= hi,
        }
    }
}

struct Search {
    rows: Vec<Row>,
    /// Per variable: (row, merged coefficient).
    occurrences: Vec<Vec<(usize, i128)>>,
    value: Vec<Option<bool>>,
}

impl Search {
    fn new(ip: &IntegerProgram) -> Search {
        let n = ip.num_vars();
        let mut occurrences: Vec<Vec<(usize, i128)>> = vec![Vec::new(); n];
        let mut rows = Vec::with_capacity(ip.constraints.len());
        for (ci, c) in ip.constraints.iter().enumerate() {
            let mut merged: Vec<(usize, i128)> = Vec::new();
            let mut sorted = c.terms.clone();
            sorted.sort_unstable_by_key(|t| t.0);
            for (v, a) in sorted {
                match merged.last_mut() {
                    Some((last, acc)) if *last == v => *acc += a as i128,
                    _ => merged.push((v, a as i128)),
                }
            }
            let mut row = Row {
                comparator: c.comparator,
                rhs: c.rhs as i128,
                assigned: 0,
                low: 0,
                high: 0,
            };
            for (v, a) in merged {
                match ip.fixed[v] {
                    Some(true) => row.assigned += a,
                    Some(false) => {}
                    None => {
                        if a < 0 {
                            row.low += a;
                        } else {
                            row.high += a;
                        }
                        occurrences[v].push((ci, a));
                    }
                }
            }
            rows.push(row);
        }
        Search {
            rows,
            occurrences,
            value: ip.fixed.clone(),
        }
    }

    fn all_viable(&self) -> bool {
        self.rows.iter().all(Row::viable)
    }

    fn assign(&mut self, var: usize, value: bool) -> bool {
        self.value[var] = Some(value);
        let mut ok = true;
        for &(ci, a) in &self.occurrences[var] {
            let row = &mut self.rows[ci];
            if a < 0 {
                row.low -= a;
            } else {
                row.high -= a;
            }
            if value {
                row.assigned += a;
            }
            ok &= row.viable();
        }
        ok
    }

    fn unassign(&mut self, var: usize, value: bool) {
        self.value[var] = None;
        for &(ci, a) in &self.occurrences[var] {
            let row = &mut self.rows[ci];
            if a < 0 {
                row.low += a;
            } else {
                row.high += a;
            }
            if value {
                row.assigned -= a;
            }
        }
    }

    fn descend(&mut self, order: &[usize]) -> bool {
        let Some((&var, rest)) = order.split_first() else {
            return true;
        };
        for value in [true, false] {
            if self.assign(var, value) && self.descend(rest) {
                return true;
            }
            self.unassign(var, value);
        }
        false
    }
}

impl fmt::Display for VarLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.kind {
            VarKind::Goal => "x",
            VarKind::Agent => "y",
            VarKind::SecondGoal => "X",
            VarKind::SecondAgent => "Y",
            VarKind::UnionGoal => "z",
            VarKind::Free => "v",
        };
        write!(f, "{prefix}{}", self.index + 1)
    }
}

/// LP-style dump, one constraint per line. For inspection only.
impl fmt::Display for IntegerProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, fixed) in self.fixed.iter().enumerate() {
            if let Some(value) = fixed {
                writeln!(f, "fix {} = {}", self.labels[v], *value as u8)?;
            }
        }
        for c in &self.constraints {
            if c.terms.is_empty() {
                write!(f, "0")?;
            }
            for (i, &(v, a)) in c.terms.iter().enumerate() {
                let label = self.labels[v];
                match (i, a < 0) {
                    (0, false) => write!(f, "{a}*{label}")?,
                    (0, true) => write!(f, "-{}*{label}", a.unsigned_abs())?,
                    (_, false) => write!(f, " + {a}*{label}")?,
                    (_, true) => write!(f, " - {}*{label}", a.unsigned_abs())?,
                }
            }
            writeln!(f, " {} {}", c.comparator.symbol(), c.rhs)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_program_is_feasible() {
        let ip = IntegerProgram::with_free_vars(3);
        assert_eq!(ip.feasible().unwrap().map(|a| a.len()), Some(3));
    }

    #[test]
    fn unreachable_sum_is_infeasible() {
        let mut ip = IntegerProgram::with_free_vars(2);
        ip.add_constraint(LinearConstraint::ge(vec![(0, 1), (1, 1)], 3)).unwrap();
        assert_eq!(ip.feasible().unwrap(), None);
    }

    #[test]
    fn tries_one_before_zero() {
        let ip = IntegerProgram::with_free_vars(2);
        assert_eq!(ip.feasible().unwrap(), Some(vec![true, true]));
    }

    #[test]
    fn respects_fixing_and_equalities() {
        let mut ip = IntegerProgram::with_free_vars(3);
        ip.fix(0, true).unwrap();
        ip.add_constraint(LinearConstraint::eq(vec![(0, 1), (1, 1), (2, 1)], 1)).unwrap();
        assert_eq!(ip.feasible().unwrap(), Some(vec![true, false, false]));
        ip.fix(1, true).unwrap();
        assert_eq!(ip.feasible().unwrap(), None);
    }

    #[test]
    fn duplicate_terms_are_merged() {
        let mut ip = IntegerProgram::with_free_vars(1);
        ip.add_constraint(LinearConstraint::ge(vec![(0, 1), (0, 1)], 2)).unwrap();
        assert_eq!(ip.feasible().unwrap(), Some(vec![true]));
        ip.add_constraint(LinearConstraint::le(vec![(0, 3), (0, -2)], 0)).unwrap();
        assert_eq!(ip.feasible().unwrap(), None);
    }

    #[test]
    fn negative_coefficients() {
        let mut ip = IntegerProgram::with_free_vars(2);
        // x0 - x1 >= 1 forces x0 = 1, x1 = 0
        ip.add_constraint(LinearConstraint::ge(vec![(0, 1), (1, -1)], 1)).unwrap();
        assert_eq!(ip.feasible().unwrap(), Some(vec![true, false]));
    }

    #[test]
    fn malformed_programs_are_rejected() {
        let mut ip = IntegerProgram::with_free_vars(2);
        assert!(ip.add_constraint(LinearConstraint::le(vec![(2, 1)], 0)).is_err());
        ip.constraints.push(LinearConstraint::le(vec![(5, 1)], 0));
        assert!(ip.feasible().is_err());

        let mut ip = IntegerProgram::with_free_vars(2);
        ip.fixed.pop();
        assert!(ip.feasible().is_err());

        let mut ip = IntegerProgram::with_free_vars(1);
        ip.fix(0, false).unwrap();
        ip.fix(0, false).unwrap();
        assert!(ip.fix(0, true).is_err());
        assert!(ip.fix(4, true).is_err());
    }

    #[test]
    fn display_is_lp_like() {
        let mut ip = IntegerProgram::new();
        let x = ip.add_var(VarKind::Goal, 0);
        let y = ip.add_var(VarKind::Agent, 0);
        ip.fix(y, true).unwrap();
        ip.add_constraint(LinearConstraint::ge(vec![(x, 1), (y, -1)], 0)).unwrap();
        assert_eq!(ip.to_string(), "fix y1 = 1\n1*x1 - 1*y1 >= 0\n");
    }
}
