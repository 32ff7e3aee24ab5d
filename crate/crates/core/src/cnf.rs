//! 2-CNF formulas for MAX-2SAT, read from DIMACS CNF.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A literal over a 0-indexed variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Self { var, negated: false }
    }

    pub fn neg(var: usize) -> Self {
        Self { var, negated: true }
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var] != self.negated
    }

    pub fn negate(self) -> Self {
        Self { var: self.var, negated: !self.negated }
    }

    fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.negated {
            -v
        } else {
            v
        }
    }
}

/// A clause with exactly two literals on distinct variables.
pub type Clause = [Literal; 2];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Formula {
    num_vars: usize,
    clauses: Vec<Clause>,
}

impl Formula {
    pub fn new(num_vars: usize, clauses: Vec<Clause>) -> Result<Self> {
        for (i, [a, b]) in clauses.iter().enumerate() {
            if a.var >= num_vars || b.var >= num_vars {
                return Err(Error::MalformedClause(format!("clause {} uses an undeclared variable", i + 1)));
            }
            if a.var == b.var {
                return Err(Error::MalformedClause(format!(
                    "clause {} repeats variable x{}",
                    i + 1,
                    a.var + 1
                )));
            }
        }
        Ok(Self { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn satisfied_count(&self, assignment: &[bool]) -> usize {
        self.clauses.iter().filter(|[a, b]| a.eval(assignment) || b.eval(assignment)).count()
    }

    /// The formula with every literal negated.
    pub fn negated(&self) -> Self {
        let clauses = self.clauses.iter().map(|[a, b]| [a.negate(), b.negate()]).collect();
        Self { num_vars: self.num_vars, clauses }
    }

    /// Parses DIMACS CNF. Every clause must have exactly two literals.
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut pending: Vec<i64> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if line.starts_with('p') {
                let parts: Vec<&str> = line.split_whitespace().collect();
                match parts.as_slice() {
                    ["p", "cnf", v, c] => {
                        let v = v.parse().map_err(|_| Error::Parse(format!("bad header: {line}")))?;
                        let c = c.parse().map_err(|_| Error::Parse(format!("bad header: {line}")))?;
                        header = Some((v, c));
                    }
                    _ => return Err(Error::Parse(format!("bad header: {line}"))),
                }
                continue;
            }
            let (num_vars, _) = header.ok_or_else(|| Error::Parse("clause before header".into()))?;
            for tok in line.split_whitespace() {
                let lit: i64 = tok.parse().map_err(|_| Error::Parse(format!("bad literal {tok:?}")))?;
                if lit != 0 {
                    if lit.unsigned_abs() as usize > num_vars {
                        return Err(Error::MalformedClause(format!("literal {lit} exceeds {num_vars} variables")));
                    }
                    pending.push(lit);
                    continue;
                }
                let clause = std::mem::take(&mut pending);
                let [a, b] = clause.as_slice() else {
                    return Err(Error::MalformedClause(format!(
                        "clause {} has {} literals, expected 2",
                        clauses.len() + 1,
                        clause.len()
                    )));
                };
                let lit = |x: i64| Literal { var: x.unsigned_abs() as usize - 1, negated: x < 0 };
                clauses.push([lit(*a), lit(*b)]);
            }
        }
        if !pending.is_empty() {
            return Err(Error::MalformedClause("last clause is not terminated by 0".into()));
        }
        let (num_vars, num_clauses) = header.ok_or_else(|| Error::Parse("missing `p cnf` header".into()))?;
        if clauses.len() != num_clauses {
            return Err(Error::Parse(format!(
                "header declares {num_clauses} clauses, found {}",
                clauses.len()
            )));
        }
        Self::new(num_vars, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for [a, b] in &self.clauses {
            writeln!(s, "{} {} 0", a.to_dimacs(), b.to_dimacs()).unwrap();
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        let f = Formula::parse_dimacs("c example\np cnf 3 3\n1 2 0\n1 -3 0\n-2 -3 0\n").unwrap();
        assert_eq!(f.num_vars(), 3);
        assert_eq!(f.clauses()[1], [Literal::pos(0), Literal::neg(2)]);
        assert_eq!(Formula::parse_dimacs(&f.to_dimacs()).unwrap(), f);
    }

    #[test]
    fn clauses_may_span_lines() {
        let f = Formula::parse_dimacs("p cnf 2 1\n1\n-2 0\n").unwrap();
        assert_eq!(f.clauses(), &[[Literal::pos(0), Literal::neg(1)]]);
    }

    #[test]
    fn rejects_malformed_clauses() {
        assert!(matches!(Formula::parse_dimacs("p cnf 3 1\n1 2 3 0\n"), Err(Error::MalformedClause(_))));
        assert!(matches!(Formula::parse_dimacs("p cnf 2 1\n1 -1 0\n"), Err(Error::MalformedClause(_))));
        assert!(matches!(Formula::parse_dimacs("p cnf 2 1\n1 5 0\n"), Err(Error::MalformedClause(_))));
        assert!(matches!(Formula::parse_dimacs("1 2 0\n"), Err(Error::Parse(_))));
        assert!(matches!(Formula::parse_dimacs("p cnf 2 2\n1 2 0\n"), Err(Error::Parse(_))));
    }
}
