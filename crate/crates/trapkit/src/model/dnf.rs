//! Disjunctive normal forms and the double-DNF (Petri-net style) encoding.

use std::collections::BTreeSet;

use super::expr::Expr;

/// A literal: component position plus polarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Literal {
        Literal {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Literal {
        Literal {
            var,
            positive: false,
        }
    }

    pub fn holds(&self, x: &[bool]) -> bool {
        x[self.var] == self.positive
    }
}

/// A conjunctive clause. The empty clause is `true`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Clause {
    literals: Vec<Literal>,
}

impl Clause {
    /// Sorts literals and drops exact duplicates. Contradictory clauses
    /// (both polarities of one variable) are representable; `Dnf::new`
    /// removes them.
    pub fn new(mut literals: Vec<Literal>) -> Clause {
        literals.sort();
        literals.dedup();
        Clause { literals }
    }

    pub fn empty() -> Clause {
        Clause {
            literals: Vec::new(),
        }
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn is_contradictory(&self) -> bool {
        self.literals
            .windows(2)
            .any(|w| w[0].var == w[1].var && w[0].positive != w[1].positive)
    }

    pub fn eval(&self, x: &[bool]) -> bool {
        self.literals.iter().all(|l| l.holds(x))
    }

    pub fn to_expr(&self) -> Expr {
        Expr::conjunction(
            self.literals
                .iter()
                .map(|l| {
                    if l.positive {
                        Expr::Var(l.var)
                    } else {
                        Expr::not(Expr::Var(l.var))
                    }
                })
                .collect(),
        )
    }
}

/// A disjunction of conjunctive clauses. The empty list is `false`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Dnf {
    clauses: Vec<Clause>,
}

impl Dnf {
    /// Normalizes: contradictory clauses are dropped, duplicates removed,
    /// and any empty clause collapses the whole form to `true`.
    pub fn new(clauses: Vec<Clause>) -> Dnf {
        let mut kept: Vec<Clause> = Vec::with_capacity(clauses.len());
        for c in clauses {
            if c.is_contradictory() {
                continue;
            }
            if c.is_empty() {
                return Dnf::top();
            }
            if !kept.contains(&c) {
                kept.push(c);
            }
        }
        Dnf { clauses: kept }
    }

    /// The constant-true form: a single empty clause.
    pub fn top() -> Dnf {
        Dnf {
            clauses: vec![Clause::empty()],
        }
    }

    /// The constant-false form: no clauses.
    pub fn bottom() -> Dnf {
        Dnf {
            clauses: Vec::new(),
        }
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn eval(&self, x: &[bool]) -> bool {
        self.clauses.iter().any(|c| c.eval(x))
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.clauses
            .iter()
            .flat_map(|c| c.literals().iter().map(|l| l.var))
            .collect()
    }

    pub fn max_var(&self) -> Option<usize> {
        self.clauses
            .iter()
            .flat_map(|c| c.literals().iter().map(|l| l.var))
            .max()
    }

    pub fn to_expr(&self) -> Expr {
        Expr::disjunction(self.clauses.iter().map(Clause::to_expr).collect())
    }
}

/// Double-DNF encoding: `off` covers exactly the inputs mapped to 0 and
/// `on` exactly those mapped to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleDnf {
    pub off: Dnf,
    pub on: Dnf,
}

impl DoubleDnf {
    pub fn new(off: Dnf, on: Dnf) -> DoubleDnf {
        DoubleDnf { off, on }
    }

    pub fn support(&self) -> BTreeSet<usize> {
        let mut s = self.off.support();
        s.extend(self.on.support());
        s
    }

    pub fn max_var(&self) -> Option<usize> {
        self.off.max_var().max(self.on.max_var())
    }
}
