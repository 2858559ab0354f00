//! Expression trees for local functions given as propositional formulas.

use std::collections::BTreeSet;

/// A propositional formula over components of a network.
///
/// Variables are 0-based positions; all textual formats are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Const(bool),
    Var(usize),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

impl Expr {
    #[allow(clippy::should_implement_trait)]
    pub fn not(e: Expr) -> Expr {
        Expr::Not(Box::new(e))
    }

    pub fn and(a: Expr, b: Expr) -> Expr {
        Expr::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Expr, b: Expr) -> Expr {
        Expr::Or(Box::new(a), Box::new(b))
    }

    /// Left-associative conjunction of `items`; empty input is `true`.
    pub fn conjunction(items: Vec<Expr>) -> Expr {
        items
            .into_iter()
            .reduce(Expr::and)
            .unwrap_or(Expr::Const(true))
    }

    /// Left-associative disjunction of `items`; empty input is `false`.
    pub fn disjunction(items: Vec<Expr>) -> Expr {
        items
            .into_iter()
            .reduce(Expr::or)
            .unwrap_or(Expr::Const(false))
    }

    pub fn eval(&self, x: &[bool]) -> bool {
        match self {
            Expr::Const(b) => *b,
            Expr::Var(i) => x[*i],
            Expr::Not(e) => !e.eval(x),
            Expr::And(a, b) => a.eval(x) && b.eval(x),
            Expr::Or(a, b) => a.eval(x) || b.eval(x),
        }
    }

    pub fn support(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        self.support_into(&mut out);
        out
    }

    pub fn support_into(&self, out: &mut BTreeSet<usize>) {
        match self {
            Expr::Const(_) => {}
            Expr::Var(i) => {
                out.insert(*i);
            }
            Expr::Not(e) => e.support_into(out),
            Expr::And(a, b) | Expr::Or(a, b) => {
                a.support_into(out);
                b.support_into(out);
            }
        }
    }

    pub fn max_var(&self) -> Option<usize> {
        match self {
            Expr::Const(_) => None,
            Expr::Var(i) => Some(*i),
            Expr::Not(e) => e.max_var(),
            Expr::And(a, b) | Expr::Or(a, b) => a.max_var().max(b.max_var()),
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Expr::Const(_) | Expr::Var(_) => 1,
            Expr::Not(e) => 1 + e.size(),
            Expr::And(a, b) | Expr::Or(a, b) => 1 + a.size() + b.size(),
        }
    }

    /// Smallest variable index occurring in the tree, if any.
    pub(crate) fn min_var(&self) -> Option<usize> {
        match self {
            Expr::Const(_) => None,
            Expr::Var(i) => Some(*i),
            Expr::Not(e) => e.min_var(),
            Expr::And(a, b) | Expr::Or(a, b) => match (a.min_var(), b.min_var()) {
                (Some(x), Some(y)) => Some(x.min(y)),
                (x, y) => x.or(y),
            },
        }
    }

    /// Substitute every variable `assign` decides and fold constants.
    ///
    /// `And`/`Or` short-circuit, so a decided left branch can prune the whole
    /// right subtree.
    pub(crate) fn restrict(&self, assign: &dyn Fn(usize) -> Option<bool>) -> Expr {
        match self {
            Expr::Const(b) => Expr::Const(*b),
            Expr::Var(i) => match assign(*i) {
                Some(v) => Expr::Const(v),
                None => Expr::Var(*i),
            },
            Expr::Not(e) => match e.restrict(assign) {
                Expr::Const(b) => Expr::Const(!b),
                e2 => Expr::not(e2),
            },
            Expr::And(a, b) => {
                let a2 = a.restrict(assign);
                if a2 == Expr::Const(false) {
                    return Expr::Const(false);
                }
                let b2 = b.restrict(assign);
                match (a2, b2) {
                    (_, Expr::Const(false)) => Expr::Const(false),
                    (Expr::Const(true), e2) => e2,
                    (e2, Expr::Const(true)) => e2,
                    (a2, b2) => Expr::and(a2, b2),
                }
            }
            Expr::Or(a, b) => {
                let a2 = a.restrict(assign);
                if a2 == Expr::Const(true) {
                    return Expr::Const(true);
                }
                let b2 = b.restrict(assign);
                match (a2, b2) {
                    (_, Expr::Const(true)) => Expr::Const(true),
                    (Expr::Const(false), e2) => e2,
                    (e2, Expr::Const(false)) => e2,
                    (a2, b2) => Expr::or(a2, b2),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example1() -> Expr {
        // x1 & !(x2 & !x3)
        Expr::and(
            Expr::Var(0),
            Expr::not(Expr::and(Expr::Var(1), Expr::not(Expr::Var(2)))),
        )
    }

    #[test]
    fn eval_matches_truth_table() {
        let e = example1();
        let expected = [false, false, false, false, true, true, false, true];
        for m in 0..8u32 {
            let x = [(m >> 2) & 1 == 1, (m >> 1) & 1 == 1, m & 1 == 1];
            assert_eq!(e.eval(&x), expected[m as usize], "row {m}");
        }
    }

    #[test]
    fn restrict_folds_constants() {
        let e = example1();
        let r = e.restrict(&|i| (i == 0).then_some(false));
        assert_eq!(r, Expr::Const(false));
        let r = e.restrict(&|i| (i == 0).then_some(true));
        assert_eq!(r.support(), BTreeSet::from([1, 2]));
    }

    #[test]
    fn support_and_min_var() {
        let e = example1();
        assert_eq!(e.support(), BTreeSet::from([0, 1, 2]));
        assert_eq!(e.min_var(), Some(0));
        assert_eq!(Expr::Const(true).min_var(), None);
    }
}
