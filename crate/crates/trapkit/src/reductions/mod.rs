//! Constructive generators for the classic hardness reductions, used as
//! correctness-test instance factories and scalability drivers.
//!
//! Each generator packages a network together with the hypercube or
//! configuration the reduction targets and the Boolean question the verdict
//! must match; `brute_taut` / `brute_qbf` provide the matching ground truth
//! by enumeration.

mod sample;

pub use sample::{sample_dnf, sample_network, sample_qbf, sample_taut_formula};

use std::fmt;

use crate::error::{Error, Result};
use crate::model::{
    parse_clause_list, parse_expr_indexed, write_clause_list, write_expr, BooleanNetwork, Clause,
    Configuration, Dnf, Expr, Hypercube, LocalFunction, Orientation, Repr, UnateOrdering,
};

/// Exhaustive evaluation stops here.
pub const MAX_BRUTE_VARS: usize = 20;

/// A `∀ y_[1,n1] ∃ y_[n1+1,n2] φ(y)` instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QbfInstance {
    /// `n1`: number of leading universally quantified variables.
    pub universal: usize,
    /// `n2`: total variable count.
    pub total: usize,
    /// The matrix, as a formula or DNF local function.
    pub matrix: LocalFunction,
}

impl QbfInstance {
    pub fn new(universal: usize, total: usize, matrix: LocalFunction) -> Result<QbfInstance> {
        if universal > total {
            return Err(Error::InvalidInstance {
                message: format!("{universal} universal variables exceed the total of {total}"),
            });
        }
        if !matches!(matrix.repr, Repr::Formula(_) | Repr::Dnf(_)) {
            return Err(Error::InvalidInstance {
                message: "the matrix must be a formula or a DNF".into(),
            });
        }
        if let Some(&max) = matrix.repr.support().iter().max() {
            if max >= total {
                return Err(Error::InvalidInstance {
                    message: format!(
                        "the matrix mentions y{} but only {total} variables are quantified",
                        max + 1
                    ),
                });
            }
        }
        Ok(QbfInstance {
            universal,
            total,
            matrix,
        })
    }

    fn matrix_expr(&self) -> Expr {
        match &self.matrix.repr {
            Repr::Formula(e) => e.clone(),
            Repr::Dnf(d) => d.to_expr(),
            _ => unreachable!("constructor restricts the variants"),
        }
    }
}

/// Which decision problem an instance exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Problem {
    Trapspace,
    Mintrap,
    InMintrap,
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::Trapspace => "TRAPSPACE",
            Problem::Mintrap => "MINTRAP",
            Problem::InMintrap => "IN-MINTRAP",
        })
    }
}

/// The formula an instance was generated from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceSource {
    Tautology { formula: Expr, vars: usize },
    Pi2(QbfInstance),
    DnfTautology { dnf: Dnf, vars: usize },
}

impl fmt::Display for InstanceSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let y = |i: usize| format!("y{}", i + 1);
        match self {
            InstanceSource::Tautology { formula, vars } => {
                write!(f, "forall y1..y{vars}: {}", write_expr(formula, &y))
            }
            InstanceSource::Pi2(q) => write!(
                f,
                "forall y1..y{} exists y{}..y{}: {}",
                q.universal,
                q.universal + 1,
                q.total,
                write_expr(&q.matrix_expr(), &y)
            ),
            InstanceSource::DnfTautology { dnf, vars } => {
                write!(f, "forall y1..y{vars}: {}", write_clause_list(dnf))
            }
        }
    }
}

/// A generated network plus the object the reduction's contract speaks
/// about.
#[derive(Debug, Clone)]
pub struct ReductionInstance {
    pub network: BooleanNetwork,
    pub target_hypercube: Hypercube,
    /// Present for the minimality reductions, which also target a
    /// configuration (membership form of the same contract).
    pub target_configuration: Option<Configuration>,
    pub problem: Problem,
    pub source: InstanceSource,
}

fn var(i: usize) -> Expr {
    Expr::Var(i)
}

fn not_var(i: usize) -> Expr {
    Expr::not(Expr::Var(i))
}

/// `(inner ∧ ¬x_supp) ∨ x_over` — the suppress/override wiring every
/// reduction shares.
fn gated(inner: Expr, suppressor: usize, overrider: usize) -> Expr {
    Expr::or(Expr::and(inner, not_var(suppressor)), var(overrider))
}

/// TAUTOLOGY → TRAPSPACE. Network of dimension `vars + 1` with negation
/// components feeding `φ`; the target hypercube is `*^vars 1`, closed iff
/// `φ` is a tautology.
pub fn gen_tautology_trapspace(formula: Expr, vars: usize) -> Result<ReductionInstance> {
    if vars == 0 {
        return Err(Error::InvalidInstance {
            message: "the tautology reduction needs at least one variable".into(),
        });
    }
    let mut locals: Vec<LocalFunction> = (0..vars).map(|i| not_var(i).into()).collect();
    locals.push(formula.clone().into());
    let mut names: Vec<String> = (1..=vars).map(|i| format!("y{i}")).collect();
    names.push("phi".into());
    let network = BooleanNetwork::with_names(locals, names)?;
    let mut cube = Hypercube::full(vars + 1);
    cube.set(vars, Some(true));
    Ok(ReductionInstance {
        network,
        target_hypercube: cube,
        target_configuration: None,
        problem: Problem::Trapspace,
        source: InstanceSource::Tautology { formula, vars },
    })
}

/// Π₂SAT → MINTRAP / IN-MINTRAP. Dimension `n2 + 2`: overridable copies of
/// the universal block, negation components for the existential block, and
/// the two auxiliaries pumping on `φ`. `*^{n2+2}` is the unique trap space
/// iff the instance is true; `1^{n2+2}` is the membership target.
pub fn gen_pi2_mintrap(q: QbfInstance) -> Result<ReductionInstance> {
    let n2 = q.total;
    let dim = n2 + 2;
    let suppressor = n2;
    let overrider = n2 + 1;
    let mut locals: Vec<LocalFunction> = Vec::with_capacity(dim);
    for j in 0..q.universal {
        locals.push(gated(var(j), suppressor, overrider).into());
    }
    for j in q.universal..n2 {
        locals.push(not_var(j).into());
    }
    locals.push(Expr::and(q.matrix_expr(), not_var(overrider)).into());
    locals.push(Expr::and(var(suppressor), not_var(overrider)).into());
    let mut names: Vec<String> = (1..=n2).map(|i| format!("y{i}")).collect();
    names.push("a1".into());
    names.push("a2".into());
    let network = BooleanNetwork::with_names(locals, names)?;
    Ok(ReductionInstance {
        network,
        target_hypercube: Hypercube::full(dim),
        target_configuration: Some(Configuration::ones(dim)),
        problem: Problem::Mintrap,
        source: InstanceSource::Pi2(q),
    })
}

fn clause_orientations(
    clause: &Clause,
    dim: usize,
    suppressor: usize,
    overrider: usize,
) -> UnateOrdering {
    let mut ord = vec![Orientation::Inc; dim];
    for l in clause.literals() {
        ord[l.var] = if l.positive {
            Orientation::Inc
        } else {
            Orientation::Dec
        };
    }
    ord[suppressor] = Orientation::Dec;
    ord[overrider] = Orientation::Inc;
    UnateOrdering::new(ord)
}

/// DNF TAUTOLOGY → MINTRAP / IN-MINTRAP on a locally monotone network of
/// dimension `n + k + 2`: one gated copy per variable, one gated clause
/// detector per clause, and the two auxiliaries. Every component carries
/// its unate ordering. `k = 0` (the constant-false DNF) is permitted and
/// yields a trivially non-tautological instance.
pub fn gen_dnf_taut_monotone(dnf: Dnf, vars: usize) -> Result<ReductionInstance> {
    if let Some(max) = dnf.max_var() {
        if max >= vars {
            return Err(Error::InvalidInstance {
                message: format!("the DNF mentions y{} but vars = {vars}", max + 1),
            });
        }
    }
    let k = dnf.clauses().len();
    let dim = vars + k + 2;
    let suppressor = vars + k;
    let overrider = vars + k + 1;
    let mut locals: Vec<LocalFunction> = Vec::with_capacity(dim);
    for i in 0..vars {
        let mut ord = vec![Orientation::Inc; dim];
        ord[suppressor] = Orientation::Dec;
        locals.push(
            LocalFunction::from(gated(var(i), suppressor, overrider))
                .with_unate(UnateOrdering::new(ord)),
        );
    }
    for clause in dnf.clauses() {
        locals.push(
            LocalFunction::from(gated(clause.to_expr(), suppressor, overrider))
                .with_unate(clause_orientations(clause, dim, suppressor, overrider)),
        );
    }
    let any_clause = Expr::disjunction((0..k).map(|j| var(vars + j)).collect());
    let mut ord = vec![Orientation::Inc; dim];
    ord[overrider] = Orientation::Dec;
    locals.push(
        LocalFunction::from(Expr::and(any_clause, not_var(overrider)))
            .with_unate(UnateOrdering::new(ord)),
    );
    let mut ord = vec![Orientation::Inc; dim];
    ord[overrider] = Orientation::Dec;
    locals.push(
        LocalFunction::from(Expr::and(var(suppressor), not_var(overrider)))
            .with_unate(UnateOrdering::new(ord)),
    );
    let mut names: Vec<String> = (1..=vars).map(|i| format!("y{i}")).collect();
    names.extend((1..=k).map(|j| format!("c{j}")));
    names.push("a1".into());
    names.push("a2".into());
    let network = BooleanNetwork::with_names(locals, names)?;
    Ok(ReductionInstance {
        network,
        target_hypercube: Hypercube::full(dim),
        target_configuration: Some(Configuration::ones(dim)),
        problem: Problem::Mintrap,
        source: InstanceSource::DnfTautology { dnf, vars },
    })
}

/// 3DNF TAUTOLOGY → MINTRAP / IN-MINTRAP with every local function
/// depending on at most 5 components, so the instance converts to truth
/// tables, BDDs and double DNFs in polynomial time. Dimension
/// `n + 2k + 2`: the clause disjunction is replaced by a running-or chain
/// of `k` cells, and the two auxiliaries hang off the last cell.
pub fn gen_dnf_taut_chain(dnf: Dnf, vars: usize) -> Result<ReductionInstance> {
    if let Some(max) = dnf.max_var() {
        if max >= vars {
            return Err(Error::InvalidInstance {
                message: format!("the DNF mentions y{} but vars = {vars}", max + 1),
            });
        }
    }
    let k = dnf.clauses().len();
    if k == 0 {
        return Err(Error::InvalidInstance {
            message: "the chain construction needs at least one clause".into(),
        });
    }
    for (j, clause) in dnf.clauses().iter().enumerate() {
        if clause.len() > 3 {
            return Err(Error::ClauseWidth {
                clause: j + 1,
                width: clause.len(),
            });
        }
    }
    let dim = vars + 2 * k + 2;
    let suppressor = vars + 2 * k;
    let overrider = vars + 2 * k + 1;
    let mut locals: Vec<LocalFunction> = Vec::with_capacity(dim);
    for i in 0..vars {
        locals.push(gated(var(i), suppressor, overrider).into());
    }
    for clause in dnf.clauses() {
        locals.push(gated(clause.to_expr(), suppressor, overrider).into());
    }
    // running or over the clause detectors
    locals.push(var(vars).into());
    for j in 1..k {
        locals.push(Expr::or(var(vars + j), var(vars + k + j - 1)).into());
    }
    locals.push(Expr::and(var(vars + 2 * k - 1), not_var(overrider)).into());
    locals.push(Expr::and(var(suppressor), not_var(overrider)).into());
    let mut names: Vec<String> = (1..=vars).map(|i| format!("y{i}")).collect();
    names.extend((1..=k).map(|j| format!("c{j}")));
    names.extend((1..=k).map(|j| format!("d{j}")));
    names.push("a1".into());
    names.push("a2".into());
    let network = BooleanNetwork::with_names(locals, names)?;
    Ok(ReductionInstance {
        network,
        target_hypercube: Hypercube::full(dim),
        target_configuration: Some(Configuration::ones(dim)),
        problem: Problem::Mintrap,
        source: InstanceSource::DnfTautology { dnf, vars },
    })
}

fn check_brute_guard(vars: usize) -> Result<()> {
    if vars > MAX_BRUTE_VARS {
        return Err(Error::DimensionGuard {
            what: "brute force",
            n: vars,
            limit: MAX_BRUTE_VARS,
        });
    }
    Ok(())
}

/// `∀y φ(y)` by enumeration of all `2^vars` inputs.
pub fn brute_taut(formula: &Expr, vars: usize) -> Result<bool> {
    check_brute_guard(vars)?;
    let mut x = vec![false; vars];
    for m in 0u64..1 << vars {
        for (i, b) in x.iter_mut().enumerate() {
            *b = m >> i & 1 == 1;
        }
        if !formula.eval(&x) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// [`brute_taut`] for a DNF.
pub fn brute_taut_dnf(dnf: &Dnf, vars: usize) -> Result<bool> {
    brute_taut(&dnf.to_expr(), vars)
}

/// Truth of `∀ y_[1,n1] ∃ y_[n1+1,n2] φ(y)`: outer universal loop, inner
/// existential loop.
pub fn brute_qbf(q: &QbfInstance) -> Result<bool> {
    check_brute_guard(q.total)?;
    let matrix = q.matrix_expr();
    let inner_vars = q.total - q.universal;
    let mut x = vec![false; q.total];
    for outer in 0u64..1 << q.universal {
        for (i, b) in x.iter_mut().enumerate().take(q.universal) {
            *b = outer >> i & 1 == 1;
        }
        let mut satisfied = false;
        for inner in 0u64..1 << inner_vars {
            for i in 0..inner_vars {
                x[q.universal + i] = inner >> i & 1 == 1;
            }
            if matrix.eval(&x) {
                satisfied = true;
                break;
            }
        }
        if !satisfied {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Instance file formats
// ---------------------------------------------------------------------------

fn instance_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                None
            } else {
                Some((i + 1, line))
            }
        })
        .collect()
}

type InstanceLines<'a> = [(usize, &'a str)];

fn split_vars_header<'a>(
    lines: &'a InstanceLines<'a>,
) -> Result<(Option<usize>, &'a InstanceLines<'a>)> {
    if let Some((line_no, first)) = lines.first() {
        if let Some(rest) = first.strip_prefix("vars") {
            let n: usize = rest.trim().parse().map_err(|_| Error::Parse {
                line: *line_no,
                column: 1,
                message: format!("invalid vars header `{first}`"),
            })?;
            return Ok((Some(n), &lines[1..]));
        }
    }
    Ok((None, lines))
}

/// A formula instance: an optional `vars N` header, then one formula line
/// over indexed variables (`y1`, `x2`, ...).
pub fn parse_taut_instance(text: &str) -> Result<(Expr, usize)> {
    let lines = instance_lines(text);
    let (vars, rest) = split_vars_header(&lines)?;
    let [(line_no, formula_text)] = rest else {
        return Err(Error::InvalidInstance {
            message: "expected exactly one formula line".into(),
        });
    };
    let formula = parse_expr_indexed(formula_text, *line_no)?;
    let needed = formula.max_var().map_or(0, |m| m + 1);
    let vars = vars.unwrap_or(needed.max(1));
    if needed > vars {
        return Err(Error::InvalidInstance {
            message: format!("the formula mentions y{needed} but vars = {vars}"),
        });
    }
    Ok((formula, vars))
}

/// A QBF instance: `forall N1 exists M` then one formula line; the matrix
/// ranges over `N1 + M` variables.
pub fn parse_qbf_instance(text: &str) -> Result<QbfInstance> {
    let lines = instance_lines(text);
    let [(header_line, header), (formula_line, formula_text)] = lines.as_slice() else {
        return Err(Error::InvalidInstance {
            message: "expected a quantifier header line and a formula line".into(),
        });
    };
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let (n1, m): (usize, usize) = match tokens.as_slice() {
        ["forall", n1, "exists", m] => (
            n1.parse().map_err(|_| header_err(*header_line, header))?,
            m.parse().map_err(|_| header_err(*header_line, header))?,
        ),
        _ => return Err(header_err(*header_line, header)),
    };
    let matrix = parse_expr_indexed(formula_text, *formula_line)?;
    QbfInstance::new(n1, n1 + m, matrix.into())
}

fn header_err(line: usize, header: &str) -> Error {
    Error::Parse {
        line,
        column: 1,
        message: format!("expected `forall N1 exists M`, found `{header}`"),
    }
}

/// A DNF instance: optional `vars N` header, then lines of `;`-separated
/// clauses in `.d01` literal syntax (`J` / `!J`, `TRUE`, `FALSE`).
pub fn parse_dnf_instance(text: &str) -> Result<(Dnf, usize)> {
    let lines = instance_lines(text);
    let (vars, rest) = split_vars_header(&lines)?;
    let mut clauses = Vec::new();
    for (line_no, line) in rest {
        let dnf = parse_clause_list(line, *line_no)?;
        if dnf.clauses().iter().any(|c| c.is_empty()) {
            clauses.push(Clause::empty());
        } else {
            clauses.extend(dnf.clauses().iter().cloned());
        }
    }
    let dnf = Dnf::new(clauses);
    let needed = dnf.max_var().map_or(0, |m| m + 1);
    let vars = vars.unwrap_or(needed.max(1));
    if needed > vars {
        return Err(Error::InvalidInstance {
            message: format!("the DNF mentions y{needed} but vars = {vars}"),
        });
    }
    Ok((dnf, vars))
}
