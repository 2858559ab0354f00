//! Serializers for the model file formats.
//!
//! Output re-parses to a pointwise-equal model; formula and clause printing
//! is canonical enough that re-parsing reproduces the tree structure too.

use std::fmt::Write;

use super::{
    BddRef, BooleanNetwork, Clause, Dnf, Expr, FunctionalGraph, Hypercube, ModelFormat, Repr,
};
use crate::error::{Error, Result};

/// Renders `expr` with minimal parentheses under the `.bn` grammar.
pub fn write_expr(expr: &Expr, name_of: &dyn Fn(usize) -> String) -> String {
    let mut out = String::new();
    fmt_expr(expr, 0, name_of, &mut out);
    out
}

/// Precedence levels: 0 = or, 1 = and, 2 = atom. The right operand is
/// printed one level tighter so that re-parsing rebuilds the same
/// left-associated tree.
fn fmt_expr(expr: &Expr, prec: u8, name_of: &dyn Fn(usize) -> String, out: &mut String) {
    match expr {
        Expr::Const(b) => out.push(if *b { '1' } else { '0' }),
        Expr::Var(i) => out.push_str(&name_of(*i)),
        Expr::Not(e) => {
            out.push('!');
            fmt_expr(e, 2, name_of, out);
        }
        Expr::Or(a, b) => {
            let parens = prec > 0;
            if parens {
                out.push('(');
            }
            fmt_expr(a, 0, name_of, out);
            out.push_str(" | ");
            fmt_expr(b, 1, name_of, out);
            if parens {
                out.push(')');
            }
        }
        Expr::And(a, b) => {
            let parens = prec > 1;
            if parens {
                out.push('(');
            }
            fmt_expr(a, 1, name_of, out);
            out.push_str(" & ");
            fmt_expr(b, 2, name_of, out);
            if parens {
                out.push(')');
            }
        }
    }
}

fn unsupported(component: usize, format: &str, found: &str) -> Error {
    Error::InvalidFunction {
        component,
        message: format!("cannot serialize a {found} local function to the {format} format"),
    }
}

/// `.bn` form; accepts formula and DNF locals (a DNF is a formula).
pub fn write_bn_network(net: &BooleanNetwork) -> Result<String> {
    let mut out = String::new();
    let name_of = |i: usize| net.name(i).to_string();
    for (idx, local) in net.locals().iter().enumerate() {
        let expr = match &local.repr {
            Repr::Formula(e) => e.clone(),
            Repr::Dnf(d) => d.to_expr(),
            other => return Err(unsupported(idx + 1, "bn", &other.encoding().to_string())),
        };
        writeln!(out, "{}, {}", net.name(idx), write_expr(&expr, &name_of)).unwrap();
    }
    for (idx, local) in net.locals().iter().enumerate() {
        if let Some(ord) = &local.unate {
            writeln!(out, "unate: {}: {ord}", net.name(idx)).unwrap();
        }
    }
    Ok(out)
}

pub fn write_tt_network(net: &BooleanNetwork) -> Result<String> {
    let mut out = String::new();
    for (idx, local) in net.locals().iter().enumerate() {
        let Repr::Table(t) = &local.repr else {
            return Err(unsupported(
                idx + 1,
                "tt",
                &local.repr.encoding().to_string(),
            ));
        };
        let inputs: Vec<String> = t.inputs().iter().map(|p| (p + 1).to_string()).collect();
        let bits: String = t
            .rows()
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect();
        writeln!(
            out,
            "{}: k={} p={} t={}",
            idx + 1,
            t.arity(),
            inputs.join(","),
            bits
        )
        .unwrap();
    }
    Ok(out)
}

fn bdd_ref_token(r: BddRef) -> String {
    match r {
        BddRef::Terminal(false) => "T0".to_string(),
        BddRef::Terminal(true) => "T1".to_string(),
        BddRef::Node(i) => (i + 1).to_string(),
    }
}

pub fn write_bdd_network(net: &BooleanNetwork) -> Result<String> {
    let mut out = String::new();
    for (idx, local) in net.locals().iter().enumerate() {
        let Repr::Bdd(b) = &local.repr else {
            return Err(unsupported(
                idx + 1,
                "bdd",
                &local.repr.encoding().to_string(),
            ));
        };
        writeln!(out, "{} {{", idx + 1).unwrap();
        for (node_idx, node) in b.nodes().iter().enumerate() {
            writeln!(
                out,
                "  {} var={} lo={} hi={}",
                node_idx + 1,
                node.var + 1,
                bdd_ref_token(node.lo),
                bdd_ref_token(node.hi)
            )
            .unwrap();
        }
        writeln!(out, "  root={}", bdd_ref_token(b.root())).unwrap();
        writeln!(out, "}}").unwrap();
    }
    Ok(out)
}

/// Clause list in `.d01` syntax: `TRUE`, `FALSE`, or `;`-separated clauses.
pub(crate) fn write_clause_list(dnf: &Dnf) -> String {
    if dnf.clauses().is_empty() {
        return "FALSE".to_string();
    }
    if dnf.clauses().iter().any(Clause::is_empty) {
        return "TRUE".to_string();
    }
    dnf.clauses()
        .iter()
        .map(|c| {
            c.literals()
                .iter()
                .map(|l| {
                    if l.positive {
                        (l.var + 1).to_string()
                    } else {
                        format!("!{}", l.var + 1)
                    }
                })
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn write_d01_network(net: &BooleanNetwork) -> Result<String> {
    let mut out = String::new();
    for (idx, local) in net.locals().iter().enumerate() {
        let Repr::Dnf01(d) = &local.repr else {
            return Err(unsupported(
                idx + 1,
                "d01",
                &local.repr.encoding().to_string(),
            ));
        };
        writeln!(out, "{}.0: {}", idx + 1, write_clause_list(&d.off)).unwrap();
        writeln!(out, "{}.1: {}", idx + 1, write_clause_list(&d.on)).unwrap();
    }
    Ok(out)
}

pub fn write_functional_graph(g: &FunctionalGraph) -> String {
    let n = g.n();
    let mut out = String::new();
    let full = Hypercube::full(n);
    for rank in full.rank_vertices() {
        let x = super::Configuration::from_rank(n, rank);
        let y = super::Configuration::from_rank(n, g.successor_rank(rank));
        writeln!(out, "{x} -> {y}").unwrap();
    }
    out
}

/// Serializes a network (or, for `Fg`, nothing — graphs have their own
/// writer) in the requested file format.
pub fn write_network(net: &BooleanNetwork, format: ModelFormat) -> Result<String> {
    match format {
        ModelFormat::Bn => write_bn_network(net),
        ModelFormat::Tt => write_tt_network(net),
        ModelFormat::Bdd => write_bdd_network(net),
        ModelFormat::D01 => write_d01_network(net),
        ModelFormat::Fg => Err(Error::Parse {
            line: 1,
            column: 1,
            message: "use write_functional_graph for .fg output".into(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_network;
    use super::*;

    #[test]
    fn bn_roundtrip_is_structural() {
        let text = "\
x1, (!x1 | !x2) & x3
x2, x1 & x3
x3, x1 | x2 | x3
unate: x1: --+
unate: x2: +++
unate: x3: +++
";
        let net = parse_network(text, ModelFormat::Bn).unwrap();
        let written = write_bn_network(&net).unwrap();
        let reparsed = parse_network(&written, ModelFormat::Bn).unwrap();
        assert_eq!(net, reparsed);
    }

    #[test]
    fn expr_printer_parenthesizes_right_nesting() {
        let e = Expr::or(Expr::Var(0), Expr::or(Expr::Var(1), Expr::Var(2)));
        let names = |i: usize| format!("x{}", i + 1);
        assert_eq!(write_expr(&e, &names), "x1 | (x2 | x3)");
        let e = Expr::and(
            Expr::not(Expr::and(Expr::Var(0), Expr::Var(1))),
            Expr::Var(2),
        );
        assert_eq!(write_expr(&e, &names), "!(x1 & x2) & x3");
    }

    #[test]
    fn tt_roundtrip() {
        let text = "\
1: k=3 p=1,2,3 t=00001101
2: k=0 p= t=1
3: k=1 p=3 t=01
";
        let net = parse_network(text, ModelFormat::Tt).unwrap();
        let written = write_tt_network(&net).unwrap();
        assert_eq!(net, parse_network(&written, ModelFormat::Tt).unwrap());
    }

    #[test]
    fn d01_roundtrip() {
        let text = "\
1.0: !1; 2,!3
1.1: 1,!2; 1,3
2.0: TRUE
2.1: FALSE
3.0: !3
3.1: 3
";
        let net = parse_network(text, ModelFormat::D01).unwrap();
        let written = write_d01_network(&net).unwrap();
        assert_eq!(net, parse_network(&written, ModelFormat::D01).unwrap());
    }
}
