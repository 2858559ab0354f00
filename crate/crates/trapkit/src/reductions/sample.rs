//! Seeded instance samplers for property and acceptance tests.
//!
//! Every sampler is a pure function of its seed, so a recorded seed pins
//! the exact instance. The distributions are biased to produce both true
//! and false instances at a useful rate.

use crate::model::{
    convert_local, BooleanNetwork, Clause, Dnf, Encoding, Expr, Literal, LocalFunction,
};
use crate::rng::SplitMix64;

use super::QbfInstance;

fn random_expr(rng: &mut SplitMix64, vars: usize, budget: usize) -> Expr {
    if budget <= 1 {
        return if rng.chance(8) {
            Expr::Const(rng.bool())
        } else {
            Expr::Var(rng.below(vars))
        };
    }
    match rng.below(10) {
        0 | 1 => Expr::Var(rng.below(vars)),
        2 | 3 => Expr::not(random_expr(rng, vars, budget - 1)),
        4..=6 => {
            let left = budget / 2;
            Expr::and(
                random_expr(rng, vars, left),
                random_expr(rng, vars, budget - 1 - left),
            )
        }
        _ => {
            let left = budget / 2;
            Expr::or(
                random_expr(rng, vars, left),
                random_expr(rng, vars, budget - 1 - left),
            )
        }
    }
}

/// A formula over `1..=max_vars` variables; roughly a third of the draws
/// are tautologies by construction (`e | !e`), the rest uniform.
pub fn sample_taut_formula(seed: u64, max_vars: usize) -> (Expr, usize) {
    let mut rng = SplitMix64::new(seed.wrapping_mul(0x9e37_79b9).wrapping_add(1));
    let vars = 1 + rng.below(max_vars);
    let budget = 6 + rng.below(10);
    let body = random_expr(&mut rng, vars, budget);
    let formula = if rng.chance(35) {
        Expr::or(body.clone(), Expr::not(body))
    } else {
        body
    };
    (formula, vars)
}

/// A `∀∃` instance with `1 ≤ n1 ≤ n2 ≤ max_total`. Matrices mix plain
/// random formulas with two easily-true shapes so both answers occur.
pub fn sample_qbf(seed: u64, max_total: usize) -> QbfInstance {
    let mut rng = SplitMix64::new(seed.wrapping_mul(0xc2b2_ae35).wrapping_add(2));
    let total = 1 + rng.below(max_total);
    let universal = 1 + rng.below(total);
    let budget = 6 + rng.below(10);
    let body = random_expr(&mut rng, total, budget);
    let matrix = match rng.below(10) {
        0..=1 => Expr::or(body.clone(), Expr::not(body)),
        2 if universal < total => Expr::or(Expr::Var(total - 1), body),
        _ => body,
    };
    QbfInstance::new(universal, total, matrix.into()).expect("sampled matrix is in range")
}

/// A contradiction-free DNF over `1..=max_vars` variables with
/// `1..=max_clauses` clauses of width `≤ max_width`. A third of the draws
/// are small known tautologies (padded with unused variables), because
/// random DNFs are rarely valid.
pub fn sample_dnf(
    seed: u64,
    max_vars: usize,
    max_clauses: usize,
    max_width: usize,
) -> (Dnf, usize) {
    let mut rng = SplitMix64::new(seed.wrapping_mul(0x1656_67b1).wrapping_add(3));
    let vars = 1 + rng.below(max_vars);
    if rng.chance(33) {
        let dnf = match rng.below(3) {
            0 => Dnf::top(),
            1 if max_clauses >= 2 => Dnf::new(vec![
                Clause::new(vec![Literal::pos(0)]),
                Clause::new(vec![Literal::neg(0)]),
            ]),
            _ if max_clauses >= 3 && vars >= 2 && max_width >= 2 => Dnf::new(vec![
                Clause::new(vec![Literal::pos(0), Literal::pos(1)]),
                Clause::new(vec![Literal::neg(0)]),
                Clause::new(vec![Literal::pos(0), Literal::neg(1)]),
            ]),
            _ => Dnf::top(),
        };
        return (dnf, vars);
    }
    let clause_count = 1 + rng.below(max_clauses);
    let mut clauses = Vec::with_capacity(clause_count);
    for _ in 0..clause_count {
        let width = 1 + rng.below(max_width.min(vars));
        // distinct variables keep the clause contradiction-free
        let mut pool: Vec<usize> = (0..vars).collect();
        let mut literals = Vec::with_capacity(width);
        for _ in 0..width {
            let v = pool.swap_remove(rng.below(pool.len()));
            literals.push(Literal {
                var: v,
                positive: rng.bool(),
            });
        }
        clauses.push(Clause::new(literals));
    }
    (Dnf::new(clauses), vars)
}

/// A random `n`-component network. With `mixed_encodings`, components are
/// converted to a per-component random encoding and unate orderings are
/// attached where inference finds one.
pub fn sample_network(seed: u64, n: usize, mixed_encodings: bool) -> BooleanNetwork {
    let mut rng = SplitMix64::new(seed.wrapping_mul(0x27d4_eb2f).wrapping_add(4));
    let mut locals: Vec<LocalFunction> = Vec::with_capacity(n);
    for component in 1..=n {
        let budget = 4 + rng.below(2 * n + 2);
        let expr = random_expr(&mut rng, n, budget);
        let mut local = LocalFunction::from(expr);
        if mixed_encodings {
            let target = match rng.below(5) {
                0 => Encoding::Formula,
                1 => Encoding::Dnf,
                2 => Encoding::Table,
                3 => Encoding::Bdd,
                _ => Encoding::Dnf01,
            };
            local = convert_local(&local, component, target)
                .expect("sampled support fits the conversion guard");
            if matches!(target, Encoding::Formula | Encoding::Dnf) && rng.chance(40) {
                if let Some(ord) =
                    crate::kernels::infer_unate_ordering(&local, n).expect("within guard")
                {
                    local = local.with_unate(ord);
                }
            }
        }
        locals.push(local);
    }
    BooleanNetwork::new(locals).expect("sampled networks satisfy the invariants")
}
