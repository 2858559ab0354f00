//! Per-encoding evaluation and restricted existential queries.
//!
//! `restricted_sat` decides `∃x ∈ v(h): f(x) = b` with an
//! encoding-appropriate procedure: one extreme-vertex evaluation for unate
//! formulas, clause scans for DNFs and double DNFs, row scans for truth
//! tables, path search for BDDs, and a budgeted backtracking search for
//! everything that is genuinely hard.

use crate::error::{Error, Result};
use crate::model::{
    dependency_table, Bdd, BddRef, Configuration, Dnf, Expr, Hypercube, LocalFunction, Orientation,
    Repr, UnateOrdering,
};

/// Default assignment budget for the generic backtracking search.
pub const DEFAULT_SAT_BUDGET: u64 = 1 << 22;

/// Value of the encoded function at `x`.
///
/// Double DNFs cross-check both covers and report an integrity error naming
/// the configuration when they agree.
pub fn eval(f: &LocalFunction, x: &Configuration) -> Result<bool> {
    f.repr.eval(x.bits())
}

/// [`eval`] over a raw bit slice.
pub fn eval_bits(f: &LocalFunction, x: &[bool]) -> Result<bool> {
    f.repr.eval(x)
}

/// Decides `∃x ∈ v(h): f(x) = target` and returns a witness when one
/// exists. Free positions the search never constrains are reported as 0.
pub fn restricted_sat(
    f: &LocalFunction,
    h: &Hypercube,
    target: bool,
    budget: u64,
) -> Result<Option<Configuration>> {
    sat_impl(f, h, target, budget, true)
}

/// Existence-only variant; skips witness materialization.
pub fn restricted_sat_exists(
    f: &LocalFunction,
    h: &Hypercube,
    target: bool,
    budget: u64,
) -> Result<bool> {
    Ok(sat_impl(f, h, target, budget, false)?.is_some())
}

/// A found placeholder for existence-only queries: dimension 0.
fn found_marker() -> Option<Configuration> {
    Some(Configuration::new(Vec::new()))
}

fn sat_impl(
    f: &LocalFunction,
    h: &Hypercube,
    target: bool,
    budget: u64,
    want_witness: bool,
) -> Result<Option<Configuration>> {
    match &f.repr {
        Repr::Formula(e) => match &f.unate {
            Some(ord) => Ok(unate_extreme(&f.repr, ord, h, target, want_witness)),
            None => generic_search(e, h, target, budget, want_witness),
        },
        Repr::Dnf(d) => {
            if target {
                Ok(dnf_scan(d, h, want_witness))
            } else if let Some(ord) = &f.unate {
                Ok(unate_extreme(&f.repr, ord, h, target, want_witness))
            } else {
                // NOT-TAUTOLOGY on a DNF is hard; the generic search is the
                // documented behavior.
                generic_search(&d.to_expr(), h, target, budget, want_witness)
            }
        }
        Repr::Dnf01(d) => {
            let cover = if target { &d.on } else { &d.off };
            Ok(dnf_scan(cover, h, want_witness))
        }
        Repr::Table(t) => Ok(table_scan(t, h, target, want_witness)),
        Repr::Bdd(b) => Ok(bdd_search(b, h, target, want_witness)),
    }
}

/// Base witness: fixed cells of `h`, free cells 0.
fn base_config(h: &Hypercube) -> Configuration {
    Configuration::new((0..h.n()).map(|i| h.cell(i).unwrap_or(false)).collect())
}

/// Unate shortcut: only the extreme assignment toward `target` needs
/// evaluation. Free positions outside the syntactic support stay 0.
fn unate_extreme(
    repr: &Repr,
    ord: &UnateOrdering,
    h: &Hypercube,
    target: bool,
    want_witness: bool,
) -> Option<Configuration> {
    let mut x = base_config(h);
    for i in repr.support() {
        if !h.is_fixed(i) {
            x.set(i, ord.extreme(i, target));
        }
    }
    if repr.eval_raw(x.bits()) == target {
        if want_witness {
            Some(x)
        } else {
            found_marker()
        }
    } else {
        None
    }
}

/// Linear DNF satisfiability under `h`: the first clause without internal
/// contradiction whose literals are compatible with the fixed cells.
fn dnf_scan(d: &Dnf, h: &Hypercube, want_witness: bool) -> Option<Configuration> {
    for clause in d.clauses() {
        if clause.is_contradictory() {
            continue;
        }
        let compatible = clause
            .literals()
            .iter()
            .all(|l| h.cell(l.var).is_none_or(|v| v == l.positive));
        if compatible {
            if !want_witness {
                return found_marker();
            }
            let mut x = base_config(h);
            for l in clause.literals() {
                x.set(l.var, l.positive);
            }
            return Some(x);
        }
    }
    None
}

/// Scans exactly the table rows whose `p`-projection is consistent with
/// `h`: fixed inputs contribute a forced bit, free inputs are enumerated.
fn table_scan(
    t: &crate::model::TruthTable,
    h: &Hypercube,
    target: bool,
    want_witness: bool,
) -> Option<Configuration> {
    let k = t.arity();
    let mut forced = 0usize;
    let mut free_slots: Vec<usize> = Vec::new(); // positions within p
    for (slot, &p) in t.inputs().iter().enumerate() {
        match h.cell(p) {
            Some(true) => forced |= 1 << (k - 1 - slot),
            Some(false) => {}
            None => free_slots.push(slot),
        }
    }
    for m in 0u64..1 << free_slots.len() {
        let mut row = forced;
        for (bit, &slot) in free_slots.iter().enumerate() {
            if m >> bit & 1 == 1 {
                row |= 1 << (k - 1 - slot);
            }
        }
        if t.rows()[row] == target {
            if !want_witness {
                return found_marker();
            }
            let mut x = base_config(h);
            for &slot in &free_slots {
                x.set(t.inputs()[slot], row >> (k - 1 - slot) & 1 == 1);
            }
            return Some(x);
        }
    }
    None
}

/// Memoized search for a root-to-terminal path compatible with `h`. Each
/// node is visited once; the witness walk prefers 0-edges.
fn bdd_search(b: &Bdd, h: &Hypercube, target: bool, want_witness: bool) -> Option<Configuration> {
    fn reaches(b: &Bdd, h: &Hypercube, target: bool, r: BddRef, memo: &mut [Option<bool>]) -> bool {
        match r {
            BddRef::Terminal(v) => v == target,
            BddRef::Node(i) => {
                if let Some(cached) = memo[i as usize] {
                    return cached;
                }
                let node = &b.nodes()[i as usize];
                let cell = h.cell(node.var);
                let lo_ok = cell != Some(true) && reaches(b, h, target, node.lo, memo);
                let result = lo_ok || (cell != Some(false) && reaches(b, h, target, node.hi, memo));
                memo[i as usize] = Some(result);
                result
            }
        }
    }

    let mut memo = vec![None; b.nodes().len()];
    if !reaches(b, h, target, b.root(), &mut memo) {
        return None;
    }
    if !want_witness {
        return found_marker();
    }
    let mut x = base_config(h);
    let mut cur = b.root();
    while let BddRef::Node(i) = cur {
        let node = &b.nodes()[i as usize];
        let cell = h.cell(node.var);
        let take_lo = cell != Some(true) && reaches(b, h, target, node.lo, &mut memo);
        let value = !take_lo;
        if cell.is_none() {
            x.set(node.var, value);
        }
        cur = if value { node.hi } else { node.lo };
    }
    Some(x)
}

/// Backtracking over the free support of `h` with constant propagation.
/// Every variable assignment counts against `budget`.
fn generic_search(
    expr: &Expr,
    h: &Hypercube,
    target: bool,
    budget: u64,
    want_witness: bool,
) -> Result<Option<Configuration>> {
    fn go(
        e: &Expr,
        target: bool,
        remaining: &mut u64,
        budget: u64,
        path: &mut Vec<(usize, bool)>,
    ) -> Result<bool> {
        if let Expr::Const(b) = e {
            return Ok(*b == target);
        }
        let v = e.min_var().expect("non-constant expression has a variable");
        for value in [false, true] {
            if *remaining == 0 {
                return Err(Error::BudgetExceeded { budget });
            }
            *remaining -= 1;
            let reduced = e.restrict(&|i| (i == v).then_some(value));
            path.push((v, value));
            if go(&reduced, target, remaining, budget, path)? {
                return Ok(true);
            }
            path.pop();
        }
        Ok(false)
    }

    let rooted = expr.restrict(&|i| h.cell(i));
    let mut remaining = budget;
    let mut path = Vec::new();
    if !go(&rooted, target, &mut remaining, budget, &mut path)? {
        return Ok(None);
    }
    if !want_witness {
        return Ok(found_marker());
    }
    let mut x = base_config(h);
    for (var, value) in path {
        x.set(var, value);
    }
    Ok(Some(x))
}

/// Infers a unate ordering by exhaustive cofactor comparison over the
/// dependency set; components the function ignores default to `inc`.
/// Returns `None` when some component increases and decreases the value.
pub fn infer_unate_ordering(f: &LocalFunction, n: usize) -> Result<Option<UnateOrdering>> {
    let (deps, values) = dependency_table(&f.repr, 0)?;
    let mut orientations = vec![Orientation::Inc; n];
    for (t, &j) in deps.iter().enumerate() {
        let bit = 1usize << t;
        let mut never_decreases = true;
        let mut never_increases = true;
        for m in 0..values.len() {
            if m & bit != 0 {
                continue;
            }
            let low = values[m];
            let high = values[m | bit];
            if low && !high {
                never_decreases = false;
            }
            if !low && high {
                never_increases = false;
            }
        }
        orientations[j] = if never_decreases {
            Orientation::Inc
        } else if never_increases {
            Orientation::Dec
        } else {
            return Ok(None);
        };
    }
    Ok(Some(UnateOrdering::new(orientations)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{BooleanNetwork, Clause, Dnf, DoubleDnf, Literal, TruthTable};

    fn example1_formula() -> LocalFunction {
        Expr::and(
            Expr::Var(0),
            Expr::not(Expr::and(Expr::Var(1), Expr::not(Expr::Var(2)))),
        )
        .into()
    }

    fn example1_all_encodings() -> Vec<LocalFunction> {
        use crate::model::convert_local;
        use crate::model::Encoding::*;
        [Formula, Dnf, Table, Bdd, Dnf01]
            .into_iter()
            .map(|t| convert_local(&example1_formula(), 1, t).unwrap())
            .collect()
    }

    fn example2() -> BooleanNetwork {
        crate::model::parse_network(
            "x1, (!x1 | !x2) & x3\nx2, x1 & x3\nx3, x1 | x2 | x3\n",
            crate::model::ModelFormat::Bn,
        )
        .unwrap()
    }

    #[test]
    fn eval_example1_at_110_is_zero() {
        let x: Configuration = "110".parse().unwrap();
        for f in example1_all_encodings() {
            assert!(!eval(&f, &x).unwrap(), "{:?}", f.repr.encoding());
        }
    }

    #[test]
    fn eval_constant_zero() {
        let f: LocalFunction = Expr::Const(false).into();
        assert!(!eval(&f, &"0110".parse().unwrap()).unwrap());
    }

    #[test]
    fn eval_example2_f3_at_010() {
        let net = example2();
        let x: Configuration = "010".parse().unwrap();
        assert!(eval(net.local(2), &x).unwrap());
    }

    #[test]
    fn eval_reports_dnf01_inconsistency() {
        // constructed directly, bypassing network validation
        let broken = LocalFunction::new(Repr::Dnf01(DoubleDnf::new(
            Dnf::new(vec![Clause::new(vec![Literal::pos(0)])]),
            Dnf::new(vec![Clause::new(vec![Literal::pos(0)])]),
        )));
        let x: Configuration = "1".parse().unwrap();
        assert_eq!(
            eval(&broken, &x),
            Err(Error::Dnf01Inconsistent { config: "1".into() })
        );
    }

    /// Brute-force reference for restricted_sat.
    fn enumerate_sat(f: &LocalFunction, h: &Hypercube, target: bool) -> Option<Configuration> {
        h.vertices().find(|x| f.repr.eval_raw(x.bits()) == target)
    }

    #[test]
    fn restricted_sat_example2_f1() {
        let net = example2();
        let h: Hypercube = "**1".parse().unwrap();
        let w = restricted_sat(net.local(0), &h, true, DEFAULT_SAT_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(w.to_string(), "001");
    }

    #[test]
    fn restricted_sat_point_hypercube() {
        let net = example2();
        let x: Configuration = "010".parse().unwrap();
        let h = Hypercube::point(&x);
        // f3(010) = 1
        assert!(restricted_sat(net.local(2), &h, true, DEFAULT_SAT_BUDGET)
            .unwrap()
            .is_some());
        assert!(restricted_sat(net.local(2), &h, false, DEFAULT_SAT_BUDGET)
            .unwrap()
            .is_none());
    }

    #[test]
    fn restricted_sat_example2_f3_closure_counterexample() {
        let net = example2();
        let h: Hypercube = "*00".parse().unwrap();
        let w = restricted_sat(net.local(2), &h, true, DEFAULT_SAT_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(w.to_string(), "100");
    }

    #[test]
    fn all_encodings_agree_with_enumeration() {
        let encodings = example1_all_encodings();
        let cubes = ["***", "1**", "0*1", "11*", "110", "*1*", "**0"];
        for cube in cubes {
            let h: Hypercube = cube.parse().unwrap();
            for target in [false, true] {
                let expected = enumerate_sat(&encodings[0], &h, target).is_some();
                for f in &encodings {
                    let got = restricted_sat(f, &h, target, DEFAULT_SAT_BUDGET).unwrap();
                    assert_eq!(
                        got.is_some(),
                        expected,
                        "{:?} {cube} {target}",
                        f.repr.encoding()
                    );
                    if let Some(w) = got {
                        assert!(h.contains(&w), "witness inside v(h)");
                        assert_eq!(f.repr.eval_raw(w.bits()), target, "witness evaluates");
                    }
                }
            }
        }
    }

    #[test]
    fn unate_shortcut_matches_generic_search() {
        let plain = example1_formula();
        let ord = infer_unate_ordering(&plain, 3).unwrap().unwrap();
        assert_eq!(ord.to_string(), "+-+");
        let unate = plain.clone().with_unate(ord);
        for cube in ["***", "0**", "*1*", "**0", "1*1"] {
            let h: Hypercube = cube.parse().unwrap();
            for target in [false, true] {
                let a = restricted_sat(&plain, &h, target, DEFAULT_SAT_BUDGET)
                    .unwrap()
                    .is_some();
                let b = restricted_sat(&unate, &h, target, DEFAULT_SAT_BUDGET)
                    .unwrap()
                    .is_some();
                assert_eq!(a, b, "{cube} {target}");
            }
        }
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        // xor chain over 12 variables has no short-circuit help
        let mut e = Expr::Var(0);
        for i in 1..12 {
            let x = Expr::Var(i);
            e = Expr::or(
                Expr::and(e.clone(), Expr::not(x.clone())),
                Expr::and(Expr::not(e), x),
            );
        }
        let f: LocalFunction = e.into();
        let h = Hypercube::full(12);
        match restricted_sat(&f, &h, true, 4) {
            Err(Error::BudgetExceeded { budget: 4 }) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn infer_rejects_exclusive_disjunction() {
        let xor = Expr::or(
            Expr::and(Expr::not(Expr::Var(0)), Expr::Var(1)),
            Expr::and(Expr::Var(0), Expr::not(Expr::Var(1))),
        );
        assert_eq!(infer_unate_ordering(&xor.into(), 2).unwrap(), None);
    }

    #[test]
    fn infer_constant_defaults_to_inc() {
        let f: LocalFunction = Expr::Const(true).into();
        let ord = infer_unate_ordering(&f, 3).unwrap().unwrap();
        assert_eq!(ord.to_string(), "+++");
    }

    #[test]
    fn table_scan_only_visits_consistent_rows() {
        // f = x2 over p = (1, 2); h fixes x1 = 1
        let t = TruthTable::new(vec![0, 1], vec![false, true, false, true]);
        let f: LocalFunction = t.into();
        let h: Hypercube = "1*".parse().unwrap();
        let w = restricted_sat(&f, &h, true, DEFAULT_SAT_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(w.to_string(), "11");
        let h: Hypercube = "0*".parse().unwrap();
        let w = restricted_sat(&f, &h, false, DEFAULT_SAT_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(w.to_string(), "00");
    }
}
