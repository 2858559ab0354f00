//! Acceptance suite. Each criterion prints one `criterion N: PASS/FAIL`
//! line (visible with `--nocapture`) and fails the test on any violation.
//! Criteria run serially behind a mutex so the timing bounds are not
//! disturbed by parallel siblings.

use std::sync::Mutex;
use std::time::{Duration, Instant};

use trapkit::deciders::{self, Limits, Witness};
use trapkit::funcgraph::{self, VertexSet};
use trapkit::kernels;
use trapkit::model::{
    convert, parse_network, Bdd, BddNode, BddRef, Clause, Dnf, DoubleDnf, Encoding, Expr, Literal,
    LocalFunction, ModelFormat, TruthTable,
};
use trapkit::oracle;
use trapkit::reductions::{
    brute_qbf, brute_taut, brute_taut_dnf, gen_dnf_taut_chain, gen_dnf_taut_monotone,
    gen_pi2_mintrap, gen_tautology_trapspace, sample_dnf, sample_network, sample_qbf,
    sample_taut_formula,
};
use trapkit::{BooleanNetwork, Configuration, Hypercube};

static GATE: Mutex<()> = Mutex::new(());

const EXAMPLE2: &str = "x1, (!x1 | !x2) & x3\nx2, x1 & x3\nx3, x1 | x2 | x3\n";

const SEED_TAUT: u64 = 0x7a37_0003;
const SEED_QBF: u64 = 0x7a37_0004;
const SEED_DNF: u64 = 0x7a37_0005;
const SEED_NETS: u64 = 0x7a37_0006;
const SEED_CHAIN_SCALE: u64 = 0x7a37_0007;
const SEED_GRAPH_PERF: u64 = 0x7a37_0008;

fn limits() -> Limits {
    Limits::default()
}

fn criterion(id: usize, name: &str, run: impl FnOnce() -> Result<String, String>) {
    let _gate = GATE.lock().unwrap_or_else(|poisoned| poisoned.into_inner());
    let started = Instant::now();
    match run() {
        Ok(summary) => {
            println!(
                "criterion {id}: PASS — {name} ({summary}; {:.2}s)",
                started.elapsed().as_secs_f64()
            );
        }
        Err(message) => {
            println!("criterion {id}: FAIL — {name}: {message}");
            panic!("criterion {id} failed: {message}");
        }
    }
}

fn within(elapsed: Duration, bound: Duration, what: &str) -> Result<(), String> {
    if elapsed > bound {
        return Err(format!("{what} took {elapsed:.2?}, bound is {bound:.2?}"));
    }
    Ok(())
}

fn verify_witness(f: &BooleanNetwork, h: &Hypercube, witness: &Witness) -> Result<(), String> {
    match witness {
        Witness::Escape { component, config } => {
            let expected = !h
                .cell(*component)
                .ok_or_else(|| "escape on a free cell".to_string())?;
            if !h.contains(config) {
                return Err(format!("escape config {config} lies outside {h}"));
            }
            let got = kernels::eval(f.local(*component), config).map_err(|e| e.to_string())?;
            if got != expected {
                return Err(format!(
                    "escape witness does not re-verify: f_{}({config}) != {}",
                    component + 1,
                    u8::from(expected),
                ));
            }
        }
        Witness::SmallerTrap(t) => {
            if !h.contains_cube(t) || t == h {
                return Err(format!("{t} is not strictly inside {h}"));
            }
            let closed = deciders::trapspace(f, t, limits())
                .map_err(|e| e.to_string())?
                .answer;
            if !closed {
                return Err(format!("claimed smaller trap space {t} is not closed"));
            }
        }
        Witness::Transition { from, to } => {
            if !h.contains(from) || h.contains(to) {
                return Err(format!("transition {from} -> {to} does not leave {h}"));
            }
            let image = f.image(from).map_err(|e| e.to_string())?;
            if &image != to {
                return Err(format!("transition witness mismatch at {from}"));
            }
        }
    }
    Ok(())
}

/// Counters threaded through the reduction-soundness runs so criterion 9
/// can report aggregate witness integrity.
#[derive(Default)]
struct WitnessStats {
    false_verdicts: usize,
    verified: usize,
}

impl WitnessStats {
    fn record(
        &mut self,
        f: &BooleanNetwork,
        h: &Hypercube,
        verdict: &deciders::TrapVerdict,
    ) -> Result<(), String> {
        if verdict.answer {
            return Ok(());
        }
        self.false_verdicts += 1;
        let witness = verdict
            .witness
            .as_ref()
            .ok_or_else(|| format!("false verdict without witness on {h}"))?;
        let scope = match &verdict.closure {
            Some(closure) => closure,
            None => h,
        };
        verify_witness(f, scope, witness)?;
        self.verified += 1;
        Ok(())
    }
}

fn example2() -> BooleanNetwork {
    parse_network(EXAMPLE2, ModelFormat::Bn).unwrap()
}

// ---------------------------------------------------------------------------
// criterion 1
// ---------------------------------------------------------------------------

#[test]
fn criterion_1_paper_example_2_fixture() {
    criterion(1, "running-example fixture", || {
        let started = Instant::now();
        let f = example2();
        let minimal = oracle::enumerate_minimal_trap_spaces(&f).map_err(|e| e.to_string())?;
        let rendered: Vec<String> = minimal.iter().map(Hypercube::to_string).collect();
        if rendered != ["000", "**1"] {
            return Err(format!(
                "minimal trap spaces {rendered:?}, expected [000, **1]"
            ));
        }
        let g = funcgraph::build_functional_graph(&f).map_err(|e| e.to_string())?;
        for seed in ["010", "01*", "0*0"] {
            let cube: Hypercube = seed.parse().unwrap();
            let t = deciders::compute_t(&f, &cube, limits()).map_err(|e| e.to_string())?;
            if t.to_string() != "***" {
                return Err(format!("T({seed}) = {t}, expected ***"));
            }
            let ranks: Vec<u32> = cube.rank_vertices().collect();
            let s = funcgraph::saturate(&g, &VertexSet::from_ranks(3, ranks))
                .map_err(|e| e.to_string())?;
            if s.to_string() != "***" {
                return Err(format!("saturate({seed}) = {s}, expected ***"));
            }
        }
        let yes = deciders::in_mintrap(&f, &"000".parse().unwrap(), limits())
            .map_err(|e| e.to_string())?;
        if !yes.answer {
            return Err("in-mintrap(000) should hold".into());
        }
        let no = deciders::in_mintrap(&f, &"010".parse().unwrap(), limits())
            .map_err(|e| e.to_string())?;
        if no.answer {
            return Err("in-mintrap(010) should not hold".into());
        }
        let sccs = funcgraph::terminal_sccs(&g, &Hypercube::full(3)).map_err(|e| e.to_string())?;
        let rendered: Vec<String> = sccs.iter().map(VertexSet::to_string).collect();
        if rendered != ["{000}", "{011, 101, 111}"] {
            return Err(format!("terminal SCCs {rendered:?}"));
        }
        within(started.elapsed(), Duration::from_secs(1), "the fixture")?;
        Ok("minimal trap spaces, saturations, membership and SCCs all exact".into())
    });
}

// ---------------------------------------------------------------------------
// criterion 2
// ---------------------------------------------------------------------------

fn example1_encodings() -> [LocalFunction; 4] {
    let formula = Expr::and(
        Expr::Var(0),
        Expr::not(Expr::and(Expr::Var(1), Expr::not(Expr::Var(2)))),
    );
    let table = TruthTable::new(
        vec![0, 1, 2],
        "00001101".chars().map(|c| c == '1').collect(),
    );
    // the drawn diagram: x1 -0-> 0, x1 -1-> x2 -0-> 1, x2 -1-> x3 -0-> 0 -1-> 1
    let bdd = Bdd::new(
        vec![
            BddNode {
                var: 0,
                lo: BddRef::Terminal(false),
                hi: BddRef::Node(1),
            },
            BddNode {
                var: 1,
                lo: BddRef::Terminal(true),
                hi: BddRef::Node(2),
            },
            BddNode {
                var: 2,
                lo: BddRef::Terminal(false),
                hi: BddRef::Terminal(true),
            },
        ],
        BddRef::Node(0),
    );
    let dnf01 = DoubleDnf::new(
        Dnf::new(vec![
            Clause::new(vec![Literal::neg(0)]),
            Clause::new(vec![Literal::pos(1), Literal::neg(2)]),
        ]),
        Dnf::new(vec![
            Clause::new(vec![Literal::pos(0), Literal::neg(1)]),
            Clause::new(vec![Literal::pos(0), Literal::pos(2)]),
        ]),
    );
    [formula.into(), table.into(), bdd.into(), dnf01.into()]
}

#[test]
fn criterion_2_example_1_encodings_agree() {
    criterion(2, "one-function encodings fixture", || {
        let encodings = example1_encodings();
        for m in 0..8u32 {
            let x = Configuration::from_rank(3, m);
            let values: Vec<bool> = encodings
                .iter()
                .map(|f| kernels::eval(f, &x).unwrap())
                .collect();
            if values.iter().any(|&v| v != values[0]) {
                return Err(format!("encodings disagree at {x}: {values:?}"));
            }
        }
        let ord = kernels::infer_unate_ordering(&encodings[0], 3)
            .map_err(|e| e.to_string())?
            .ok_or("the fixture function is unate")?;
        if ord.to_string() != "+-+" {
            return Err(format!("inferred ordering {ord}, expected +-+"));
        }
        let xor = Expr::or(
            Expr::and(Expr::not(Expr::Var(0)), Expr::Var(1)),
            Expr::and(Expr::Var(0), Expr::not(Expr::Var(1))),
        );
        if kernels::infer_unate_ordering(&xor.into(), 2)
            .map_err(|e| e.to_string())?
            .is_some()
        {
            return Err("exclusive disjunction must be reported not unate".into());
        }
        Ok("4 encodings agree on all 8 inputs; orderings exact".into())
    });
}

// ---------------------------------------------------------------------------
// criterion 3
// ---------------------------------------------------------------------------

fn run_taut_soundness(count: usize, stats: &mut WitnessStats) -> Result<(), String> {
    for i in 0..count as u64 {
        let (formula, vars) = sample_taut_formula(SEED_TAUT + i, 6);
        let expected = brute_taut(&formula, vars).map_err(|e| e.to_string())?;
        let inst = gen_tautology_trapspace(formula, vars).map_err(|e| e.to_string())?;
        let verdict = deciders::trapspace(&inst.network, &inst.target_hypercube, limits())
            .map_err(|e| e.to_string())?;
        if verdict.answer != expected {
            return Err(format!(
                "instance {i}: TRAPSPACE = {}, tautology = {expected}",
                verdict.answer
            ));
        }
        stats.record(&inst.network, &inst.target_hypercube, &verdict)?;
    }
    Ok(())
}

#[test]
fn criterion_3_tautology_reduction_soundness() {
    criterion(3, "TAUTOLOGY -> TRAPSPACE soundness", || {
        let started = Instant::now();
        let mut stats = WitnessStats::default();
        run_taut_soundness(200, &mut stats)?;
        within(started.elapsed(), Duration::from_secs(30), "200 instances")?;
        Ok(format!(
            "200/200 agree with brute force; {}/{} witnesses re-verified",
            stats.verified, stats.false_verdicts
        ))
    });
}

// ---------------------------------------------------------------------------
// criterion 4
// ---------------------------------------------------------------------------

fn run_qbf_soundness(count: usize, stats: &mut WitnessStats) -> Result<(), String> {
    for i in 0..count as u64 {
        let q = sample_qbf(SEED_QBF + i, 6);
        let expected = brute_qbf(&q).map_err(|e| e.to_string())?;
        let inst = gen_pi2_mintrap(q).map_err(|e| e.to_string())?;
        let net = &inst.network;
        let cube = &inst.target_hypercube;
        let config = inst.target_configuration.as_ref().unwrap();

        let min = deciders::mintrap(net, cube, limits()).map_err(|e| e.to_string())?;
        if min.answer != expected {
            return Err(format!(
                "instance {i}: MINTRAP = {}, QBF = {expected}",
                min.answer
            ));
        }
        stats.record(net, cube, &min)?;

        let member = deciders::in_mintrap(net, config, limits()).map_err(|e| e.to_string())?;
        if member.answer != expected {
            return Err(format!(
                "instance {i}: IN-MINTRAP = {}, QBF = {expected}",
                member.answer
            ));
        }
        stats.record(net, cube, &member)?;

        let traps = oracle::enumerate_trap_spaces(net).map_err(|e| e.to_string())?;
        let minimal: Vec<&Hypercube> = traps
            .iter()
            .filter(|h| {
                !traps
                    .iter()
                    .any(|inner| inner != *h && h.contains_cube(inner))
            })
            .collect();
        if minimal.contains(&cube) != expected {
            return Err(format!("instance {i}: oracle MINTRAP disagrees"));
        }
        if minimal.iter().any(|m| m.contains(config)) != expected {
            return Err(format!("instance {i}: oracle IN-MINTRAP disagrees"));
        }
    }
    Ok(())
}

#[test]
fn criterion_4_pi2_reduction_soundness() {
    criterion(4, "Pi2-SAT -> MINTRAP/IN-MINTRAP soundness", || {
        let started = Instant::now();
        let mut stats = WitnessStats::default();
        run_qbf_soundness(200, &mut stats)?;
        within(started.elapsed(), Duration::from_secs(300), "200 instances")?;
        Ok(format!(
            "200/200 agree with brute force and the oracle; {}/{} witnesses re-verified",
            stats.verified, stats.false_verdicts
        ))
    });
}

// ---------------------------------------------------------------------------
// criterion 5
// ---------------------------------------------------------------------------

fn run_dnf_soundness(count: usize, stats: &mut WitnessStats) -> Result<(), String> {
    for i in 0..count as u64 {
        let (dnf, vars) = sample_dnf(SEED_DNF + i, 5, 4, 3);
        let expected = brute_taut_dnf(&dnf, vars).map_err(|e| e.to_string())?;

        let monotone = gen_dnf_taut_monotone(dnf.clone(), vars).map_err(|e| e.to_string())?;
        if !monotone.network.is_locally_monotone() {
            return Err(format!("instance {i}: monotone network misses orderings"));
        }
        let cube = &monotone.target_hypercube;
        let config = monotone.target_configuration.as_ref().unwrap();
        let min =
            deciders::mintrap(&monotone.network, cube, limits()).map_err(|e| e.to_string())?;
        if min.answer != expected {
            return Err(format!(
                "instance {i}: monotone MINTRAP = {}, DNF tautology = {expected}",
                min.answer
            ));
        }
        stats.record(&monotone.network, cube, &min)?;
        let member =
            deciders::in_mintrap(&monotone.network, config, limits()).map_err(|e| e.to_string())?;
        if member.answer != expected {
            return Err(format!("instance {i}: monotone IN-MINTRAP disagrees"));
        }
        stats.record(&monotone.network, cube, &member)?;

        let chain = gen_dnf_taut_chain(dnf, vars).map_err(|e| e.to_string())?;
        for encoding in [Encoding::Table, Encoding::Bdd, Encoding::Dnf01] {
            let encoded = convert(&chain.network, encoding).map_err(|e| e.to_string())?;
            let cube = &chain.target_hypercube;
            let config = chain.target_configuration.as_ref().unwrap();
            let min = deciders::mintrap(&encoded, cube, limits()).map_err(|e| e.to_string())?;
            if min.answer != expected {
                return Err(format!(
                    "instance {i}: chain/{encoding} MINTRAP = {}, expected {expected}",
                    min.answer
                ));
            }
            stats.record(&encoded, cube, &min)?;
            let member =
                deciders::in_mintrap(&encoded, config, limits()).map_err(|e| e.to_string())?;
            if member.answer != expected {
                return Err(format!(
                    "instance {i}: chain/{encoding} IN-MINTRAP disagrees"
                ));
            }
            stats.record(&encoded, cube, &member)?;
        }
    }
    Ok(())
}

#[test]
fn criterion_5_dnf_reduction_soundness() {
    criterion(
        5,
        "DNF TAUTOLOGY -> MINTRAP soundness (monotone + chain)",
        || {
            let started = Instant::now();
            let mut stats = WitnessStats::default();
            run_dnf_soundness(200, &mut stats)?;
            within(started.elapsed(), Duration::from_secs(600), "200 instances")?;
            Ok(format!(
                "200/200 agree under unate, TT, BDD and DNF01 kernels; {}/{} witnesses re-verified",
                stats.verified, stats.false_verdicts
            ))
        },
    );
}

// ---------------------------------------------------------------------------
// criterion 6
// ---------------------------------------------------------------------------

fn all_cubes(n: usize) -> Vec<Hypercube> {
    let mut out = Vec::new();
    let total = 3usize.pow(n as u32);
    for mut code in 0..total {
        let mut cells = vec![None; n];
        for i in (0..n).rev() {
            cells[i] = match code % 3 {
                0 => Some(false),
                1 => Some(true),
                _ => None,
            };
            code /= 3;
        }
        out.push(Hypercube::new(cells));
    }
    out
}

fn run_oracle_equivalence(
    count: usize,
    stats: &mut WitnessStats,
) -> Result<(usize, usize), String> {
    let mut cube_queries = 0usize;
    let mut config_queries = 0usize;
    for i in 0..count as u64 {
        let n = 1 + (i as usize % 7);
        let net = sample_network(SEED_NETS + i, n, true);
        let g = funcgraph::build_functional_graph(&net).map_err(|e| e.to_string())?;
        let traps = oracle::enumerate_trap_spaces(&net).map_err(|e| e.to_string())?;
        let minimal: Vec<Hypercube> = traps
            .iter()
            .filter(|h| {
                !traps
                    .iter()
                    .any(|inner| inner != *h && h.contains_cube(inner))
            })
            .cloned()
            .collect();
        for h in all_cubes(n) {
            cube_queries += 1;
            let sym = deciders::trapspace(&net, &h, limits()).map_err(|e| e.to_string())?;
            let gra = funcgraph::trapspace_g(&g, &h).map_err(|e| e.to_string())?;
            let orc = traps.contains(&h);
            if sym.answer != orc || gra.answer != orc {
                return Err(format!(
                    "network {i}: TRAPSPACE({h}) symbolic={} graph={} oracle={orc}",
                    sym.answer, gra.answer
                ));
            }
            stats.record(&net, &h, &sym)?;
            stats.record(&net, &h, &gra)?;
            let sym = deciders::mintrap(&net, &h, limits()).map_err(|e| e.to_string())?;
            let gra = funcgraph::mintrap_g(&g, &h).map_err(|e| e.to_string())?;
            let orc = minimal.contains(&h);
            if sym.answer != orc || gra.answer != orc {
                return Err(format!(
                    "network {i}: MINTRAP({h}) symbolic={} graph={} oracle={orc}",
                    sym.answer, gra.answer
                ));
            }
            stats.record(&net, &h, &sym)?;
            stats.record(&net, &h, &gra)?;
        }
        for rank in 0..1u32 << n {
            config_queries += 1;
            let x = Configuration::from_rank(n, rank);
            let sym = deciders::in_mintrap(&net, &x, limits()).map_err(|e| e.to_string())?;
            let gra = funcgraph::in_mintrap_g(&g, &x).map_err(|e| e.to_string())?;
            let orc = minimal.iter().any(|m| m.contains(&x));
            if sym.answer != orc || gra.answer != orc {
                return Err(format!(
                    "network {i}: IN-MINTRAP({x}) symbolic={} graph={} oracle={orc}",
                    sym.answer, gra.answer
                ));
            }
            stats.record(&net, &Hypercube::point(&x), &sym)?;
        }
    }
    Ok((cube_queries, config_queries))
}

#[test]
fn criterion_6_oracle_equivalence() {
    criterion(
        6,
        "oracle equivalence on 500 mixed-encoding networks",
        || {
            let mut stats = WitnessStats::default();
            let (cubes, configs) = run_oracle_equivalence(500, &mut stats)?;
            Ok(format!(
                "{cubes} hypercube and {configs} configuration queries agree across engines; \
             {}/{} witnesses re-verified",
                stats.verified, stats.false_verdicts
            ))
        },
    );
}

// ---------------------------------------------------------------------------
// criterion 7
// ---------------------------------------------------------------------------

#[test]
fn criterion_7_polynomial_kernel_scalability() {
    criterion(
        7,
        "linear kernels on a dimension-452 chain instance",
        || {
            // 250 base variables and 100 three-literal clauses: n + 2k + 2 = 452
            let (dnf, vars) = {
                let mut clauses = Vec::with_capacity(100);
                let mut state = SEED_CHAIN_SCALE;
                let mut next = move || {
                    state = state
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407);
                    (state >> 33) as usize
                };
                for _ in 0..100 {
                    let mut lits = Vec::with_capacity(3);
                    for _ in 0..3 {
                        let v = next() % 250;
                        if !lits.iter().any(|l: &Literal| l.var == v) {
                            lits.push(Literal {
                                var: v,
                                positive: next() % 2 == 0,
                            });
                        }
                    }
                    clauses.push(Clause::new(lits));
                }
                (Dnf::new(clauses), 250usize)
            };
            let inst = gen_dnf_taut_chain(dnf, vars).map_err(|e| e.to_string())?;
            let dim = inst.network.n();
            if dim != 452 {
                return Err(format!("expected dimension 452, generated {dim}"));
            }
            // 152 fixed cells (the first 150 variables and both auxiliaries)
            // leave exactly 300 free cells, so v(h) exceeds 2^300
            let mut partial = Hypercube::full(dim);
            for i in 0..150 {
                partial.set(i, Some(false));
            }
            partial.set(dim - 2, Some(false));
            partial.set(dim - 1, Some(false));
            let full = Hypercube::full(dim);

            let mut summary = Vec::new();
            for encoding in [Encoding::Table, Encoding::Bdd, Encoding::Dnf01] {
                let encoded = convert(&inst.network, encoding).map_err(|e| e.to_string())?;
                for (cube, label) in [(&full, "full"), (&partial, "300-free")] {
                    let started = Instant::now();
                    let verdict =
                        deciders::trapspace(&encoded, cube, limits()).map_err(|e| e.to_string())?;
                    let elapsed = started.elapsed();
                    within(
                        elapsed,
                        Duration::from_secs(1),
                        &format!("{encoding}/{label}"),
                    )?;
                    if label == "full" && !verdict.answer {
                        return Err("the full space must be a trap space".into());
                    }
                    summary.push(format!(
                        "{encoding}/{label} {:.1}ms",
                        elapsed.as_secs_f64() * 1e3
                    ));
                }
            }
            Ok(summary.join(", "))
        },
    );
}

// ---------------------------------------------------------------------------
// criterion 8
// ---------------------------------------------------------------------------

#[test]
fn criterion_8_functional_graph_performance() {
    criterion(8, "n = 14 functional-graph build and minimality", || {
        let mut timings = Vec::new();
        for round in 0..2u64 {
            let net = sample_network(SEED_GRAPH_PERF + round, 14, false);
            let started = Instant::now();
            let g = funcgraph::build_functional_graph(&net).map_err(|e| e.to_string())?;
            let verdict =
                funcgraph::mintrap_g(&g, &Hypercube::full(14)).map_err(|e| e.to_string())?;
            let elapsed = started.elapsed();
            within(elapsed, Duration::from_secs(10), "build + mintrap_g")?;
            let _ = verdict.answer;
            // asynchronous-equivalence invariant over all 2^14 vertices
            for rank in 0..1u32 << 14 {
                let x = Configuration::from_rank(14, rank);
                let mut ranks = vec![rank];
                ranks.extend(
                    funcgraph::async_out(&net, &x)
                        .map_err(|e| e.to_string())?
                        .ranks(),
                );
                let via_async = funcgraph::sub_hypercube(&VertexSet::from_ranks(14, ranks))
                    .map_err(|e| e.to_string())?;
                let via_sync = funcgraph::sub_hypercube(&VertexSet::from_ranks(
                    14,
                    vec![rank, g.successor_rank(rank)],
                ))
                .map_err(|e| e.to_string())?;
                if via_async != via_sync {
                    return Err(format!("async equivalence fails at {x}"));
                }
            }
            timings.push(format!("{:.2}s", elapsed.as_secs_f64()));
        }
        Ok(format!(
            "build + mintrap_g in {}; async equivalence holds on 2x16384 vertices",
            timings.join(" and ")
        ))
    });
}

// ---------------------------------------------------------------------------
// criterion 9
// ---------------------------------------------------------------------------

#[test]
fn criterion_9_witness_integrity() {
    criterion(9, "witness integrity across the reduction streams", || {
        let mut stats = WitnessStats::default();
        run_taut_soundness(200, &mut stats)?;
        run_qbf_soundness(60, &mut stats)?;
        run_dnf_soundness(60, &mut stats)?;
        run_oracle_equivalence(100, &mut stats)?;
        if stats.verified != stats.false_verdicts {
            return Err(format!(
                "{} of {} false verdicts re-verified",
                stats.verified, stats.false_verdicts
            ));
        }
        Ok(format!(
            "{}/{} false verdicts carry witnesses that re-verify",
            stats.verified, stats.false_verdicts
        ))
    });
}
