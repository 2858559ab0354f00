//! The three decision problems over symbolic encodings, plus the
//! trap-space closure `T(·)`.
//!
//! Everything here reduces to [`kernels::restricted_sat`] queries, so the
//! per-encoding complexity of the kernels carries over directly.

use crate::error::{Error, Result};
use crate::kernels::{self, DEFAULT_SAT_BUDGET};
use crate::model::{BooleanNetwork, Configuration, Hypercube};

/// Guards for the potentially exponential searches.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    /// Assignment budget for the generic backtracking kernel.
    pub sat_budget: u64,
    /// Largest number of free cells `mintrap` will enumerate vertices over.
    pub mintrap_guard: u32,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits {
            sat_budget: DEFAULT_SAT_BUDGET,
            mintrap_guard: 22,
        }
    }
}

/// Evidence attached to a false verdict. Every witness re-verifies by
/// direct evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `config ∈ v(h)` escapes through `component`:
    /// `f_i(config) ≠ h_i` (0-based component).
    Escape {
        component: usize,
        config: Configuration,
    },
    /// A transition of the functional graph leaving `v(h)`.
    Transition {
        from: Configuration,
        to: Configuration,
    },
    /// A trap space strictly inside the queried hypercube.
    SmallerTrap(Hypercube),
}

/// Outcome of a decision problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrapVerdict {
    pub answer: bool,
    /// Present exactly on false answers.
    pub witness: Option<Witness>,
    /// `T(x)` for membership queries.
    pub closure: Option<Hypercube>,
}

impl TrapVerdict {
    pub fn yes() -> TrapVerdict {
        TrapVerdict {
            answer: true,
            witness: None,
            closure: None,
        }
    }

    pub fn no(witness: Witness) -> TrapVerdict {
        TrapVerdict {
            answer: false,
            witness: Some(witness),
            closure: None,
        }
    }
}

fn check_dims(n: usize, len: usize) -> Result<()> {
    if n != len {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: len,
        });
    }
    Ok(())
}

/// TRAPSPACE: is `h` closed under `f`? Components are scanned in ascending
/// order; the first escape found becomes the witness.
pub fn trapspace(f: &BooleanNetwork, h: &Hypercube, limits: Limits) -> Result<TrapVerdict> {
    check_dims(f.n(), h.n())?;
    for (i, value) in h.fixed_positions() {
        if let Some(z) = kernels::restricted_sat(f.local(i), h, !value, limits.sat_budget)? {
            return Ok(TrapVerdict::no(Witness::Escape {
                component: i,
                config: z,
            }));
        }
    }
    Ok(TrapVerdict::yes())
}

/// `T(seed)`: the smallest trap space containing `v(seed)`.
///
/// Iterates passes over the still-fixed components in ascending order,
/// freeing `h_i` whenever some vertex of the current hypercube maps
/// component `i` to the opposite value; stops at the first pass with no
/// change (at most `n` passes).
pub fn compute_t(f: &BooleanNetwork, seed: &Hypercube, limits: Limits) -> Result<Hypercube> {
    check_dims(f.n(), seed.n())?;
    let mut h = seed.clone();
    loop {
        let mut changed = false;
        for i in 0..f.n() {
            if let Some(value) = h.cell(i) {
                if kernels::restricted_sat_exists(f.local(i), &h, !value, limits.sat_budget)? {
                    h.set(i, None);
                    changed = true;
                }
            }
        }
        if !changed {
            return Ok(h);
        }
    }
}

/// Vertex of `h` at Gray-code rank `j`: bit `t` of `j ^ (j >> 1)` drives
/// the `t`-th free position (ascending).
fn gray_vertex(h: &Hypercube, free: &[usize], j: u64) -> Configuration {
    let g = j ^ (j >> 1);
    let mut x = Configuration::new((0..h.n()).map(|i| h.cell(i).unwrap_or(false)).collect());
    for (t, &p) in free.iter().enumerate() {
        x.set(p, g >> t & 1 == 1);
    }
    x
}

/// MINTRAP: is `h` a minimal trap space?
///
/// A hypercube that is not closed is not a minimal trap space (answer
/// false, escape witness). Otherwise every vertex `x` of `h` is enumerated
/// in Gray-code order and the answer is true iff `T(x) = h` throughout; the
/// first failing vertex yields the strictly smaller trap space `T(x)` as
/// witness.
pub fn mintrap(f: &BooleanNetwork, h: &Hypercube, limits: Limits) -> Result<TrapVerdict> {
    let closed = trapspace(f, h, limits)?;
    if !closed.answer {
        return Ok(closed);
    }
    let free: Vec<usize> = h.free_positions().collect();
    if free.len() > limits.mintrap_guard as usize {
        return Err(Error::EnumerationGuard {
            free: free.len(),
            limit: limits.mintrap_guard as usize,
        });
    }
    for j in 0u64..1 << free.len() {
        let x = gray_vertex(h, &free, j);
        let t = compute_t(f, &Hypercube::point(&x), limits)?;
        if &t != h {
            debug_assert!(h.contains_cube(&t));
            return Ok(TrapVerdict::no(Witness::SmallerTrap(t)));
        }
    }
    Ok(TrapVerdict::yes())
}

/// IN-MINTRAP: does `x` lie in a minimal trap space? Decides
/// `MINTRAP(f, T(x))`; the verdict carries `T(x)`.
pub fn in_mintrap(f: &BooleanNetwork, x: &Configuration, limits: Limits) -> Result<TrapVerdict> {
    check_dims(f.n(), x.n())?;
    let closure = compute_t(f, &Hypercube::point(x), limits)?;
    let mut verdict = mintrap(f, &closure, limits)?;
    debug_assert!(
        verdict.answer || matches!(verdict.witness, Some(Witness::SmallerTrap(_))),
        "T(x) is a trap space, so mintrap cannot report an escape"
    );
    verdict.closure = Some(closure);
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{parse_network, ModelFormat};

    fn example2() -> BooleanNetwork {
        parse_network(
            "x1, (!x1 | !x2) & x3\nx2, x1 & x3\nx3, x1 | x2 | x3\n",
            ModelFormat::Bn,
        )
        .unwrap()
    }

    /// f = (x1 xor x2, x1 | x2); trap spaces are exactly {00, *1, **}.
    fn xor_or() -> BooleanNetwork {
        parse_network(
            "x1, (x1 & !x2) | (!x1 & x2)\nx2, x1 | x2\n",
            ModelFormat::Bn,
        )
        .unwrap()
    }

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn trapspace_example2() {
        let f = example2();
        let v = trapspace(&f, &"**1".parse().unwrap(), limits()).unwrap();
        assert!(v.answer);
        let v = trapspace(&f, &"***".parse().unwrap(), limits()).unwrap();
        assert!(v.answer);
    }

    #[test]
    fn trapspace_example2_counterexample() {
        let f = example2();
        let v = trapspace(&f, &"*00".parse().unwrap(), limits()).unwrap();
        assert!(!v.answer);
        match v.witness {
            Some(Witness::Escape {
                component: 2,
                config,
            }) => {
                assert_eq!(config.to_string(), "100")
            }
            other => panic!("unexpected witness: {other:?}"),
        }
    }

    #[test]
    fn compute_t_example2() {
        let f = example2();
        for seed in ["010", "01*", "0*0"] {
            let t = compute_t(&f, &seed.parse().unwrap(), limits()).unwrap();
            assert_eq!(t.to_string(), "***", "seed {seed}");
        }
    }

    #[test]
    fn compute_t_fixed_point() {
        let f = example2();
        let t = compute_t(&f, &"000".parse().unwrap(), limits()).unwrap();
        assert_eq!(t.to_string(), "000");
    }

    #[test]
    fn trapspace_iff_closure_is_identity() {
        let f = example2();
        let cubes = ["000", "**1", "*00", "01*", "***", "1*1", "0**"];
        for cube in cubes {
            let h: Hypercube = cube.parse().unwrap();
            let closed = trapspace(&f, &h, limits()).unwrap().answer;
            let fixed = compute_t(&f, &h, limits()).unwrap() == h;
            assert_eq!(closed, fixed, "{cube}");
        }
    }

    #[test]
    fn mintrap_example2() {
        let f = example2();
        assert!(
            mintrap(&f, &"**1".parse().unwrap(), limits())
                .unwrap()
                .answer
        );
        let v = mintrap(&f, &"***".parse().unwrap(), limits()).unwrap();
        assert!(!v.answer);
        match v.witness {
            Some(Witness::SmallerTrap(t)) => assert_eq!(t.to_string(), "000"),
            other => panic!("unexpected witness: {other:?}"),
        }
    }

    #[test]
    fn mintrap_non_trap_space_is_false_not_an_error() {
        let f = example2();
        let v = mintrap(&f, &"*00".parse().unwrap(), limits()).unwrap();
        assert!(!v.answer);
        assert!(matches!(v.witness, Some(Witness::Escape { .. })));
    }

    #[test]
    fn mintrap_xor_or() {
        let f = xor_or();
        assert!(
            mintrap(&f, &"*1".parse().unwrap(), limits())
                .unwrap()
                .answer
        );
        assert!(
            mintrap(&f, &"00".parse().unwrap(), limits())
                .unwrap()
                .answer
        );
        assert!(
            !mintrap(&f, &"**".parse().unwrap(), limits())
                .unwrap()
                .answer
        );
    }

    #[test]
    fn in_mintrap_example2() {
        let f = example2();
        let v = in_mintrap(&f, &"000".parse().unwrap(), limits()).unwrap();
        assert!(v.answer);
        assert_eq!(v.closure.unwrap().to_string(), "000");
        let v = in_mintrap(&f, &"010".parse().unwrap(), limits()).unwrap();
        assert!(!v.answer);
        assert_eq!(v.closure.unwrap().to_string(), "***");
    }

    #[test]
    fn in_mintrap_xor_or() {
        let f = xor_or();
        let v = in_mintrap(&f, &"11".parse().unwrap(), limits()).unwrap();
        assert!(v.answer);
        assert_eq!(v.closure.unwrap().to_string(), "*1");
    }

    #[test]
    fn enumeration_guard_trips() {
        let f = example2();
        let tight = Limits {
            mintrap_guard: 2,
            ..Limits::default()
        };
        match mintrap(&f, &"***".parse().unwrap(), tight) {
            Err(Error::EnumerationGuard { free: 3, limit: 2 }) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn one_dimension_fixing_would_be_unsound() {
        // The documented counterexample: T(0*) = T(*0) = ** although 00 is
        // a trap space, so vertex enumeration is required.
        let f = xor_or();
        assert_eq!(
            compute_t(&f, &"0*".parse().unwrap(), limits())
                .unwrap()
                .to_string(),
            "**"
        );
        assert_eq!(
            compute_t(&f, &"*0".parse().unwrap(), limits())
                .unwrap()
                .to_string(),
            "**"
        );
        assert!(
            trapspace(&f, &"00".parse().unwrap(), limits())
                .unwrap()
                .answer
        );
    }
}
