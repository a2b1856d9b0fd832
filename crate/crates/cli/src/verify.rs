//! Solver-versus-oracle harness over a seeded random corpus.

use std::io::Write;
use std::time::Instant;

use horizon_core::adversarial::exists_positive_path;
use horizon_core::instances::{random_graph, RandomGraphParams};
use horizon_core::oracle::{
    brute_force_adversarial_value, convex_hull_value, lasso_value, reduce_to_simple_lasso,
    DEFAULT_ORACLE_BUDGET,
};
use horizon_core::rational::{ceil_nat, frac, from_u64, int, to_fraction_string};
use horizon_core::{
    adversarial_value, cycle_decomposition, maxplus_power_value, shift_weights, specified_value,
    value_iteration, Edge, FinitePath, Lasso, Rational, StoppingDistribution, WeightedGraph,
    DEFAULT_WITNESS_BOUND,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::commands::write_to;
use crate::error::{CliError, CliResult};
use crate::formats::{parse_graph, print_graph};
use crate::record::{inputs_digest, ResultRecord};
use crate::VerifyArgs;

/// Largest graph the brute-force oracles are run on.
pub const ORACLE_VERTEX_LIMIT: usize = 8;

const PROPERTIES: [&str; 10] = [
    "round_trip",
    "fixed_methods",
    "fixed_witness",
    "dirac_consistency",
    "adversarial_exact",
    "decision",
    "plan_integrity",
    "shift_equivariance",
    "supporting_line",
    "surgery",
];

const FIXED_MAX_HORIZON: u64 = 64;
const DIRAC_HORIZONS: [u64; 3] = [0, 3, 8];
const MAX_DUMPS: usize = 5;

fn expected_horizons() -> [Rational; 3] {
    [frac(3, 2), int(4), frac(17, 3)]
}

struct Harness {
    passed: [usize; PROPERTIES.len()],
    total: [usize; PROPERTIES.len()],
    dumps: Vec<String>,
    mismatches: usize,
}

impl Harness {
    fn check(&mut self, property: &str, ok: bool, dump: impl FnOnce() -> String) {
        let i = PROPERTIES.iter().position(|p| *p == property).unwrap();
        self.total[i] += 1;
        if ok {
            self.passed[i] += 1;
        } else {
            self.mismatches += 1;
            if self.dumps.len() < MAX_DUMPS {
                self.dumps
                    .push(format!("counterexample: {property}\n{}", dump()));
            }
        }
    }
}

fn dump(
    graph: &WeightedGraph,
    horizon: impl std::fmt::Display,
    solver: &str,
    oracle: &str,
) -> String {
    format!(
        "horizon: {horizon}\nsolver: {solver}\noracle: {oracle}\ngraph:\n{}",
        print_graph(graph)
    )
}

/// `graph` with its first edge weight raised by one.
fn off_by_one(graph: &WeightedGraph) -> WeightedGraph {
    let edges = graph.edges().enumerate().map(|(i, e)| {
        if i == 0 {
            Edge::new(e.source, e.target, e.weight + int(1))
        } else {
            e
        }
    });
    WeightedGraph::new(graph.vertex_count(), edges).expect("same edge set")
}

/// A random walk from vertex 0 closed on an earlier visit once it is at
/// least `min_len` edges long. Usually not simple.
fn random_lasso(graph: &WeightedGraph, min_len: usize, rng: &mut ChaCha8Rng) -> Lasso {
    let mut walk = vec![0];
    loop {
        let succ = graph.successors(*walk.last().unwrap());
        walk.push(succ[rng.gen_range(0..succ.len())].0);
        let end = *walk.last().unwrap();
        let earlier: Vec<usize> = (0..walk.len() - 1).filter(|&i| walk[i] == end).collect();
        if walk.len() > min_len && !earlier.is_empty() {
            let j = earlier[rng.gen_range(0..earlier.len())];
            return Lasso::new(
                FinitePath::from_vertices(walk[..=j].to_vec()),
                FinitePath::from_vertices(walk[j..].to_vec()),
            )
            .expect("closed walk");
        }
    }
}

fn check_instance(
    h: &mut Harness,
    graph: &WeightedGraph,
    solver_graph: &WeightedGraph,
    rng: &mut ChaCha8Rng,
) -> CliResult<()> {
    let reparsed = parse_graph(&print_graph(graph), "round trip");
    h.check("round_trip", reparsed.as_ref().ok() == Some(graph), || {
        dump(graph, "-", "reparse differs", "original")
    });

    for t in 0..=FIXED_MAX_HORIZON {
        let (bellman, witness) = value_iteration(solver_graph, 0, t)?;
        let maxplus = maxplus_power_value(graph, 0, t)?;
        h.check("fixed_methods", bellman == maxplus, || {
            dump(
                graph,
                t,
                &to_fraction_string(&bellman),
                &to_fraction_string(&maxplus),
            )
        });
        let replay = witness.weight(graph)?;
        h.check("fixed_witness", replay == bellman, || {
            dump(
                graph,
                t,
                &to_fraction_string(&bellman),
                &to_fraction_string(&replay),
            )
        });
    }

    for t in DIRAC_HORIZONS {
        let layered = specified_value(
            solver_graph,
            0,
            &StoppingDistribution::dirac(t),
            DEFAULT_WITNESS_BOUND,
        )?;
        let (bellman, _) = value_iteration(graph, 0, t)?;
        h.check("dirac_consistency", layered.value == bellman, || {
            dump(
                graph,
                t,
                &to_fraction_string(&layered.value),
                &to_fraction_string(&bellman),
            )
        });
    }

    let eta = frac(1, 3);
    for horizon in expected_horizons() {
        let ts = to_fraction_string(&horizon);
        let oracle = brute_force_adversarial_value(graph, 0, &horizon, DEFAULT_ORACLE_BUDGET)?;
        let solved = adversarial_value(solver_graph, 0, &horizon)?;
        let (sv, ov) = (
            to_fraction_string(&solved.value),
            to_fraction_string(&oracle.value),
        );
        h.check("adversarial_exact", solved.value == oracle.value, || {
            dump(graph, &ts, &sv, &ov)
        });

        let decided = exists_positive_path(solver_graph, 0, &horizon)?.is_some();
        let nonnegative = oracle.value >= int(0);
        h.check("decision", decided == nonnegative, || {
            dump(graph, &ts, &decided.to_string(), &ov)
        });

        let replay = lasso_value(&solved.plan, graph, &horizon)?.value;
        h.check(
            "plan_integrity",
            solved.plan.is_simple() && replay == solved.value,
            || {
                dump(
                    graph,
                    &ts,
                    &format!("{sv} via {}", solved.plan),
                    &to_fraction_string(&replay),
                )
            },
        );

        let shifted = adversarial_value(&shift_weights(solver_graph, &eta), 0, &horizon)?.value;
        let expected = &oracle.value + &eta * &horizon;
        h.check("shift_equivariance", shifted == expected, || {
            dump(
                graph,
                &ts,
                &to_fraction_string(&shifted),
                &to_fraction_string(&expected),
            )
        });

        // The supporting line of the best lasso stays under its utilities,
        // and its height at T matches the lower convex hull.
        let lv = lasso_value(&oracle.best, graph, &horizon)?;
        let u = oracle.best.utilities(graph)?;
        let window = ceil_nat(&horizon).max(oracle.best.stem_len() as u64)
            + 2 * oracle.best.cycle_len() as u64;
        let below =
            (0..=window).all(|t| u.at(t) >= u.at(lv.t1) + (from_u64(t) - from_u64(lv.t1)) * &lv.nu);
        let hull = convex_hull_value(&oracle.best, graph, &horizon)?;
        h.check("supporting_line", below && hull == lv.value, || {
            dump(
                graph,
                &ts,
                &to_fraction_string(&lv.value),
                &to_fraction_string(&hull),
            )
        });

        // Cycle surgery on a random lasso: simple output, value kept, and a
        // cycle at least as steep as the supporting line in the input.
        let lasso = random_lasso(graph, rng.gen_range(1..3 * graph.vertex_count() + 2), rng);
        let before = lasso_value(&lasso, graph, &horizon)?;
        let reduced = reduce_to_simple_lasso(&lasso, graph, &horizon)?;
        let after = lasso_value(&reduced, graph, &horizon)?.value;
        let laps = graph.vertex_count() + 2;
        let decomposition =
            cycle_decomposition(&lasso.unroll(lasso.stem_len() + laps * lasso.cycle_len()));
        let mut good = false;
        for c in &decomposition.cycles {
            let weight = c.cycle.weight(graph)?;
            if weight / from_u64(c.cycle.len() as u64) >= before.nu {
                good = true;
                break;
            }
        }
        h.check(
            "surgery",
            reduced.is_simple() && after >= before.value && good,
            || {
                dump(
                    graph,
                    &ts,
                    &format!("{} from {lasso}", to_fraction_string(&after)),
                    &to_fraction_string(&before.value),
                )
            },
        );
    }
    Ok(())
}

pub fn verify(args: &VerifyArgs, out: &mut dyn Write) -> CliResult<()> {
    let started = Instant::now();
    if args.max_vertices > ORACLE_VERTEX_LIMIT {
        return Err(CliError::Budget(format!(
            "--max-vertices {} exceeds the oracle limit of {ORACLE_VERTEX_LIMIT}",
            args.max_vertices
        )));
    }
    if args.max_vertices == 0 {
        return Err(CliError::Invalid {
            origin: "--max-vertices".into(),
            message: "must be at least 1".into(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut h = Harness {
        passed: [0; PROPERTIES.len()],
        total: [0; PROPERTIES.len()],
        dumps: Vec::new(),
        mismatches: 0,
    };
    for _ in 0..args.corpus_size {
        let graph = random_graph(&RandomGraphParams {
            vertices: rng.gen_range(1..=args.max_vertices),
            max_weight: args.max_weight,
            density: rng.gen_range(0.2..0.7),
            seed: rng.gen(),
        })?;
        let solver_graph = if args.inject_fault {
            off_by_one(&graph)
        } else {
            graph.clone()
        };
        check_instance(&mut h, &graph, &solver_graph, &mut rng)?;
    }

    let params = format!(
        "corpus_size={}\nmax_vertices={}\nseed={}\nmax_weight={}\ninject_fault={}\n",
        args.corpus_size, args.max_vertices, args.seed, args.max_weight, args.inject_fault
    );
    let mut record = ResultRecord::new("verify");
    record
        .push("inputs", inputs_digest(&[("params", params.as_bytes())]))
        .push("corpus_size", args.corpus_size)
        .push("max_vertices", args.max_vertices)
        .push("seed", args.seed);
    for (i, name) in PROPERTIES.iter().enumerate() {
        record.push(
            &format!("pass.{name}"),
            format!("{}/{}", h.passed[i], h.total[i]),
        );
    }
    record
        .push("mismatches", h.mismatches)
        .push("elapsed_ms", started.elapsed().as_millis());
    let mut text = record.to_string();
    for d in &h.dumps {
        text.push('\n');
        text.push_str(d);
    }
    write_to(out, "standard output", &text)?;
    if h.mismatches > 0 {
        return Err(CliError::Mismatch(format!(
            "{} of the checks disagreed with the oracles",
            h.mismatches
        )));
    }
    Ok(())
}
