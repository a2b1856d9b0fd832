//! The solver and generator commands.

use std::io::Write;
use std::path::Path;
use std::time::Instant;

use horizon_core::instances::{fig1, fig2, random_graph, RandomGraphParams};
use horizon_core::oracle::lasso_value;
use horizon_core::rational::to_fraction_string;
use horizon_core::{
    adversarial::decide_at_least, adversarial_value, build_np_gadget, maxplus_power_value,
    specified_value, value_iteration, WeightedGraph,
};

use crate::error::{CliError, CliResult};
use crate::formats::{parse_distribution, parse_graph, print_graph};
use crate::record::{inputs_digest, ResultRecord};
use crate::{AdversarialArgs, FixedArgs, GenArgs, GenKind, Method, SpecifiedArgs};

pub(crate) fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })
}

pub(crate) fn write_to(out: &mut dyn Write, path: &str, text: &str) -> CliResult<()> {
    out.write_all(text.as_bytes())
        .and_then(|()| out.flush())
        .map_err(|source| CliError::Write {
            path: path.to_string(),
            source,
        })
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|source| CliError::Write {
        path: path.display().to_string(),
        source,
    })
}

fn load_graph(path: &Path) -> CliResult<(String, WeightedGraph)> {
    let text = read_file(path)?;
    let graph = parse_graph(&text, &path.display().to_string())?;
    Ok((text, graph))
}

fn finish(mut record: ResultRecord, started: Instant, out: &mut dyn Write) -> CliResult<()> {
    record.push("elapsed_ms", started.elapsed().as_millis());
    write_to(out, "standard output", &record.to_string())
}

pub fn fixed(args: &FixedArgs, out: &mut dyn Write) -> CliResult<()> {
    let started = Instant::now();
    let (text, graph) = load_graph(&args.graph)?;
    graph.check_vertex(args.start)?;
    let params = format!("start={}\nhorizon={}\n", args.start, args.horizon);
    let method = match args.method {
        Method::Bellman => "bellman",
        Method::Maxplus => "maxplus",
        Method::Both => "both",
    };
    let (value, witness) = match args.method {
        Method::Maxplus => (maxplus_power_value(&graph, args.start, args.horizon)?, None),
        Method::Bellman => {
            let (v, w) = value_iteration(&graph, args.start, args.horizon)?;
            (v, Some(w))
        }
        Method::Both => {
            let (v, w) = value_iteration(&graph, args.start, args.horizon)?;
            let m = maxplus_power_value(&graph, args.start, args.horizon)?;
            if v != m {
                return Err(CliError::Mismatch(format!(
                    "bellman gives {} but maxplus gives {}",
                    to_fraction_string(&v),
                    to_fraction_string(&m)
                )));
            }
            (v, Some(w))
        }
    };
    let mut record = ResultRecord::new("fixed");
    record
        .push(
            "inputs",
            inputs_digest(&[("graph", text.as_bytes()), ("params", params.as_bytes())]),
        )
        .push("start", args.start)
        .push("horizon", args.horizon)
        .push("method", method)
        .push("value", to_fraction_string(&value))
        .push(
            "witness",
            witness.map_or_else(|| "none".to_string(), |w| w.to_string()),
        );
    finish(record, started, out)
}

pub fn specified(args: &SpecifiedArgs, out: &mut dyn Write) -> CliResult<()> {
    let started = Instant::now();
    let (graph_text, graph) = load_graph(&args.graph)?;
    let dist_text = read_file(&args.distribution)?;
    let dist = parse_distribution(&dist_text, &args.distribution.display().to_string())?;
    graph.check_vertex(args.start)?;
    let params = format!(
        "start={}\nwitness_bound={}\n",
        args.start, args.witness_bound
    );
    let result = specified_value(&graph, args.start, &dist, args.witness_bound)?;
    let mut record = ResultRecord::new("specified");
    record
        .push(
            "inputs",
            inputs_digest(&[
                ("graph", graph_text.as_bytes()),
                ("distribution", dist_text.as_bytes()),
                ("params", params.as_bytes()),
            ]),
        )
        .push("start", args.start)
        .push("support", dist.points().len())
        .push("expected_time", to_fraction_string(&dist.expected_time()))
        .push("value", to_fraction_string(&result.value))
        .push(
            "witness",
            result
                .witness
                .map_or_else(|| "none".to_string(), |w| w.to_string()),
        );
    finish(record, started, out)
}

pub fn adversarial(args: &AdversarialArgs, out: &mut dyn Write) -> CliResult<()> {
    let started = Instant::now();
    let (text, graph) = load_graph(&args.graph)?;
    graph.check_vertex(args.start)?;
    let horizon = &args.expected_horizon;
    if *horizon <= horizon_core::rational::int(0) {
        return Err(CliError::Invalid {
            origin: "--expected-horizon".into(),
            message: format!("must be positive, got {}", to_fraction_string(horizon)),
        });
    }
    let mut params = format!(
        "start={}\nexpected_horizon={}\n",
        args.start,
        to_fraction_string(horizon)
    );
    if let Some(threshold) = &args.decide_only {
        params.push_str(&format!("decide_only={}\n", to_fraction_string(threshold)));
    }
    let mut record = ResultRecord::new("adversarial");
    record
        .push(
            "inputs",
            inputs_digest(&[("graph", text.as_bytes()), ("params", params.as_bytes())]),
        )
        .push("start", args.start)
        .push("expected_horizon", to_fraction_string(horizon));
    match &args.decide_only {
        Some(threshold) => {
            let certificate = decide_at_least(&graph, args.start, horizon, threshold)?;
            record
                .push("threshold", to_fraction_string(threshold))
                .push("decision", certificate.is_some())
                .push(
                    "witness",
                    certificate.map_or_else(|| "none".to_string(), |c| c.lasso.to_string()),
                );
        }
        None => {
            let result = adversarial_value(&graph, args.start, horizon)?;
            let attained = lasso_value(&result.plan, &graph, horizon)?.attained;
            record
                .push("value", to_fraction_string(&result.value))
                .push("witness", &result.plan)
                .push("attained", attained)
                .push("probes", result.probes);
        }
    }
    finish(record, started, out)
}

pub fn gen(args: &GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    let graph = match &args.kind {
        GenKind::Fig1 { n } => fig1(*n)?,
        GenKind::Fig2 { loops } => fig2([loops[0], loops[1], loops[2]])?,
        GenKind::Random {
            vertices,
            max_weight,
            density,
            seed,
        } => random_graph(&RandomGraphParams {
            vertices: *vertices,
            max_weight: *max_weight,
            density: *density,
            seed: *seed,
        })?,
        GenKind::NpGadget {
            base,
            v1,
            v2,
            sidecar,
        } => {
            let (text, base_graph) = load_graph(base)?;
            let gadget = build_np_gadget(&base_graph, *v1, *v2)?;
            let params = format!("v1={v1}\nv2={v2}\n");
            let mut record = ResultRecord::new("gen np-gadget");
            record
                .push(
                    "inputs",
                    inputs_digest(&[("graph", text.as_bytes()), ("params", params.as_bytes())]),
                )
                .push("start", gadget.start)
                .push("sink", gadget.sink)
                .push("horizon", gadget.horizon)
                .push("threshold", to_fraction_string(&gadget.threshold));
            match sidecar {
                Some(path) => write_file(path, &record.to_string())?,
                None => write_to(err, "standard error", &record.to_string())?,
            }
            gadget.graph
        }
    };
    let text = print_graph(&graph);
    match &args.output {
        Some(path) => write_file(path, &text),
        None => write_to(out, "standard output", &text),
    }
}
