//! Command-line front end: generate the graph families, build and evaluate
//! branch decompositions, detect the matching patterns, compute exact widths
//! of small graphs, and solve locally checkable problems over a
//! decomposition.
//!
//! Exit codes: 0 success, 2 input or precondition error, 3 infeasible.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use simwidth::cocomp::CocompSearch;
use simwidth::decomposition::f_width;
use simwidth::error::Error;
use simwidth::generators as gen;
use simwidth::graph::{Graph, VertexId};
use simwidth::io;
use simwidth::solver::{self, Objective, Problem};
use simwidth::CutFunctionKind;

#[derive(Parser)]
#[command(
    name = "simwidth",
    version,
    about = "Branch-decomposition width toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph family as an edge list plus side-car files.
    ///
    /// Families: ktst T | ktkt T | ccgrid P Q | hsu P Q | split M |
    /// subdivgrid K | circle K | random-chordal N DENSITY |
    /// random-interval N | random-permutation N
    Gen {
        family: String,
        /// Family parameters, in order.
        params: Vec<String>,
        /// Seed for the random families.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output prefix: writes <out>.el and side-cars <out>.ord /
        /// <out>.chords where applicable. Without it the edge list goes to
        /// stdout and side-cars are skipped.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a branch decomposition of a graph.
    Decompose {
        graph: PathBuf,
        /// chordal (clique-tree construction), cocomp (linear, from a
        /// co-comparability ordering), or caterpillar (linear, from any
        /// ordering).
        #[arg(long)]
        method: String,
        /// Ordering file for the cocomp/caterpillar methods; cocomp searches
        /// for one when absent.
        #[arg(long)]
        ordering: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a cut function on every edge of a decomposition.
    Width {
        graph: PathBuf,
        decomposition: PathBuf,
        #[arg(long, default_value = "sim")]
        f: String,
    },
    /// Solve a locally checkable problem over a decomposition.
    Solve {
        graph: PathBuf,
        decomposition: PathBuf,
        /// dominating-set | independent-set | total-dominating-set |
        /// coloring:q | sigma=<set>;rho=<set> with <set> like finite:0,2 or
        /// cofinite:0
        problem: String,
        #[arg(long, default_value = "min")]
        objective: String,
        /// Weight file: lines `vertex weight`; unlisted vertices weigh 1.
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Search for an induced matching pattern of order t.
    Detect {
        graph: PathBuf,
        /// ktkt or ktst
        pattern: String,
        t: usize,
    },
    /// Exact width of a small graph by exhaustive search.
    Oracle {
        graph: PathBuf,
        #[arg(long, default_value = "sim")]
        f: String,
        /// Restrict to linear decompositions (vertex orderings).
        #[arg(long)]
        linear: bool,
        /// Size cap; the command refuses larger graphs.
        #[arg(long)]
        max_n: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Gen {
            family,
            params,
            seed,
            out,
        } => run_gen(&family, &params, seed, out),
        Command::Decompose {
            graph,
            method,
            ordering,
            out,
        } => run_decompose(&graph, &method, ordering, out),
        Command::Width {
            graph,
            decomposition,
            f,
        } => run_width(&graph, &decomposition, &f),
        Command::Solve {
            graph,
            decomposition,
            problem,
            objective,
            weights,
        } => run_solve(&graph, &decomposition, &problem, &objective, weights),
        Command::Detect { graph, pattern, t } => run_detect(&graph, &pattern, t),
        Command::Oracle {
            graph,
            f,
            linear,
            max_n,
        } => run_oracle(&graph, &f, linear, max_n),
    }
}

struct Generated {
    graph: Graph,
    ordering: Option<Vec<VertexId>>,
    chords: Option<gen::ChordModel>,
}

fn param<T: std::str::FromStr>(params: &[String], i: usize, name: &str) -> Result<T, Error> {
    let raw = params
        .get(i)
        .ok_or_else(|| Error::InvalidArgument(format!("missing parameter {name}")))?;
    raw.parse()
        .map_err(|_| Error::InvalidArgument(format!("bad {name}: {raw:?}")))
}

fn run_gen(
    family: &str,
    params: &[String],
    seed: u64,
    out: Option<PathBuf>,
) -> Result<ExitCode, Error> {
    let plain = |graph: Graph| Generated {
        graph,
        ordering: None,
        chords: None,
    };
    let generated = match family {
        "ktst" => plain(gen::gen_ktst(param(params, 0, "t")?)),
        "ktkt" => plain(gen::gen_ktkt(param(params, 0, "t")?)),
        "ccgrid" => {
            let (graph, ordering) =
                gen::gen_column_clique_grid(param(params, 0, "p")?, param(params, 1, "q")?);
            Generated {
                graph,
                ordering: Some(ordering),
                chords: None,
            }
        }
        "hsu" => plain(gen::gen_hsu_clique_chain(
            param(params, 0, "p")?,
            param(params, 1, "q")?,
        )),
        "split" => plain(gen::gen_split_lowerbound(param(params, 0, "m")?)),
        "subdivgrid" => plain(gen::gen_grid_subdivision(param(params, 0, "k")?)),
        "circle" => {
            let (graph, chords) = gen::gen_circle_gk(param(params, 0, "k")?);
            Generated {
                graph,
                ordering: None,
                chords: Some(chords),
            }
        }
        "random-chordal" => plain(gen::gen_random_chordal(
            param(params, 0, "n")?,
            param(params, 1, "density")?,
            seed,
        )),
        "random-interval" => plain(gen::gen_random_interval(param(params, 0, "n")?, seed)),
        "random-permutation" => {
            let graph = gen::gen_random_permutation(param(params, 0, "n")?, seed);
            let ordering = graph.vertex_ids().to_vec();
            debug_assert_eq!(simwidth::verify_cocomp_ordering(&graph, &ordering)?, None);
            Generated {
                graph,
                ordering: Some(ordering),
                chords: None,
            }
        }
        other => {
            return Err(Error::InvalidArgument(format!("unknown family {other:?}")));
        }
    };
    let el = io::write_edge_list(&generated.graph);
    match out {
        Some(prefix) => {
            let base = prefix.to_string_lossy().into_owned();
            fs::write(format!("{base}.el"), &el)?;
            println!(
                "# gen {family}: wrote {base}.el ({} vertices, {} edges)",
                generated.graph.vertex_count(),
                generated.graph.edge_count()
            );
            if let Some(order) = &generated.ordering {
                fs::write(format!("{base}.ord"), io::write_ordering(order))?;
                println!("# gen {family}: wrote {base}.ord");
            }
            if let Some(model) = &generated.chords {
                fs::write(format!("{base}.chords"), io::write_chord_model(model))?;
                println!("# gen {family}: wrote {base}.chords");
            }
        }
        None => print!("{el}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_decompose(
    graph: &PathBuf,
    method: &str,
    ordering: Option<PathBuf>,
    out: Option<PathBuf>,
) -> Result<ExitCode, Error> {
    let g = io::parse_edge_list(&fs::read_to_string(graph)?)?;
    let ordering = match ordering {
        Some(path) => Some(io::parse_ordering(&fs::read_to_string(path)?)?),
        None => None,
    };
    let decomposition = match method {
        "chordal" => match simwidth::chordal_branch_decomposition(&g) {
            Ok(d) => d,
            Err(Error::NotChordal(cycle)) => {
                println!("not chordal: induced cycle {}", join(&cycle));
                return Ok(ExitCode::from(2));
            }
            Err(e) => return Err(e),
        },
        "cocomp" => {
            let order = match ordering {
                Some(order) => order,
                None => match simwidth::find_cocomp_ordering(&g) {
                    CocompSearch::Found(order) => order,
                    CocompSearch::Exhausted => {
                        println!("not a co-comparability graph: search exhausted");
                        return Ok(ExitCode::from(2));
                    }
                    CocompSearch::BudgetExceeded => {
                        println!("indeterminate: ordering search budget exceeded");
                        return Ok(ExitCode::from(2));
                    }
                },
            };
            match simwidth::cocomp_linear_decomposition(&g, &order) {
                Ok(d) => d,
                Err(Error::NotCocompOrdering((a, b, c))) => {
                    println!("not a co-comparability ordering: violating triple {a} {b} {c}");
                    return Ok(ExitCode::from(2));
                }
                Err(e) => return Err(e),
            }
        }
        "caterpillar" => {
            let order = ordering.ok_or_else(|| {
                Error::InvalidArgument("caterpillar method needs --ordering".into())
            })?;
            let d = simwidth::caterpillar_from_ordering(&order)?;
            d.validate_against(&g)?;
            d
        }
        other => {
            return Err(Error::InvalidArgument(format!("unknown method {other:?}")));
        }
    };
    let sim = f_width(&g, &decomposition, CutFunctionKind::Sim)?.max;
    let header = format!(
        "# branch decomposition: method={method} linear={} sim-width={sim}\n",
        decomposition.is_linear()
    );
    let body = io::write_decomposition(&decomposition);
    match out {
        Some(path) => {
            fs::write(&path, format!("{header}{body}"))?;
            print!("{header}");
        }
        None => print!("{header}{body}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_width(graph: &PathBuf, decomposition: &PathBuf, f: &str) -> Result<ExitCode, Error> {
    let g = io::parse_edge_list(&fs::read_to_string(graph)?)?;
    let d = io::parse_decomposition(&fs::read_to_string(decomposition)?)?;
    let kind: CutFunctionKind = f.parse()?;
    let report = f_width(&g, &d, kind)?;
    println!("# width report: f={}", kind.name());
    for (e, v) in &report.per_edge {
        println!("edge {e} {v}");
    }
    match report.argmax_edge {
        Some(e) => println!("max {} edge {e}", report.max),
        None => println!("max 0"),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_solve(
    graph: &PathBuf,
    decomposition: &PathBuf,
    problem: &str,
    objective: &str,
    weights: Option<PathBuf>,
) -> Result<ExitCode, Error> {
    let g = io::parse_edge_list(&fs::read_to_string(graph)?)?;
    let d = io::parse_decomposition(&fs::read_to_string(decomposition)?)?;
    let parsed: Problem = problem.parse()?;
    let objective: Objective = objective.parse()?;
    let weights = match weights {
        Some(path) => Some(io::parse_weights(&fs::read_to_string(path)?)?),
        None => None,
    };
    println!("# solve: problem={problem}");
    match parsed {
        Problem::SigmaRho { sigma, rho } => {
            match solver::solve_sigma_rho(&g, &d, &sigma, &rho, objective, weights.as_ref())? {
                Some(solution) => {
                    println!("objective {}", solution.objective);
                    let ids: Vec<VertexId> = solution.selected.iter().copied().collect();
                    println!("selected {}", join(&ids));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("infeasible");
                    Ok(ExitCode::from(3))
                }
            }
        }
        Problem::Partition(dq) => match solver::solve_dq_partition(&g, &d, &dq)? {
            Some(solution) => {
                for (i, part) in solution.parts.iter().enumerate() {
                    let ids: Vec<VertexId> = part.iter().copied().collect();
                    println!("part {i}: {}", join(&ids));
                }
                Ok(ExitCode::SUCCESS)
            }
            None => {
                println!("infeasible");
                Ok(ExitCode::from(3))
            }
        },
    }
}

fn run_detect(graph: &PathBuf, pattern: &str, t: usize) -> Result<ExitCode, Error> {
    let g = io::parse_edge_list(&fs::read_to_string(graph)?)?;
    let witness = match pattern {
        "ktst" => simwidth::detect_ktst(&g, t)?,
        "ktkt" => simwidth::detect_ktkt(&g, t)?,
        other => {
            return Err(Error::InvalidArgument(format!(
                "pattern must be ktst or ktkt, got {other:?}"
            )));
        }
    };
    println!("# detect: pattern={pattern} t={t}");
    match witness {
        Some(w) => println!(
            "witness clique {} partners {}",
            join(&w.clique),
            join(&w.partners)
        ),
        None => println!("none"),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_oracle(
    graph: &PathBuf,
    f: &str,
    linear: bool,
    max_n: Option<usize>,
) -> Result<ExitCode, Error> {
    let g = io::parse_edge_list(&fs::read_to_string(graph)?)?;
    let kind: CutFunctionKind = f.parse()?;
    println!("# oracle: f={} linear={linear}", kind.name());
    if linear {
        let cap = max_n.unwrap_or(simwidth::oracle::DEFAULT_LINEAR_MAX_N);
        let (value, order) = simwidth::exact_linear_width(&g, kind, cap)?;
        println!("exact {value}");
        println!("ordering {}", join(&order));
    } else {
        let cap = max_n.unwrap_or(simwidth::oracle::DEFAULT_MAX_N);
        let (value, d) = simwidth::exact_width(&g, kind, cap)?;
        println!("exact {value}");
        print!("{}", io::write_decomposition(&d));
    }
    Ok(ExitCode::SUCCESS)
}

fn join(ids: &[VertexId]) -> String {
    ids.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}
