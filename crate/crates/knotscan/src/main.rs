use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use knotscan::cache;
use knotscan::census::{self, Property};
use knotscan::classify::{
    check_adams, classify_knotting, classify_linking_opts, CertifiedStore, KnotVerdict,
};
use knotscan::graph::Graph;
use knotscan::graph6;
use knotscan::lab::{adams_sweep, SweepScope};
use knotscan::notation::{self, Resolved};
use knotscan::report;
use knotscan::tables::{table_check, TABLE_IDS};
use knotscan::ty::{closure, structural_fingerprints, MoveSet};

#[derive(Parser)]
#[command(name = "knotscan", version, about = "graph-minor laboratory for intrinsic knotting and linking")]
struct Cli {
    /// Cache directory (overrides KNOTSCAN_CACHE; default .knotscan-cache)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PropertyArg {
    Linking,
    Knotting,
}

#[derive(Args)]
struct GraphInput {
    /// Graph in the K-notation, e.g. "K{3,3,1,1}-{(c,d)}" or "K{7}-2e"
    #[arg(long, conflicts_with = "graph6")]
    spec: Option<String>,
    /// Graph in graph6 encoding
    #[arg(long)]
    graph6: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a graph for intrinsic linking or knotting
    Classify {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum)]
        property: PropertyArg,
        /// Cross-check fast paths against exhaustive search
        #[arg(long)]
        validate: bool,
    },
    /// Generate the exchange closure of a seed graph
    Family {
        /// Seed in K-notation, e.g. "K{6}"
        #[arg(long)]
        seed: String,
        /// Moves: "dy" or "dy,yd"
        #[arg(long, default_value = "dy")]
        moves: String,
        /// Also print structural fingerprints
        #[arg(long)]
        fingerprints: bool,
    },
    /// Replay classification tables against the classifiers
    Tables {
        /// Table id (il0, ik0, il1, ik1, il2a, il2b, ik2a, ik2b) or "all"
        #[arg(long, default_value = "all")]
        table: String,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Print every case, not only mismatches
        #[arg(long)]
        verbose: bool,
    },
    /// Knotting census of all graphs on a given vertex count
    Census {
        #[arg(long, default_value_t = 8)]
        vertices: usize,
        #[arg(long, default_value_t = 8)]
        k_max: usize,
    },
    /// Adams vertex-deletion sweeps
    Adams {
        /// "tables", "census", or a single graph via --spec/--graph6
        #[arg(long)]
        scope: Option<String>,
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long)]
        verbose: bool,
    },
    /// Maximum edges among n-vertex graphs without a property
    Bounds {
        #[arg(long, value_enum)]
        property: PropertyArg,
        #[arg(long)]
        vertices: usize,
    },
    /// Encode a spec as graph6
    Encode {
        #[arg(long)]
        spec: String,
    },
    /// Decode graph6 and print the graph
    Decode {
        #[arg(long)]
        graph6: String,
    },
}

/// Exit codes: 0 definite verdict / success, 1 input error, 2 Unknown.
fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = e.print();
                    return ExitCode::SUCCESS;
                }
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
    }
}

fn resolve_input(input: &GraphInput) -> Result<(Graph, Vec<(usize, usize)>, String), String> {
    match (&input.spec, &input.graph6) {
        (Some(spec), None) => match notation::resolve_text(spec).map_err(|e| e.to_string())? {
            Resolved::One {
                graph,
                labeling,
                removed,
            } => {
                let mut removed_pairs = Vec::new();
                for e in &removed {
                    let u = labeling.vertex(e.0.letter, e.0.index).map_err(|e| e.to_string())?;
                    let v = labeling.vertex(e.1.letter, e.1.index).map_err(|e| e.to_string())?;
                    removed_pairs.push((u, v));
                }
                Ok((graph, removed_pairs, spec.clone()))
            }
            Resolved::Cases(_) => Err(format!(
                "'{}' resolves to multiple cases; use an explicit edge set",
                spec
            )),
        },
        (None, Some(enc)) => {
            let g = graph6::decode(enc).map_err(|e| e.to_string())?;
            Ok((g, Vec::new(), enc.clone()))
        }
        _ => Err("provide exactly one of --spec or --graph6".into()),
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    let dir = cache::cache_dir(cli.cache_dir.as_deref());
    match &cli.command {
        Command::Classify {
            input,
            property,
            validate,
        } => {
            let (graph, removed, name) = resolve_input(input)?;
            match property {
                PropertyArg::Linking => {
                    let verdict = classify_linking_opts(&graph, *validate);
                    match cli.format {
                        Format::Text => println!("{}", report::render_link_verdict(&verdict)),
                        Format::Json => println!(
                            "{}",
                            serde_json::to_string_pretty(&verdict).map_err(|e| e.to_string())?
                        ),
                        Format::Dot => print!("{}", report::graph_to_dot(&graph, &removed, &name)),
                    }
                    Ok(ExitCode::SUCCESS)
                }
                PropertyArg::Knotting => {
                    let store = CertifiedStore::new();
                    cache::load_certified(&dir, &store);
                    let verdict = classify_knotting(&graph, &store);
                    let _ = cache::save_certified(&dir, &store);
                    match cli.format {
                        Format::Text => println!("{}", report::render_knot_verdict(&verdict)),
                        Format::Json => println!(
                            "{}",
                            serde_json::to_string_pretty(&verdict).map_err(|e| e.to_string())?
                        ),
                        Format::Dot => print!("{}", report::graph_to_dot(&graph, &removed, &name)),
                    }
                    if verdict.is_unknown() {
                        Ok(ExitCode::from(2))
                    } else {
                        Ok(ExitCode::SUCCESS)
                    }
                }
            }
        }
        Command::Family {
            seed,
            moves,
            fingerprints,
        } => {
            let moveset = match moves.as_str() {
                "dy" => MoveSet::DeltaYOnly,
                "dy,yd" | "yd,dy" => MoveSet::Both,
                other => return Err(format!("unknown move set '{}'", other)),
            };
            let seed_graph = match notation::resolve_text(seed).map_err(|e| e.to_string())? {
                Resolved::One { graph, .. } => graph,
                Resolved::Cases(_) => return Err("seed must be a single graph".into()),
            };
            let reg = match cache::load_registry(&dir, "family", &seed_graph, moveset) {
                Some(reg) => reg,
                None => {
                    let mut reg = closure(&seed_graph, moveset, knotscan::ty::DEFAULT_CLOSURE_CAP)
                        .map_err(|e| e.to_string())?;
                    reg.name = "family".into();
                    reg.provenance = format!("closure of {} under {}", seed, moves);
                    let _ = cache::save_registry(&dir, &reg);
                    reg
                }
            };
            match cli.format {
                Format::Text => {
                    print!("{}", report::render_registry(&reg));
                    if *fingerprints {
                        print!("{}", report::render_fingerprints(&structural_fingerprints(&reg)));
                    }
                }
                Format::Json => {
                    let fps = structural_fingerprints(&reg);
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&fps).map_err(|e| e.to_string())?
                    );
                }
                Format::Dot => {
                    for m in &reg.members {
                        print!("{}", report::graph_to_dot(&m.graph, &[], &m.name));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Tables {
            table,
            n_max,
            verbose,
        } => {
            let ids: Vec<&str> = if table == "all" {
                TABLE_IDS.to_vec()
            } else if TABLE_IDS.contains(&table.as_str()) {
                vec![table.as_str()]
            } else {
                return Err(format!("unknown table '{}'", table));
            };
            let store = CertifiedStore::new();
            cache::load_certified(&dir, &store);
            let mut all_pass = true;
            let mut reports = Vec::new();
            for id in ids {
                let report = table_check(id, *n_max, &store).map_err(|e| e.to_string())?;
                all_pass &= report.passed();
                reports.push(report);
            }
            let _ = cache::save_certified(&dir, &store);
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&reports).map_err(|e| e.to_string())?
                ),
                _ => {
                    for r in &reports {
                        print!("{}", report::render_table_report(r, *verbose));
                    }
                }
            }
            if all_pass {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(2))
            }
        }
        Command::Census { vertices, k_max } => {
            let store = CertifiedStore::new();
            cache::load_certified(&dir, &store);
            let report = census::census(*vertices, *k_max, &store);
            let _ = cache::save_certified(&dir, &store);
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?
                ),
                _ => print!("{}", report::render_census(&report)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Adams {
            scope,
            input,
            n_max,
            verbose,
        } => {
            let store = CertifiedStore::new();
            cache::load_certified(&dir, &store);
            match scope.as_deref() {
                Some("tables") => {
                    let report =
                        adams_sweep(SweepScope::Tables, *n_max, &store).map_err(|e| e.to_string())?;
                    let _ = cache::save_certified(&dir, &store);
                    match cli.format {
                        Format::Json => println!(
                            "{}",
                            serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?
                        ),
                        _ => print!("{}", report::render_adams_sweep(&report, *verbose)),
                    }
                    Ok(if report.all_pass {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(2)
                    })
                }
                Some("census") => {
                    let report = adams_sweep(
                        SweepScope::Census { n: 8, k_max: 8 },
                        *n_max,
                        &store,
                    )
                    .map_err(|e| e.to_string())?;
                    let _ = cache::save_certified(&dir, &store);
                    match cli.format {
                        Format::Json => println!(
                            "{}",
                            serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?
                        ),
                        _ => print!("{}", report::render_adams_sweep(&report, *verbose)),
                    }
                    Ok(if report.all_pass {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(2)
                    })
                }
                Some(other) => Err(format!("unknown scope '{}'", other)),
                None => {
                    let (graph, _, _) = resolve_input(input)?;
                    let report = check_adams(&graph, &store);
                    let _ = cache::save_certified(&dir, &store);
                    match cli.format {
                        Format::Json => println!(
                            "{}",
                            serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?
                        ),
                        _ => print!("{}", report::render_adams(&report)),
                    }
                    Ok(if report.pass {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(2)
                    })
                }
            }
        }
        Command::Bounds { property, vertices } => {
            let store = CertifiedStore::new();
            cache::load_certified(&dir, &store);
            let prop = match property {
                PropertyArg::Linking => Property::Linking,
                PropertyArg::Knotting => Property::Knotting,
            };
            let report = census::max_edges_without(prop, *vertices, &store);
            let _ = cache::save_certified(&dir, &store);
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?
                ),
                Format::Dot => {
                    for (i, enc) in report.witnesses_graph6.iter().enumerate() {
                        let g = graph6::decode(enc).map_err(|e| e.to_string())?;
                        print!("{}", report::graph_to_dot(&g, &[], &format!("witness{}", i)));
                    }
                }
                Format::Text => print!("{}", report::render_bounds(&report)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Encode { spec } => {
            match notation::resolve_text(spec).map_err(|e| e.to_string())? {
                Resolved::One { graph, .. } => {
                    println!("{}", graph6::encode(&graph));
                }
                Resolved::Cases(cases) => {
                    for case in cases {
                        println!("{}\t{}", case.label(), graph6::encode(&case.graph));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decode { graph6: enc } => {
            let g = graph6::decode(enc).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Dot => print!("{}", report::graph_to_dot(&g, &[], enc)),
                Format::Json => {
                    let payload = serde_json::json!({
                        "n": g.n(),
                        "edges": g.edges(),
                        "degree_sequence": g.degree_sequence(),
                    });
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&payload).map_err(|e| e.to_string())?
                    );
                }
                Format::Text => {
                    println!("n = {}", g.n());
                    println!("m = {}", g.edge_count());
                    println!("degree sequence = {:?}", g.degree_sequence());
                    println!("edges = {:?}", g.edges());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
