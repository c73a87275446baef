use std::path::Path;
use std::process::ExitCode;

use bei_algebra::{format_list, DEFAULT_PRIME};
use bei_core::census::{enumerate_up_to, render, Census, CensusConfig, Format, Suite};
use bei_core::{
    binomial_edge_ideal, colon_identity_check, component_ideal, cut_sets, graph_ring,
    prime_component, CoreError, Engine,
};
use bei_graph::{
    clique_count, closed_labeling, free_cut_edges, from_edge_list, from_graph6, is_block_graph,
    is_chordal, is_connected, is_generalized_block_graph, longest_induced_path_length,
    read_graph6_lines, reduced_graph, to_graph6, Graph, DEFAULT_CLOSED_LIMIT, DEFAULT_PATH_LIMIT,
};
use clap::{Args, Parser, Subcommand};

/// Binomial edge ideals of small graphs: ideals, minimal primes, Betti
/// tables, regularity, and a census of regularity bounds.
#[derive(Parser)]
#[command(name = "bei", version)]
struct Cli {
    /// Characteristic of the coefficient field.
    #[arg(long = "char", global = true, env = "BEI_CHAR", default_value_t = DEFAULT_PRIME)]
    characteristic: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural flags and graph invariants.
    Classify(GraphArg),
    /// Generators and reduced Groebner basis of J_G.
    Ideal(GraphArg),
    /// The cut sets T and the minimal primes P_T(G).
    Primes(GraphArg),
    /// Graded Betti numbers of S/J_G.
    Betti(GraphArg),
    /// Regularity and projective dimension.
    Reg(GraphArg),
    /// J_{G-e} : f_e against the closure and path ideal.
    Colon {
        #[command(flatten)]
        graph: GraphArg,
        /// The edge e as `i,j`.
        #[arg(long, value_parser = parse_edge)]
        edge: (usize, usize),
    },
    /// Runs the checks over every graph with at most `n-max` vertices.
    Verify {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Runs the checks over the graphs of a graph6 file.
    Census {
        file: String,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args)]
struct GraphArg {
    /// A graph6 string, an edge list `n; i j; i j`, or a file of graph6 lines.
    graph: String,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, default_value = "all")]
    suite: Suite,
    #[arg(long, default_value = "text")]
    format: Format,
    /// Largest order for checks that need ideal intersections or quotients.
    #[arg(long, default_value_t = 5)]
    ideal_n_max: usize,
    /// Also compute Betti tables in this characteristic and compare.
    #[arg(long)]
    second_char: Option<u32>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<String>,
}

fn parse_edge(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected i,j")?;
    let a = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b = b.trim().parse().map_err(|e| format!("{e}"))?;
    Ok((a, b))
}

enum Failure {
    Input(String),
    Core(CoreError),
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure::Core(e)
    }
}

fn load_graphs(arg: &str) -> Result<Vec<Graph>, Failure> {
    if arg.contains(';') {
        return from_edge_list(arg)
            .map(|g| vec![g])
            .map_err(|e| Failure::Input(e.to_string()));
    }
    if Path::new(arg).is_file() {
        let text =
            std::fs::read_to_string(arg).map_err(|e| Failure::Input(format!("{arg}: {e}")))?;
        return read_graph6_lines(&text).map_err(|e| Failure::Input(format!("{arg}: {e}")));
    }
    from_graph6(arg)
        .map(|g| vec![g])
        .map_err(|e| Failure::Input(e.to_string()))
}

fn classify(g: &Graph) -> String {
    let fce = free_cut_edges(g);
    let closed = match closed_labeling(g, DEFAULT_CLOSED_LIMIT) {
        Ok(Some(perm)) => format!("yes, labeling {perm:?}"),
        Ok(None) => "no".into(),
        Err(e) => format!("undecided ({e})"),
    };
    let lines = [
        format!("graph6: {}", to_graph6(g)),
        format!("vertices: {}, edges: {:?}", g.n(), g.edges()),
        format!("connected: {}", is_connected(g)),
        format!("chordal: {}", is_chordal(g)),
        format!("closed: {closed}"),
        format!(
            "block: {}, generalized block: {}",
            is_block_graph(g),
            is_generalized_block_graph(g)
        ),
        format!(
            "forest: {}, path: {}, cycle: {}, complete: {}",
            g.is_forest(),
            g.is_path(),
            g.is_cycle(),
            g.is_complete()
        ),
        format!("complete multipartite: {:?}", g.multipartite_parts()),
        format!("maximal cliques: {}", clique_count(g)),
        format!(
            "longest induced path: {:?}",
            longest_induced_path_length(g, DEFAULT_PATH_LIMIT).ok()
        ),
        format!(
            "free cut edges: {fce:?}, reduced graph edges: {:?}",
            reduced_graph(g).edges()
        ),
    ];
    lines.join("\n")
}

fn run_census(graphs: &[Graph], run: &RunArgs, p: u32) -> Result<i32, Failure> {
    let config = CensusConfig {
        characteristic: p,
        second_characteristic: run.second_char,
        suite: run.suite,
        ideal_n_max: run.ideal_n_max,
    };
    let report = Census::new(config)?.run(graphs);
    let text = render(&report, run.format);
    match &run.output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Failure::Input(format!("{path}: {e}")))?
        }
        None => print!("{text}"),
    }
    Ok(report.exit_code())
}

fn run(cli: Cli) -> Result<i32, Failure> {
    let p = cli.characteristic;
    Engine::new(p).map_err(|e| Failure::Input(e.to_string()))?;
    match cli.command {
        Command::Classify(a) => {
            let out: Vec<String> = load_graphs(&a.graph)?.iter().map(classify).collect();
            println!("{}", out.join("\n\n"));
        }
        Command::Ideal(a) => {
            for g in load_graphs(&a.graph)? {
                let j = binomial_edge_ideal(&g, p)?;
                println!("J_G = {j}");
                println!(
                    "Groebner basis = {}",
                    format_list(j.gb().map_err(CoreError::from)?)
                );
            }
        }
        Command::Primes(a) => {
            for g in load_graphs(&a.graph)? {
                let ring = graph_ring(g.n(), p)?;
                for &t in cut_sets(&g)?.sets() {
                    let pc = prime_component(&g, t)?;
                    println!(
                        "T = {t}, c(T) = {}, height {}: {}",
                        pc.c(),
                        pc.expected_height(),
                        component_ideal(&ring, &pc)?
                    );
                }
            }
        }
        Command::Betti(a) => {
            let mut engine = Engine::new(p)?;
            for g in load_graphs(&a.graph)? {
                print!("{}", engine.betti(&g)?.triangle());
            }
        }
        Command::Reg(a) => {
            let mut engine = Engine::new(p)?;
            for g in load_graphs(&a.graph)? {
                let t = engine.betti(&g)?;
                println!(
                    "reg J_G = {}, reg S/J_G = {}, pd S/J_G = {}",
                    t.reg_ideal().unwrap_or(0),
                    t.reg_quotient().unwrap_or(0),
                    t.pd_quotient().unwrap_or(0)
                );
            }
        }
        Command::Colon { graph, edge } => {
            for g in load_graphs(&graph.graph)? {
                let c = colon_identity_check(&g, edge, p)?;
                println!("J_(G-e) : f_e = {}", c.quotient);
                println!("closure edges: {:?}", c.closure.edges());
                println!("path ideal I_G = {}", c.path_ideal);
                println!("cut edge: {}", c.is_cut_edge);
                for cmp in &c.evidence.comparisons {
                    println!(
                        "{}: {}",
                        cmp.name,
                        if cmp.holds { "holds" } else { "FAILS" }
                    );
                }
                if !c.evidence.holds() {
                    return Ok(1);
                }
            }
        }
        Command::Verify { n_max, run } => {
            let graphs = enumerate_up_to(n_max)?;
            return run_census(&graphs, &run, p);
        }
        Command::Census { file, run } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Failure::Input(format!("{file}: {e}")))?;
            let graphs =
                read_graph6_lines(&text).map_err(|e| Failure::Input(format!("{file}: {e}")))?;
            return run_census(&graphs, &run, p);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(Failure::Input(msg)) => {
            eprintln!("bei: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("bei: {e}");
            if e.is_resource() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
