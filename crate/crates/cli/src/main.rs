use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bdh_core::hyper::{check_bridge, Acyclicity, Witness};
use bdh_core::lattice::{hasse, maximal_bicliques};
use bdh_core::oracle::{brute_distance_hereditary, brute_intersection, brute_maximal_bicliques};
use bdh_core::pruning::Verdict;
use bdh_core::query::{enumerate_via_f, list_neighbors, neighbor_intersection};
use bdh_core::{
    encode, generate_bdh, is_bdh, pruning_sequence, verify_encoding, ArborescenceEncoding, BipartiteGraph, GenOptions,
    Hypergraph, PruningSequence, Side, Vertex,
};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "bdh",
    version,
    about = "Bipartite distance-hereditary graphs, their lattices and encodings"
)]
struct Cli {
    /// Output style for verdicts and reports.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    X,
    Y,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::X => Side::X,
            SideArg::Y => Side::Y,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership; prints a pruning sequence or a domino/hole.
    Recognize {
        /// Graph file, or `-` for stdin.
        file: PathBuf,
    },
    /// Maximal bicliques and the shape of their covering digraph.
    Lattice {
        file: PathBuf,
        /// Emit the covering digraph in DOT.
        #[arg(long)]
        dot: bool,
    },
    /// Compile the arborescence encoding.
    Encode {
        file: PathBuf,
        /// Class whose vertices label the arcs.
        #[arg(long, value_enum, ignore_case = true)]
        side: SideArg,
        /// Destination; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Pruning sequence to use instead of computing one.
        #[arg(long)]
        seq: Option<PathBuf>,
    },
    /// Common neighbors of a vertex set, read off an encoding.
    Query {
        /// Encoding file, or `-` for stdin.
        encoding: PathBuf,
        /// Comma separated 1-based ids.
        ids: Option<String>,
        #[arg(long = "set", conflicts_with = "ids")]
        set: Option<String>,
        /// Class of the queried ids; checked against the encoding.
        #[arg(long, value_enum, ignore_case = true)]
        side: Option<SideArg>,
        /// Print work counters after the result.
        #[arg(long)]
        stats: bool,
    },
    /// Random connected BDH graph.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Probability of a pendant step.
        #[arg(long, default_value_t = 0.5)]
        bias: f64,
        #[arg(long)]
        no_universal: bool,
        /// Also write the generating pruning sequence here.
        #[arg(long)]
        seq_out: Option<PathBuf>,
    },
    /// Acyclicity class or Bachman diagram of a hypergraph.
    #[command(group(ArgGroup::new("mode").required(true).args(["classify", "bachman"])))]
    Hyper {
        file: PathBuf,
        #[arg(long)]
        classify: bool,
        #[arg(long)]
        bachman: bool,
    },
    /// Step counts of encoding and queries over generated instances.
    Bench {
        /// Comma separated instance sizes.
        #[arg(long, default_value = "100,1000,10000")]
        sizes: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        queries: usize,
    },
    /// Cross-check every fast path against the brute-force oracles.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A failed run: bad input (exit 3).
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<bool, InputError>;

fn read_input(path: &Path) -> Result<String, InputError> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<BipartiteGraph, InputError> {
    Ok(BipartiteGraph::parse(&read_input(path)?)?)
}

/// Writes to stdout; a closed pipe downstream is not an error.
fn write_out(text: &str) {
    let _ = io::stdout().lock().write_all(text.as_bytes());
}

fn emit(format: Format, text: String, value: Value) {
    match format {
        Format::Text => write_out(&text),
        Format::Json => write_out(&format!("{}\n", serde_json::to_string_pretty(&value).expect("json"))),
    }
}

fn labels(g: &BipartiteGraph, vs: &[Vertex]) -> Vec<String> {
    vs.iter().map(|&v| g.label(v)).collect()
}

fn recognize(format: Format, file: &Path) -> Outcome {
    let g = read_graph(file)?;
    match is_bdh(&g)? {
        Verdict::Bdh(seq) => {
            let steps: Vec<String> = seq.steps.iter().map(|s| s.to_string()).collect();
            let text = format!("YES: {} pruning steps\n{}", steps.len(), seq.to_text());
            emit(format, text, json!({ "bdh": true, "sequence": steps }));
            Ok(true)
        }
        Verdict::NotBdh(cert) => {
            let vs = labels(&g, &cert.vertices());
            let text = format!("NO: {} on vertices {}\n", cert.tag(), vs.join(" "));
            emit(
                format,
                text,
                json!({ "bdh": false, "certificate": { "kind": cert.tag(), "vertices": vs } }),
            );
            Ok(false)
        }
    }
}

fn lattice(format: Format, file: &Path, dot: bool) -> Outcome {
    let g = read_graph(file)?;
    let (lat, h) = hasse(&g)?;
    let tree = h.is_tree_shaped();
    let verdict = if tree { "TREE" } else { "NOT-TREE" };
    let shown: Vec<String> = lat.elements.iter().map(|b| b.format(&g)).collect();
    let mut text = if dot {
        h.to_dot(&g, &lat.elements)
    } else {
        shown.iter().map(|s| format!("{s}\n")).collect()
    };
    let _ = writeln!(text, "{verdict}");
    emit(
        format,
        text,
        json!({ "bicliques": shown, "arcs": h.arcs, "tree": tree }),
    );
    Ok(tree)
}

fn encode_cmd(file: &Path, side: Side, out: Option<&Path>, seq: Option<&Path>) -> Outcome {
    let g = read_graph(file)?;
    let seq = match seq {
        Some(p) => PruningSequence::parse(&read_input(p)?)?,
        None => pruning_sequence(&g)?.ok_or_else(|| InputError("graph is not bipartite distance-hereditary".into()))?,
    };
    let text = encode(&g, &seq, side)?.to_text();
    match out {
        Some(p) => fs::write(p, text).map_err(|e| InputError(format!("{}: {e}", p.display())))?,
        None => write_out(&text),
    }
    Ok(true)
}

fn parse_ids(list: &str, side: Side) -> Result<Vec<Vertex>, InputError> {
    list.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| match t.trim().parse::<usize>() {
            Ok(i) if i >= 1 => Ok(Vertex { side, index: i - 1 }),
            _ => Err(InputError(format!("bad vertex id {t:?}"))),
        })
        .collect()
}

fn query(format: Format, file: &Path, ids: Option<&str>, side: Option<Side>, stats: bool) -> Outcome {
    let enc = ArborescenceEncoding::parse(&read_input(file)?)?;
    let iside = enc.interval_side();
    if let Some(s) = side {
        if s != iside {
            return Err(InputError(format!(
                "this encoding answers queries on class {iside}, not {s}"
            )));
        }
    }
    let ids = ids.ok_or_else(|| InputError("no vertex ids given".into()))?;
    let set = parse_ids(ids, iside)?;
    let (mut result, st) = neighbor_intersection(&enc, &set)?;
    result.sort_unstable();
    let opposite = iside.opposite();
    let names: Vec<String> = result
        .iter()
        .map(|&i| {
            Vertex {
                side: opposite,
                index: i,
            }
            .to_string()
        })
        .collect();
    let mut text: String = result.iter().map(|i| format!("{}\n", i + 1)).collect();
    if stats {
        let _ = writeln!(text, "stats comparisons={} nodes={}", st.comparisons, st.nodes_visited);
    }
    let mut value = json!({ "intersection": names });
    if stats {
        value["stats"] = json!({ "comparisons": st.comparisons, "nodes_visited": st.nodes_visited });
    }
    emit(format, text, value);
    Ok(true)
}

fn gen(n: usize, seed: u64, bias: f64, no_universal: bool, seq_out: Option<&Path>) -> Outcome {
    if !(0.0..=1.0).contains(&bias) {
        return Err(InputError(format!("bias {bias} outside [0, 1]")));
    }
    let mut opts = GenOptions::new(n, seed, bias);
    if no_universal {
        opts = opts.no_universal();
    }
    let (g, seq) = generate_bdh(opts)?;
    if let Some(p) = seq_out {
        fs::write(p, seq.to_text()).map_err(|e| InputError(format!("{}: {e}", p.display())))?;
    }
    write_out(&g.to_text());
    Ok(true)
}

fn hyper(format: Format, file: &Path, classify: bool) -> Outcome {
    let h = Hypergraph::parse(&read_input(file)?)?;
    if classify {
        let c = h.classify_acyclicity()?;
        let name = match c.kind {
            Acyclicity::GammaAcyclic => "GAMMA-ACYCLIC",
            Acyclicity::TotallyBalancedOnly => "TOTALLY-BALANCED",
            Acyclicity::Neither => "NOT-TOTALLY-BALANCED",
        };
        let (wtext, wjson) = match &c.witness {
            None => (String::new(), Value::Null),
            Some(Witness::Hole(vs)) => {
                let names: Vec<String> = vs
                    .iter()
                    .map(|v| match v.side {
                        Side::X => format!("v{}", v.index + 1),
                        Side::Y => format!("m{}", v.index + 1),
                    })
                    .collect();
                (format!("hole {}\n", names.join(" ")), json!({ "hole": names }))
            }
            Some(Witness::FCopy { rows, cols }) => {
                let r: Vec<usize> = rows.iter().map(|i| i + 1).collect();
                let c: Vec<usize> = cols.iter().map(|i| i + 1).collect();
                (
                    format!("F members {:?} vertices {:?}\n", r, c),
                    json!({ "f_copy": { "members": r, "vertices": c } }),
                )
            }
        };
        emit(
            format,
            format!("{name}\n{wtext}"),
            json!({ "class": name, "witness": wjson }),
        );
        Ok(c.kind == Acyclicity::GammaAcyclic)
    } else {
        let b = h.bachman()?;
        let shape = if b.is_tree() {
            "TREE"
        } else if b.is_forest() {
            "FOREST"
        } else {
            "NOT-FOREST"
        };
        emit(
            format,
            format!("{}{shape}\n", b.to_dot()),
            json!({ "nodes": b.nodes.len(), "arcs": b.arcs, "shape": shape }),
        );
        Ok(b.is_forest())
    }
}

fn bench(format: Format, sizes: &str, seed: u64, queries: usize) -> Outcome {
    let sizes: Vec<usize> = sizes
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| InputError(format!("bad size {t:?}")))
        })
        .collect::<Result<_, _>>()?;
    let mut text = String::from("n\tstored\tstored/n\tquery_max_ratio\tquery_mean_ratio\tlist_max_ratio\n");
    let mut rows = Vec::new();
    for &n in &sizes {
        let (g, seq) = generate_bdh(GenOptions::new(n, seed, 0.5))?;
        let enc = encode(&g, &seq, Side::Y)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
        let (mut worst, mut total) = (0f64, 0f64);
        let nx = g.nx();
        for _ in 0..queries {
            let k = rng.gen_range(1..=nx.min(8));
            let mut set: Vec<usize> = (0..k).map(|_| rng.gen_range(0..nx)).collect();
            set.sort_unstable();
            set.dedup();
            let vs: Vec<Vertex> = set.iter().map(|&i| Vertex::x(i)).collect();
            let (out, st) = neighbor_intersection(&enc, &vs)?;
            let ratio = st.comparisons as f64 / (vs.len() + out.len() + 1) as f64;
            worst = worst.max(ratio);
            total += ratio;
        }
        let mut list_worst = 0f64;
        for x in 0..nx.min(queries.max(1)) {
            let (out, st) = list_neighbors(&enc, Vertex::x(x))?;
            list_worst = list_worst.max(st.comparisons as f64 / (out.len() + 1) as f64);
        }
        let mean = if queries == 0 { 0.0 } else { total / queries as f64 };
        let stored = enc.stored_integers();
        let _ = writeln!(
            text,
            "{n}\t{stored}\t{:.2}\t{worst:.2}\t{mean:.2}\t{list_worst:.2}",
            stored as f64 / n.max(1) as f64
        );
        rows.push(json!({
            "n": n, "stored": stored, "query_max_ratio": worst,
            "query_mean_ratio": mean, "list_max_ratio": list_worst,
        }));
    }
    emit(format, text, json!({ "rows": rows }));
    Ok(true)
}

enum Check {
    Pass,
    Fail(String),
    Skip(String),
}

fn verify(format: Format, file: &Path, seed: u64) -> Outcome {
    let g = read_graph(file)?;
    let mut checks: Vec<(&str, Check)> = Vec::new();
    let seq = pruning_sequence(&g)?;
    let forbidden = g.find_forbidden();
    checks.push((
        "recognition: pruning vs forbidden subgraphs",
        if seq.is_some() == forbidden.is_none() {
            Check::Pass
        } else {
            Check::Fail(format!(
                "pruning says {}, search says {}",
                seq.is_some(),
                forbidden.is_none()
            ))
        },
    ));
    checks.push((
        "recognition: pruning vs distance oracle",
        match brute_distance_hereditary(&g) {
            Ok(dh) if dh == seq.is_some() => Check::Pass,
            Ok(dh) => Check::Fail(format!("oracle says {dh}")),
            Err(e) => Check::Skip(e.to_string()),
        },
    ));
    let fast = maximal_bicliques(&g)?;
    checks.push((
        "bicliques: fast vs oracle",
        match brute_maximal_bicliques(&g) {
            Ok(slow) if slow == fast => Check::Pass,
            Ok(slow) => Check::Fail(format!("{} vs {} bicliques", fast.len(), slow.len())),
            Err(e) => Check::Skip(e.to_string()),
        },
    ));
    let (_, h) = hasse(&g)?;
    checks.push((
        "lattice: tree-shaped iff BDH",
        if h.is_tree_shaped() == seq.is_some() {
            Check::Pass
        } else {
            Check::Fail(format!("tree {} but BDH {}", h.is_tree_shaped(), seq.is_some()))
        },
    ));
    match &seq {
        None => {
            for name in [
                "encoding: both sides",
                "queries: oracle agreement",
                "bicliques: via F",
                "bridge",
            ] {
                checks.push((name, Check::Skip("not BDH".into())));
            }
        }
        Some(seq) => {
            let ex = encode(&g, seq, Side::X)?;
            let ey = encode(&g, seq, Side::Y)?;
            checks.push((
                "encoding: both sides",
                if verify_encoding(&g, &ex) && verify_encoding(&g, &ey) {
                    Check::Pass
                } else {
                    Check::Fail("structure or intervals wrong".into())
                },
            ));
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut bad = None;
            'outer: for (enc, side) in [(&ey, Side::X), (&ex, Side::Y)] {
                let k = g.size(side);
                for _ in 0..100 {
                    let m = rng.gen_range(1..=k.min(6));
                    let mut set: Vec<usize> = (0..m).map(|_| rng.gen_range(0..k)).collect();
                    set.sort_unstable();
                    set.dedup();
                    let vs: Vec<Vertex> = set.iter().map(|&index| Vertex { side, index }).collect();
                    let (mut got, _) = neighbor_intersection(enc, &vs)?;
                    got.sort_unstable();
                    if got != brute_intersection(&g, side, &set) {
                        bad = Some(format!("{side} subset {set:?}"));
                        break 'outer;
                    }
                }
            }
            checks.push(("queries: oracle agreement", bad.map_or(Check::Pass, Check::Fail)));
            checks.push((
                "bicliques: via F",
                if enumerate_via_f(&ex, &ey)? == fast {
                    Check::Pass
                } else {
                    Check::Fail("families differ".into())
                },
            ));
            checks.push((
                "bridge",
                match check_bridge(&g) {
                    Ok(r) if r.holds() => Check::Pass,
                    Ok(r) => Check::Fail(format!("{r:?}")),
                    Err(bdh_core::Error::SizeLimit { what, size, limit }) => {
                        Check::Skip(format!("{what} is {size}, limit {limit}"))
                    }
                    Err(e) => Check::Fail(e.to_string()),
                },
            ));
        }
    }
    let mut text = String::new();
    let mut report = Vec::new();
    let mut all = true;
    for (name, c) in &checks {
        let (status, detail) = match c {
            Check::Pass => ("ok", String::new()),
            Check::Fail(d) => {
                all = false;
                ("FAIL", d.clone())
            }
            Check::Skip(d) => ("skipped", d.clone()),
        };
        if detail.is_empty() {
            let _ = writeln!(text, "{name}: {status}");
        } else {
            let _ = writeln!(text, "{name}: {status} ({detail})");
        }
        report.push(json!({ "check": name, "status": status, "detail": detail }));
    }
    let _ = writeln!(text, "{}", if all { "ALL AGREE" } else { "DISAGREEMENT" });
    emit(format, text, json!({ "checks": report, "agree": all }));
    Ok(all)
}

fn run(cli: Cli) -> Outcome {
    let f = cli.format;
    match cli.command {
        Command::Recognize { file } => recognize(f, &file),
        Command::Lattice { file, dot } => lattice(f, &file, dot),
        Command::Encode { file, side, out, seq } => encode_cmd(&file, side.into(), out.as_deref(), seq.as_deref()),
        Command::Query {
            encoding,
            ids,
            set,
            side,
            stats,
        } => query(f, &encoding, ids.or(set).as_deref(), side.map(Side::from), stats),
        Command::Gen {
            n,
            seed,
            bias,
            no_universal,
            seq_out,
        } => gen(n, seed, bias, no_universal, seq_out.as_deref()),
        Command::Hyper { file, classify, .. } => hyper(f, &file, classify),
        Command::Bench { sizes, seed, queries } => bench(f, &sizes, seed, queries),
        Command::Verify { file, seed } => verify(f, &file, seed),
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
