use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wordrep::formats::{self, coloring, edgelist, graph6, intervals};
use wordrep::{census, svg, FormatError, Parallel};
use wordrep_core::constructions::{self, ConstructionResult};
use wordrep_core::models;
use wordrep_core::repr::{self, Side};
use wordrep_core::search::{self, Outcome, SearchBudget, SearchReport, Sequential, UnitRunner};
use wordrep_core::universal::{self, block_bound, block_bound_connected};
use wordrep_core::{graph_of_word, verify, Graph, Letter, Verdict, Word};

#[derive(Parser)]
#[command(name = "wordrep", version, about = "Words that represent graphs by counting 11 patterns")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graph represented by a word at level K.
    GraphOfWord {
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        word: WordArg,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        out: GraphFormat,
    },
    /// Checks a word against a graph. Exit 0 on PASS, 1 on FAIL.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        word: WordArg,
    },
    /// Permutational 2-11-representant of any graph.
    Represent2 {
        #[arg(long)]
        graph: PathBuf,
        /// Use the tighter construction for connected graphs.
        #[arg(long)]
        connected: bool,
        /// Pad with copies of the last block up to the block bound.
        #[arg(long)]
        exact_blocks: bool,
    },
    /// Builds a representant of a modified graph from a given one.
    Transform {
        #[command(subcommand)]
        op: Transform,
    },
    /// Searches for a representant within a budget.
    Search {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: u32,
        /// Only words with exactly T copies of every letter.
        #[arg(long)]
        uniform: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Smallest level with a representant (budget-qualified below 2).
    MinLevel {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Min levels of all labeled graphs on N vertices, as CSV.
    Census {
        #[arg(long)]
        n: Option<usize>,
        /// Highest level searched; 2 always succeeds.
        #[arg(long)]
        k: u32,
        /// graph6 file, one graph per line, instead of all labeled graphs.
        #[arg(long, conflicts_with = "n")]
        graphs: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Conversions between interval models and words.
    Interval {
        #[command(subcommand)]
        op: IntervalOp,
    },
    /// Decides whether a graph is a circle graph; prints a chord word if so.
    Circle {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = search::DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Curves through points on a convex arc.
    Geometry {
        #[command(subcommand)]
        op: GeometryOp,
    },
}

#[derive(Subcommand)]
enum Transform {
    /// One more 11 in every pair: reversed initial (or final) permutation.
    Extend {
        #[command(flatten)]
        word: WordArg,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
    },
    /// `ww`: level 0 becomes level 1.
    Double {
        #[command(flatten)]
        word: WordArg,
    },
    /// Same pair counts, first letter I and last letter J.
    Endpoints {
        #[command(flatten)]
        word: WordArg,
        #[arg(long, value_parser = letter)]
        first: Letter,
        #[arg(long, value_parser = letter)]
        last: Letter,
    },
    /// Disjoint union of the graphs the words represent at level K.
    Union {
        #[arg(long)]
        k: u32,
        /// Repeat once per part.
        #[arg(long = "word", required = true)]
        words: Vec<String>,
    },
    /// New vertex Y adjacent to X only.
    Pendant {
        #[command(flatten)]
        word: WordArg,
        #[arg(long)]
        k: u32,
        #[arg(long, value_parser = letter)]
        x: Letter,
        /// New vertex; defaults to n + 1.
        #[arg(long, value_parser = letter)]
        y: Option<Letter>,
    },
    /// New vertex X with the neighbourhood of Y; adjacent to Y with --adjacent.
    Twin {
        #[command(flatten)]
        word: WordArg,
        #[arg(long)]
        k: u32,
        #[arg(long, value_parser = letter)]
        y: Letter,
        #[arg(long, value_parser = letter)]
        x: Option<Letter>,
        #[arg(long)]
        adjacent: bool,
    },
    /// Identifies X of the first graph with Y of the second.
    Glue {
        #[command(flatten)]
        pair: WordPair,
        #[arg(long)]
        k: u32,
        #[arg(long, value_parser = letter)]
        x: Letter,
        #[arg(long, value_parser = letter)]
        y: Letter,
    },
    /// Joins X of the first graph to Y of the second by an edge.
    Connect {
        #[command(flatten)]
        pair: WordPair,
        #[arg(long)]
        k: u32,
        #[arg(long, value_parser = letter)]
        x: Letter,
        #[arg(long, value_parser = letter)]
        y: Letter,
    },
    /// New vertex from a uniform 0-11-representant.
    ConeUniform {
        #[command(flatten)]
        word: WordArg,
        #[command(flatten)]
        cone: ConeArgs,
    },
    /// New vertex from a uniform K-11-representant.
    ConeGeneral {
        #[command(flatten)]
        word: WordArg,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        cone: ConeArgs,
    },
    /// New vertex Z adjacent to the edge XY of a 1-11-representant.
    Triangle {
        #[command(flatten)]
        word: WordArg,
        #[arg(long, value_parser = letter)]
        x: Letter,
        #[arg(long, value_parser = letter)]
        y: Letter,
        #[arg(long, value_parser = letter)]
        z: Option<Letter>,
    },
    /// New vertex from a permutational 0-11-representant.
    ConePerm {
        #[command(flatten)]
        word: WordArg,
        #[command(flatten)]
        cone: ConeArgs,
    },
    /// Deletes the edge XY of a uniform 0-11-representant.
    RemoveEdge {
        #[command(flatten)]
        word: WordArg,
        #[arg(long, value_parser = letter)]
        x: Letter,
        #[arg(long, value_parser = letter)]
        y: Letter,
    },
    /// Deletes all edges inside SET.
    RemoveClique {
        #[command(flatten)]
        word: WordArg,
        #[arg(long, value_parser = letters)]
        set: LetterList,
    },
    /// Deletes the edges from V to NBRS.
    RemoveStar {
        #[command(flatten)]
        word: WordArg,
        #[arg(long, value_parser = letter)]
        v: Letter,
        #[arg(long, value_parser = letters)]
        nbrs: LetterList,
    },
}

#[derive(Subcommand)]
enum IntervalOp {
    /// Endpoint word of an interval file.
    ToWord {
        #[arg(long)]
        intervals: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Interval file of a 2-uniform word.
    FromWord {
        #[command(flatten)]
        word: WordArg,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Interval file of an R-uniform word.
    FromRuniform {
        #[command(flatten)]
        word: WordArg,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// R-uniform word of an interval file.
    ToRuniform {
        #[arg(long)]
        intervals: PathBuf,
        #[arg(long)]
        r: usize,
    },
}

#[derive(Subcommand)]
enum GeometryOp {
    /// Graph of pairs of curves crossing at least M times.
    Imgraph {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        out: GraphFormat,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct WordArg {
    /// Whitespace-separated letters, for example "1 4 2 1 3 2 4 3".
    #[arg(long)]
    word: Option<String>,
    #[arg(long)]
    word_file: Option<PathBuf>,
}

#[derive(Args)]
struct WordPair {
    #[arg(long)]
    word: String,
    #[arg(long)]
    word2: String,
}

#[derive(Args)]
struct ConeArgs {
    #[arg(long, value_parser = letters, default_value = "")]
    nbrs: LetterList,
    /// New vertex; defaults to n + 1.
    #[arg(long, value_parser = letter)]
    v: Option<Letter>,
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, default_value_t = SearchBudget::default().max_copies_per_letter)]
    max_copies: usize,
    /// Concatenations of permutations only.
    #[arg(long)]
    permutational: bool,
    /// Allow different copy counts per letter.
    #[arg(long, conflicts_with = "permutational")]
    any_copies: bool,
    #[arg(long, default_value_t = SearchBudget::default().node_limit)]
    node_limit: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget {
            max_copies_per_letter: self.max_copies,
            uniform_only: !self.any_copies,
            permutational_only: self.permutational,
            node_limit: self.node_limit,
            worker_hint: self.workers,
            ..SearchBudget::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    G6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone)]
struct LetterList(Vec<Letter>);

fn letter(s: &str) -> Result<Letter, String> {
    s.parse::<u32>().ok().and_then(Letter::new).ok_or_else(|| format!("{s:?} is not a positive vertex id"))
}

fn letters(s: &str) -> Result<LetterList, String> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(letter)
        .collect::<Result<_, _>>()
        .map(LetterList)
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] wordrep_core::Error),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Census(#[from] census::CensusError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = Result<T, CliError>;

/// Exit statuses besides errors (2).
#[derive(Clone, Copy)]
enum Status {
    Ok,
    Negative,
    Exhausted,
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    Ok(formats::parse_graph(&read(path)?)?)
}

impl WordArg {
    fn load(&self) -> CliResult<Word> {
        let text = match (&self.word, &self.word_file) {
            (Some(w), _) => w.clone(),
            (None, Some(p)) => read(p)?,
            (None, None) => unreachable!("clap requires one"),
        };
        parse_word(&text)
    }
}

fn parse_word(text: &str) -> CliResult<Word> {
    let w: Word = text.parse()?;
    if w.is_empty() {
        return Err(wordrep_core::Error::EmptyWord.into());
    }
    Ok(w)
}

fn print_graph(g: &Graph, format: GraphFormat) -> CliResult<()> {
    match format {
        GraphFormat::G6 => println!("{}", graph6::serialize(g)?),
        GraphFormat::Edges => print!("{}", edgelist::serialize(g)),
    }
    Ok(())
}

fn runner(workers: usize) -> Box<dyn UnitRunner> {
    if workers > 1 {
        Box::new(Parallel::new(workers))
    } else {
        Box::new(Sequential)
    }
}

fn fresh_or(word: &Word, v: Option<Letter>) -> Letter {
    v.unwrap_or_else(|| Letter::from_index(word.max_letter().map_or(0, |l| l.index() + 1)))
}

fn print_construction(r: &ConstructionResult) {
    println!("{}", r.word);
    println!("# level {} vertices {} edges {}", r.level, r.expected.n(), r.expected.edge_count());
}

fn transform(op: Transform) -> CliResult<Status> {
    let result = match op {
        Transform::Extend { word, side } => {
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            println!("{}", repr::extend_level(&word.load()?, side)?);
            return Ok(Status::Ok);
        }
        Transform::Double { word } => {
            println!("{}", repr::double(&word.load()?)?);
            return Ok(Status::Ok);
        }
        Transform::Endpoints { word, first, last } => {
            println!("{}", repr::with_endpoints(&word.load()?, first, last)?);
            return Ok(Status::Ok);
        }
        Transform::Union { k, words } => {
            let parts = words
                .iter()
                .map(|w| {
                    let w = parse_word(w)?;
                    let g = graph_of_word(&w, k)?;
                    Ok((w, g))
                })
                .collect::<CliResult<Vec<_>>>()?;
            constructions::disjoint_union(&parts, k)?
        }
        Transform::Pendant { word, k, x, y } => {
            let w = word.load()?;
            let y = fresh_or(&w, y);
            constructions::add_pendant(&w, k, x, y)?
        }
        Transform::Twin { word, k, y, x, adjacent } => {
            let w = word.load()?;
            let x = fresh_or(&w, x);
            constructions::add_twin(&w, k, y, x, adjacent)?
        }
        Transform::Glue { pair, k, x, y } => {
            constructions::glue_at_vertex(&parse_word(&pair.word)?, &parse_word(&pair.word2)?, k, x, y)?
        }
        Transform::Connect { pair, k, x, y } => {
            constructions::connect_by_edge(&parse_word(&pair.word)?, &parse_word(&pair.word2)?, k, x, y)?
        }
        Transform::ConeUniform { word, cone } => {
            let w = word.load()?;
            constructions::add_vertex_from_uniform(&w, &cone.nbrs.0, fresh_or(&w, cone.v))?
        }
        Transform::ConeGeneral { word, k, cone } => {
            let w = word.load()?;
            constructions::add_vertex_general(&w, k, &cone.nbrs.0, fresh_or(&w, cone.v))?
        }
        Transform::Triangle { word, x, y, z } => {
            let w = word.load()?;
            let z = fresh_or(&w, z);
            constructions::add_triangle(&w, x, y, z)?
        }
        Transform::ConePerm { word, cone } => {
            let w = word.load()?;
            constructions::add_vertex_from_permutational(&w, &cone.nbrs.0, fresh_or(&w, cone.v))?
        }
        Transform::RemoveEdge { word, x, y } => constructions::remove_edge(&word.load()?, x, y)?,
        Transform::RemoveClique { word, set } => constructions::remove_clique_edges(&word.load()?, &set.0)?,
        Transform::RemoveStar { word, v, nbrs } => constructions::remove_star_edges(&word.load()?, v, &nbrs.0)?,
    };
    print_construction(&result);
    Ok(Status::Ok)
}

fn report_search(g: &Graph, report: &SearchReport) -> Status {
    let status = match &report.outcome {
        Outcome::Found(w) => {
            println!("{w}");
            Status::Ok
        }
        Outcome::ProvedAbsent => {
            println!("proved absent in family {}", report.family);
            Status::Negative
        }
        Outcome::BudgetExhausted => {
            println!("budget exhausted in family {}", report.family);
            Status::Exhausted
        }
    };
    println!("# nodes {} leaves {}", report.nodes_expanded, report.leaves);
    println!("# level-0 uniform length bound {}", search::level0_length_bound(g));
    status
}

fn interval(op: IntervalOp) -> CliResult<Status> {
    match op {
        IntervalOp::ToWord { intervals: path, svg: out } => {
            let m = intervals::parse(&read(&path)?)?;
            println!("{}", models::interval_to_word(&m));
            if let Some(out) = out {
                write(&out, &svg::intervals(&m))?;
            }
        }
        IntervalOp::FromWord { word, svg: out } => {
            let m = models::word_to_intervals(&word.load()?)?;
            print!("{}", intervals::serialize(&m));
            if let Some(out) = out {
                write(&out, &svg::intervals(&m))?;
            }
        }
        IntervalOp::FromRuniform { word, r, svg: out } => {
            let m = models::runiform_to_intervals(&word.load()?, r)?;
            print!("{}", intervals::serialize(&m));
            if let Some(out) = out {
                write(&out, &svg::intervals(&m))?;
            }
        }
        IntervalOp::ToRuniform { intervals: path, r } => {
            let m = intervals::parse(&read(&path)?)?;
            println!("{}", models::intervals_to_runiform(&m, r)?);
        }
    }
    Ok(Status::Ok)
}

fn run(cli: Cli) -> CliResult<Status> {
    match cli.command {
        Command::GraphOfWord { k, word, out } => {
            print_graph(&graph_of_word(&word.load()?, k)?, out)?;
            Ok(Status::Ok)
        }
        Command::Verify { graph, k, word } => {
            let g = load_graph(&graph)?;
            match verify(&word.load()?, &g, k)? {
                Verdict::Pass => {
                    println!("PASS");
                    Ok(Status::Ok)
                }
                Verdict::Fail(violations) => {
                    println!("FAIL");
                    for v in violations {
                        let want = if v.expected_edge { "edge" } else { "non-edge" };
                        println!("{} {} count {} expected {want}", v.x, v.y, v.count);
                    }
                    Ok(Status::Negative)
                }
            }
        }
        Command::Represent2 { graph, connected, exact_blocks } => {
            let g = load_graph(&graph)?;
            let (u, bound) = if connected {
                (universal::represent2_connected(&g)?, block_bound_connected(g.n()))
            } else {
                (universal::represent2(&g)?, block_bound(g.n()))
            };
            let word = if exact_blocks { u.word.padded_to(bound) } else { u.word };
            println!("{}", word.to_word().display_blocks(g.n()));
            println!("# blocks {} bound {bound} duplications {}", word.block_count(), u.duplications);
            Ok(Status::Ok)
        }
        Command::Transform { op } => transform(op),
        Command::Search { graph, k, uniform, budget } => {
            let g = load_graph(&graph)?;
            let b = budget.budget();
            let runner = runner(b.worker_hint);
            let report = match uniform {
                Some(t) => search::find_uniform(&g, k, t, &b, runner.as_ref())?,
                None => search::find_representant(&g, k, &b, runner.as_ref())?,
            };
            Ok(report_search(&g, &report))
        }
        Command::MinLevel { graph, budget } => {
            let g = load_graph(&graph)?;
            let b = budget.budget();
            let r = search::min_level(&g, &b, runner(b.worker_hint).as_ref())?;
            println!("{} {}", r.qualifier, r.level);
            println!("{}", r.word);
            for (level, report) in &r.reports {
                let verdict = match report.outcome {
                    Outcome::Found(_) => "found",
                    Outcome::ProvedAbsent => "proved absent",
                    Outcome::BudgetExhausted => "budget exhausted",
                };
                println!("# level {level}: {verdict} in family {} ({} nodes)", report.family, report.nodes_expanded);
            }
            Ok(Status::Ok)
        }
        Command::Census { n, k, graphs, out, budget } => {
            let list: Vec<Graph> = match (n, graphs) {
                (_, Some(path)) => read(&path)?
                    .lines()
                    .map(str::trim)
                    .filter(|l| !l.is_empty())
                    .map(graph6::parse)
                    .collect::<Result<_, _>>()?,
                (Some(n), None) => census::labeled_graphs(n)?.collect(),
                (None, None) => return Err(CliError::Usage("census needs --n or --graphs".into())),
            };
            let rows = census::run(&list, k, &budget.budget())?;
            match out {
                Some(path) => {
                    let file = fs::File::create(&path).map_err(|source| CliError::Io { path: path.clone(), source })?;
                    census::write_csv(&rows, file)?;
                }
                None => census::write_csv(&rows, io::stdout().lock())?,
            }
            Ok(Status::Ok)
        }
        Command::Interval { op } => interval(op),
        Command::Circle { graph, cap, workers, svg: out } => {
            let g = load_graph(&graph)?;
            if g.n() > cap {
                return Err(wordrep_core::Error::CapExceeded { n: g.n(), cap }.into());
            }
            let b = SearchBudget { max_copies_per_letter: 2, node_limit: u64::MAX, ..SearchBudget::default() };
            let report = search::find_uniform(&g, 0, 2, &b, runner(workers.unwrap_or(1)).as_ref())?;
            match report.outcome {
                Outcome::Found(w) => {
                    println!("circle graph");
                    println!("{w}");
                    if let Some(out) = out {
                        write(&out, &svg::chords(&w))?;
                    }
                    Ok(Status::Ok)
                }
                _ => {
                    println!("not a circle graph");
                    Ok(Status::Negative)
                }
            }
        }
        Command::Geometry { op: GeometryOp::Imgraph { coloring: path, r, m, out, svg: svg_out } } => {
            let c = coloring::parse(&read(&path)?, r)?;
            let g = models::m_intersection_graph(&c, m)?;
            print_graph(&g, out)?;
            if let Some(p) = svg_out {
                write(&p, &svg::curves(&c))?;
            }
            Ok(Status::Ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status = run(cli);
    let _ = io::stdout().flush();
    match status {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Negative) => ExitCode::from(1),
        Ok(Status::Exhausted) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
