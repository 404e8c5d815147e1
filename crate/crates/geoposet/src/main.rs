use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use geoposet::catalog::{build_catalog, CatalogOptions};
use geoposet::dot::hasse_dot;
use geoposet::format::{self, ChainFile, ChainStep, ClassesFile, PosetFile};
use geoposet::parallel::{poset_parallel, realize_parallel, thread_count};
use geoposet::verify::{Verifier, SUITES};
use geoposet::{Error, Result};
use geoposet_core::construct::{clique_chain_template, max_crossing_path, uncross_step};
use geoposet_core::filters::assign_ids;
use geoposet_core::geometry::{crossing_set, drawing_hull_size};
use geoposet_core::graph::{FamilyKind, GraphFamily};
use geoposet_core::poset::RealizationClass;
use geoposet_core::realizer::{SearchBudget, SearchStatus};
use geoposet_core::Drawing;

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_UNRESOLVED: u8 = 3;

#[derive(Parser)]
#[command(name = "geoposet", version, about = "Realization classes and homomorphism posets of geometric paths, cycles and cliques")]
struct Cli {
    /// Worker threads (falls back to GEOPOSET_THREADS, then all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Path,
    Cycle,
    Clique,
}

impl From<Kind> for FamilyKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Path => FamilyKind::Path,
            Kind::Cycle => FamilyKind::Cycle,
            Kind::Clique => FamilyKind::Clique,
        }
    }
}

#[derive(Args)]
struct SearchArgs {
    /// Half width of the largest search grid.
    #[arg(long, default_value_t = SearchBudget::default().grid_half_width)]
    grid: i64,
    /// Node limit per search.
    #[arg(long, default_value_t = SearchBudget::default().max_nodes)]
    max_nodes: u64,
    /// Seed for clique sampling.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl SearchArgs {
    fn budget(&self) -> Result<SearchBudget> {
        Ok(SearchBudget::new(self.grid, self.max_nodes, self.seed)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// All realization classes of a family, with witnesses, as classes.json.
    Enumerate {
        #[arg(long, value_enum)]
        family: Kind,
        #[arg(long)]
        n: usize,
        /// Random drawings for cliques.
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// A witness drawing for a crossing set such as "e1xe3,e2xe4".
    Realize {
        #[arg(long, value_enum)]
        family: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        crossings: String,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Parameter report for the classes in a classes.json.
    Params {
        #[arg(long)]
        classes: PathBuf,
    },
    /// The homomorphism poset of a classes.json, as poset.json.
    Poset {
        #[arg(long)]
        classes: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// DOT rendering of the Hasse diagram in a poset.json.
    Hasse {
        #[arg(long)]
        poset: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Constructive chains: the clique hull template, or uncrossing a maximum path.
    Chain {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "clique")]
        family: Kind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reproduce the published catalogs, tables and structure results.
    Verify {
        #[arg(long, default_value = "all", value_parser = suite_names())]
        suite: String,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn suite_names() -> clap::builder::PossibleValuesParser {
    let mut names: Vec<&'static str> = SUITES.to_vec();
    names.push("all");
    clap::builder::PossibleValuesParser::new(names)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => format::write_text(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn family(kind: Kind, n: usize) -> Result<GraphFamily> {
    Ok(GraphFamily::new(kind.into(), n)?)
}

fn run(cli: Cli) -> Result<u8> {
    let threads = thread_count(cli.threads);
    match cli.command {
        Command::Enumerate { family: kind, n, samples, search, out } => {
            let f = family(kind, n)?;
            if n > 8 || samples == 0 {
                return Err(Error::format(format!("{f} is not supported (n <= 8, samples > 0)")));
            }
            let opts = CatalogOptions { samples, seed: search.seed, budget: search.budget()?, threads };
            let cat = build_catalog(&f, &opts)?;
            emit(&out, &format::to_json_string(&format::classes_to_json(&f, &cat.ids, &cat.classes, &cat.unresolved)))?;
            eprintln!("{f}: {} classes", cat.classes.len());
            if cat.unresolved.is_empty() {
                Ok(0)
            } else {
                for x in &cat.unresolved {
                    eprintln!("unresolved: {}", x.display(&f));
                }
                Ok(EXIT_UNRESOLVED)
            }
        }
        Command::Realize { family: kind, n, crossings, search, out } => {
            let f = family(kind, n)?;
            let x = format::parse_crossings_arg(&f, &crossings)?;
            let outcome = realize_parallel(&f, &x, &search.budget()?, threads)?;
            match (outcome.status, outcome.witness) {
                (SearchStatus::Realized, Some(d)) => {
                    emit(&out, &format::to_json_string(&format::witness_to_json(&d, &x)))?;
                    Ok(0)
                }
                (status, _) => {
                    eprintln!("{f} {}: {status:?} after {} nodes", x.display(&f), outcome.nodes_visited);
                    Ok(EXIT_UNRESOLVED)
                }
            }
        }
        Command::Params { classes } => {
            let file: ClassesFile = format::read_json(&classes)?;
            let (_, ids, classes) = format::classes_from_json(&file)?;
            print!("{}", params_report(&ids, &classes));
            Ok(0)
        }
        Command::Poset { classes, out, dot } => {
            let file: ClassesFile = format::read_json(&classes)?;
            let (f, ids, classes) = format::classes_from_json(&file)?;
            let poset = poset_parallel(classes, threads)?;
            let json = format::poset_to_json(&poset, &ids);
            emit(&out, &format::to_json_string(&json))?;
            if let Some(path) = dot {
                format::write_text(&path, &dot_of(&f.to_string(), &json))?;
            }
            Ok(0)
        }
        Command::Hasse { poset, dot } => {
            let file: PosetFile = format::read_json(&poset)?;
            // re-derive and check the poset before drawing it
            let (ids, p) = format::poset_from_json(&file)?;
            let stored: Vec<[String; 2]> = p.hasse().iter().map(|&(a, b)| [ids[a].clone(), ids[b].clone()]).collect();
            if stored != file.hasse {
                return Err(Error::format("hasse list disagrees with the relation"));
            }
            let name = format::family_from(&file.family, file.n)?.to_string();
            emit(&dot, &dot_of(&name, &file))?;
            Ok(0)
        }
        Command::Chain { n, family: kind, out } => {
            let f = family(kind, n)?;
            let drawings = match kind {
                Kind::Clique => clique_chain_template(n)?,
                Kind::Path => uncrossing_chain(n)?,
                Kind::Cycle => return Err(Error::format("chains are built for cliques and paths")),
            };
            let classes: Vec<RealizationClass> =
                drawings.iter().map(|d| RealizationClass::from_drawing(d.clone())).collect::<std::result::Result<_, _>>()?;
            let ids = chain_ids(&f, &classes);
            let mut steps = Vec::new();
            for ((d, c), id) in drawings.iter().zip(&classes).zip(ids) {
                let hull = drawing_hull_size(d)?;
                eprintln!("{id}: {} crossings, hull {hull}", c.crossings().len());
                steps.push(ChainStep {
                    id,
                    cr: c.crossings().len(),
                    hull_size: hull,
                    witness: format::witness_to_json(d, c.crossings()),
                });
            }
            let file = ChainFile { family: f.kind().to_string(), n, steps };
            emit(&out, &format::to_json_string(&file))?;
            Ok(0)
        }
        Command::Verify { suite, samples, seed } => {
            let opts = CatalogOptions { samples, seed, budget: SearchBudget { rng_seed: seed, ..SearchBudget::default() }, threads };
            let v = Verifier::new(opts);
            let checks = v.suite(&suite).ok_or_else(|| Error::format(format!("unknown suite {suite}")))?;
            let failed = checks.iter().filter(|c| !c.pass).count();
            for c in &checks {
                println!("{c}");
            }
            println!("{} checks, {} passed, {} failed", checks.len(), checks.len() - failed, failed);
            Ok(if failed == 0 { 0 } else { EXIT_MISMATCH })
        }
    }
}

/// Published ids for the chain elements when the family has a listing,
/// otherwise `c.k` numbering within the chain.
fn chain_ids(f: &GraphFamily, classes: &[RealizationClass]) -> Vec<String> {
    let published: Option<Vec<String>> =
        classes.iter().map(|c| geoposet::fixtures::published_id(f, c.crossings()).map(String::from)).collect();
    published.unwrap_or_else(|| {
        let sets: Vec<_> = classes.iter().map(|c| c.crossings().clone()).collect();
        assign_ids(&sets)
    })
}

fn uncrossing_chain(n: usize) -> Result<Vec<Drawing>> {
    let mut d = max_crossing_path(n)?;
    let mut out = vec![d.clone()];
    while !crossing_set(&d)?.is_empty() {
        d = uncross_step(&d)?;
        out.push(d.clone());
    }
    out.reverse();
    Ok(out)
}

fn dot_of(name: &str, file: &PosetFile) -> String {
    let index = |id: &str| file.classes.iter().position(|c| c == id).expect("hasse ids are class ids");
    let covers: Vec<(usize, usize)> = file.hasse.iter().map(|[a, b]| (index(a), index(b))).collect();
    hasse_dot(name, &file.classes, &file.cr, &covers)
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn params_report(ids: &[String], classes: &[RealizationClass]) -> String {
    let mut out = format!("{:<6} {:>3} {:>4} {:>5} {:<24} {:<24} {:>4}\n", "id", "cr", "|E0|", "omega", "D0", "M", "hull");
    for (id, c) in ids.iter().zip(classes) {
        let p = c.profile();
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
        out.push_str(&format!(
            "{:<6} {:>3} {:>4} {:>5} {:<24} {:<24} {:>4}\n",
            id,
            p.cr_total,
            p.e0_count,
            opt(p.omega_hat),
            join(&p.d0_sorted),
            join(&p.m_sorted),
            opt(p.hull_size)
        ));
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { EXIT_USAGE } else { EXIT_MISMATCH })
        }
    }
}
