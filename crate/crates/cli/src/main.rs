//! Command-line front end: decide and witness containment relations between
//! trees given in the text format, canonicalize and generate trees, and run
//! the exhaustive certification sweep.
//!
//! Exit statuses are the machine contract: 0 for yes/clean, 1 for no or for
//! violations found, 2 for bad input or flags, 3 for a tripped size guard.

use std::collections::BTreeSet;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use treerel::{
    caterpillar, decide, decide_rooted, enumerate_self_models, free_code, oracle_reachable,
    parse_tree_text, path, random_pruefer, rooted_code, run_atlas, spider, star, AtlasConfig,
    Error, MinorModel, RelKind, Tree, TreeRecord, WitnessJson, DEFAULT_ENUM_CAP,
    DEFAULT_ORACLE_CAP,
};

#[derive(Parser)]
#[command(
    name = "treerel",
    version,
    about = "Decide, witness, and certify embedding, topological-minor, and minor \
             relations on finite trees"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rel {
    Embed,
    Topo,
    Minor,
}

impl Rel {
    fn kind(self) -> RelKind {
        match self {
            Rel::Embed => RelKind::Embed,
            Rel::Topo => RelKind::TopoMinor,
            Rel::Minor => RelKind::Minor,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Star,
    Spider,
    Caterpillar,
    Pruefer,
}

#[derive(Subcommand)]
enum Verb {
    /// Decide whether PATTERN is contained in HOST; prints yes or no.
    Check {
        #[arg(long, value_enum)]
        rel: Rel,
        /// Decide the rooted relation; both inputs must be rtree records.
        #[arg(long)]
        rooted: bool,
        /// Pattern tree file, or - for standard input.
        pattern: String,
        /// Host tree file, or - for standard input.
        host: String,
    },
    /// Like check, but also print the witness JSON when the answer is yes.
    Witness {
        #[arg(long, value_enum)]
        rel: Rel,
        #[arg(long)]
        rooted: bool,
        pattern: String,
        host: String,
    },
    /// Print the canonical code (root-respecting for rtree records).
    Canon { file: String },
    /// Print the center as `vertex <v>` or `edge <u> <v>`.
    Center { file: String },
    /// Print the closure of the given vertices: the union of all pairwise
    /// paths, in ascending order on one line.
    Closure { file: String, vertices: Vec<usize> },
    /// Print a generated tree in the text format.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Comma-separated numbers: path and star take one, spider takes the
        /// leg lengths, caterpillar takes the spine length then one leaf
        /// count per spine vertex, pruefer takes a size and a seed.
        #[arg(long, value_delimiter = ',', required = true)]
        params: Vec<u64>,
    },
    /// Sweep all trees up to a size, auditing witnesses, the implication
    /// chain, mutuality versus isomorphism, and oracle agreement.
    Atlas {
        #[arg(long)]
        n_max: usize,
        /// Largest size cross-checked against the operation-sequence oracle
        /// (defaults to n-max capped at 6).
        #[arg(long)]
        oracle_n_max: Option<usize>,
        /// Relations to audit; defaults to all three.
        #[arg(long, value_enum)]
        rel: Vec<Rel>,
        /// Emit the report as JSON instead of the text table.
        #[arg(long)]
        json: bool,
    },
    /// Decide by brute-force operation sequences instead of the fast decider.
    Oracle {
        #[arg(long, value_enum)]
        rel: Rel,
        pattern: String,
        host: String,
    },
    /// Print every model of the tree in itself, one row of vertex images per
    /// line.
    Selfmodels { file: String },
}

enum Failure {
    /// Bad flags, files, or input data: exit 2.
    Input(String),
    /// A size guard refused the computation: exit 3.
    Guard(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeLimitExceeded { .. } => Failure::Guard(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.verb {
        Verb::Check { rel, rooted, pattern, host } => {
            let answer = decide_pair(&pattern, &host, rel.kind(), rooted)?;
            println!("{}", if answer.is_some() { "yes" } else { "no" });
            Ok(verdict(answer.is_some()))
        }
        Verb::Witness { rel, rooted, pattern, host } => {
            match decide_pair(&pattern, &host, rel.kind(), rooted)? {
                Some(model) => {
                    println!("yes");
                    println!("{}", WitnessJson::from_model(&model, rel.kind()).to_json());
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("no");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Verb::Canon { file } => {
            let code = match load(&file)? {
                TreeRecord::Free(t) => free_code(&t),
                TreeRecord::Rooted(rt) => rooted_code(&rt),
            };
            println!("{}", code.as_str());
            Ok(ExitCode::SUCCESS)
        }
        Verb::Center { file } => {
            println!("{}", load(&file)?.tree().center());
            Ok(ExitCode::SUCCESS)
        }
        Verb::Closure { file, vertices } => {
            let record = load(&file)?;
            let set: BTreeSet<usize> = vertices.into_iter().collect();
            let closed = record.tree().closure(&set)?;
            let words: Vec<String> = closed.iter().map(usize::to_string).collect();
            println!("{}", words.join(" "));
            Ok(ExitCode::SUCCESS)
        }
        Verb::Gen { family, params } => {
            print!("{}", generate(family, &params)?.to_text());
            Ok(ExitCode::SUCCESS)
        }
        Verb::Atlas { n_max, oracle_n_max, rel, json } => {
            let kinds = if rel.is_empty() {
                RelKind::ALL.to_vec()
            } else {
                rel.into_iter().map(Rel::kind).collect()
            };
            let config = AtlasConfig {
                n_max,
                kinds,
                oracle_n_max: oracle_n_max.unwrap_or_else(|| n_max.min(6)),
                enum_cap: env_cap("TREEREL_ENUM_CAP", DEFAULT_ENUM_CAP)?,
                oracle_cap: env_cap("TREEREL_ORACLE_CAP", DEFAULT_ORACLE_CAP)?,
            };
            let report = run_atlas(&config)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print!("{}", report.text_table());
            }
            Ok(verdict(!report.has_violations()))
        }
        Verb::Oracle { rel, pattern, host } => {
            let (p, h) = load_pair(&pattern, &host)?;
            let (TreeRecord::Free(tp), TreeRecord::Free(th)) = (&p, &h) else {
                return Err(Failure::Input(
                    "the oracle works on unrooted trees; pass tree records".into(),
                ));
            };
            let cap = env_cap("TREEREL_ORACLE_CAP", DEFAULT_ORACLE_CAP)?;
            let reachable = oracle_reachable(tp, th, rel.kind(), cap)?;
            println!("{}", if reachable { "yes" } else { "no" });
            Ok(verdict(reachable))
        }
        Verb::Selfmodels { file } => {
            let record = load(&file)?;
            let cap = env_cap("TREEREL_ORACLE_CAP", DEFAULT_ORACLE_CAP)?;
            for model in enumerate_self_models(record.tree(), cap)? {
                let row: Vec<String> = model
                    .branch_sets()
                    .iter()
                    .map(|set| {
                        let images: Vec<String> = set.iter().map(usize::to_string).collect();
                        images.join(",")
                    })
                    .collect();
                println!("{}", row.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn verdict(yes: bool) -> ExitCode {
    if yes {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn load(path: &str) -> Result<TreeRecord, Failure> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {}", path, e)))?
    };
    Ok(parse_tree_text(&text)?)
}

fn load_pair(pattern: &str, host: &str) -> Result<(TreeRecord, TreeRecord), Failure> {
    if pattern == "-" && host == "-" {
        return Err(Failure::Input("standard input can supply only one of the two trees".into()));
    }
    Ok((load(pattern)?, load(host)?))
}

fn decide_pair(
    pattern: &str,
    host: &str,
    kind: RelKind,
    rooted: bool,
) -> Result<Option<MinorModel>, Failure> {
    let (p, h) = load_pair(pattern, host)?;
    if rooted {
        let (TreeRecord::Rooted(rp), TreeRecord::Rooted(rh)) = (&p, &h) else {
            return Err(Failure::Input("--rooted needs two rtree records".into()));
        };
        Ok(decide_rooted(rp, rh, kind))
    } else {
        let (TreeRecord::Free(tp), TreeRecord::Free(th)) = (&p, &h) else {
            return Err(Failure::Input(
                "unrooted checks need two tree records; pass --rooted for rtree inputs".into(),
            ));
        };
        Ok(decide(tp, th, kind))
    }
}

fn generate(family: Family, params: &[u64]) -> Result<Tree, Failure> {
    let sizes: Vec<usize> = params.iter().map(|&p| p as usize).collect();
    let tree = match family {
        Family::Path => {
            let [n] = sizes[..] else {
                return Err(Failure::Input("path takes exactly one parameter".into()));
            };
            path(n)?
        }
        Family::Star => {
            let [leaves] = sizes[..] else {
                return Err(Failure::Input("star takes exactly one parameter".into()));
            };
            star(leaves)?
        }
        Family::Spider => spider(&sizes)?,
        Family::Caterpillar => {
            let Some((&spine, counts)) = sizes.split_first() else {
                return Err(Failure::Input(
                    "caterpillar takes a spine length then one leaf count per spine vertex".into(),
                ));
            };
            caterpillar(spine, counts)?
        }
        Family::Pruefer => {
            let [n, seed] = params[..] else {
                return Err(Failure::Input("pruefer takes a size and a seed".into()));
            };
            random_pruefer(n as usize, seed)?
        }
    };
    Ok(tree)
}

fn env_cap(name: &str, default: usize) -> Result<usize, Failure> {
    match std::env::var(name) {
        Ok(value) => value
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("{} must be a number, got {:?}", name, value))),
        Err(std::env::VarError::NotPresent) => Ok(default),
        Err(e) => Err(Failure::Input(format!("{}: {}", name, e))),
    }
}
