use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use setaf::generate::{generate, scc_chain, GeneratorConfig};
use setaf::io::{parse, parse_extension, serialize_framework};
use setaf::principles::{check_instance, search_counterexample, PrincipleId, PrincipleReport, Verdict};
use setaf::task::{bench, emit_reduct, emit_scc, run, Engine, Status, Task, TaskSpec};
use setaf::{ArgId, Semantics, Setaf};

/// Reasoning over argumentation frameworks with collective attacks.
///
/// Tasks: SE, EE, DC, DS, VE (extension tasks), reduct, scc, principles,
/// gen, bench. Exit status is 0 for an answer, 1 for a NO answer and 2 for
/// errors.
#[derive(Parser, Debug)]
#[command(name = "setaf", version)]
struct Cli {
    /// SE | EE | DC | DS | VE | reduct | scc | principles | gen | bench
    task: String,

    /// Instance file (`p setaf <n> <m>` format).
    #[arg(short = 'f', long)]
    file: Option<PathBuf>,

    /// CF, NA, AD, CO, GR, PR, ST, SG or SM.
    #[arg(short = 's', long)]
    semantics: Option<Semantics>,

    /// bruteforce, scc, modular or incremental.
    #[arg(long, default_value = "bruteforce")]
    engine: Engine,

    /// Argument id for DC and DS.
    #[arg(short = 'a', long = "arg")]
    argument: Option<u32>,

    /// Space separated argument ids, for VE and reduct.
    #[arg(long)]
    ext: Option<String>,

    /// Seed for gen and principles.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Number of generated instances for principles.
    #[arg(long, default_value_t = 1000)]
    budget: usize,

    /// Restrict principles to one principle.
    #[arg(short = 'p', long)]
    principle: Option<PrincipleId>,

    /// Number of arguments for gen.
    #[arg(long)]
    args: Option<usize>,

    /// Number of attacks for gen (needs --args).
    #[arg(long)]
    attacks: Option<usize>,

    /// Generate the chain of C strongly connected blocks of size K.
    #[arg(long, value_name = "C,K")]
    chain: Option<String>,
}

fn load(cli: &Cli) -> Result<Setaf, String> {
    let path = cli.file.as_ref().ok_or("this task needs an instance file (-f)")?;
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse(&text)
        .map(|inst| inst.framework)
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn semantics(cli: &Cli) -> Result<Semantics, String> {
    cli.semantics.ok_or_else(|| "this task needs a semantics (-s)".to_string())
}

fn execute(cli: &Cli) -> Result<(String, Status), String> {
    let answered = |text: String| Ok((text, Status::Answer));
    match cli.task.to_ascii_lowercase().as_str() {
        "reduct" => {
            let sf = load(cli)?;
            let e = parse_extension(cli.ext.as_deref().unwrap_or(""), sf.num_arguments())?;
            answered(emit_reduct(&sf, &e).map_err(|e| e.to_string())?)
        }
        "scc" => answered(emit_scc(&load(cli)?)),
        "bench" => {
            let sf = load(cli)?;
            answered(bench(&sf, semantics(cli)?).map_err(|e| e.to_string())?)
        }
        "gen" => answered(serialize_framework(&generated(cli)?)),
        "principles" => answered(principles(cli)?),
        other => {
            let task: Task = other.parse()?;
            let sf = load(cli)?;
            let mut spec = TaskSpec::new(task, semantics(cli)?).with_engine(cli.engine);
            if let Some(id) = cli.argument {
                if id == 0 {
                    return Err("argument ids start at 1".into());
                }
                spec = spec.with_argument(ArgId::new(id));
            }
            if let Some(ext) = &cli.ext {
                spec = spec.with_extension(parse_extension(ext, sf.num_arguments())?);
            }
            let out = run(&spec, &sf).map_err(|e| e.to_string())?;
            Ok((out.text, out.status))
        }
    }
}

fn generated(cli: &Cli) -> Result<Setaf, String> {
    if let Some(chain) = &cli.chain {
        let parts: Vec<usize> = chain
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| format!("--chain expects C,K, got `{chain}`"))?;
        let [c, k] = parts[..] else {
            return Err(format!("--chain expects C,K, got `{chain}`"));
        };
        return scc_chain(c, k).map_err(|e| e.to_string());
    }
    let config = match (cli.args, cli.attacks) {
        (Some(n), Some(m)) => GeneratorConfig::fixed(n, m),
        (Some(n), None) => GeneratorConfig {
            args: n..=n,
            ..GeneratorConfig::default()
        },
        (None, None) => GeneratorConfig::default(),
        (None, Some(_)) => return Err("--attacks needs --args".into()),
    };
    generate(&config, cli.seed).map_err(|e| e.to_string())
}

fn principles(cli: &Cli) -> Result<String, String> {
    let sems: Vec<Semantics> = match cli.semantics {
        Some(s) => vec![s],
        None => Semantics::MATRIX.to_vec(),
    };
    let ps: Vec<PrincipleId> = match cli.principle {
        Some(p) => vec![p],
        None => PrincipleId::ALL.to_vec(),
    };
    let instance = cli.file.as_ref().map(|_| load(cli)).transpose()?;
    let mut out = String::new();
    for &p in &ps {
        for &s in &sems {
            let report: PrincipleReport = match &instance {
                Some(sf) => check_instance(sf, s, p).map_err(|e| e.to_string())?,
                None => search_counterexample(s, p, &GeneratorConfig::default(), cli.seed, cli.budget)
                    .map_err(|e| e.to_string())?,
            };
            if report.verdict == Verdict::CounterexampleFound {
                eprintln!("{report}");
            }
            out.push_str(&report.tsv_row());
            out.push('\n');
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok((text, status)) => {
            print!("{text}");
            match status {
                Status::Answer => ExitCode::SUCCESS,
                Status::No => ExitCode::from(1),
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
