use std::process::ExitCode;

use clap::{Parser, Subcommand};
use orbigroupoid::fixtures;
use orbigroupoid_cli::document::fixture_document;
use orbigroupoid_cli::ops::error_value;
use orbigroupoid_cli::{execute, run_task, CliError, Options, Report, Resolver};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "orbigroupoid", version, about = "Finite groupoid calculus: embeddings, immersions, inertia")]
struct Cli {
    /// Pretty-print the JSON verdict.
    #[arg(long, global = true)]
    json: bool,
    /// Also write a human-readable report with witnesses to stderr.
    #[arg(long, global = true)]
    report: bool,
    /// Seed for the randomized property suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

/// Inputs are file paths or `fixture:NAME[/PART]` references.
#[derive(Subcommand)]
enum Command {
    /// Parse a document and check its axioms.
    Validate { input: String },
    /// Orbits of a groupoid with their isotropy orders.
    OrbitSpace { input: String },
    /// The isotropy group at one object.
    Isotropy {
        input: String,
        #[arg(long)]
        object: String,
    },
    /// Summary of the inertia groupoid.
    Inertia { input: String },
    /// Check whether the induced functor on inertia groupoids is an embedding.
    InertiaEmbedding { input: String },
    CheckEquivalence { input: String },
    CheckMorita { first: String, second: String },
    FiberProduct { first: String, second: String },
    /// Run the four embedding conditions on a morphism.
    CheckEmbedding { input: String },
    /// Build the strong immersion of an embedding into a translation groupoid.
    EmbedToImmersion { input: String },
    /// Build the embedding induced by a strong equivariant map.
    ImmerseToEmbedding { input: String },
    /// Embedding to immersion and back.
    Roundtrip { input: String },
    /// Pull an embedding back along ψ, then immerse along σ.
    GeneralPipeline { f: String, psi: String, sigma: String },
    /// List the built-in fixtures, or print one as a morphism document.
    Fixtures { name: Option<String> },
    /// Run a task document.
    Run { task: String },
    /// Randomized property suites.
    Properties {
        #[arg(long, default_value_t = 64)]
        cases: usize,
    },
}

fn print(value: &Value, pretty: bool) {
    let text = if pretty { serde_json::to_string_pretty(value) } else { serde_json::to_string(value) };
    println!("{}", text.expect("JSON values serialize"));
}

fn fixtures_listing(name: Option<&str>) -> Result<Value, CliError> {
    if let Some(name) = name {
        return fixture_document(name);
    }
    let list: Vec<Value> = fixtures::fixtures()
        .iter()
        .map(|f| {
            json!({
                "name": f.name,
                "description": f.description,
                "expected_verdict": f.expected_verdict,
                "expected_failures": f.expected_failures.iter().map(|c| c.name()).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(json!({ "fixtures": list }))
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let resolver = Resolver::default();
    let mut options = Options { seed: cli.seed, ..Options::default() };
    // Paths are resolved relative to the working directory; references
    // inside a file are resolved relative to that file.
    let single = |op: &str, args: &[&str], options: &Options| -> Result<Report, CliError> {
        let values: Vec<Value> = args.iter().map(|a| Value::String(a.to_string())).collect();
        execute(op, &values, &resolver, options)
    };
    match &cli.command {
        Command::Validate { input } => single("validate", &[input], &options),
        Command::OrbitSpace { input } => single("orbit-space", &[input], &options),
        Command::Isotropy { input, object } => {
            options.object = Some(object.clone());
            single("isotropy", &[input], &options)
        }
        Command::Inertia { input } => single("inertia", &[input], &options),
        Command::InertiaEmbedding { input } => single("inertia-embedding", &[input], &options),
        Command::CheckEquivalence { input } => single("check-equivalence", &[input], &options),
        Command::CheckMorita { first, second } => single("check-morita", &[first, second], &options),
        Command::FiberProduct { first, second } => single("fiber-product", &[first, second], &options),
        Command::CheckEmbedding { input } => single("check-embedding", &[input], &options),
        Command::EmbedToImmersion { input } => single("embed-to-immersion", &[input], &options),
        Command::ImmerseToEmbedding { input } => single("immerse-to-embedding", &[input], &options),
        Command::Roundtrip { input } => single("roundtrip", &[input], &options),
        Command::GeneralPipeline { f, psi, sigma } => single("general-pipeline", &[f, psi, sigma], &options),
        Command::Fixtures { .. } => unreachable!("handled before dispatch"),
        Command::Run { task } => {
            let (value, base) = resolver.argument(task)?;
            run_task(&value, &base, &options)
        }
        Command::Properties { cases } => {
            options.cases = *cases;
            execute("properties", &[], &resolver, &options)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Fixtures { name } = &cli.command {
        return match fixtures_listing(name.as_deref()) {
            Ok(v) => {
                print(&v, cli.json);
                ExitCode::SUCCESS
            }
            Err(e) => {
                print(&error_value(&e), cli.json);
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        };
    }
    match run(&cli) {
        Ok(report) => {
            print(&serde_json::to_value(&report).expect("reports serialize"), cli.json);
            if cli.report {
                eprint!("{}", report.human());
            }
            ExitCode::from(report.exit_code())
        }
        Err(e) => {
            print(&error_value(&e), cli.json);
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
