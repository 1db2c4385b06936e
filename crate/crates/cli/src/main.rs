use std::fs;
use std::io::{self, Read};
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use glweb::functor::GammaContext;
use glweb::glnmod::commutant_dim;
use glweb::verify::{check, rank_of_span, Rel, RelationId};
use glweb::webcat::Flavor;
use glweb_cli::dsl::{self, Elab};
use glweb_cli::{json, suite};
use num_rational::BigRational;

#[derive(Parser)]
#[command(name = "glweb", version, about = "Exact evaluation and relation checking for symmetric gl_n webs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    Symmetric,
    Exterior,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Field,
    Integral,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a closed web to a scalar.
    Eval {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "symmetric")]
        flavor: FlavorArg,
        #[arg(long, value_enum, default_value = "field")]
        mode: ModeArg,
        /// Program file, or `-` for stdin.
        #[arg(required_unless_present = "expr")]
        input: Option<String>,
        /// Program text given inline.
        #[arg(short, long, conflicts_with = "input")]
        expr: Option<String>,
    },
    /// Print the matrix of a web as JSON.
    Matrix {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "symmetric")]
        flavor: FlavorArg,
        expr: String,
    },
    /// Check one catalog relation.
    Check {
        #[arg(long)]
        n: usize,
        relation: String,
        /// Labels, e.g. `k=1,l=2`.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the acceptance suite and print its JSON manifest.
    Suite {
        /// Skip every check above this rank.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Rank of the span of the webs in a file, one per line.
    Rank {
        #[arg(long)]
        n: usize,
        /// Specialization point for q^(1/n), e.g. `3/2`.
        #[arg(long, default_value = "3/2")]
        at: String,
        file: String,
    },
    /// Dimension of the endomorphism algebra of an object such as `1^ * 1^`.
    Homdim {
        #[arg(long)]
        n: usize,
        object: String,
    },
}

fn flavor(f: FlavorArg) -> Flavor {
    match f {
        FlavorArg::Symmetric => Flavor::Symmetric,
        FlavorArg::Exterior => Flavor::Exterior,
    }
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| e.to_string())?;
        Ok(s)
    } else {
        fs::read_to_string(Path::new(path)).map_err(|e| format!("{}: {}", path, e))
    }
}

fn rational(s: &str) -> Result<BigRational, String> {
    s.trim().parse().map_err(|_| format!("bad specialization point `{}`", s))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let e = |x: glweb::Error| x.to_string();
    match cli.cmd {
        Cmd::Eval { n, flavor: f, mode, input, expr } => {
            let text = match expr {
                Some(t) => t,
                None => read_input(input.as_deref().unwrap_or("-"))?,
            };
            let w = dsl::web(&text, &Elab { n, flavor: flavor(f) }).map_err(|x| x.to_string())?;
            let ctx = match mode {
                ModeArg::Field => GammaContext::new(n),
                ModeArg::Integral => GammaContext::integral(n),
            };
            println!("{}", ctx.scalar(&w).map_err(e)?);
        }
        Cmd::Matrix { n, flavor: f, expr } => {
            let w = dsl::web(&expr, &Elab { n, flavor: flavor(f) }).map_err(|x| x.to_string())?;
            let ctx = GammaContext::new(n);
            let m = ctx.expr(&w).map_err(e)?;
            let out = json::matrix(&ctx.space(w.dom()), &ctx.space(w.cod()), &m);
            println!("{}", serde_json::to_string_pretty(&out).expect("json"));
        }
        Cmd::Check { n, relation, params, json: as_json } => {
            let rel: Rel = relation.parse().map_err(e)?;
            let id = RelationId::with_params(rel, &params).map_err(e)?;
            let r = check(&id, n);
            if as_json {
                println!("{}", serde_json::to_string_pretty(&json::report(&r)).expect("json"));
            } else {
                println!("{}", r);
            }
            return Ok(if r.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE });
        }
        Cmd::Suite { n, jobs } => {
            let outcomes = suite::run(&suite::criteria(), &suite::Limits { max_n: n }, jobs);
            for o in &outcomes {
                eprintln!("{}", o.line());
            }
            println!("{}", serde_json::to_string_pretty(&suite::manifest(&outcomes)).expect("json"));
            return Ok(if outcomes.iter().all(suite::Outcome::passed) { ExitCode::SUCCESS } else { ExitCode::FAILURE });
        }
        Cmd::Rank { n, at, file } => {
            let u0 = rational(&at)?;
            let text = read_input(&file)?;
            let opts = Elab { n, flavor: Flavor::Symmetric };
            let ws = text
                .lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
                .map(|(i, l)| dsl::web(l, &opts).map_err(|x| format!("{}:{}: {}", file, i + 1, x)))
                .collect::<Result<Vec<_>, _>>()?;
            println!("{}", rank_of_span(&ws, n, &u0).map_err(e)?);
        }
        Cmd::Homdim { n, object } => {
            let obj = dsl::parse_object(&object).map_err(|x| x.to_string())?;
            let space = GammaContext::new(n).space(&obj);
            let mut last = None;
            // a point can be unlucky; the dimension is the same at any lucky one
            for u0 in suite::rank_points() {
                match commutant_dim(&space, n as u32, &u0) {
                    Ok(d) => {
                        println!("{}", d);
                        return Ok(ExitCode::SUCCESS);
                    }
                    Err(x) => last = Some(x),
                }
            }
            return Err(e(last.expect("at least one point")));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
