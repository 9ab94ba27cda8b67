mod args;
mod cache;
mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use magiclab_core::verify::VerifyParams;
use magiclab_core::{serialize_graph, Graph, Mode};

use args::{Cli, Command, GlobalArgs, VerifyVerb};
use cache::{Cache, Guards};
use commands::CmdResult;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = dispatch(&cli);
    match result {
        Ok(out) => match out.render(cli.global.format) {
            Some(s) => {
                let mut stdout = std::io::stdout().lock();
                // a closed pipe is not worth a panic
                let _ = stdout.write_all(s.as_bytes());
                ExitCode::from(out.status.code())
            }
            None => {
                eprintln!("error: this command has no {:?} output", cli.global.format);
                ExitCode::from(2)
            }
        },
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn dispatch(cli: &Cli) -> CmdResult {
    let global = &cli.global;
    match &cli.command {
        Command::Graph { verb, source } => commands::graph(*verb, &commands::load_graph(source)?),
        Command::Sem { verb, source } | Command::Em { verb, source } => {
            let mode = if matches!(cli.command, Command::Sem { .. }) {
                Mode::Sem
            } else {
                Mode::Em
            };
            let g = commands::load_graph(source)?;
            let opts = commands::search_options(global)?;
            let query = format!("{mode} {}", verb.name());
            cached(global, &g, &query, || commands::labeling(mode, *verb, &g, &opts))
        }
        Command::Deficiency {
            verb,
            source,
            cap,
            window,
        } => {
            let g = commands::load_graph(source)?;
            let opts = commands::search_options(global)?;
            let query = format!("deficiency {} cap={cap} window={window}", verb.name());
            cached(global, &g, &query, || {
                commands::deficiency(*verb, &g, *cap, *window, &opts)
            })
        }
        Command::Star { verb, n, l, k } => commands::star(*verb, *n, *l, *k),
        Command::Verify { verb, suite } => match verb {
            VerifyVerb::List => Ok(commands::verify_list()),
            VerifyVerb::Run => {
                let params = VerifyParams {
                    search: commands::search_options(global)?,
                };
                commands::verify_run(suite, &params)
            }
        },
    }
}

/// Serves `compute` from the cache when allowed, storing exact results.
fn cached(global: &GlobalArgs, g: &Graph, query: &str, compute: impl FnOnce() -> CmdResult) -> CmdResult {
    let cache = if global.no_cache {
        None
    } else {
        Cache::default_dir().and_then(|dir| match Cache::open(&dir) {
            Ok(c) => Some(c),
            Err(e) => {
                eprintln!("warning: cache disabled: {e:#}");
                None
            }
        })
    };
    let key = format!("{}{query}", serialize_graph(g));
    let guards = Guards {
        node_limit: global.node_limit,
        time_limit: global.time_limit,
    };
    if let Some(cache) = &cache {
        match cache.lookup(&key, &guards) {
            Ok(Some(hit)) => return Ok(hit),
            Ok(None) => {}
            Err(e) => eprintln!("warning: cache lookup failed: {e:#}"),
        }
    }
    let out = compute()?;
    if let Some(cache) = &cache {
        if out.status == output::Status::Ok {
            if let Err(e) = cache.store(&key, guards, &out) {
                eprintln!("warning: cache write failed: {e:#}");
            }
        }
    }
    Ok(out)
}
