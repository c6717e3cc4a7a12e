//! `frl` — reproducible experiments on the regularity/Fourier-decay
//! relationship: sample a catalog function, measure its spectral decay and
//! regularity, compare against the closed-form predictions, and run the
//! pinned verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 numerical-convergence failure.

mod args;
mod commands;
mod output;

use clap::Parser;

#[derive(Parser)]
#[command(name = "frl", version, about = "Fourier regularity lab", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: commands::Command,
}

fn main() {
    init_thread_pool();
    let cli = Cli::parse();
    let code = match commands::run(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e:#}");
            e.downcast_ref::<commands::ExitCode>().map_or(2, |c| c.0)
        }
    };
    std::process::exit(code);
}

/// FRL_THREADS caps internal parallelism (h-sweeps, contour nodes, batches).
fn init_thread_pool() {
    if let Ok(v) = std::env::var("FRL_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}
