use std::io::Write;

use clap::Parser;

use trace_hankel::cli::{run, RunConfig};

fn main() {
    let config = RunConfig::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = run(&config, &mut out);
    out.flush().ok();
    std::process::exit(code);
}
