use clap::Parser;

use rough_rings::cli::{run, Cli};

fn main() {
    std::process::exit(run(Cli::parse()));
}
