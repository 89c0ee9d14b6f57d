use clap::Parser;
use mtclab::cli::{run, CommandConfig};

fn main() {
    let config = CommandConfig::parse();
    let code = run(&config, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
