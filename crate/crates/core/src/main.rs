use std::io;

use ehlcp::cli;
use ehlcp::harness::Oracles;

fn main() {
    let code = cli::run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock(), &Oracles::default());
    std::process::exit(code);
}
