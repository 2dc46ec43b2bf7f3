use std::io::{self, BufReader, BufWriter};

fn main() {
    let mut input = BufReader::new(io::stdin());
    let mut out = BufWriter::new(io::stdout());
    let mut err = io::stderr();
    let code = xnim::cli::run(std::env::args_os(), &mut input, &mut out, &mut err);
    drop(out);
    std::process::exit(code);
}
