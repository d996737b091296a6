use std::io;

fn main() {
    let out = io::stdout();
    let err = io::stderr();
    let code = m0n_cli::run(std::env::args_os(), &mut out.lock(), &mut err.lock());
    std::process::exit(code);
}
