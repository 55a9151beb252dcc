use std::io;

fn main() {
    let code =
        signed_grassmannian::cli::run(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
