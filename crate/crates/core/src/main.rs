use std::io::Write;

fn main() {
    let (code, out) = signed_brauer::cli::run(std::env::args_os(), &mut std::io::stdin().lock());
    if code == signed_brauer::cli::EXIT_USAGE {
        eprint!("{out}");
    } else {
        let mut stdout = std::io::stdout().lock();
        // a closed pipe (e.g. `| head`) is not an error
        let _ = stdout.write_all(out.as_bytes());
    }
    std::process::exit(code);
}
