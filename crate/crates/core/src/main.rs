use std::io::Write;

fn main() {
    let out = slicekit::cli::run(std::env::args_os());
    if out.exit_code == slicekit::cli::EXIT_USAGE {
        eprint!("{}", out.text);
    } else {
        let mut stdout = std::io::stdout().lock();
        let _ = stdout.write_all(out.text.as_bytes());
        let _ = stdout.flush();
    }
    std::process::exit(out.exit_code);
}
