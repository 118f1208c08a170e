fn main() {
    let (code, out) = wm_cli::run(std::env::args_os().skip(1));
    if code == wm_cli::EXIT_USAGE {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    std::process::exit(code);
}
