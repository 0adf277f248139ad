fn main() {
    std::process::exit(atilde_cli::run(std::env::args_os()));
}
