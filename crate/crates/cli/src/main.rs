fn main() {
    std::process::exit(horizon_cli::main_with(std::env::args_os()));
}
