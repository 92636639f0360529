fn main() {
    std::process::exit(jackmaps::cli::main_with_args(std::env::args_os()));
}
