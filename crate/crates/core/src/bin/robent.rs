fn main() {
    std::process::exit(robust_entanglement::cli::run(std::env::args_os()));
}
