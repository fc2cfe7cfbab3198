fn main() {
    std::process::exit(harmonic_tutte::cli::run(std::env::args_os()));
}
