fn main() {
    std::process::exit(copula_bounds::cli::run(std::env::args_os()));
}
