fn main() {
    std::process::exit(umemura::cli::run(std::env::args().skip(1).collect()));
}
