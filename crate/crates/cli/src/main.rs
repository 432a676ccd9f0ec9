fn main() {
    std::process::exit(ybe_forge_cli::run(std::env::args().collect()));
}
