fn main() {
    std::process::exit(equilef::cli::run());
}
