fn main() {
    std::process::exit(kummer_codes::cli::run());
}
