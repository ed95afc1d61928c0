fn main() {
    std::process::exit(tomoq::cli::run());
}
