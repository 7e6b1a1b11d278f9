fn main() {
    std::process::exit(dmoments::cli::run());
}
