fn main() {
    std::process::exit(platslide::cli::run(std::env::args()));
}
