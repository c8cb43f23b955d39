fn main() {
    std::process::exit(trisphere::cli::run(std::env::args()));
}
