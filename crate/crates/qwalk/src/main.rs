fn main() {
    std::process::exit(qwalk::cli::main(std::env::args()));
}
