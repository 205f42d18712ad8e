fn main() {
    std::process::exit(catcom::cli::main());
}
