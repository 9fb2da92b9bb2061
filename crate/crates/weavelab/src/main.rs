fn main() {
    std::process::exit(weavelab::cli::main());
}
