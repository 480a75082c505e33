fn main() {
    std::process::exit(gdminors::cli::main());
}
