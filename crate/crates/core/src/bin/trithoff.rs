fn main() {
    std::process::exit(trithoff::cli::main());
}
