fn main() {
    std::process::exit(invseq::cli::main_entry());
}
