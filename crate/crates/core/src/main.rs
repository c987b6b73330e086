fn main() {
    std::process::exit(hypersoft::cli::main_entry());
}
