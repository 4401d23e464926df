fn main() {
    std::process::exit(pmscheme::cli::main_entry());
}
