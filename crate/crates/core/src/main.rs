fn main() {
    std::process::exit(cliffordlab_core::cli::main_entry());
}
