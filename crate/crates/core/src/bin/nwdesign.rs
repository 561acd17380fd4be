fn main() {
    std::process::exit(nwdesign::cli::main_with_exit_code());
}
