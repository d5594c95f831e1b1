fn main() {
    std::process::exit(gray2cat::cli::main_exit());
}
