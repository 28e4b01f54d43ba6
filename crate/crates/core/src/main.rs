fn main() {
    std::process::exit(superpl::cli::main_with(std::env::args_os()));
}
