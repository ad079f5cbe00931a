fn main() {
    std::process::exit(patchlens::cli::main_with_args(std::env::args_os()));
}
