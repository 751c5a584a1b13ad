fn main() {
    std::process::exit(cylwave::cli::main_with_args(std::env::args_os()));
}
