fn main() {
    std::process::exit(c4hz::cli::main_with_args(std::env::args_os()));
}
