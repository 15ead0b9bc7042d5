fn main() {
    std::process::exit(weak_iasi::cli::main_with_args(std::env::args_os()));
}
