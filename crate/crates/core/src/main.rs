fn main() {
    std::process::exit(wedge_entropy::cli::main_from_args(std::env::args_os()));
}
