fn main() {
    std::process::exit(esrhd_cli::main_with_args(std::env::args_os()));
}
