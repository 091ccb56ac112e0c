fn main() {
    std::process::exit(akregev_cli::main_with_args(std::env::args_os()));
}
