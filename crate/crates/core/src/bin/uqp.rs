fn main() {
    std::process::exit(uqp::cli::cli_dispatch(std::env::args_os()));
}
