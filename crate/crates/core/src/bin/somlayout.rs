fn main() {
    std::process::exit(somlayout::cli::cli_main(std::env::args_os()));
}
