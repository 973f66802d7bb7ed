fn main() {
    std::process::exit(so42_multiplets::cli::cli_main(std::env::args_os()));
}
