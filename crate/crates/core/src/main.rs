fn main() {
    std::process::exit(flamingo::cli::run(std::env::args_os()));
}
