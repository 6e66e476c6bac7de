fn main() {
    std::process::exit(infconv::cli::run(std::env::args_os()));
}
