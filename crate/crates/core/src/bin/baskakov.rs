fn main() {
    std::process::exit(baskakov::cli::run(std::env::args_os()));
}
