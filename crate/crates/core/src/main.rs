fn main() {
    std::process::exit(okubic::cli::run(std::env::args_os()));
}
