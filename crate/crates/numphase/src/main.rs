fn main() {
    std::process::exit(numphase::cli::run(std::env::args_os()));
}
