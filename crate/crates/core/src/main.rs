fn main() {
    std::process::exit(tcost::cli::run(std::env::args_os()));
}
