fn main() {
    std::process::exit(mstd::cli::run(std::env::args_os()));
}
