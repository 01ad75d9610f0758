fn main() {
    std::process::exit(pellrec::cli::run(std::env::args_os()));
}
