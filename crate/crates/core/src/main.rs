fn main() {
    std::process::exit(zetacoeffs::cli::run(std::env::args_os()));
}
