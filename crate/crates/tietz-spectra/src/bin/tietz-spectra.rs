fn main() {
    std::process::exit(tietz_spectra::cli::run(std::env::args_os()));
}
