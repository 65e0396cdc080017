fn main() {
    std::process::exit(lfcalc::cli::run(std::env::args_os()));
}
