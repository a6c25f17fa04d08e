fn main() {
    std::process::exit(mathlod::cli::run(std::env::args_os()));
}
