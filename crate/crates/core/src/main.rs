fn main() {
    std::process::exit(grassdeg::cli::run(std::env::args_os()));
}
