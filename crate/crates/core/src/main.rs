fn main() {
    std::process::exit(argand::cli::run(std::env::args_os()));
}
