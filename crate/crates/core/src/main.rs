fn main() {
    std::process::exit(rsa_toy::cli::run(std::env::args_os()));
}
