fn main() {
    std::process::exit(mmwb::cli::main(std::env::args_os()));
}
