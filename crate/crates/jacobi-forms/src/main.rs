fn main() {
    std::process::exit(jacobi_forms::cli::run());
}
