fn main() {
    std::process::exit(gridcast::cli::run_from_env());
}
