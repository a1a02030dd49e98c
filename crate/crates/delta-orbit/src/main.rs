fn main() {
    std::process::exit(delta_orbit::cli::run_from_env());
}
