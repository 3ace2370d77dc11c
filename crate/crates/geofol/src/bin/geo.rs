fn main() {
    std::process::exit(geofol::cli::run(std::env::args_os()));
}
