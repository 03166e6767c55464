fn main() {
    std::process::exit(adg_metrics::cli::run(std::env::args_os()));
}
