fn main() {
    std::process::exit(kfacets_cli::run(std::env::args_os()));
}
